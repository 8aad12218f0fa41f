// Copyright 2026 The Snipforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SNIPFORGE_RULES_H_
#define SNIPFORGE_RULES_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snipforge/source_unit.h"

namespace snipforge {

// The performance catalog. Declaration order is the reference ordering used
// in reports when counts tie.
enum class RuleId {
  kUseStringBufferForStringAppends,
  kAddEmptyString,
  kAppendCharacterWithChar,
  kRedundantFieldInitializer,
  kAvoidInstantiatingObjectsInLoops,
  kAvoidArrayLoops,
  kUseIndexOfChar,
  kStringInstantiation,
  kInefficientStringBuffering,
  kAvoidUsingShortType,
  kTooFewBranchesForASwitchStatement,
  kIntegerInstantiation,
  kUselessStringValueOf,
  kConsecutiveAppendsShouldReuse,
  kInefficientEmptyStringCheck,
  kStringToString,
  kInsufficientStringBufferDeclaration,
  kSimplifyStartsWith,
  kConsecutiveLiteralAppends,
  kOptimizableToArrayCall,
  kBooleanInstantiation,
};

inline constexpr std::size_t kRuleCount = 21;
extern const std::array<RuleId, kRuleCount> kAllRules;

inline constexpr std::string_view kRulesetName = "PERFORMANCE";

std::string_view RuleName(RuleId rule);
std::optional<RuleId> RuleFromName(std::string_view name);
// Fixed part of the rule's message (placeholders shown as <...>).
std::string_view RuleDescription(RuleId rule);

struct Violation {
  RuleId rule = RuleId::kAddEmptyString;
  int line = 0;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Orders by (line, rule name, message).
bool ViolationLess(const Violation& a, const Violation& b);

// Runs one matcher. Returns nothing for units that did not parse.
std::vector<Violation> EvaluateRule(RuleId rule, const SourceUnit& unit);

// All matchers, sorted. nullopt marks the unit UNANALYZABLE.
std::optional<std::vector<Violation>> Analyze(const SourceUnit& unit);

}  // namespace snipforge

#endif  // SNIPFORGE_RULES_H_
