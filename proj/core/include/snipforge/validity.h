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

#ifndef SNIPFORGE_VALIDITY_H_
#define SNIPFORGE_VALIDITY_H_

#include <string>
#include <string_view>

#include "snipforge/source_unit.h"

namespace snipforge {

enum class ValidityReason { kNone, kParse, kUndeclared, kDuplicate, kExternal };

std::string_view ValidityReasonName(ValidityReason reason);

struct Validity {
  ValidityReason reason = ValidityReason::kNone;
  std::string detail;  // offending name, parse message, or command output

  bool valid() const { return reason == ValidityReason::kNone; }
  // "VALID", "INVALID(PARSE)", "INVALID(UNDECLARED: x)", ...
  std::string ToString() const;

  static Validity Valid() { return {}; }
  static Validity Invalid(ValidityReason reason, std::string detail = "") {
    return {reason, std::move(detail)};
  }
};

// The compilability proxy: the unit parses, every simple name read or written
// inside a code body resolves to a parameter, a local declared earlier in an
// enclosing scope, or a field of an enclosing class, and no scope declares
// the same local twice. Capitalized names are taken to be types or constants
// and are not resolved. Lambda bodies are opaque.
Validity CheckValidity(std::string_view unit_text);
Validity CheckValidity(const SourceUnit& unit);

}  // namespace snipforge

#endif  // SNIPFORGE_VALIDITY_H_
