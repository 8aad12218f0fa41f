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

#include "snipforge/rules.h"

#include <algorithm>
#include <chrono>
#include <map>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "snipforge/snippet.h"
#include "test_support.h"

namespace snipforge {
namespace {

SourceUnit Wrapped(const std::string& raw, const std::string& id = "t") {
  return ParseUnit(WrapSnippet(raw, id));
}

std::vector<Violation> AnalyzeRaw(const std::string& raw) {
  auto result = Analyze(Wrapped(raw));
  EXPECT_TRUE(result.has_value()) << raw;
  return result.value_or(std::vector<Violation>{});
}

int CountRule(const std::vector<Violation>& v, RuleId rule) {
  return static_cast<int>(std::count_if(
      v.begin(), v.end(), [&](const Violation& x) { return x.rule == rule; }));
}

// Regex for a rule message: the description with each <placeholder> opened
// up to a run of identifier characters.
std::regex MessagePattern(RuleId rule) {
  std::string description(RuleDescription(rule));
  std::string pattern;
  for (std::size_t i = 0; i < description.size(); ++i) {
    char c = description[i];
    if (c == '<') {
      std::size_t close = description.find('>', i);
      pattern += "[A-Za-z0-9_$.]+";
      i = close;
      continue;
    }
    if (std::string("\\^$.|?*+()[]{}").find(c) != std::string::npos) {
      pattern += '\\';
    }
    pattern += c;
  }
  return std::regex(pattern);
}

TEST(RulesTest, AddEmptyStringExample) {
  std::vector<Violation> v = AnalyzeRaw("void m(int x) {\n  String s = \"\" + x;\n}");
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].rule, RuleId::kAddEmptyString);
  EXPECT_EQ(v[0].line, 3);  // wrapped text adds one line in front
  EXPECT_EQ(v[0].message, "Do not add empty strings.");
}

TEST(RulesTest, EmptyClassHasNoViolations) {
  auto v = Analyze(ParseSource("public class A{ void m(){} }"));
  ASSERT_TRUE(v.has_value());
  EXPECT_TRUE(v->empty());
}

TEST(RulesTest, UnparseableIsUnanalyzable) {
  EXPECT_FALSE(Analyze(ParseSource("public class A{ void m(){ ")).has_value());
  EXPECT_TRUE(EvaluateRule(RuleId::kAddEmptyString,
                           ParseSource("class A { void m( }"))
                  .empty());
}

TEST(RulesTest, TooFewBranchesCountsCaseGroups) {
  SourceUnit two = Wrapped(
      "void m(int k) {\n  switch (k) {\n    case 1: a(); break;\n"
      "    default: b();\n  }\n}\nvoid a() {}\nvoid b() {}");
  EXPECT_EQ(EvaluateRule(RuleId::kTooFewBranchesForASwitchStatement, two)
                .size(),
            1u);
  SourceUnit three = Wrapped(
      "void m(int k) {\n  switch (k) {\n    case 1: a(); break;\n"
      "    case 2: a(); break;\n    default: b();\n  }\n}\n"
      "void a() {}\nvoid b() {}");
  EXPECT_TRUE(
      EvaluateRule(RuleId::kTooFewBranchesForASwitchStatement, three).empty());
}

TEST(RulesTest, UseIndexOfCharNeedsSingleCharacter) {
  EXPECT_EQ(CountRule(AnalyzeRaw("int m(String s) { return s.indexOf(\"a\"); }"),
                      RuleId::kUseIndexOfChar),
            1);
  EXPECT_EQ(CountRule(AnalyzeRaw("int m(String s) { return s.indexOf(\"ab\"); }"),
                      RuleId::kUseIndexOfChar),
            0);
}

TEST(RulesTest, RedundantFieldInitializerPolarity) {
  std::vector<Violation> zero = AnalyzeRaw("int i = 0;\nvoid m() {}");
  ASSERT_EQ(CountRule(zero, RuleId::kRedundantFieldInitializer), 1);
  EXPECT_EQ(zero[0].message,
            "Avoid using redundant field initializer for i.");
  EXPECT_EQ(CountRule(AnalyzeRaw("int i = 1;\nvoid m() {}"),
                      RuleId::kRedundantFieldInitializer),
            0);
}

TEST(RulesTest, CatalogIsComplete) {
  std::set<std::string> names;
  for (RuleId rule : kAllRules) {
    names.insert(std::string(RuleName(rule)));
    EXPECT_EQ(RuleFromName(RuleName(rule)), rule);
    EXPECT_FALSE(RuleDescription(rule).empty());
  }
  EXPECT_EQ(names.size(), 21u);
  EXPECT_EQ(kAllRules.size(), 21u);
  EXPECT_TRUE(names.count("AvoidArrayLoops"));
  EXPECT_FALSE(RuleFromName("UnusedLocalVariable").has_value());
}

struct FixtureResult {
  std::string name;
  std::multiset<std::pair<int, std::string>> expected;
  std::multiset<std::pair<int, std::string>> actual;
};

std::vector<FixtureResult> RunRuleFixtures() {
  std::vector<FixtureResult> results;
  for (const auto& file : testing::JavaFiles(testing::FixtureDir() / "rules")) {
    std::string raw = testing::ReadText(file);
    FixtureResult r;
    r.name = file.stem().string();
    for (const auto& label : testing::ExpectedLabels(raw)) {
      r.expected.insert(label);
    }
    Snippet snippet = WrapSnippet(raw, r.name);
    auto v = Analyze(ParseUnit(snippet));
    EXPECT_TRUE(v.has_value()) << r.name;
    if (v) {
      for (const Violation& x : *v) {
        r.actual.insert({x.line - snippet.line_offset,
                         std::string(RuleName(x.rule))});
      }
    }
    results.push_back(std::move(r));
  }
  return results;
}

TEST(RulesConformanceTest, HandLabelsMatchExactly) {
  auto start = std::chrono::steady_clock::now();
  std::vector<FixtureResult> results = RunRuleFixtures();
  double seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  EXPECT_GE(results.size(), 84u);
  int tp = 0, fp = 0, fn = 0;
  for (const FixtureResult& r : results) {
    // Multiset intersection by hand.
    std::multiset<std::pair<int, std::string>> remaining = r.expected;
    for (const auto& a : r.actual) {
      auto it = remaining.find(a);
      if (it != remaining.end()) {
        remaining.erase(it);
        ++tp;
      } else {
        ++fp;
        ADD_FAILURE() << r.name << ": unexpected " << a.second << " @ "
                      << a.first;
      }
    }
    for (const auto& m : remaining) {
      ++fn;
      ADD_FAILURE() << r.name << ": missed " << m.second << " @ " << m.first;
    }
  }
  EXPECT_GT(tp, 0);
  EXPECT_EQ(fp, 0);
  EXPECT_EQ(fn, 0);
  EXPECT_LT(seconds, 5.0);
}

TEST(RulesConformanceTest, EveryRuleHasTwoPositivesAndTwoNegatives) {
  std::vector<FixtureResult> results = RunRuleFixtures();
  for (RuleId rule : kAllRules) {
    std::string name(RuleName(rule));
    int positives = 0, negatives = 0;
    for (const FixtureResult& r : results) {
      if (r.name.rfind(name + "_", 0) != 0) continue;
      bool fires = std::any_of(
          r.expected.begin(), r.expected.end(),
          [&](const auto& label) { return label.second == name; });
      (fires ? positives : negatives) += 1;
      EXPECT_EQ(fires, r.name.find("_pos") != std::string::npos) << r.name;
    }
    EXPECT_GE(positives, 2) << name;
    EXPECT_GE(negatives, 2) << name;
  }
}

std::vector<SourceUnit> AnalyzableFixtures() {
  std::vector<SourceUnit> units;
  for (const char* sub : {"rules", "synthetic", "census", "swap_golden"}) {
    for (const auto& f : testing::JavaFiles(testing::FixtureDir() / sub)) {
      SourceUnit u = Wrapped(testing::ReadText(f), f.stem().string());
      if (u.ok()) units.push_back(std::move(u));
    }
  }
  return units;
}

TEST(RulesPropertyTest, AnalyzeIsTheSortedUnionOfMatchers) {
  for (const SourceUnit& unit : AnalyzableFixtures()) {
    std::vector<Violation> all;
    for (RuleId rule : kAllRules) {
      std::vector<Violation> one = EvaluateRule(rule, unit);
      for (const Violation& v : one) EXPECT_EQ(v.rule, rule);
      all.insert(all.end(), one.begin(), one.end());
    }
    std::sort(all.begin(), all.end(), ViolationLess);
    auto combined = Analyze(unit);
    ASSERT_TRUE(combined.has_value());
    EXPECT_EQ(*combined, all) << unit.snippet_id;
    EXPECT_TRUE(std::is_sorted(combined->begin(), combined->end(),
                               ViolationLess));
  }
}

TEST(RulesPropertyTest, AnalysisIsPureAndLinesAreInRange) {
  for (const SourceUnit& unit : AnalyzableFixtures()) {
    auto first = Analyze(unit);
    auto second = Analyze(unit);
    ASSERT_EQ(first, second);
    for (const Violation& v : *first) {
      EXPECT_GE(v.line, 1);
      EXPECT_LE(v.line, unit.line_count());
      EXPECT_TRUE(std::regex_match(v.message, MessagePattern(v.rule)))
          << RuleName(v.rule) << ": " << v.message;
    }
  }
}

// Doubles each line's indentation and appends trailing blanks.
std::string Reindent(const std::string& text) {
  std::string out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    std::string line = text.substr(
        start, end == std::string::npos ? std::string::npos : end - start);
    std::size_t indent = line.find_first_not_of(" \t");
    if (indent == std::string::npos) indent = line.size();
    out += line.substr(0, indent) + "\t" + line.substr(0, indent) +
           line.substr(indent);
    if (!line.empty()) out += "  ";
    if (end == std::string::npos) break;
    out += '\n';
    start = end + 1;
  }
  return out;
}

TEST(RulesPropertyTest, InsensitiveToIndentation) {
  int checked = 0;
  for (const SourceUnit& unit : AnalyzableFixtures()) {
    if (unit.text.find("\"\"\"") != std::string::npos) continue;
    SourceUnit shifted = ParseSource(Reindent(unit.text), unit.snippet_id);
    ASSERT_TRUE(shifted.ok()) << unit.snippet_id << shifted.status.reason;
    EXPECT_EQ(Analyze(shifted), Analyze(unit)) << unit.snippet_id;
    ++checked;
  }
  EXPECT_GT(checked, 150);
}

}  // namespace
}  // namespace snipforge
