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

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "snipforge/corpus.h"
#include "snipforge/source_unit.h"
#include "test_support.h"

namespace snipforge {
namespace {

SourceUnit ParseFixture(const std::string& rel) {
  return ParseSource(testing::ReadText(testing::FixtureDir() / rel), rel);
}

std::vector<std::filesystem::path> ParseableFixtures() {
  std::vector<std::filesystem::path> files;
  for (const char* sub :
       {"rules", "mini_corpus", "synthetic", "census", "swap_golden", "dedup"}) {
    for (const auto& f : testing::JavaFiles(testing::FixtureDir() / sub)) {
      files.push_back(f);
    }
  }
  return files;
}

// Parsed units of every fixture that is accepted by the corpus filter.
std::vector<SourceUnit> AcceptedUnits() {
  std::vector<SourceUnit> units;
  for (const auto& file : ParseableFixtures()) {
    Admission a = AdmitSnippet(testing::ReadText(file), file.stem().string());
    if (a.accepted) units.push_back(a.entry.unit);
  }
  return units;
}

TEST(ParserTest, ArrayCopyLoopLoopStructure) {
  SourceUnit unit = ParseFixture("swap_golden/ArrayRemove.java");
  ASSERT_TRUE(unit.ok()) << unit.status.reason;
  const StatementNode* loop = nullptr;
  for (const StatementNode& s : unit.statements) {
    if (s.kind == StmtKind::kFor && s.lines.first == 23) loop = &s;
  }
  ASSERT_NE(loop, nullptr);
  EXPECT_EQ(loop->lines, (LineRange{23, 26}));
  ASSERT_EQ(loop->children.size(), 1u);
  const StatementNode& block = unit.statements[loop->children[0]];
  EXPECT_EQ(block.kind, StmtKind::kBlock);
  ASSERT_EQ(block.children.size(), 2u);
  for (int child : block.children) {
    EXPECT_EQ(unit.statements[child].kind, StmtKind::kExprStmt);
  }
  EXPECT_EQ(unit.LineContent(unit.statements[block.children[0]].lines.first),
            "    b[j] = nums[i];");
}

TEST(ParserTest, BracelessIfHasDirectStatementChild) {
  SourceUnit unit = ParseSource("class A { void m(){ if(x) y(); } }");
  ASSERT_TRUE(unit.ok()) << unit.status.reason;
  const StatementNode* branch = nullptr;
  for (const StatementNode& s : unit.statements) {
    if (s.kind == StmtKind::kIf) branch = &s;
  }
  ASSERT_NE(branch, nullptr);
  ASSERT_EQ(branch->children.size(), 1u);
  EXPECT_EQ(unit.statements[branch->children[0]].kind, StmtKind::kExprStmt);
  for (const StatementNode& s : unit.statements) {
    if (s.parent && *s.parent == branch->id) {
      EXPECT_NE(s.kind, StmtKind::kBlock);
    }
  }
}

TEST(ParserTest, StrayBraceFailsAtItsLocation) {
  SourceUnit unit =
      ParseSource("class A {\n  void m() {\n  }\n  }\n}\n", "stray");
  EXPECT_FALSE(unit.ok());
  EXPECT_EQ(unit.status.failure, ParseFailure::kSyntax);
  EXPECT_EQ(unit.status.line, 5);
  EXPECT_EQ(unit.status.column, 1);
  EXPECT_TRUE(unit.statements.empty());
  EXPECT_TRUE(unit.methods.empty());
}

TEST(ParserTest, LexicalFailureIsReportedNotThrown) {
  SourceUnit unit = ParseSource("class A { /* open");
  EXPECT_EQ(unit.status.failure, ParseFailure::kLexical);
  EXPECT_EQ(unit.status.line, 1);
}

TEST(ParserTest, UnsupportedConstructs) {
  for (const char* text : {
           "class A { void m(){ Runnable r = new Runnable() { }; } }",
           "class A { void m(){ assert x; } }",
           "class A { void m(){ outer: for(;;) break outer; } }",
           "class A { void m(){ class L {} } }",
           "class A { void m(){ Runnable r = () -> { go(); }; } }",
       }) {
    SourceUnit unit = ParseSource(text);
    EXPECT_EQ(unit.status.failure, ParseFailure::kUnsupported) << text;
  }
}

TEST(ParserTest, GenericsAndLambdasInExpressionsAreAccepted) {
  SourceUnit unit = ParseSource(
      "import java.util.*;\n"
      "class A {\n"
      "  List<Map<String, Integer>> xs = new ArrayList<>();\n"
      "  void m(List<String> in) {\n"
      "    in.forEach(s -> System.out.println(s));\n"
      "    Map<String, List<Integer>> idx = new HashMap<>();\n"
      "    int n = (int) in.stream().count();\n"
      "  }\n"
      "}\n");
  EXPECT_TRUE(unit.ok()) << unit.status.reason;
  ASSERT_EQ(unit.methods.size(), 1u);
  EXPECT_EQ(unit.methods[0].name, "m");
}

TEST(ParserTest, ConstructorsAreBodiesButNotMethods) {
  SourceUnit unit = ParseSource(
      "class A { int x; A() { x = 1; } { x = 2; } int get() { return x; } }");
  ASSERT_TRUE(unit.ok()) << unit.status.reason;
  EXPECT_EQ(unit.bodies.size(), 3u);
  ASSERT_EQ(unit.methods.size(), 1u);
  EXPECT_EQ(unit.methods[0].name, "get");
}

TEST(ParserTest, StatementTreeJsonIsOneNodePerLine) {
  SourceUnit unit = ParseSource("class A { void m(){ if(x) y(); } }");
  std::string json = StatementTreeToJson(unit);
  EXPECT_NE(json.find(R"({"id":1,"kind":"IF","line_range":[1,1],"children":[2]})"),
            std::string::npos)
      << json;
}

TEST(ParserPropertyTest, LineTableCoversEveryByteOnce) {
  for (const char* text : {"", "a", "a\n", "a\nb", "\n\n", "a\r\nb\rc\n"}) {
    std::vector<ByteRange> table = BuildLineTable(text);
    std::size_t offset = 0;
    for (const ByteRange& r : table) {
      EXPECT_EQ(r.begin, offset);
      offset = r.end;
    }
    EXPECT_EQ(offset, std::string_view(text).size());
  }
  for (const SourceUnit& unit : AcceptedUnits()) {
    std::size_t offset = 0;
    for (const ByteRange& r : unit.line_table) {
      ASSERT_EQ(r.begin, offset);
      offset = r.end;
    }
    ASSERT_EQ(offset, unit.text.size());
  }
}

TEST(ParserPropertyTest, TreeNestingInvariants) {
  for (const SourceUnit& unit : AcceptedUnits()) {
    ASSERT_FALSE(unit.methods.empty());
    for (const StatementNode& s : unit.statements) {
      ASSERT_LT(s.span.begin, s.span.end);
      for (std::size_t i = 0; i < s.children.size(); ++i) {
        const StatementNode& c = unit.statements[s.children[i]];
        ASSERT_EQ(c.parent, s.id);
        EXPECT_TRUE(s.span.Contains(c.span)) << unit.snippet_id;
        EXPECT_NE(s.span, c.span) << unit.snippet_id;
        if (i > 0) {
          const StatementNode& prev = unit.statements[s.children[i - 1]];
          EXPECT_LE(prev.span.end, c.span.begin) << unit.snippet_id;
        }
      }
    }
  }
}

TEST(ParserPropertyTest, MethodRegionsOwnExactlyTheirStatements) {
  for (const SourceUnit& unit : AcceptedUnits()) {
    for (std::size_t m = 0; m < unit.methods.size(); ++m) {
      const MethodRegion& region = unit.methods[m];
      const ClassDecl& owner =
          unit.classes[unit.bodies[region.body].class_index];
      EXPECT_TRUE(owner.span.Contains(region.body_span));
      std::vector<int> inside;
      for (const StatementNode& s : unit.statements) {
        if (region.body_span.Contains(s.span)) inside.push_back(s.id);
      }
      EXPECT_EQ(region.statement_ids, inside) << unit.snippet_id;
    }
    for (const StatementNode& s : unit.statements) {
      int owners = 0;
      for (const MethodRegion& region : unit.methods) {
        if (region.body_span.Contains(s.span)) ++owners;
      }
      EXPECT_LE(owners, 1);
    }
  }
}

TEST(ParserPropertyTest, StatementSpansReconstruct) {
  for (const SourceUnit& unit : AcceptedUnits()) {
    std::string reference = StatementTreeToJson(unit);
    for (const StatementNode& s : unit.statements) {
      std::string piece = unit.text.substr(s.span.begin, s.span.size());
      std::string rebuilt =
          testing::Splice(unit.text, s.span.begin, s.span.end, piece);
      ASSERT_EQ(rebuilt, unit.text);
      SourceUnit again = ParseSource(rebuilt, unit.snippet_id);
      ASSERT_EQ(StatementTreeToJson(again), reference);
    }
  }
}

TEST(ParserPropertyTest, StatementSpansStartAndEndOnTokens) {
  for (const SourceUnit& unit : AcceptedUnits()) {
    for (const StatementNode& s : unit.statements) {
      bool starts = false;
      bool ends = false;
      for (const Token& t : unit.tokens) {
        if (t.IsTrivia()) continue;
        starts = starts || t.span.begin == s.span.begin;
        ends = ends || t.span.end == s.span.end;
      }
      EXPECT_TRUE(starts && ends) << unit.snippet_id << " stmt " << s.id;
    }
  }
}

TEST(ParserPropertyTest, ParsingIsDeterministic) {
  for (const auto& file : ParseableFixtures()) {
    std::string text = testing::ReadText(file);
    SourceUnit a = ParseSource(text, "x");
    SourceUnit b = ParseSource(text, "x");
    ASSERT_EQ(a.status.failure, b.status.failure);
    ASSERT_EQ(a.status.line, b.status.line);
    ASSERT_EQ(StatementTreeToJson(a), StatementTreeToJson(b));
    ASSERT_EQ(a.exprs.size(), b.exprs.size());
  }
}

}  // namespace
}  // namespace snipforge
