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

#include "snipforge/serialize.h"

#include <nlohmann/json.hpp>

namespace snipforge {
namespace {

using Json = nlohmann::ordered_json;

Json ViolationsJson(const std::vector<Violation>& violations) {
  Json list = Json::array();
  for (const Violation& v : violations) {
    list.push_back({{"rule", std::string(RuleName(v.rule))},
                    {"line", v.line},
                    {"message", v.message}});
  }
  return list;
}

Json CountsJson(const RuleCounts& counts) {
  Json out = Json::object();
  for (RuleId rule : kAllRules) {
    const auto it = counts.find(rule);
    if (it != counts.end() && it->second != 0) {
      out[std::string(RuleName(rule))] = it->second;
    }
  }
  return out;
}

Json RationalJson(const Rational& r) {
  if (!r.defined()) return nullptr;
  return {{"fraction", r.ToFraction()},
          {"decimal", r.ToDecimal(2)},
          {"value", r.ToDouble()}};
}

std::string LocatorJson(const std::optional<Locator>& loc) {
  if (!loc) return "-";
  return (loc->granularity == Granularity::kLine ? "l" : "s") +
         std::to_string(loc->index);
}

std::string_view ParseFailureName(ParseFailure f) {
  switch (f) {
    case ParseFailure::kNone:
      return "NONE";
    case ParseFailure::kLexical:
      return "LEXICAL";
    case ParseFailure::kSyntax:
      return "SYNTAX";
    case ParseFailure::kUnsupported:
      return "UNSUPPORTED";
  }
  return "NONE";
}

Json PartitionJson(const PartitionMatrix& m, const std::vector<RuleId>& rows) {
  Json cells = Json::object();
  for (RuleId rule : rows) {
    Json row = Json::object();
    for (std::size_t c = 0; c < kAllEditKinds.size(); ++c) {
      row[std::string(EditKindName(kAllEditKinds[c]))] = m.cells.at(rule)[c];
    }
    row["total"] = m.row_totals.at(rule);
    cells[std::string(RuleName(rule))] = std::move(row);
  }
  Json columns = Json::object();
  Json files = Json::object();
  for (std::size_t c = 0; c < kAllEditKinds.size(); ++c) {
    columns[std::string(EditKindName(kAllEditKinds[c]))] = m.column_totals[c];
    files[std::string(EditKindName(kAllEditKinds[c]))] = m.files[c];
  }
  return {{"total", m.total},
          {"files_total", m.files_total},
          {"column_totals", std::move(columns)},
          {"files", std::move(files)},
          {"cells", std::move(cells)}};
}

}  // namespace

std::string ManifestToJson(const CorpusManifest& manifest) {
  Json rejected = Json::array();
  for (const Rejection& r : manifest.rejected) {
    rejected.push_back({{"id", r.id},
                        {"reason", std::string(RejectionReasonName(r.reason))},
                        {"detail", r.detail}});
  }
  const Json out = {{"accepted", manifest.accepted},
                    {"rejected", std::move(rejected)},
                    {"counts",
                     {{"ingested_files", manifest.ingested_files},
                      {"accepted_files", manifest.accepted_files},
                      {"accepted_methods", manifest.accepted_methods},
                      {"rejected_files", manifest.rejected.size()}}}};
  return out.dump(2) + "\n";
}

std::string OriginalViolationsToJsonLine(
    std::string_view snippet_id,
    const std::optional<std::vector<Violation>>& violations) {
  Json out = {{"snippet_id", std::string(snippet_id)}};
  if (violations) {
    out["violations"] = ViolationsJson(*violations);
  } else {
    out["violations"] = "UNANALYZABLE";
  }
  return out.dump() + "\n";
}

std::string OutcomeToJsonLine(const PatchOutcome& outcome,
                              const DeltaRecord& record) {
  const Edit& edit = outcome.patch.edits.front();
  Json out = {{"canonical", outcome.patch.canonical},
              {"snippet_id", outcome.patch.snippet_id},
              {"edit_kind", std::string(EditKindName(edit.kind))},
              {"source", LocatorJson(edit.source)},
              {"target", LocatorJson(edit.target)},
              {"parse_status", outcome.parse_status.ok() ? "OK" : "FAILED"}};
  if (!outcome.parse_status.ok()) {
    out["parse_error"] = {
        {"kind", std::string(ParseFailureName(outcome.parse_status.failure))},
        {"line", outcome.parse_status.line},
        {"column", outcome.parse_status.column},
        {"reason", outcome.parse_status.reason}};
  }
  out["validity"] = outcome.validity.ToString();
  if (outcome.violations) {
    out["violations"] = ViolationsJson(*outcome.violations);
  } else {
    out["violations"] = "UNANALYZABLE";
  }
  out["before"] = record.before;
  if (record.after) {
    out["after"] = *record.after;
  } else {
    out["after"] = nullptr;
  }
  out["removed"] = CountsJson(record.removed);
  out["introduced"] = CountsJson(record.introduced);
  return out.dump() + "\n";
}

std::string MatrixToCsv(const MatrixReport& matrix, Partition partition,
                        std::string_view validity_mode) {
  const PartitionMatrix& m = matrix.partition(partition);
  std::string out = "# partition=" + std::string(PartitionName(partition)) +
                    "; validity=" + std::string(validity_mode) +
                    "; VALID/INVALID stand in for compiles/does not compile\n";
  out += "rule,original,total";
  for (EditKind kind : kAllEditKinds) out += "," + std::string(EditKindName(kind));
  out += "\n";
  for (RuleId rule : matrix.rows) {
    const auto it = matrix.original.find(rule);
    out += std::string(RuleName(rule)) + "," +
           std::to_string(it == matrix.original.end() ? 0 : it->second) + "," +
           std::to_string(m.row_totals.at(rule));
    for (int cell : m.cells.at(rule)) out += "," + std::to_string(cell);
    out += "\n";
  }
  out += "total," + std::to_string(matrix.original_total) + "," +
         std::to_string(m.total);
  for (int cell : m.column_totals) out += "," + std::to_string(cell);
  out += "\nfiles," + std::to_string(matrix.original_files) + "," +
         std::to_string(m.files_total);
  for (int cell : m.files) out += "," + std::to_string(cell);
  out += "\n";
  return out;
}

std::string SummaryToJson(const RunSummary& s) {
  Json rates = nullptr;
  if (s.rates) {
    rates = {{"line", RationalJson(s.rates->line_rate)},
             {"statement", RationalJson(s.rates->stmt_rate)},
             {"overall", RationalJson(s.rates->overall_rate)},
             {"line_valid", s.rates->line_valid},
             {"line_total", s.rates->line_total},
             {"statement_valid", s.rates->stmt_valid},
             {"statement_total", s.rates->stmt_total}};
    if (s.rates->line_rate.defined() && s.rates->line_rate.num() != 0 &&
        s.rates->stmt_rate.defined()) {
      const Rational ratio(s.rates->stmt_rate.num() * s.rates->line_rate.den(),
                           s.rates->stmt_rate.den() * s.rates->line_rate.num());
      rates["statement_to_line_ratio"] = RationalJson(ratio);
    } else {
      rates["statement_to_line_ratio"] = nullptr;
    }
  }
  Json histogram = Json::object();
  for (const auto& [removed, n] : s.census.histogram) {
    histogram[std::to_string(removed)] = n;
  }
  Json classes = Json::object();
  for (const auto& [canonical, c] : s.census.cleaning_classes) {
    classes[canonical] = std::string(CleaningClassName(c));
  }
  Json class_counts = Json::object();
  Json valid_class_counts = Json::object();
  for (CleaningClass c :
       {CleaningClass::kDeletedOffender, CleaningClass::kModifiedOffender,
        CleaningClass::kOther}) {
    const auto a = s.census.class_counts.find(c);
    const auto v = s.census.valid_class_counts.find(c);
    class_counts[std::string(CleaningClassName(c))] =
        a == s.census.class_counts.end() ? 0 : a->second;
    valid_class_counts[std::string(CleaningClassName(c))] =
        v == s.census.valid_class_counts.end() ? 0 : v->second;
  }
  Json original = Json::object();
  for (RuleId rule : s.matrix.rows) {
    const auto it = s.matrix.original.find(rule);
    original[std::string(RuleName(rule))] =
        it == s.matrix.original.end() ? 0 : it->second;
  }
  const Json out = {
      {"config",
       {{"seed", s.seed},
        {"n_line", s.n_line},
        {"n_stmt", s.n_stmt},
        {"sampling", s.sampling_mode},
        {"validity", s.validity_mode},
        {"ruleset", std::string(kRulesetName)}}},
      {"partition_note",
       "VALID/INVALID under the " + s.validity_mode +
           " validity check stand in for compiles/does not compile"},
      {"corpus",
       {{"ingested_files", s.ingested_files},
        {"accepted_files", s.accepted_files},
        {"accepted_methods", s.accepted_methods},
        {"originals_with_violations", s.originals_with_violations},
        {"original_violations", s.original_violations}}},
      {"sampling",
       {{"drawn", s.drawn},
        {"retained", s.retained},
        {"duplicates", s.duplicates},
        {"distinct_patched_texts", s.distinct_patched_texts},
        {"focus_records", s.focus_records}}},
      {"validity_rates", std::move(rates)},
      {"original_violations_by_rule", std::move(original)},
      {"matrix",
       {{"VALID", PartitionJson(s.matrix.valid, s.matrix.rows)},
        {"INVALID", PartitionJson(s.matrix.invalid, s.matrix.rows)}}},
      {"census",
       {{"cleaned", s.census.cleaned_patches.size()},
        {"valid_cleaned", s.census.valid_cleaned},
        {"valid_fraction", RationalJson(s.census.valid_fraction)},
        {"histogram", std::move(histogram)},
        {"class_counts", std::move(class_counts)},
        {"valid_class_counts", std::move(valid_class_counts)},
        {"cleaned_patches", s.census.cleaned_patches},
        {"cleaning_classes", std::move(classes)}}},
      {"averages",
       {{"original", RationalJson(s.averages.original)},
        {"patched", RationalJson(s.averages.patched)},
        {"valid_patched", RationalJson(s.averages.valid_patched)}}},
      {"notices", s.notices}};
  return out.dump(2) + "\n";
}

std::string StatementTreeToJson(const SourceUnit& unit) {
  std::string out = "[";
  for (const StatementNode& s : unit.statements) {
    const Json node = {{"id", s.id},
                       {"kind", std::string(StmtKindName(s.kind))},
                       {"line_range", {s.lines.first, s.lines.last}},
                       {"children", s.children}};
    out += (s.id == 0 ? "\n  " : ",\n  ") + node.dump();
  }
  return out + (unit.statements.empty() ? "]\n" : "\n]\n");
}

}  // namespace snipforge
