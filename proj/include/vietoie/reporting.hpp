// Copyright 2026 The vietoie Authors.
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

#ifndef VIETOIE_REPORTING_HPP
#define VIETOIE_REPORTING_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <string>
#include <vector>

#include "vietoie/evaluation.hpp"
#include "vietoie/types.hpp"

namespace vietoie {
namespace detail {

inline std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

inline std::string avg_tokens_cell(const CategoryReport& b) {
  if (b.sentence_count == 0 || b.avg_tokens <= 0.0) return "n/a";
  return std::to_string(static_cast<long long>(std::llround(b.avg_tokens)));
}

inline std::string precision_cell(const CategoryReport& b) {
  if (!b.precision) return "n/a";
  return fixed2(100.0 * *b.precision);
}

inline std::string align_rows(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += row[i];
      if (i + 1 < row.size()) out.append(widths[i] - row[i].size() + 2, ' ');
    }
    out += '\n';
  }
  return out;
}

inline std::string join_tsv(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += '\t';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

}  // namespace detail

// Clause-generation statistics rows: one row per verb bucket.
inline std::vector<std::vector<std::string>> stats_rows(const EvaluationReport& report) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"#verbs", "#sentences", "#average tokens", "#clause outputs"});
  for (const CategoryReport& b : report.buckets) {
    rows.push_back({b.bucket_key, std::to_string(b.sentence_count), detail::avg_tokens_cell(b),
                    std::to_string(b.clause_output_count)});
  }
  return rows;
}

// Precision report rows for either partition, plus the overall line.
inline std::vector<std::vector<std::string>> report_rows(const EvaluationReport& report,
                                                         bool macro = false) {
  std::vector<std::vector<std::string>> rows;
  const double overall =
      macro ? report.macro_precision.value_or(-1.0) : report.micro_precision.value_or(-1.0);
  const std::string overall_cell = overall < 0.0 ? "n/a" : detail::fixed2(100.0 * overall);
  if (report.partition == PartitionKind::Verb) {
    rows.push_back({"#verbs", "#sentences", "#average tokens", "#clause outputs", "#correct",
                    "Precision (%)"});
    for (const CategoryReport& b : report.buckets) {
      rows.push_back({b.bucket_key, std::to_string(b.sentence_count), detail::avg_tokens_cell(b),
                      std::to_string(b.clause_output_count), std::to_string(b.correct_count),
                      detail::precision_cell(b)});
    }
    rows.push_back({"Overall", "", "", "", "", overall_cell});
  } else {
    rows.push_back({"No.", "Category", "Ratio (%)", "Precision (%)"});
    int no = 0;
    for (const CategoryReport& b : report.buckets) {
      std::string category = b.bucket_key;
      category[0] = static_cast<char>(category[0] - 'a' + 'A');
      rows.push_back({std::to_string(++no), category, detail::fixed2(b.ratio_percent),
                      detail::precision_cell(b)});
    }
    rows.push_back({"", "Overall", "", overall_cell});
  }
  return rows;
}

inline std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  return detail::align_rows(rows);
}

inline std::string render_tsv(const std::vector<std::vector<std::string>>& rows) {
  return detail::join_tsv(rows);
}

// Per-bucket precision series as CSV, one line per bucket.
inline std::string fig1_csv(const EvaluationReport& report) {
  std::string out = "bucket,precision\n";
  for (const CategoryReport& b : report.buckets) {
    out += b.bucket_key + "," + detail::precision_cell(b) + "\n";
  }
  return out;
}

}  // namespace vietoie

#endif  // VIETOIE_REPORTING_HPP
