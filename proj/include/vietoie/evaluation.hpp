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

#ifndef VIETOIE_EVALUATION_HPP
#define VIETOIE_EVALUATION_HPP

#include <charconv>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "vietoie/config.hpp"

namespace vietoie {

// One dual-expert verdict. An extraction counts as correct only when both
// experts approve it.
struct GoldLabel {
  std::string proposition_id;
  int verdict_a = 0;
  int verdict_b = 0;
  bool final_correct = false;  // verdict_a == 1 && verdict_b == 1
};

struct LabelError : std::runtime_error {
  int line;
  LabelError(int line_no, const std::string& msg)
      : std::runtime_error("labels line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

// Parses the label file: TSV lines "proposition_id<TAB>a<TAB>b" with '#'
// comments. Throws LabelError on duplicates, non-0/1 verdicts, or malformed
// lines, all with line numbers.
inline std::vector<GoldLabel> load_labels(std::string_view text) {
  std::vector<GoldLabel> out;
  std::unordered_set<std::string> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    std::size_t t1 = line.find('\t');
    std::size_t t2 = t1 == std::string_view::npos ? std::string_view::npos : line.find('\t', t1 + 1);
    if (t1 == std::string_view::npos || t2 == std::string_view::npos) {
      throw LabelError(line_no, "expected 3 tab-separated fields");
    }
    GoldLabel label;
    label.proposition_id = std::string(line.substr(0, t1));
    auto parse_verdict = [&](std::string_view field, int& v) {
      if (field == "0") v = 0;
      else if (field == "1") v = 1;
      else throw LabelError(line_no, "verdict must be 0 or 1, got '" + std::string(field) + "'");
    };
    std::string_view fa = line.substr(t1 + 1, t2 - t1 - 1);
    std::string_view fb = line.substr(t2 + 1);
    while (!fb.empty() && fb.back() == '\t') fb.remove_suffix(1);
    parse_verdict(fa, label.verdict_a);
    parse_verdict(fb, label.verdict_b);
    label.final_correct = label.verdict_a == 1 && label.verdict_b == 1;
    if (!seen.insert(label.proposition_id).second) {
      throw LabelError(line_no, "duplicate proposition id '" + label.proposition_id + "'");
    }
    out.push_back(std::move(label));
  }
  return out;
}

// Sentence-structure class by number of emitted clause outputs.
inline std::string complexity_class(int clause_output_count) {
  if (clause_output_count <= 1) return "simple";
  if (clause_output_count <= 3) return "complex";
  if (clause_output_count <= 6) return "highly complex";
  return "extremely complex";
}

// Verb-count bucket: "1".."6" verbatim, ">6" beyond.
inline std::string verb_bucket(int verb_count) {
  if (verb_count <= 6) return std::to_string(verb_count);
  return ">6";
}

// Per-sentence extraction statistics feeding the reports.
struct SentenceStats {
  std::string sentence_id;
  int verb_count = 0;
  int clause_output_count = 0;
  int token_count = 0;  // 0 means unknown (no corpus at hand)
};

struct CategoryReport {
  std::string bucket_key;
  int sentence_count = 0;
  double avg_tokens = 0.0;
  int clause_output_count = 0;
  int labeled_count = 0;
  int correct_count = 0;
  std::optional<double> precision;  // correct / labeled; empty when nothing labeled
  double ratio_percent = 0.0;       // sentence share of the partition
};

enum class PartitionKind { Verb, Complexity };

struct EvaluationReport {
  PartitionKind partition = PartitionKind::Verb;
  std::vector<CategoryReport> buckets;
  int total_sentences = 0;
  int total_propositions = 0;
  int total_labeled = 0;
  int total_correct = 0;
  int unlabeled_count = 0;
  std::optional<double> micro_precision;  // total correct / total labeled
  std::optional<double> macro_precision;  // mean of defined bucket precisions
};

struct EvaluationError : std::runtime_error {
  std::string proposition_id;
  EvaluationError(const std::string& pid, const std::string& msg)
      : std::runtime_error(msg), proposition_id(pid) {}
};

namespace detail {

inline const std::vector<std::string>& bucket_keys(PartitionKind partition) {
  static const std::vector<std::string> verb{"1", "2", "3", "4", "5", "6", ">6"};
  static const std::vector<std::string> complexity{"simple", "complex", "highly complex",
                                                   "extremely complex"};
  return partition == PartitionKind::Verb ? verb : complexity;
}

// Splits "<sentence_id>#<k>" at the last '#'; returns k or 0 on bad format.
inline int split_proposition_id(std::string_view pid, std::string_view& sentence_id) {
  std::size_t hash = pid.rfind('#');
  if (hash == std::string_view::npos || hash + 1 >= pid.size()) return 0;
  sentence_id = pid.substr(0, hash);
  int k = 0;
  const char* first = pid.data() + hash + 1;
  const char* last = pid.data() + pid.size();
  auto [ptr, ec] = std::from_chars(first, last, k);
  if (ec != std::errc() || ptr != last || k < 1) return 0;
  return k;
}

}  // namespace detail

// Joins extraction statistics with gold labels and buckets the results.
// Labels naming unknown sentences or out-of-range ordinals raise
// EvaluationError; unlabeled extractions are counted but excluded from both
// numerator and denominator.
inline EvaluationReport compute_report(const std::vector<SentenceStats>& stats,
                                       const std::vector<GoldLabel>& labels,
                                       PartitionKind partition) {
  EvaluationReport report;
  report.partition = partition;

  std::unordered_map<std::string_view, const SentenceStats*> by_id;
  by_id.reserve(stats.size());
  for (const SentenceStats& s : stats) by_id[s.sentence_id] = &s;

  auto bucket_of = [&](const SentenceStats& s) -> std::string {
    if (partition == PartitionKind::Verb) return verb_bucket(s.verb_count);
    return complexity_class(s.clause_output_count);
  };

  // labeled/correct tallies per sentence
  std::unordered_map<std::string_view, std::pair<int, int>> tallies;
  for (const GoldLabel& label : labels) {
    std::string_view sid;
    int k = detail::split_proposition_id(label.proposition_id, sid);
    if (k == 0) {
      throw EvaluationError(label.proposition_id,
                            "unknown proposition '" + label.proposition_id + "' (bad id format)");
    }
    auto it = by_id.find(sid);
    if (it == by_id.end() || k > it->second->clause_output_count) {
      throw EvaluationError(label.proposition_id,
                            "unknown proposition '" + label.proposition_id + "'");
    }
    auto& tally = tallies[sid];
    ++tally.first;
    if (label.final_correct) ++tally.second;
  }

  std::map<std::string, CategoryReport> buckets;
  for (const std::string& key : detail::bucket_keys(partition)) {
    buckets[key].bucket_key = key;
  }
  std::map<std::string, long long> token_sums;
  int bucketed_sentences = 0;

  for (const SentenceStats& s : stats) {
    report.total_propositions += s.clause_output_count;
    // Buckets start at 1: sentences with no verbs (verb partition) or no
    // outputs (complexity partition) carry no propositions there and are
    // left out of the rows.
    const int basis = partition == PartitionKind::Verb ? s.verb_count : s.clause_output_count;
    if (basis < 1) continue;
    CategoryReport& bucket = buckets[bucket_of(s)];
    ++bucket.sentence_count;
    ++bucketed_sentences;
    bucket.clause_output_count += s.clause_output_count;
    token_sums[bucket.bucket_key] += s.token_count;
    auto it = tallies.find(s.sentence_id);
    if (it != tallies.end()) {
      bucket.labeled_count += it->second.first;
      bucket.correct_count += it->second.second;
    }
  }

  report.total_sentences = bucketed_sentences;
  for (const std::string& key : detail::bucket_keys(partition)) {
    CategoryReport& bucket = buckets[key];
    if (bucket.sentence_count > 0) {
      bucket.avg_tokens = static_cast<double>(token_sums[key]) / bucket.sentence_count;
      bucket.ratio_percent = 100.0 * bucket.sentence_count / bucketed_sentences;
    }
    if (bucket.labeled_count > 0) {
      bucket.precision = static_cast<double>(bucket.correct_count) / bucket.labeled_count;
    }
    report.total_labeled += bucket.labeled_count;
    report.total_correct += bucket.correct_count;
    report.buckets.push_back(bucket);
  }
  report.unlabeled_count = report.total_propositions - report.total_labeled;
  if (report.total_labeled > 0) {
    report.micro_precision = static_cast<double>(report.total_correct) / report.total_labeled;
  }
  double macro_sum = 0.0;
  int macro_n = 0;
  for (const CategoryReport& b : report.buckets) {
    if (b.precision) {
      macro_sum += *b.precision;
      ++macro_n;
    }
  }
  if (macro_n > 0) report.macro_precision = macro_sum / macro_n;
  return report;
}

}  // namespace vietoie

#endif  // VIETOIE_EVALUATION_HPP
