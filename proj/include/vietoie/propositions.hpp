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

#ifndef VIETOIE_PROPOSITIONS_HPP
#define VIETOIE_PROPOSITIONS_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include "vietoie/clauses.hpp"
#include "vietoie/config.hpp"
#include "vietoie/types.hpp"

namespace vietoie {

// Upper bound on the optional-adverbial count that still gets full power-set
// enumeration; beyond it only the empty subset, the singletons and the full
// set are derived.
inline constexpr std::size_t kDefaultSubsetCap = 4;

namespace detail {

inline void append_subsets(std::size_t k, std::size_t cap,
                           std::vector<std::vector<std::size_t>>& subsets) {
  // Order: empty set, singletons in surface order, then larger subsets in
  // (size, lexicographic) order, full set last.
  subsets.push_back({});
  if (k == 0) return;
  if (k <= cap) {
    for (std::size_t size = 1; size <= k; ++size) {
      std::vector<std::size_t> pick(size);
      // Lexicographic enumeration of size-`size` index combinations.
      for (std::size_t i = 0; i < size; ++i) pick[i] = i;
      while (true) {
        subsets.push_back(pick);
        std::size_t i = size;
        while (i > 0 && pick[i - 1] == k - size + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  } else {
    for (std::size_t i = 0; i < k; ++i) subsets.push_back({i});
    std::vector<std::size_t> full(k);
    for (std::size_t i = 0; i < k; ++i) full[i] = i;
    subsets.push_back(std::move(full));
  }
}

}  // namespace detail

// Derived-clause patterns of a clause: the base pattern holds every
// non-adverbial constituent plus all essential adverbials; the optional
// adverbials are enumerated as subsets up to `subset_cap`.
inline std::vector<Pattern> derive_patterns(const Clause& c,
                                            std::size_t subset_cap = kDefaultSubsetCap) {
  std::vector<std::size_t> essential, optional_idx;
  for (std::size_t i = 0; i < c.adverbials.size(); ++i) {
    (c.adverbials[i].essential ? essential : optional_idx).push_back(i);
  }

  std::vector<std::vector<std::size_t>> subsets;
  detail::append_subsets(optional_idx.size(), subset_cap, subsets);

  std::vector<Pattern> patterns;
  patterns.reserve(subsets.size());
  for (const auto& subset : subsets) {
    Pattern p;
    p.sequence = {Slot::S, Slot::V};
    if (c.direct_object) p.sequence.push_back(Slot::O);
    if (c.indirect_object) p.sequence.push_back(Slot::Oi);
    if (c.complement) p.sequence.push_back(Slot::C);
    p.adverbial_picks = essential;
    for (std::size_t s : subset) p.adverbial_picks.push_back(optional_idx[s]);
    std::sort(p.adverbial_picks.begin(), p.adverbial_picks.end());
    for (std::size_t i = 0; i < p.adverbial_picks.size(); ++i) p.sequence.push_back(Slot::A);
    p.label.reserve(p.sequence.size());
    for (Slot slot : p.sequence) p.label.push_back(slot_letter(slot));
    patterns.push_back(std::move(p));
  }
  return patterns;
}

namespace detail {

// Collapse any whitespace run in a form to a single space so downstream
// TSV stays one-record-per-line.
inline void append_clean_form(std::string& out, const std::string& form) {
  bool in_space = false;
  for (char ch : form) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\v' || ch == '\f') {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out.push_back(' ');
    in_space = false;
    out.push_back(ch);
  }
}

inline std::string realize_indices(const Sentence& s, const std::vector<int>& indices,
                                   const LabelConfig& cfg, int skip_index = 0) {
  std::vector<int> kept;
  kept.reserve(indices.size());
  for (int idx : indices) {
    if (idx != skip_index) kept.push_back(idx);
  }
  // Trim leading and trailing punctuation; inner punctuation stays.
  std::size_t lo = 0, hi = kept.size();
  while (lo < hi && cfg.is_punct(s.token(kept[lo]).deprel)) ++lo;
  while (hi > lo && cfg.is_punct(s.token(kept[hi - 1]).deprel)) --hi;
  std::string out;
  for (std::size_t i = lo; i < hi; ++i) {
    if (!out.empty()) out.push_back(' ');
    append_clean_form(out, s.token(kept[i]).form);
  }
  return out;
}

}  // namespace detail

// Surface yield of a constituent: forms in surface order, space separated,
// underscores kept, leading and trailing punctuation dropped.
inline std::string realize_constituent(const Sentence& s, const Constituent& c,
                                       const LabelConfig& cfg = LabelConfig{}) {
  return detail::realize_indices(s, c.token_indices, cfg);
}

namespace detail {

// Whether the argument right after the relation starts with a preposition
// that should fold into the relation phrase ("dạy_học ở" / "has taught at").
inline bool folds_preposition(const Sentence& s, const Constituent& arg,
                              const LabelConfig& cfg) {
  if (arg.role != Role::Adverbial) return false;
  if (arg.token_indices.size() < 2) return false;  // nothing would remain
  const Token& head = s.token(arg.head_index);
  return cfg.is_preposition(head.cpostag, head.form);
}

inline std::string relation_base(const Sentence& s, const Clause& c) {
  std::vector<int> indices = c.verb_modifier_indices;
  indices.push_back(c.verb_head);
  std::sort(indices.begin(), indices.end());
  std::string out;
  for (int idx : indices) {
    if (!out.empty()) out.push_back(' ');
    append_clean_form(out, s.token(idx).form);
  }
  return out;
}

}  // namespace detail

// Relation phrase of a clause: verb modifiers and head in surface order,
// plus the folded preposition of the first post-verb argument when that
// argument is a preposition-headed adverbial.
inline std::string build_relation_phrase(const Sentence& s, const Clause& c,
                                         const Constituent* first_arg_after_rel = nullptr,
                                         const LabelConfig& cfg = LabelConfig{}) {
  std::string rel = detail::relation_base(s, c);
  if (first_arg_after_rel && detail::folds_preposition(s, *first_arg_after_rel, cfg)) {
    rel.push_back(' ');
    detail::append_clean_form(rel, s.token(first_arg_after_rel->head_index).form);
  }
  return rel;
}

namespace detail {

inline std::string proposition_key(const Proposition& p) {
  std::string key = std::string(to_string(p.clause_type)) + '\x1f' + p.pattern + '\x1f' +
                    p.arg1 + '\x1f' + p.rel;
  for (const std::string& a : p.extra_args) {
    key.push_back('\x1f');
    key += a;
  }
  return key;
}

inline std::vector<Proposition> propositions_for_clause(const Sentence& s, const Clause& c,
                                                        const LabelConfig& cfg,
                                                        std::size_t subset_cap) {
  std::vector<Proposition> out;
  const std::string arg1 = realize_constituent(s, c.subject, cfg);
  for (const Pattern& pattern : derive_patterns(c, subset_cap)) {
    // Constituents in pattern order: O, Oi, C, then the picked adverbials.
    std::vector<const Constituent*> args;
    if (c.direct_object) args.push_back(&*c.direct_object);
    if (c.indirect_object) args.push_back(&*c.indirect_object);
    if (c.complement) args.push_back(&*c.complement);
    for (std::size_t pick : pattern.adverbial_picks) args.push_back(&c.adverbials[pick]);

    const Constituent* first = args.empty() ? nullptr : args.front();
    Proposition p;
    p.sentence_id = s.sentence_id;
    p.clause_type = c.type;
    p.pattern = pattern.label;
    p.arg1 = arg1;
    p.rel = build_relation_phrase(s, c, first, cfg);
    for (std::size_t i = 0; i < args.size(); ++i) {
      const Constituent* a = args[i];
      int skip = 0;
      if (i == 0 && folds_preposition(s, *a, cfg)) skip = a->head_index;
      p.extra_args.push_back(realize_indices(s, a->token_indices, cfg, skip));
    }
    out.push_back(std::move(p));
  }
  return out;
}

inline void dedup_and_number(std::vector<Proposition>& props, const std::string& sentence_id) {
  std::vector<Proposition> unique;
  std::unordered_set<std::string> seen;
  for (Proposition& p : props) {
    if (seen.insert(proposition_key(p)).second) unique.push_back(std::move(p));
  }
  for (std::size_t i = 0; i < unique.size(); ++i) {
    unique[i].proposition_id = sentence_id + "#" + std::to_string(i + 1);
  }
  props = std::move(unique);
}

}  // namespace detail

// Propositions of one clause: one per derived pattern, byte-identical
// duplicates removed, ids numbered within the clause.
inline std::vector<Proposition> build_propositions(const Sentence& s, const Clause& c,
                                                   const LabelConfig& cfg = LabelConfig{},
                                                   std::size_t subset_cap = kDefaultSubsetCap) {
  auto props = detail::propositions_for_clause(s, c, cfg, subset_cap);
  detail::dedup_and_number(props, s.sentence_id);
  return props;
}

// Full per-sentence extraction: clause order then pattern order, duplicates
// removed across the whole sentence, ids assigned sequentially.
inline std::vector<Proposition> extract(const Sentence& s, const LabelConfig& cfg = LabelConfig{},
                                        std::size_t subset_cap = kDefaultSubsetCap) {
  std::vector<Proposition> props;
  for (const Clause& c : detect_clauses(s, cfg)) {
    auto clause_props = detail::propositions_for_clause(s, c, cfg, subset_cap);
    props.insert(props.end(), std::make_move_iterator(clause_props.begin()),
                 std::make_move_iterator(clause_props.end()));
  }
  detail::dedup_and_number(props, s.sentence_id);
  return props;
}

}  // namespace vietoie

#endif  // VIETOIE_PROPOSITIONS_HPP
