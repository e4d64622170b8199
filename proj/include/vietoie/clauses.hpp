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

#ifndef VIETOIE_CLAUSES_HPP
#define VIETOIE_CLAUSES_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "vietoie/config.hpp"
#include "vietoie/types.hpp"

namespace vietoie {
namespace detail {

// Child adjacency of the dependency tree, indexed by head id. Children come
// out in surface order because tokens are stored in surface order.
inline std::vector<std::vector<int>> child_index(const Sentence& s) {
  std::vector<std::vector<int>> children(static_cast<std::size_t>(s.size()) + 1);
  for (const Token& t : s.tokens) {
    children[static_cast<std::size_t>(t.head)].push_back(t.id);
  }
  return children;
}

}  // namespace detail

// Per-sentence context shared by the clause operations: the child index and
// the clause-heading verb set.
class ClauseContext {
 public:
  ClauseContext(const Sentence& s, const LabelConfig& cfg)
      : sentence_(&s), cfg_(&cfg), children_(detail::child_index(s)),
        clause_heading_(static_cast<std::size_t>(s.size()) + 1, false) {
    find_clause_heading_verbs();
  }

  const Sentence& sentence() const { return *sentence_; }
  const LabelConfig& config() const { return *cfg_; }
  const std::vector<int>& children(int id) const {
    return children_[static_cast<std::size_t>(id)];
  }
  bool is_clause_heading(int id) const {
    return clause_heading_[static_cast<std::size_t>(id)];
  }

  std::vector<int> clause_heading_verbs() const {
    std::vector<int> out;
    for (int i = 1; i <= sentence_->size(); ++i) {
      if (is_clause_heading(i)) out.push_back(i);
    }
    return out;
  }

  // First dependent of `verb` carrying a subject label, if any.
  std::optional<int> own_subject_head(int verb) const {
    for (int c : children(verb)) {
      if (cfg_->is_subject(sentence_->token(c).deprel)) return c;
    }
    return std::nullopt;
  }

  // Subtree of `head`, excluding the subtrees of any clause-heading verb
  // other than `head` itself. Sorted ascending.
  std::vector<int> span(int head) const {
    std::vector<int> out;
    std::vector<int> stack{head};
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      out.push_back(cur);
      for (int c : children(cur)) {
        if (is_clause_heading(c)) continue;
        stack.push_back(c);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Constituent make_constituent(Role role, int head) const {
    Constituent c;
    c.role = role;
    c.head_index = head;
    c.token_indices = span(head);
    return c;
  }

 private:
  // A verb heads a clause when it is the root, when it carries its own
  // subject, or when it hangs off another clause-heading verb by a
  // coordination link. Verbs attached via vmod without a subject are
  // auxiliaries and are folded into the relation phrase instead.
  void find_clause_heading_verbs() {
    const Sentence& s = *sentence_;
    auto is_verb = [&](int id) { return cfg_->is_verb_pos(s.token(id).cpostag); };
    for (const Token& t : s.tokens) {
      if (!is_verb(t.id)) continue;
      if (t.head == 0 || own_subject_head(t.id).has_value()) {
        clause_heading_[static_cast<std::size_t>(t.id)] = true;
      }
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Token& t : s.tokens) {
        if (clause_heading_[static_cast<std::size_t>(t.id)]) continue;
        if (!is_verb(t.id) || t.head == 0) continue;
        if (cfg_->is_verb_group(t.deprel) && is_clause_heading(t.head)) {
          clause_heading_[static_cast<std::size_t>(t.id)] = true;
          changed = true;
        }
      }
    }
  }

  const Sentence* sentence_;
  const LabelConfig* cfg_;
  std::vector<std::vector<int>> children_;
  std::vector<bool> clause_heading_;
};

// Clause-heading verbs in surface order. The count of these is the verb
// count used by the statistics buckets.
inline std::vector<int> find_verbs(const Sentence& s, const LabelConfig& cfg = LabelConfig{}) {
  return ClauseContext(s, cfg).clause_heading_verbs();
}

namespace detail {

inline std::optional<Constituent> find_subject_in(const ClauseContext& ctx, int verb) {
  const Sentence& s = ctx.sentence();
  const LabelConfig& cfg = ctx.config();
  if (auto own = ctx.own_subject_head(verb)) {
    return ctx.make_constituent(Role::Subject, *own);
  }
  // Shared-subject rule: walk coordination links toward the sentence root
  // and take the nearest ancestor verb that has its own subject.
  int cur = verb;
  while (true) {
    const Token& t = s.token(cur);
    if (t.head == 0 || !cfg.is_verb_group(t.deprel) || !ctx.is_clause_heading(t.head)) break;
    cur = t.head;
    if (auto own = ctx.own_subject_head(cur)) {
      return ctx.make_constituent(Role::Subject, *own);
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Subject of a clause-heading verb: its own subject dependent, or the one
// inherited along conj/coord chains. Absent when neither exists; no clause
// is produced for such a verb.
inline std::optional<Constituent> find_subject(const Sentence& s, int verb,
                                               const LabelConfig& cfg = LabelConfig{}) {
  return detail::find_subject_in(ClauseContext(s, cfg), verb);
}

struct Constituents {
  std::optional<Constituent> direct_object;
  std::optional<Constituent> indirect_object;
  std::optional<Constituent> complement;
  std::vector<Constituent> adverbials;  // surface order
};

namespace detail {

inline Constituents collect_constituents_in(const ClauseContext& ctx, int verb) {
  const Sentence& s = ctx.sentence();
  const LabelConfig& cfg = ctx.config();
  Constituents out;
  for (int c : ctx.children(verb)) {
    const std::string& deprel = s.token(c).deprel;
    if (cfg.is_direct_object(deprel)) {
      if (!out.direct_object) out.direct_object = ctx.make_constituent(Role::DirectObject, c);
    } else if (cfg.is_indirect_object(deprel)) {
      if (!out.indirect_object) out.indirect_object = ctx.make_constituent(Role::IndirectObject, c);
    } else if (cfg.is_complement(deprel)) {
      if (!out.complement) out.complement = ctx.make_constituent(Role::Complement, c);
    } else if (cfg.is_adverbial(deprel)) {
      out.adverbials.push_back(ctx.make_constituent(Role::Adverbial, c));
    }
  }
  return out;
}

}  // namespace detail

// Buckets the verb's dependents by dependency label alone (Algorithm lines
// collecting C, O, A). Clause assembly in detect_clauses additionally handles
// copulas, nested clauses and essential adverbials.
inline Constituents collect_constituents(const Sentence& s, int verb,
                                         const LabelConfig& cfg = LabelConfig{}) {
  return detail::collect_constituents_in(ClauseContext(s, cfg), verb);
}

// The clause-type decision procedure, total on its 16 input combinations.
inline ClauseType classify_clause(bool has_direct_object, bool has_indirect_object,
                                  bool has_complement, bool has_adverbial) {
  if (has_direct_object) {
    if (has_indirect_object) return ClauseType::SVOO;
    if (has_adverbial) return ClauseType::SVOA;
    if (has_complement) return ClauseType::SVOC;
    return ClauseType::SVO;
  }
  if (has_complement) return ClauseType::SVC;
  if (has_adverbial) return ClauseType::SVA;
  return ClauseType::SV;
}

namespace detail {

inline std::optional<Clause> build_clause(const ClauseContext& ctx, int verb) {
  const Sentence& s = ctx.sentence();
  const LabelConfig& cfg = ctx.config();

  auto subject = find_subject_in(ctx, verb);
  if (!subject) return std::nullopt;

  Clause clause;
  clause.sentence_id = s.sentence_id;
  clause.subject = std::move(*subject);
  clause.verb_head = verb;

  std::vector<bool> clausal;  // marks adverbials that are flattened clauses
  for (int c : ctx.children(verb)) {
    const Token& t = s.token(c);
    if (cfg.is_punct(t.deprel) || cfg.is_subject(t.deprel)) continue;
    if (ctx.is_clause_heading(c)) {
      // A coordinated or embedded clause: kept as its own clause elsewhere,
      // and flattened here into an optional adverbial argument.
      clause.adverbials.push_back(ctx.make_constituent(Role::Adverbial, c));
      clausal.push_back(true);
      continue;
    }
    if (cfg.is_verb_modifier(t.deprel)) {
      for (int i : ctx.span(c)) {
        if (!cfg.is_punct(s.token(i).deprel)) clause.verb_modifier_indices.push_back(i);
      }
      continue;
    }
    if (cfg.is_direct_object(t.deprel)) {
      if (!clause.direct_object) clause.direct_object = ctx.make_constituent(Role::DirectObject, c);
    } else if (cfg.is_indirect_object(t.deprel)) {
      if (!clause.indirect_object) clause.indirect_object = ctx.make_constituent(Role::IndirectObject, c);
    } else if (cfg.is_complement(t.deprel)) {
      if (!clause.complement) clause.complement = ctx.make_constituent(Role::Complement, c);
    } else if (cfg.is_adverbial(t.deprel)) {
      clause.adverbials.push_back(ctx.make_constituent(Role::Adverbial, c));
      clausal.push_back(false);
    }
  }
  std::sort(clause.verb_modifier_indices.begin(), clause.verb_modifier_indices.end());

  // Copular verbs predicate their object of the subject: re-bucket as
  // complement so the clause reads SVC.
  if (cfg.copula_lexicon.count(s.token(verb).form) > 0 && clause.direct_object &&
      !clause.complement) {
    clause.complement = std::move(clause.direct_object);
    clause.complement->role = Role::Complement;
    clause.direct_object.reset();
  }

  // Verbs in the essential-adverb lexicon require their first phrasal
  // adverbial; everything else stays optional.
  if (cfg.essential_adverb_verbs.count(s.token(verb).form) > 0) {
    for (std::size_t i = 0; i < clause.adverbials.size(); ++i) {
      if (!clausal[i]) {
        clause.adverbials[i].essential = true;
        break;
      }
    }
  }

  bool has_essential_adverbial = false;
  for (const Constituent& a : clause.adverbials) has_essential_adverbial |= a.essential;
  clause.type = classify_clause(clause.direct_object.has_value(),
                               clause.indirect_object.has_value(),
                               clause.complement.has_value(), has_essential_adverbial);
  return clause;
}

}  // namespace detail

// One clause per clause-heading verb with a resolvable subject, in verb
// surface order.
inline std::vector<Clause> detect_clauses(const Sentence& s,
                                          const LabelConfig& cfg = LabelConfig{}) {
  ClauseContext ctx(s, cfg);
  std::vector<Clause> clauses;
  for (int verb : ctx.clause_heading_verbs()) {
    if (auto clause = detail::build_clause(ctx, verb)) {
      clauses.push_back(std::move(*clause));
    }
  }
  return clauses;
}

}  // namespace vietoie

#endif  // VIETOIE_CLAUSES_HPP
