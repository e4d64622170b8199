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

#ifndef VIETOIE_TYPES_HPP
#define VIETOIE_TYPES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace vietoie {

// One token row of a dependency-annotated sentence.
struct Token {
  int id = 0;           // 1-based surface position
  std::string form;     // surface form; compounds joined with '_', e.g. "Tiến_sĩ"
  std::string cpostag;  // coarse POS (N, V, E, ...)
  std::string postag;   // fine POS (Nc, Np, ...)
  int head = 0;         // id of the governing token, 0 for the root
  std::string deprel;   // dependency label (sub, dob, vmod, ...)

  friend bool operator==(const Token&, const Token&) = default;
};

// A validated dependency tree: token ids are 1..n with no gaps, exactly one
// token has head 0, and every token reaches the root by following heads.
struct Sentence {
  std::string sentence_id;
  std::vector<Token> tokens;
  int root_index = 0;  // id of the token whose head is 0

  int size() const { return static_cast<int>(tokens.size()); }
  const Token& token(int id) const { return tokens[static_cast<std::size_t>(id) - 1]; }

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

enum class Role { Subject, Verb, DirectObject, IndirectObject, Complement, Adverbial };

inline const char* to_string(Role r) {
  switch (r) {
    case Role::Subject: return "subject";
    case Role::Verb: return "verb";
    case Role::DirectObject: return "direct_object";
    case Role::IndirectObject: return "indirect_object";
    case Role::Complement: return "complement";
    case Role::Adverbial: return "adverbial";
  }
  return "?";
}

// A role-bearing span realized as a dependency subtree. token_indices holds
// the subtree of head_index, minus the subtrees of any nested clause-heading
// verbs other than the head itself. Punctuation stays in the span and is
// trimmed at realization.
struct Constituent {
  Role role = Role::Adverbial;
  int head_index = 0;
  std::vector<int> token_indices;  // sorted ascending
  bool essential = false;          // meaningful for adverbials only

  friend bool operator==(const Constituent&, const Constituent&) = default;
};

// The seven grammatical clause types.
enum class ClauseType { SV, SVA, SVC, SVO, SVOO, SVOA, SVOC };

inline const char* to_string(ClauseType t) {
  switch (t) {
    case ClauseType::SV: return "SV";
    case ClauseType::SVA: return "SVA";
    case ClauseType::SVC: return "SVC";
    case ClauseType::SVO: return "SVO";
    case ClauseType::SVOO: return "SVOO";
    case ClauseType::SVOA: return "SVOA";
    case ClauseType::SVOC: return "SVOC";
  }
  return "?";
}

// A detected clause: one clause-heading verb, its subject, and the
// constituents gathered from the verb's dependents.
struct Clause {
  std::string sentence_id;
  Constituent subject;
  int verb_head = 0;
  // Auxiliaries and verb modifiers folded into the relation phrase, sorted.
  std::vector<int> verb_modifier_indices;
  std::optional<Constituent> direct_object;
  std::optional<Constituent> indirect_object;
  std::optional<Constituent> complement;
  std::vector<Constituent> adverbials;  // surface order
  ClauseType type = ClauseType::SV;
};

// One slot of a derived-clause pattern.
enum class Slot { S, V, O, Oi, C, A };

inline char slot_letter(Slot s) {
  switch (s) {
    case Slot::S: return 'S';
    case Slot::V: return 'V';
    case Slot::O: return 'O';
    case Slot::Oi: return 'O';  // indirect object prints as O (SVOO)
    case Slot::C: return 'C';
    case Slot::A: return 'A';
  }
  return '?';
}

// A derived-clause pattern: S V, then at most one O, Oi, C, then A slots.
// adverbial_picks indexes into Clause::adverbials (surface order) and names
// the adverbials realized by this pattern's A slots.
struct Pattern {
  std::vector<Slot> sequence;
  std::string label;
  std::vector<std::size_t> adverbial_picks;
};

// An extracted n-ary tuple (arg1, rel, arg2, ..., argN).
struct Proposition {
  std::string sentence_id;
  ClauseType clause_type = ClauseType::SV;
  std::string pattern;
  std::string arg1;
  std::string rel;
  std::vector<std::string> extra_args;
  std::string proposition_id;  // "<sentence_id>#<k>", k 1-based within the sentence
};

}  // namespace vietoie

#endif  // VIETOIE_TYPES_HPP
