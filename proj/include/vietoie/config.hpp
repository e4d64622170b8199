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

#ifndef VIETOIE_CONFIG_HPP
#define VIETOIE_CONFIG_HPP

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>

namespace vietoie {

inline std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

// Dependency-label and lexicon configuration. Label sets are matched
// case-insensitively against deprels; lexicons match token forms exactly.
struct LabelConfig {
  std::unordered_set<std::string> subject_labels{"sub", "nsubj"};
  std::unordered_set<std::string> direct_object_labels{"dob"};
  std::unordered_set<std::string> indirect_object_labels{"iob"};
  std::unordered_set<std::string> complement_labels{"pred", "comp"};
  // Applied to dependents of a verb; "nmod" here covers nmod-on-verb only,
  // nmod under nouns stays inside the noun's span.
  std::unordered_set<std::string> adverbial_labels{"loc", "tmp", "adv", "pmod", "nmod"};
  // Links that group coordinated verbs into clause chains.
  std::unordered_set<std::string> verb_group_labels{"conj", "coord", "compound"};
  // Links whose non-clause dependents fold into the relation phrase.
  std::unordered_set<std::string> verb_modifier_labels{"vmod"};
  std::unordered_set<std::string> punct_labels{"punct"};
  std::unordered_set<std::string> verb_cpostags{"V"};
  std::unordered_set<std::string> preposition_cpostags{"E"};
  // Verbs whose direct object is re-bucketed as complement (SVC).
  std::unordered_set<std::string> copula_lexicon{"là"};
  // Verbs whose first phrasal adverbial is essential rather than optional.
  std::unordered_set<std::string> essential_adverb_verbs{};
  // Extra forms treated as prepositions in addition to preposition_cpostags.
  std::unordered_set<std::string> preposition_lexicon{};

  bool is_subject(std::string_view d) const { return subject_labels.count(ascii_lower(d)) > 0; }
  bool is_direct_object(std::string_view d) const { return direct_object_labels.count(ascii_lower(d)) > 0; }
  bool is_indirect_object(std::string_view d) const { return indirect_object_labels.count(ascii_lower(d)) > 0; }
  bool is_complement(std::string_view d) const { return complement_labels.count(ascii_lower(d)) > 0; }
  bool is_adverbial(std::string_view d) const { return adverbial_labels.count(ascii_lower(d)) > 0; }
  bool is_verb_group(std::string_view d) const { return verb_group_labels.count(ascii_lower(d)) > 0; }
  bool is_verb_modifier(std::string_view d) const { return verb_modifier_labels.count(ascii_lower(d)) > 0; }
  bool is_punct(std::string_view d) const { return punct_labels.count(ascii_lower(d)) > 0; }
  bool is_verb_pos(std::string_view c) const { return verb_cpostags.count(std::string(c)) > 0; }
  bool is_preposition(std::string_view cpos, std::string_view form) const {
    return preposition_cpostags.count(std::string(cpos)) > 0 ||
           preposition_lexicon.count(std::string(form)) > 0;
  }
};

struct ConfigError : std::runtime_error {
  int line;
  ConfigError(int line_no, const std::string& msg)
      : std::runtime_error("config line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

namespace detail {

inline std::string_view trim_view(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::unordered_set<std::string> parse_value_list(std::string_view v, bool lowercase) {
  std::unordered_set<std::string> out;
  std::size_t start = 0;
  while (start <= v.size()) {
    std::size_t comma = v.find(',', start);
    std::string_view item = v.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    item = trim_view(item);
    if (!item.empty()) out.insert(lowercase ? ascii_lower(item) : std::string(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace detail

// Parses the flat key-value label-map format:
//   # comment
//   subject = sub, nsubj
//   copula_lexicon = là
// Omitted keys keep their defaults; an empty value clears the set.
inline LabelConfig parse_label_config(std::string_view text) {
  LabelConfig cfg;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++line_no;
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;

    std::string_view t = detail::trim_view(line);
    if (t.empty() || t.front() == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line_no, "expected 'key = values'");
    std::string key = ascii_lower(detail::trim_view(t.substr(0, eq)));
    std::string_view value = detail::trim_view(t.substr(eq + 1));

    if (key == "subject") cfg.subject_labels = detail::parse_value_list(value, true);
    else if (key == "direct_object") cfg.direct_object_labels = detail::parse_value_list(value, true);
    else if (key == "indirect_object") cfg.indirect_object_labels = detail::parse_value_list(value, true);
    else if (key == "complement") cfg.complement_labels = detail::parse_value_list(value, true);
    else if (key == "adverbial") cfg.adverbial_labels = detail::parse_value_list(value, true);
    else if (key == "verb_group") cfg.verb_group_labels = detail::parse_value_list(value, true);
    else if (key == "verb_modifier") cfg.verb_modifier_labels = detail::parse_value_list(value, true);
    else if (key == "punct") cfg.punct_labels = detail::parse_value_list(value, true);
    else if (key == "verb_cpostag") cfg.verb_cpostags = detail::parse_value_list(value, false);
    else if (key == "preposition_cpostag") cfg.preposition_cpostags = detail::parse_value_list(value, false);
    else if (key == "copula_lexicon") cfg.copula_lexicon = detail::parse_value_list(value, false);
    else if (key == "essential_adverb_verbs") cfg.essential_adverb_verbs = detail::parse_value_list(value, false);
    else if (key == "preposition_lexicon") cfg.preposition_lexicon = detail::parse_value_list(value, false);
    else throw ConfigError(line_no, "unknown key '" + key + "'");
  }
  return cfg;
}

}  // namespace vietoie

#endif  // VIETOIE_CONFIG_HPP
