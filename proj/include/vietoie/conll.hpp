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

#ifndef VIETOIE_CONLL_HPP
#define VIETOIE_CONLL_HPP

#include <charconv>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vietoie/config.hpp"
#include "vietoie/types.hpp"

namespace vietoie {

// A recoverable problem found while reading a corpus. Parsing never throws on
// malformed content; the offending sentence is dropped and reading continues.
struct ParseDiagnostic {
  enum class Kind { MalformedLine, TreeViolation };
  Kind kind = Kind::MalformedLine;
  std::string file;
  int line = 0;  // 1-based; 0 when the problem is sentence-level
  std::string sentence_id;
  std::string message;
  std::string content;  // offending line, when line-level

  std::string format() const {
    std::string out = file;
    if (line > 0) out += ":" + std::to_string(line);
    if (!sentence_id.empty()) out += " [" + sentence_id + "]";
    out += ": " + message;
    if (!content.empty()) out += ": \"" + content + "\"";
    return out;
  }
};

struct ParseResult {
  std::vector<Sentence> sentences;
  std::vector<ParseDiagnostic> diagnostics;
  int rejected_sentences = 0;
};

namespace detail {

inline bool parse_int_field(std::string_view s, int& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

inline std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

// Validates the head relation of a finished block: ids 1..n without gaps,
// exactly one root labeled "root", heads in range, no cycles.
inline bool validate_tree(const std::vector<Token>& tokens, std::string& message) {
  const int n = static_cast<int>(tokens.size());
  for (int i = 0; i < n; ++i) {
    if (tokens[static_cast<std::size_t>(i)].id != i + 1) {
      message = "token ids are not contiguous 1..n";
      return false;
    }
  }
  int root = 0, roots = 0;
  for (const Token& t : tokens) {
    if (t.head > n) {
      message = "head " + std::to_string(t.head) + " of token " + std::to_string(t.id) + " is out of range";
      return false;
    }
    if (t.head == t.id) {
      message = "token " + std::to_string(t.id) + " is its own head";
      return false;
    }
    if (t.head == 0) {
      root = t.id;
      ++roots;
    }
  }
  if (roots == 0) {
    message = "no root token (head 0)";
    return false;
  }
  if (roots > 1) {
    message = "multiple root tokens (head 0)";
    return false;
  }
  if (ascii_lower(tokens[static_cast<std::size_t>(root) - 1].deprel) != "root") {
    message = "root token " + std::to_string(root) + " is not labeled 'root'";
    return false;
  }
  // Walk up from every token; with a single root and in-range heads the only
  // failure mode left is a cycle, caught by the step bound.
  for (const Token& t : tokens) {
    int cur = t.id, steps = 0;
    while (cur != 0) {
      cur = tokens[static_cast<std::size_t>(cur) - 1].head;
      if (++steps > n) {
        message = "cycle in head links reachable from token " + std::to_string(t.id);
        return false;
      }
    }
  }
  return true;
}

}  // namespace detail

// Parses blank-line-separated CoNLL blocks into validated Sentences.
// Rows may be 6-column (ID FORM CPOSTAG POSTAG HEAD DEPREL) or 10-column
// CoNLL-X, whose columns 1,2,4,5,7,8 are used. Lines starting with '#' are
// ignored. Malformed lines and broken trees reject the containing sentence
// with a diagnostic; everything else parses.
inline ParseResult parse_conll(std::string_view text, std::string_view source_name) {
  ParseResult result;
  // Strip a UTF-8 BOM if present.
  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  std::vector<Token> block;
  bool block_bad = false;
  bool block_seen = false;
  int block_first_line = 0;
  int ordinal = 0;
  int line_no = 0;

  auto current_id = [&](int next_ordinal) {
    return std::string(source_name) + ":" + std::to_string(next_ordinal);
  };

  auto finish_block = [&]() {
    if (!block_seen) return;
    ++ordinal;
    std::string sid = current_id(ordinal);
    if (!block_bad) {
      std::string message;
      if (detail::validate_tree(block, message)) {
        Sentence s;
        s.sentence_id = sid;
        s.tokens = std::move(block);
        for (const Token& t : s.tokens) {
          if (t.head == 0) s.root_index = t.id;
        }
        result.sentences.push_back(std::move(s));
      } else {
        result.diagnostics.push_back({ParseDiagnostic::Kind::TreeViolation,
                                      std::string(source_name), block_first_line, sid, message,
                                      ""});
        ++result.rejected_sentences;
      }
    } else {
      ++result.rejected_sentences;
    }
    block.clear();
    block_bad = false;
    block_seen = false;
    block_first_line = 0;
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    bool last = (eol == std::string_view::npos);
    pos = last ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (line.empty()) {
      finish_block();
      continue;
    }
    if (line.front() == '#') continue;

    if (!block_seen) block_first_line = line_no;
    block_seen = true;
    auto fields = detail::split_tabs(line);
    auto malformed = [&](const std::string& why) {
      result.diagnostics.push_back({ParseDiagnostic::Kind::MalformedLine,
                                    std::string(source_name), line_no,
                                    current_id(ordinal + 1), why, std::string(line)});
      block_bad = true;
    };

    if (fields.size() < 6) {
      malformed("expected at least 6 tab-separated fields, got " + std::to_string(fields.size()));
      continue;
    }
    // 10-column CoNLL-X: ID FORM LEMMA CPOSTAG POSTAG FEATS HEAD DEPREL ...
    const bool conllx = fields.size() >= 10;
    std::string_view f_id = fields[0];
    std::string_view f_form = fields[1];
    std::string_view f_cpos = conllx ? fields[3] : fields[2];
    std::string_view f_pos = conllx ? fields[4] : fields[3];
    std::string_view f_head = conllx ? fields[6] : fields[4];
    std::string_view f_deprel = conllx ? fields[7] : fields[5];

    Token t;
    if (!detail::parse_int_field(f_id, t.id) || t.id < 1) {
      malformed("ID is not a positive integer");
      continue;
    }
    if (!detail::parse_int_field(f_head, t.head) || t.head < 0) {
      malformed("HEAD is not a non-negative integer");
      continue;
    }
    if (f_form.empty()) {
      malformed("empty FORM");
      continue;
    }
    t.form = std::string(f_form);
    t.cpostag = std::string(f_cpos);
    t.postag = std::string(f_pos);
    t.deprel = std::string(f_deprel);
    if (!block_bad) block.push_back(std::move(t));
  }
  finish_block();
  return result;
}

// Serializes back to the 6-column layout, one blank line after the block.
inline std::string to_conll(const Sentence& s) {
  std::string out;
  for (const Token& t : s.tokens) {
    out += std::to_string(t.id);
    out += '\t';
    out += t.form;
    out += '\t';
    out += t.cpostag;
    out += '\t';
    out += t.postag;
    out += '\t';
    out += std::to_string(t.head);
    out += '\t';
    out += t.deprel;
    out += '\n';
  }
  out += '\n';
  return out;
}

// True iff the sentence ends in "?" or contains "?" as a punct token.
inline bool is_question(const Sentence& s, const LabelConfig& cfg = LabelConfig{}) {
  if (!s.tokens.empty() && s.tokens.back().form == "?") return true;
  for (const Token& t : s.tokens) {
    if (t.form == "?" && cfg.is_punct(t.deprel)) return true;
  }
  return false;
}

struct FilterResult {
  std::vector<Sentence> kept;
  int dropped = 0;
};

// Drops question sentences, preserving order.
inline FilterResult filter_corpus(std::vector<Sentence> sentences,
                                  const LabelConfig& cfg = LabelConfig{}) {
  FilterResult out;
  const int total = static_cast<int>(sentences.size());
  for (Sentence& s : sentences) {
    if (!is_question(s, cfg)) out.kept.push_back(std::move(s));
  }
  out.dropped = total - static_cast<int>(out.kept.size());
  return out;
}

}  // namespace vietoie

#endif  // VIETOIE_CONLL_HPP
