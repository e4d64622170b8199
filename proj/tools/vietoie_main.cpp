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
//
// vietoie: clause-based open relation extraction for Vietnamese
// dependency-parsed corpora.
//
//   vietoie extract  corpus.conll [...]              tuples to stdout (TSV)
//   vietoie stats    corpus.conll [...]              clause generation table
//   vietoie evaluate run.tsv --labels gold.tsv [corpus.conll ...]

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vietoie/vietoie.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFatal = 1;
constexpr int kExitNothingKept = 2;

struct CorpusLoad {
  std::vector<vietoie::Sentence> sentences;  // question-filtered unless kept
  int read = 0;
  int questions_dropped = 0;
  int malformed_dropped = 0;
};

bool read_file(const std::string& path, std::string& out, std::string& error) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    error = "cannot open '" + path + "'";
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

// Parses every input file, printing diagnostics to stderr, and applies the
// question filter.
std::optional<CorpusLoad> load_corpus(const std::vector<std::string>& paths,
                                      const vietoie::LabelConfig& cfg, bool keep_questions) {
  CorpusLoad load;
  for (const std::string& path : paths) {
    std::string text, error;
    if (!read_file(path, text, error)) {
      std::cerr << "error: " << error << "\n";
      return std::nullopt;
    }
    vietoie::ParseResult parsed = vietoie::parse_conll(text, path);
    for (const auto& diag : parsed.diagnostics) {
      std::cerr << "warning: " << diag.format() << "\n";
    }
    load.read += static_cast<int>(parsed.sentences.size()) + parsed.rejected_sentences;
    load.malformed_dropped += parsed.rejected_sentences;
    if (keep_questions) {
      for (auto& s : parsed.sentences) load.sentences.push_back(std::move(s));
    } else {
      vietoie::FilterResult filtered = vietoie::filter_corpus(std::move(parsed.sentences), cfg);
      load.questions_dropped += filtered.dropped;
      for (auto& s : filtered.kept) load.sentences.push_back(std::move(s));
    }
  }
  return load;
}

bool load_config(const std::string& path, vietoie::LabelConfig& cfg) {
  if (path.empty()) return true;
  std::string text, error;
  if (!read_file(path, text, error)) {
    std::cerr << "error: " << error << "\n";
    return false;
  }
  try {
    cfg = vietoie::parse_label_config(text);
  } catch (const vietoie::ConfigError& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    return false;
  }
  return true;
}

// Output sink: stdout by default, --out file otherwise.
class Sink {
 public:
  bool open(const std::string& path) {
    if (path.empty()) return true;
    file_.open(path, std::ios::binary);
    if (!file_) {
      std::cerr << "error: cannot write '" << path << "'\n";
      return false;
    }
    return true;
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string tsv_escape(const std::string& field) {
  std::string out;
  out.reserve(field.size());
  for (char c : field) {
    out.push_back((c == '\t' || c == '\n' || c == '\r') ? ' ' : c);
  }
  return out;
}

void write_proposition_tsv(std::ostream& os, const vietoie::Proposition& p) {
  os << tsv_escape(p.proposition_id) << '\t' << tsv_escape(p.sentence_id) << '\t'
     << vietoie::to_string(p.clause_type) << '\t' << p.pattern << '\t' << tsv_escape(p.arg1)
     << '\t' << tsv_escape(p.rel);
  for (const std::string& arg : p.extra_args) os << '\t' << tsv_escape(arg);
  os << '\n';
}

void write_proposition_jsonl(std::ostream& os, const vietoie::Proposition& p) {
  nlohmann::ordered_json j;
  j["proposition_id"] = p.proposition_id;
  j["sentence_id"] = p.sentence_id;
  j["clause_type"] = vietoie::to_string(p.clause_type);
  j["pattern"] = p.pattern;
  j["arg1"] = p.arg1;
  j["rel"] = p.rel;
  j["args"] = p.extra_args;
  os << j.dump() << '\n';
}

struct ExtractionRecord {
  std::string proposition_id;
  std::string sentence_id;
};

// Reads back an extraction TSV written by `extract`.
bool load_extraction(const std::string& path, std::vector<ExtractionRecord>& records) {
  std::string text, error;
  if (!read_file(path, text, error)) {
    std::cerr << "error: " << error << "\n";
    return false;
  }
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string line = text.substr(pos, eol == std::string::npos ? std::string::npos : eol - pos);
    pos = (eol == std::string::npos) ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::size_t t1 = line.find('\t');
    std::size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos) {
      std::cerr << "error: " << path << ":" << line_no << ": not an extraction record\n";
      return false;
    }
    records.push_back({line.substr(0, t1), line.substr(t1 + 1, t2 - t1 - 1)});
  }
  return true;
}

int run_extract(const std::vector<std::string>& inputs, const std::string& label_map,
                std::size_t subset_cap, const std::string& format, const std::string& out_path,
                bool keep_questions) {
  vietoie::LabelConfig cfg;
  if (!load_config(label_map, cfg)) return kExitFatal;
  auto corpus = load_corpus(inputs, cfg, keep_questions);
  if (!corpus) return kExitFatal;
  Sink sink;
  if (!sink.open(out_path)) return kExitFatal;

  long long emitted = 0;
  for (const vietoie::Sentence& s : corpus->sentences) {
    for (const vietoie::Proposition& p : vietoie::extract(s, cfg, subset_cap)) {
      if (format == "jsonl") {
        write_proposition_jsonl(sink.stream(), p);
      } else {
        write_proposition_tsv(sink.stream(), p);
      }
      ++emitted;
    }
  }
  std::cerr << "sentences read: " << corpus->read
            << ", questions dropped: " << corpus->questions_dropped
            << ", malformed dropped: " << corpus->malformed_dropped
            << ", propositions emitted: " << emitted << "\n";
  if (corpus->sentences.empty()) return kExitNothingKept;
  return kExitOk;
}

std::vector<vietoie::SentenceStats> corpus_stats(const std::vector<vietoie::Sentence>& sentences,
                                                 const vietoie::LabelConfig& cfg,
                                                 std::size_t subset_cap) {
  std::vector<vietoie::SentenceStats> stats;
  stats.reserve(sentences.size());
  for (const vietoie::Sentence& s : sentences) {
    vietoie::SentenceStats st;
    st.sentence_id = s.sentence_id;
    st.verb_count = static_cast<int>(vietoie::find_verbs(s, cfg).size());
    st.clause_output_count = static_cast<int>(vietoie::extract(s, cfg, subset_cap).size());
    st.token_count = s.size();
    stats.push_back(std::move(st));
  }
  return stats;
}

int run_stats(const std::vector<std::string>& inputs, const std::string& label_map,
              std::size_t subset_cap, const std::string& format, const std::string& out_path,
              bool keep_questions) {
  vietoie::LabelConfig cfg;
  if (!load_config(label_map, cfg)) return kExitFatal;
  auto corpus = load_corpus(inputs, cfg, keep_questions);
  if (!corpus) return kExitFatal;
  Sink sink;
  if (!sink.open(out_path)) return kExitFatal;

  auto stats = corpus_stats(corpus->sentences, cfg, subset_cap);
  vietoie::EvaluationReport report =
      vietoie::compute_report(stats, {}, vietoie::PartitionKind::Verb);
  auto rows = vietoie::stats_rows(report);
  sink.stream() << (format == "tsv" ? vietoie::render_tsv(rows) : vietoie::render_table(rows));
  if (corpus->sentences.empty()) return kExitNothingKept;
  return kExitOk;
}

int run_evaluate(const std::string& extraction_path, const std::vector<std::string>& corpus_paths,
                 const std::string& labels_path, const std::string& label_map,
                 const std::string& partition, const std::string& format,
                 const std::string& out_path, bool keep_questions, bool macro, bool fig1) {
  vietoie::LabelConfig cfg;
  if (!load_config(label_map, cfg)) return kExitFatal;

  std::vector<ExtractionRecord> records;
  if (!load_extraction(extraction_path, records)) return kExitFatal;

  std::string labels_text, error;
  if (!read_file(labels_path, labels_text, error)) {
    std::cerr << "error: " << error << "\n";
    return kExitFatal;
  }
  std::vector<vietoie::GoldLabel> labels;
  try {
    labels = vietoie::load_labels(labels_text);
  } catch (const vietoie::LabelError& e) {
    std::cerr << "error: " << labels_path << ": " << e.what() << "\n";
    return kExitFatal;
  }

  // Proposition counts per sentence, from the extraction run itself.
  std::map<std::string, int> output_counts;
  for (const ExtractionRecord& r : records) ++output_counts[r.sentence_id];

  const vietoie::PartitionKind kind = partition == "complexity"
                                          ? vietoie::PartitionKind::Complexity
                                          : vietoie::PartitionKind::Verb;
  std::vector<vietoie::SentenceStats> stats;
  if (!corpus_paths.empty()) {
    auto corpus = load_corpus(corpus_paths, cfg, keep_questions);
    if (!corpus) return kExitFatal;
    for (const vietoie::Sentence& s : corpus->sentences) {
      vietoie::SentenceStats st;
      st.sentence_id = s.sentence_id;
      st.verb_count = static_cast<int>(vietoie::find_verbs(s, cfg).size());
      auto it = output_counts.find(s.sentence_id);
      st.clause_output_count = it == output_counts.end() ? 0 : it->second;
      st.token_count = s.size();
      stats.push_back(std::move(st));
    }
  } else {
    if (kind == vietoie::PartitionKind::Verb) {
      std::cerr << "error: the verb partition needs the corpus files to count verbs; "
                   "pass them after the extraction file or use --partition complexity\n";
      return kExitFatal;
    }
    for (const auto& [sid, count] : output_counts) {
      stats.push_back({sid, 0, count, 0});
    }
  }

  vietoie::EvaluationReport report;
  try {
    report = vietoie::compute_report(stats, labels, kind);
  } catch (const vietoie::EvaluationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFatal;
  }

  Sink sink;
  if (!sink.open(out_path)) return kExitFatal;
  auto rows = vietoie::report_rows(report, macro);
  sink.stream() << (format == "tsv" ? vietoie::render_tsv(rows) : vietoie::render_table(rows));
  if (fig1) {
    sink.stream() << "\n" << vietoie::fig1_csv(report);
  }
  if (report.unlabeled_count > 0) {
    std::cerr << "warning: " << report.unlabeled_count
              << " extraction(s) had no label and were excluded\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clause-based open relation extraction for Vietnamese dependency treebanks"};
  app.require_subcommand(1);

  std::string label_map, out_path, format = "tsv";
  std::size_t subset_cap = vietoie::kDefaultSubsetCap;
  bool keep_questions = false;

  std::vector<std::string> extract_inputs;
  auto* extract_cmd = app.add_subcommand("extract", "Extract propositions from CoNLL corpora");
  extract_cmd->add_option("inputs", extract_inputs, "CoNLL input files")->required();
  extract_cmd->add_option("--label-map", label_map, "label-map configuration file");
  extract_cmd->add_option("--subset-cap", subset_cap, "optional-adverbial subset cap")
      ->check(CLI::PositiveNumber);
  extract_cmd->add_option("--format", format, "tsv|jsonl")
      ->check(CLI::IsMember({"tsv", "jsonl"}));
  extract_cmd->add_option("--out", out_path, "write records here instead of stdout");
  extract_cmd->add_flag("--keep-questions", keep_questions, "do not drop question sentences");

  std::vector<std::string> stats_inputs;
  std::string stats_format = "table";
  auto* stats_cmd = app.add_subcommand("stats", "Clause-generation statistics by verb count");
  stats_cmd->add_option("inputs", stats_inputs, "CoNLL input files")->required();
  stats_cmd->add_option("--label-map", label_map, "label-map configuration file");
  stats_cmd->add_option("--subset-cap", subset_cap, "optional-adverbial subset cap")
      ->check(CLI::PositiveNumber);
  stats_cmd->add_option("--format", stats_format, "table|tsv")
      ->check(CLI::IsMember({"table", "tsv"}));
  stats_cmd->add_option("--out", out_path, "write the table here instead of stdout");
  stats_cmd->add_flag("--keep-questions", keep_questions, "do not drop question sentences");

  std::string extraction_path, labels_path, partition = "verb", eval_format = "table";
  std::vector<std::string> eval_corpus;
  bool macro = false, fig1 = false;
  auto* eval_cmd = app.add_subcommand("evaluate", "Precision report from gold labels");
  eval_cmd->add_option("extraction", extraction_path, "extraction TSV produced by 'extract'")
      ->required();
  eval_cmd->add_option("corpus", eval_corpus, "CoNLL corpus files (needed for the verb partition)");
  eval_cmd->add_option("--labels", labels_path, "gold label TSV: id, verdict_a, verdict_b")
      ->required();
  eval_cmd->add_option("--label-map", label_map, "label-map configuration file");
  eval_cmd->add_option("--partition", partition, "verb|complexity")
      ->check(CLI::IsMember({"verb", "complexity"}));
  eval_cmd->add_option("--format", eval_format, "table|tsv")
      ->check(CLI::IsMember({"table", "tsv"}));
  eval_cmd->add_option("--out", out_path, "write the report here instead of stdout");
  eval_cmd->add_flag("--keep-questions", keep_questions, "do not drop question sentences");
  eval_cmd->add_flag("--macro", macro, "report the unweighted mean of bucket precisions");
  eval_cmd->add_flag("--fig1", fig1, "append the per-bucket precision series as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitFatal;
  }

  if (extract_cmd->parsed()) {
    return run_extract(extract_inputs, label_map, subset_cap, format, out_path, keep_questions);
  }
  if (stats_cmd->parsed()) {
    return run_stats(stats_inputs, label_map, subset_cap, stats_format, out_path, keep_questions);
  }
  return run_evaluate(extraction_path, eval_corpus, labels_path, label_map, partition,
                      eval_format, out_path, keep_questions, macro, fig1);
}
