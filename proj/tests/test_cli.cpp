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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;  // stdout
  std::string err;  // stderr
};

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("vietoie_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << content;
}

RunResult run_cli(const std::string& args) {
  RunResult result;
  const fs::path err_path = scratch_dir() / "stderr.txt";
  const std::string cmd =
      std::string(VIETOIE_CLI_PATH) + " " + args + " 2>" + err_path.string();
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.out.append(buffer, n);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.err = test_support::read_file(err_path.string());
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, eol - pos));
    pos = eol + 1;
  }
  return lines;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    std::size_t tab = line.find('\t', pos);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(pos));
      break;
    }
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
  return fields;
}

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

}  // namespace

TEST_CASE("extract: clause-type corpus emits 14 records with stable columns") {
  const std::string corpus = test_support::fixture_path("clause_types.conll");
  const std::string conf = test_support::fixture_path("clause_types.conf");
  RunResult r = run_cli("extract '" + corpus + "' --label-map '" + conf + "'");
  REQUIRE(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 14);

  auto first = split_tabs(lines[0]);
  REQUIRE(first.size() == 6);  // SV record: id, sentence, type, pattern, arg1, rel
  CHECK(first[0] == corpus + ":1#1");
  CHECK(first[1] == corpus + ":1");
  CHECK(first[2] == "SV");
  CHECK(first[3] == "SV");
  CHECK(first[4] == "Minh");
  CHECK(first[5] == "dạy_học");

  for (const auto& line : lines) {
    auto fields = split_tabs(line);
    CHECK(fields.size() >= 6);
    CHECK(fields.size() == 6 + fields[3].size() - 2);  // one column per pattern slot
  }

  CHECK(r.err.find("sentences read: 7") != std::string::npos);
  CHECK(r.err.find("questions dropped: 0") != std::string::npos);
  CHECK(r.err.find("malformed dropped: 0") != std::string::npos);
  CHECK(r.err.find("propositions emitted: 14") != std::string::npos);

  RunResult again = run_cli("extract '" + corpus + "' --label-map '" + conf + "'");
  CHECK(again.out == r.out);  // byte-deterministic
}

TEST_CASE("extract: empty input exits 2") {
  const fs::path empty = scratch_dir() / "empty.conll";
  write_file(empty, "");
  RunResult r = run_cli("extract " + q(empty));
  CHECK(r.exit_code == 2);
  CHECK(r.out.empty());
}

TEST_CASE("extract: a question-only file drops everything and exits 2") {
  const fs::path questions = scratch_dir() / "only_question.conll";
  write_file(questions,
             "1\tAi\tP\tP\t2\tsub\n2\tđến\tV\tV\t0\troot\n3\t?\t.\t.\t2\tpunct\n");
  RunResult r = run_cli("extract " + q(questions));
  CHECK(r.exit_code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("questions dropped: 1") != std::string::npos);

  RunResult kept = run_cli("extract " + q(questions) + " --keep-questions");
  CHECK(kept.exit_code == 0);
  CHECK(!kept.out.empty());
}

TEST_CASE("extract: missing file exits 1") {
  RunResult r = run_cli("extract /nonexistent/corpus.conll");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("cannot open") != std::string::npos);
}

TEST_CASE("extract: malformed sentences are skipped with diagnostics") {
  const fs::path broken = scratch_dir() / "broken.conll";
  write_file(broken,
             "1\tMinh\tN\tNp\t2\tsub\n2\tđọc\tV\tV\t0\troot\n"
             "\n"
             "1\tbad\n"
             "\n"
             "1\tMinh\tN\tNp\t2\tsub\n2\tngủ\tV\tV\t0\troot\n");
  RunResult r = run_cli("extract " + q(broken));
  CHECK(r.exit_code == 0);
  CHECK(lines_of(r.out).size() == 2);
  CHECK(r.err.find("malformed dropped: 1") != std::string::npos);
  CHECK(r.err.find(":4") != std::string::npos);  // diagnostic carries the line
}

TEST_CASE("extract: jsonl format emits one JSON object per tuple") {
  const std::string corpus = test_support::fixture_path("prep_adverbials.conll");
  RunResult r = run_cli("extract '" + corpus + "' --format jsonl");
  REQUIRE(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 4);
  for (const auto& line : lines) {
    auto j = nlohmann::json::parse(line);
    CHECK(j.contains("proposition_id"));
    CHECK(j.contains("arg1"));
    CHECK(j.contains("rel"));
    CHECK(j.contains("args"));
  }
  auto last = nlohmann::json::parse(lines[3]);
  CHECK(last["rel"] == "dạy_học ở");
  CHECK(last["args"] == nlohmann::json::array({"Trường Đại_học An_Giang", "từ năm 2010"}));
}

TEST_CASE("extract: --subset-cap bounds the adverbial enumeration") {
  const fs::path corpus = scratch_dir() / "cap.conll";
  write_file(corpus,
             "1\tMinh\tN\tNp\t2\tsub\n"
             "2\tđi\tV\tV\t0\troot\n"
             "3\tsáng\tN\tN\t2\ttmp\n"
             "4\tđây\tN\tN\t2\tloc\n"
             "5\tvội\tR\tR\t2\tadv\n");
  RunResult full = run_cli("extract " + q(corpus));
  REQUIRE(full.exit_code == 0);
  CHECK(lines_of(full.out).size() == 8);  // 2^3
  RunResult capped = run_cli("extract " + q(corpus) + " --subset-cap 1");
  REQUIRE(capped.exit_code == 0);
  CHECK(lines_of(capped.out).size() == 5);  // empty, three singletons, full
}

TEST_CASE("stats: one fourteen-token sentence with four outputs") {
  const fs::path corpus = scratch_dir() / "one.conll";
  write_file(corpus, test_support::synth_sentence({2}, 14));
  RunResult r = run_cli("stats " + q(corpus) + " --format tsv");
  REQUIRE(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() >= 2);
  CHECK(split_tabs(lines[1]) == std::vector<std::string>{"1", "1", "14", "4"});
}

TEST_CASE("stats: token averages are per-bucket means") {
  const fs::path corpus = scratch_dir() / "two.conll";
  write_file(corpus, test_support::synth_sentence({0}, 10) + test_support::synth_sentence({0}, 20));
  RunResult r = run_cli("stats " + q(corpus) + " --format tsv");
  REQUIRE(r.exit_code == 0);
  auto lines = lines_of(r.out);
  CHECK(split_tabs(lines[1]) == std::vector<std::string>{"1", "2", "15", "2"});
}

TEST_CASE("evaluate: all-correct labels give 100.00 everywhere") {
  const fs::path corpus = scratch_dir() / "eval_corpus.conll";
  const fs::path run = scratch_dir() / "eval_run.tsv";
  const fs::path labels = scratch_dir() / "eval_labels.tsv";
  write_file(corpus, test_support::synth_sentence({1}, 0) + test_support::synth_sentence({0, 0}, 0));
  RunResult extract = run_cli("extract " + q(corpus) + " --out " + q(run));
  REQUIRE(extract.exit_code == 0);

  std::string label_text;
  for (const auto& line : lines_of(test_support::read_file(run.string()))) {
    label_text += split_tabs(line)[0] + "\t1\t1\n";
  }
  write_file(labels, label_text);

  RunResult r = run_cli("evaluate " + q(run) + " " + q(corpus) + " --labels " + q(labels) +
                        " --partition verb --format tsv");
  REQUIRE(r.exit_code == 0);
  auto lines = lines_of(r.out);
  // buckets 1 and 2 carry the data; the overall line closes the table
  bool saw_bucket = false;
  for (const auto& line : lines) {
    auto fields = split_tabs(line);
    if (fields.size() == 6 && (fields[0] == "1" || fields[0] == "2")) {
      CHECK(fields[5] == "100.00");
      saw_bucket = true;
    }
  }
  CHECK(saw_bucket);
  CHECK(lines.back().find("100.00") != std::string::npos);
}

TEST_CASE("evaluate: unknown proposition id is fatal and echoed") {
  const fs::path corpus = scratch_dir() / "unknown_corpus.conll";
  const fs::path run = scratch_dir() / "unknown_run.tsv";
  const fs::path labels = scratch_dir() / "unknown_labels.tsv";
  write_file(corpus, test_support::synth_sentence({0}, 0));
  REQUIRE(run_cli("extract " + q(corpus) + " --out " + q(run)).exit_code == 0);
  write_file(labels, "ghost:1#1\t1\t1\n");
  RunResult r = run_cli("evaluate " + q(run) + " " + q(corpus) + " --labels " + q(labels));
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("ghost:1#1") != std::string::npos);
}

TEST_CASE("evaluate: verb partition without a corpus is a config error") {
  const fs::path run = scratch_dir() / "nocorpus_run.tsv";
  const fs::path labels = scratch_dir() / "nocorpus_labels.tsv";
  write_file(run, "s:1#1\ts:1\tSV\tSV\ta\tb\n");
  write_file(labels, "s:1#1\t1\t1\n");
  RunResult r = run_cli("evaluate " + q(run) + " --labels " + q(labels) + " --partition verb");
  CHECK(r.exit_code == 1);
  RunResult ok = run_cli("evaluate " + q(run) + " --labels " + q(labels) +
                         " --partition complexity");
  CHECK(ok.exit_code == 0);
}

TEST_CASE("evaluate: --fig1 appends the per-bucket precision series") {
  const fs::path corpus = scratch_dir() / "fig_corpus.conll";
  const fs::path run = scratch_dir() / "fig_run.tsv";
  const fs::path labels = scratch_dir() / "fig_labels.tsv";
  write_file(corpus, test_support::synth_sentence({1}, 0));
  REQUIRE(run_cli("extract " + q(corpus) + " --out " + q(run)).exit_code == 0);
  write_file(labels, corpus.string() + ":1#1\t1\t1\n" + corpus.string() + ":1#2\t1\t0\n");
  RunResult r = run_cli("evaluate " + q(run) + " " + q(corpus) + " --labels " + q(labels) +
                        " --partition complexity --fig1");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("bucket,precision") != std::string::npos);
  CHECK(r.out.find("complex,50.00") != std::string::npos);
}

TEST_CASE("evaluate: structure-shaped corpus reproduces the published report") {
  const fs::path corpus = scratch_dir() / "structure_corpus.conll";
  const fs::path run = scratch_dir() / "structure_run.tsv";
  const fs::path labels = scratch_dir() / "structure_labels.tsv";

  auto plan = test_support::complexity_corpus_plan();
  write_file(corpus, test_support::corpus_text(plan));
  RunResult extract = run_cli("extract " + q(corpus) + " --out " + q(run));
  REQUIRE(extract.exit_code == 0);
  REQUIRE(extract.err.find("propositions emitted: 19934") != std::string::npos);

  write_file(labels, test_support::label_text(plan, {2423, 8002, 5585, 677}, corpus.string()));
  RunResult r = run_cli("evaluate " + q(run) + " --labels " + q(labels) +
                        " --partition complexity --format tsv");
  REQUIRE(r.exit_code == 0);

  const std::vector<double> target_ratio = {33.63, 49.40, 15.59, 1.38};
  const std::vector<double> target_precision = {92.78, 84.23, 80.68, 75.20};
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() >= 6);  // header, four classes, overall
  for (int b = 0; b < 4; ++b) {
    auto fields = split_tabs(lines[static_cast<std::size_t>(b) + 1]);
    REQUIRE(fields.size() == 4);
    CHECK(std::fabs(std::stod(fields[2]) - target_ratio[b]) <= 0.01);
    CHECK(std::fabs(std::stod(fields[3]) - target_precision[b]) <= 0.05);
  }
  auto overall = split_tabs(lines[5]);
  REQUIRE(overall.size() == 4);
  CHECK(std::fabs(std::stod(overall[3]) - 83.71) <= 0.05);
}

TEST_CASE("stats: verb-shaped corpus reproduces the clause-generation table") {
  const fs::path corpus = scratch_dir() / "verb_corpus.conll";
  auto plan = test_support::verb_corpus_plan();
  write_file(corpus, test_support::corpus_text(plan));
  RunResult r = run_cli("stats " + q(corpus) + " --format tsv");
  REQUIRE(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() >= 8);
  const std::vector<std::vector<std::string>> expected = {
      {"1", "2612", "14", "4361"}, {"2", "2401", "19", "8996"}, {"3", "1436", "22", "8397"},
      {"4", "718", "26", "5824"},  {"5", "357", "31", "3611"},  {"6", "136", "35", "1672"},
      {">6", "107", "42", "1734"}};
  for (std::size_t b = 0; b < expected.size(); ++b) {
    CHECK(split_tabs(lines[b + 1]) == expected[b]);
  }
}
