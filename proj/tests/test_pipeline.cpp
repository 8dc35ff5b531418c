// Copyright 2026 The Termlink Authors.
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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "termlink/jsonl.hpp"
#include "termlink/pipeline.hpp"

using namespace termlink;
namespace fs = std::filesystem;

namespace {

const std::string kData = TERMLINK_DATA_DIR;

fs::path fresh_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

PipelineConfig demo_config(const fs::path& out_dir) {
  PipelineConfig config;
  config.corpus_in = kData + "/corpus";
  config.out_dir = out_dir.string();
  config.dict = kData + "/dict_demo.txt";
  config.patterns = kData + "/patterns_ru.txt";
  config.kb = kData + "/kb_toy.jsonl";
  config.embeddings = kData + "/emb_toy.vec";
  return config;
}

}  // namespace

TEST_CASE("flat config: parsing, comments, quotes and errors") {
  std::map<std::string, std::string> values = parse_flat_config(
      "# comment\n"
      "corpus_in = \"data/corpus\"\n"
      "threshold = 0.25\n"
      "repair = false\n"
      "stages = tag,relate\n");
  CHECK(values.at("corpus_in") == "data/corpus");
  CHECK(values.at("threshold") == "0.25");

  PipelineConfig config = PipelineConfig::from_map(values);
  CHECK(config.corpus_in == "data/corpus");
  CHECK(config.threshold == 0.25);
  CHECK_FALSE(config.repair);
  CHECK(config.stages == std::vector<std::string>{"tag", "relate"});

  CHECK_THROWS_WITH_AS(parse_flat_config("oops\n"), doctest::Contains("line 1"),
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(PipelineConfig::from_map({{"bogus", "1"}}),
                       doctest::Contains("unknown config key"), std::runtime_error);
  CHECK_THROWS_AS(PipelineConfig::from_map({{"threshold", "abc"}}), std::runtime_error);
}

TEST_CASE("load_corpus_input: directory globbing is sorted and tokenized") {
  std::vector<AnnotatedDocument> docs = load_corpus_input(kData + "/corpus");
  REQUIRE(docs.size() == 5);
  CHECK(docs[0].document.id == "doc1");
  CHECK(docs[4].document.id == "doc5");
  CHECK(docs[0].document.tokens.size() > 10);
  CHECK(docs[0].terms.empty());
}

TEST_CASE("pipeline: missing kb path fails validation before any work") {
  fs::path out = fresh_dir("termlink_pipe_invalid");
  PipelineConfig config = demo_config(out);
  config.kb = "";
  std::ostringstream log;
  CHECK_THROWS_WITH_AS(run_pipeline(config, log), doctest::Contains("kb"), std::runtime_error);
  CHECK_FALSE(fs::exists(out / "tagged.jsonl"));
  fs::remove_all(out);
}

TEST_CASE("pipeline: full run writes every stage artifact") {
  fs::path out = fresh_dir("termlink_pipe_full");
  PipelineConfig config = demo_config(out);
  std::ostringstream log;
  run_pipeline(config, log);

  for (const char* name : {"tagged.jsonl", "relations.jsonl", "linked.jsonl", "final.jsonl"}) {
    CHECK(fs::exists(out / name));
  }
  CHECK_FALSE(fs::exists(out / "metrics.json"));  // no gold configured

  std::vector<AnnotatedDocument> final_docs = read_annotations((out / "final.jsonl").string());
  REQUIRE(final_docs.size() == 5);
  std::size_t terms = 0, relations = 0, links = 0;
  for (const AnnotatedDocument& doc : final_docs) {
    terms += doc.terms.size();
    relations += doc.relations.size();
    links += doc.links.size();
  }
  CHECK(terms > 0);
  CHECK(relations > 0);
  CHECK(links == terms);
  fs::remove_all(out);
}

TEST_CASE("pipeline: stage filter leaves later annotations absent") {
  fs::path out = fresh_dir("termlink_pipe_tagonly");
  PipelineConfig config = demo_config(out);
  config.stages = {"tag"};
  config.kb = "";          // not needed when link is disabled
  config.embeddings = "";
  config.patterns = "";
  std::ostringstream log;
  run_pipeline(config, log);

  CHECK(fs::exists(out / "tagged.jsonl"));
  CHECK_FALSE(fs::exists(out / "relations.jsonl"));
  CHECK_FALSE(fs::exists(out / "linked.jsonl"));
  std::vector<AnnotatedDocument> docs = read_annotations((out / "final.jsonl").string());
  for (const AnnotatedDocument& doc : docs) {
    CHECK(!doc.terms.empty());
    CHECK(doc.relations.empty());
    CHECK(doc.links.empty());
  }
  fs::remove_all(out);
}

TEST_CASE("pipeline: gold corpus produces a metrics report") {
  // Use the pipeline's own tagged output as gold: every metric must be 1.
  fs::path out1 = fresh_dir("termlink_pipe_gold1");
  PipelineConfig first = demo_config(out1);
  std::ostringstream log1;
  run_pipeline(first, log1);

  fs::path out2 = fresh_dir("termlink_pipe_gold2");
  PipelineConfig second = demo_config(out2);
  second.gold = (out1 / "final.jsonl").string();
  std::ostringstream log2;
  run_pipeline(second, log2);

  std::string metrics = read_file(out2 / "metrics.json");
  CHECK(metrics.find("\"terms_exact\"") != std::string::npos);
  CHECK(metrics.find("\"terms_partial\"") != std::string::npos);
  CHECK(metrics.find("\"relations\"") != std::string::npos);
  CHECK(metrics.find("\"links\"") != std::string::npos);
  CHECK(metrics.find("\"precision\": 1.0") != std::string::npos);
  fs::remove_all(out1);
  fs::remove_all(out2);
}

TEST_CASE("pipeline: identical seeds give byte-identical outputs") {
  fs::path out1 = fresh_dir("termlink_pipe_det1");
  fs::path out2 = fresh_dir("termlink_pipe_det2");
  PipelineConfig config1 = demo_config(out1);
  PipelineConfig config2 = demo_config(out2);
  std::ostringstream log;
  run_pipeline(config1, log);
  run_pipeline(config2, log);
  for (const char* name : {"tagged.jsonl", "relations.jsonl", "linked.jsonl", "final.jsonl"}) {
    CHECK(read_file(out1 / name) == read_file(out2 / name));
  }
  fs::remove_all(out1);
  fs::remove_all(out2);
}

TEST_CASE("pipeline: a failing stage leaves a .partial file and names itself") {
  fs::path out = fresh_dir("termlink_pipe_fail");
  PipelineConfig config = demo_config(out);
  // Validation only checks existence, so a malformed pattern file fails
  // inside the relate stage itself.
  fs::path bogus = out / "broken_patterns.txt";
  {
    std::ofstream broken(bogus);
    broken << "THIS-IS-NOT-A-LABEL : ARG1 ARG2\n";
  }
  config.patterns = bogus.string();
  std::ostringstream log;
  CHECK_THROWS_WITH_AS(run_pipeline(config, log), doctest::Contains("stage 'relate'"),
                       std::runtime_error);
  CHECK(fs::exists(out / "tagged.jsonl"));  // the tag stage completed
  fs::remove_all(out);
}
