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

#ifndef TERMLINK_CONFIG_HPP_
#define TERMLINK_CONFIG_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace termlink {

// Flat TOML-style key/value file: one `key = value` per line, `#` comments,
// optionally quoted string values, booleans true/false. No tables or arrays.
std::map<std::string, std::string> parse_flat_config(const std::string& text);
std::map<std::string, std::string> load_flat_config(const std::string& path);

struct PipelineConfig {
  // Paths.
  std::string corpus_in;    // directory of .txt files or a .jsonl corpus
  std::string out_dir;
  std::string dict;
  std::string patterns;
  std::string kb;
  std::string embeddings;
  std::string gold;         // optional gold corpus for the metrics report

  // Stage selection, in pipeline order.
  std::vector<std::string> stages = {"tag", "relate", "link"};

  // Tagger settings.
  bool repair = true;
  std::string merge_policy = "union_prefer_longer";
  int iterations = 1;
  int dict_max_ngram = 4;

  // Relation settings.
  std::string relation_mode = "classify";  // classify | dataset
  double sample_rate = 1.0;
  int max_distance = -1;  // -1 = unlimited
  std::uint32_t seed = 0;

  // Linker settings.
  std::string link_mode = "weighted_cosine";
  double threshold = 0.0;
  int context = 5;
  int link_max_ngram = 3;

  static PipelineConfig from_file(const std::string& path);
  static PipelineConfig from_map(const std::map<std::string, std::string>& values);
  void apply(const std::string& key, const std::string& value);

  // Checks ranges and that every input required by the enabled stages
  // exists on disk. Throws std::runtime_error with the offending key.
  void validate() const;
};

}  // namespace termlink

#endif  // TERMLINK_CONFIG_HPP_
