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

#include "termlink/config.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace termlink {

namespace {

std::string trim(const std::string& s) {
  std::size_t first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  std::size_t last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                        (s.front() == '\'' && s.back() == '\''))) {
    return s.substr(1, s.size() - 2);
  }
  return s;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw std::runtime_error("config key '" + key + "': expected a boolean, got '" + value + "'");
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config key '" + key + "': expected an integer, got '" + value + "'");
  }
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config key '" + key + "': expected a number, got '" + value + "'");
  }
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

std::map<std::string, std::string> parse_flat_config(const std::string& text) {
  std::map<std::string, std::string> values;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config line " + std::to_string(line_no) +
                               ": expected 'key = value'");
    }
    std::string key = trim(stripped.substr(0, eq));
    std::string value = unquote(trim(stripped.substr(eq + 1)));
    if (key.empty()) {
      throw std::runtime_error("config line " + std::to_string(line_no) + ": empty key");
    }
    values[key] = value;
  }
  return values;
}

std::map<std::string, std::string> load_flat_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open config '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_flat_config(buffer.str());
}

PipelineConfig PipelineConfig::from_file(const std::string& path) {
  return from_map(load_flat_config(path));
}

PipelineConfig PipelineConfig::from_map(const std::map<std::string, std::string>& values) {
  PipelineConfig config;
  for (const auto& [key, value] : values) config.apply(key, value);
  return config;
}

void PipelineConfig::apply(const std::string& key, const std::string& value) {
  if (key == "corpus_in" || key == "in") corpus_in = value;
  else if (key == "out_dir" || key == "out") out_dir = value;
  else if (key == "dict") dict = value;
  else if (key == "patterns") patterns = value;
  else if (key == "kb") kb = value;
  else if (key == "embeddings" || key == "emb") embeddings = value;
  else if (key == "gold") gold = value;
  else if (key == "stages") stages = split_list(value);
  else if (key == "repair") repair = parse_bool(key, value);
  else if (key == "merge_policy") merge_policy = value;
  else if (key == "iterations") iterations = parse_int(key, value);
  else if (key == "dict_max_ngram") dict_max_ngram = parse_int(key, value);
  else if (key == "relation_mode") relation_mode = value;
  else if (key == "sample_rate") sample_rate = parse_double(key, value);
  else if (key == "max_distance") max_distance = parse_int(key, value);
  else if (key == "seed") seed = static_cast<std::uint32_t>(parse_int(key, value));
  else if (key == "mode" || key == "link_mode") link_mode = value;
  else if (key == "threshold") threshold = parse_double(key, value);
  else if (key == "context") context = parse_int(key, value);
  else if (key == "link_max_ngram") link_max_ngram = parse_int(key, value);
  else throw std::runtime_error("unknown config key '" + key + "'");
}

void PipelineConfig::validate() const {
  namespace fs = std::filesystem;
  auto require_file = [](const std::string& key, const std::string& path) {
    if (path.empty()) {
      throw std::runtime_error("config key '" + key + "' is required for the enabled stages");
    }
    if (!fs::exists(path)) {
      throw std::runtime_error("config key '" + key + "': path '" + path + "' does not exist");
    }
  };

  if (stages.empty()) throw std::runtime_error("no stages enabled");
  for (const std::string& stage : stages) {
    if (stage != "tag" && stage != "relate" && stage != "link") {
      throw std::runtime_error("unknown stage '" + stage + "' (tag|relate|link)");
    }
  }
  require_file("corpus_in", corpus_in);
  if (out_dir.empty()) throw std::runtime_error("config key 'out_dir' is required");

  bool tag = false, relate = false, linking = false;
  for (const std::string& stage : stages) {
    tag |= stage == "tag";
    relate |= stage == "relate";
    linking |= stage == "link";
  }
  if (tag) require_file("dict", dict);
  if (relate && relation_mode == "classify") require_file("patterns", patterns);
  if (linking) {
    require_file("kb", kb);
    if (link_mode == "weighted_cosine") require_file("embeddings", embeddings);
  }
  if (!gold.empty()) require_file("gold", gold);

  if (iterations < 1) throw std::runtime_error("config key 'iterations' must be >= 1");
  if (sample_rate < 0.0 || sample_rate > 1.0) {
    throw std::runtime_error("config key 'sample_rate' must be in [0, 1]");
  }
  if (threshold < -1.0 || threshold > 1.0) {
    throw std::runtime_error("config key 'threshold' must be in [-1, 1]");
  }
  if (context < 0) throw std::runtime_error("config key 'context' must be >= 0");
  if (dict_max_ngram < 1 || link_max_ngram < 1) {
    throw std::runtime_error("config keys '*_max_ngram' must be >= 1");
  }
  if (relation_mode != "classify" && relation_mode != "dataset") {
    throw std::runtime_error("config key 'relation_mode' must be classify or dataset");
  }
  // These throw on unknown names.
  (void)relation_mode;
}

}  // namespace termlink
