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

#include "termlink/kb.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "termlink/corpus.hpp"
#include "termlink/utf8.hpp"

namespace termlink {

bool qid_less(const std::string& a, const std::string& b) {
  std::string_view da(a), db(b);
  da.remove_prefix(1);
  db.remove_prefix(1);
  while (da.size() > 1 && da.front() == '0') da.remove_prefix(1);
  while (db.size() > 1 && db.front() == '0') db.remove_prefix(1);
  if (da.size() != db.size()) return da.size() < db.size();
  return da < db;
}

KBStore KBStore::load(const std::string& path, const Normalizer& normalizer,
                      const KBLoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open KB dump '" + path + "'");

  KBStore store;
  std::unordered_map<std::string, std::size_t> by_qid;
  const std::string marker = utf8::lower_copy(options.disambiguation_marker);

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    EntityRecord entity;
    try {
      nlohmann::json obj = nlohmann::json::parse(line);
      entity.qid = obj.at("qid").get<std::string>();
      entity.name = obj.at("name").get<std::string>();
      entity.synonyms = obj.value("synonyms", std::vector<std::string>{});
      entity.description = obj.value("description", std::string{});
      entity.is_disambiguation = obj.value("is_disambiguation", false);
      entity.num_links = obj.value("num_links", std::int64_t{0});
      entity.num_relations = obj.value("num_relations", std::int64_t{0});
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (!is_valid_qid(entity.qid)) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": qid '" + entity.qid +
                               "' does not match Q[0-9]+");
    }
    if (entity.num_links < 0 || entity.num_relations < 0) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": negative link/relation count");
    }
    if (!marker.empty() &&
        utf8::lower_copy(entity.description).find(marker) != std::string::npos) {
      entity.is_disambiguation = true;
    }

    auto [it, inserted] = by_qid.try_emplace(entity.qid, store.entities_.size());
    if (inserted) {
      store.entities_.push_back(std::move(entity));
    } else {
      store.warnings_.push_back("duplicate qid " + entity.qid + " at line " +
                                std::to_string(line_no) + "; last definition wins");
      store.entities_[it->second] = std::move(entity);
    }
  }

  for (std::size_t i = 0; i < store.entities_.size(); ++i) {
    for (const std::string& alias : store.normalized_aliases(store.entities_[i], normalizer)) {
      if (alias.empty()) continue;
      std::vector<std::size_t>& bucket = store.index_[alias];
      if (std::find(bucket.begin(), bucket.end(), i) == bucket.end()) bucket.push_back(i);
    }
  }
  for (auto& [alias, bucket] : store.index_) {
    std::sort(bucket.begin(), bucket.end(), [&](std::size_t x, std::size_t y) {
      return qid_less(store.entities_[x].qid, store.entities_[y].qid);
    });
  }
  return store;
}

std::vector<const EntityRecord*> KBStore::lookup_exact(
    const std::string& normalized_phrase) const {
  std::vector<const EntityRecord*> out;
  auto it = index_.find(normalized_phrase);
  if (it == index_.end()) return out;
  out.reserve(it->second.size());
  for (std::size_t i : it->second) out.push_back(&entities_[i]);
  return out;
}

std::vector<std::string> KBStore::normalized_aliases(const EntityRecord& entity,
                                                     const Normalizer& normalizer) const {
  std::vector<std::string> aliases;
  aliases.reserve(entity.synonyms.size() + 1);
  aliases.push_back(normalize_phrase(entity.name, normalizer));
  for (const std::string& synonym : entity.synonyms) {
    aliases.push_back(normalize_phrase(synonym, normalizer));
  }
  return aliases;
}

}  // namespace termlink
