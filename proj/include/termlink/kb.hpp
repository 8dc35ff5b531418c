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

#ifndef TERMLINK_KB_HPP_
#define TERMLINK_KB_HPP_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "termlink/normalize.hpp"

namespace termlink {

// One knowledge-base entity from the dump. num_links (cross-KB links) and
// num_relations (statements to other entities) are precomputed at dump time.
struct EntityRecord {
  std::string qid;  // Q-prefixed digits
  std::string name;
  std::vector<std::string> synonyms;
  std::string description;
  bool is_disambiguation = false;
  std::int64_t num_links = 0;
  std::int64_t num_relations = 0;

  bool operator==(const EntityRecord&) const = default;
};

// Ascending-by-number comparison of Q-identifiers.
bool qid_less(const std::string& a, const std::string& b);

struct KBLoadOptions {
  // Case-insensitive substring of the description that marks disambiguation
  // pages, OR-ed with the dump's own flag. Empty disables the fallback.
  std::string disambiguation_marker = "disambiguation page";
};

// Immutable index over a JSONL entity dump, one object per line:
//   {"qid": str, "name": str, "synonyms": [str], "description": str,
//    "is_disambiguation": bool?, "num_links": int?, "num_relations": int?}
// Name and every synonym are indexed under their normalized phrase form.
class KBStore {
 public:
  static KBStore load(const std::string& path,
                      const Normalizer& normalizer = default_normalizer(),
                      const KBLoadOptions& options = {});

  // All entities whose normalized name or synonym equals the phrase,
  // ascending by numeric qid. The phrase must already be normalized.
  std::vector<const EntityRecord*> lookup_exact(const std::string& normalized_phrase) const;

  const std::vector<EntityRecord>& entities() const { return entities_; }
  std::size_t size() const { return entities_.size(); }
  const std::vector<std::string>& warnings() const { return warnings_; }

  // Normalized alias phrases of one entity (name first, then synonyms).
  std::vector<std::string> normalized_aliases(const EntityRecord& entity,
                                              const Normalizer& normalizer) const;

 private:
  std::vector<EntityRecord> entities_;
  std::unordered_map<std::string, std::vector<std::size_t>> index_;
  std::vector<std::string> warnings_;
};

}  // namespace termlink

#endif  // TERMLINK_KB_HPP_
