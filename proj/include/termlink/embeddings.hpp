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

#ifndef TERMLINK_EMBEDDINGS_HPP_
#define TERMLINK_EMBEDDINGS_HPP_

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "termlink/normalize.hpp"

namespace termlink {

// Word vectors in the common text format: a "vocab_size dim" header line,
// then one "word v1 ... vdim" row per word. Words are normalized on load;
// on a collision the first occurrence is kept (with a warning). A row with
// the wrong number of values raises an error naming the row.
class EmbeddingStore {
 public:
  static EmbeddingStore load(const std::string& path,
                             const Normalizer& normalizer = default_normalizer());
  static EmbeddingStore from_vectors(
      int dimension, const std::vector<std::pair<std::string, std::vector<double>>>& rows);

  int dimension() const { return dimension_; }
  std::size_t size() const { return vectors_.size(); }
  const std::vector<std::string>& warnings() const { return warnings_; }

  const std::vector<double>* find(const std::string& normalized_word) const;

 private:
  int dimension_ = 0;
  std::unordered_map<std::string, std::vector<double>> vectors_;
  std::vector<std::string> warnings_;
};

// Arithmetic mean of the vectors of in-vocabulary tokens; out-of-vocabulary
// tokens are skipped (not zero-filled). nullopt when nothing is in
// vocabulary.
std::optional<std::vector<double>> embed_phrase(const EmbeddingStore& store,
                                                std::span<const std::string> normalized_tokens);

// Cosine similarity in [-1, 1]; 0.0 when either vector has zero norm.
// Throws on dimension mismatch.
double cosine_similarity(std::span<const double> a, std::span<const double> b);

}  // namespace termlink

#endif  // TERMLINK_EMBEDDINGS_HPP_
