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

#include "termlink/embeddings.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace termlink {

EmbeddingStore EmbeddingStore::load(const std::string& path, const Normalizer& normalizer) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open embedding file '" + path + "'");

  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path + ": missing header line");
  std::istringstream header(line);
  std::int64_t declared_vocab = 0;
  int dim = 0;
  if (!(header >> declared_vocab >> dim) || dim < 1) {
    throw std::runtime_error(path + ": header must be 'vocab_size dim' with dim >= 1");
  }

  EmbeddingStore store;
  store.dimension_ = dim;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string word;
    fields >> word;
    std::vector<double> vec;
    vec.reserve(static_cast<std::size_t>(dim));
    double value = 0.0;
    while (fields >> value) vec.push_back(value);
    if (static_cast<int>(vec.size()) != dim) {
      throw std::runtime_error(path + ": row " + std::to_string(row) + " has " +
                               std::to_string(vec.size()) + " values, expected " +
                               std::to_string(dim));
    }
    std::string norm = normalizer.normalize(word);
    auto [it, inserted] = store.vectors_.try_emplace(norm, std::move(vec));
    if (!inserted) {
      store.warnings_.push_back("duplicate word '" + norm + "' at row " + std::to_string(row) +
                                "; first occurrence kept");
    }
  }
  if (declared_vocab >= 0 &&
      static_cast<std::int64_t>(store.vectors_.size()) != declared_vocab) {
    store.warnings_.push_back("header declared " + std::to_string(declared_vocab) +
                              " words, loaded " + std::to_string(store.vectors_.size()));
  }
  return store;
}

EmbeddingStore EmbeddingStore::from_vectors(
    int dimension, const std::vector<std::pair<std::string, std::vector<double>>>& rows) {
  if (dimension < 1) throw std::invalid_argument("embedding dimension must be >= 1");
  EmbeddingStore store;
  store.dimension_ = dimension;
  for (const auto& [word, vec] : rows) {
    if (static_cast<int>(vec.size()) != dimension) {
      throw std::invalid_argument("vector for '" + word + "' has wrong dimension");
    }
    store.vectors_.try_emplace(word, vec);
  }
  return store;
}

const std::vector<double>* EmbeddingStore::find(const std::string& normalized_word) const {
  auto it = vectors_.find(normalized_word);
  return it == vectors_.end() ? nullptr : &it->second;
}

std::optional<std::vector<double>> embed_phrase(const EmbeddingStore& store,
                                                std::span<const std::string> normalized_tokens) {
  std::vector<double> sum(static_cast<std::size_t>(store.dimension()), 0.0);
  std::size_t hits = 0;
  for (const std::string& token : normalized_tokens) {
    const std::vector<double>* vec = store.find(token);
    if (!vec) continue;
    for (std::size_t d = 0; d < sum.size(); ++d) sum[d] += (*vec)[d];
    ++hits;
  }
  if (hits == 0) return std::nullopt;
  for (double& v : sum) v /= static_cast<double>(hits);
  return sum;
}

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("cosine_similarity: dimension mismatch (" +
                                std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
  }
  double dot = 0.0, norm_a = 0.0, norm_b = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    norm_a += a[i] * a[i];
    norm_b += b[i] * b[i];
  }
  if (norm_a == 0.0 || norm_b == 0.0) return 0.0;
  return dot / (std::sqrt(norm_a) * std::sqrt(norm_b));
}

}  // namespace termlink
