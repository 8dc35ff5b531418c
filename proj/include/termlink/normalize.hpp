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

#ifndef TERMLINK_NORMALIZE_HPP_
#define TERMLINK_NORMALIZE_HPP_

#include <string>
#include <string_view>

namespace termlink {

// Maps a token surface to its normalized form (lowercased lemma or stem).
// Implementations must be idempotent: normalize(normalize(x)) == normalize(x).
// External lemmatizer output can be injected instead through the token-norm
// column of the JSONL corpus format.
class Normalizer {
 public:
  virtual ~Normalizer() = default;
  virtual std::string normalize(std::string_view surface) const = 0;
};

// Built-in default: lowercasing plus a small Russian noun/adjective
// suffix-stripping table, applied longest-suffix-first until a fixpoint,
// never below a three-code-point stem. Only all-Cyrillic words are stemmed;
// everything else is just lowercased. Idempotent by construction.
class SuffixNormalizer : public Normalizer {
 public:
  std::string normalize(std::string_view surface) const override;
};

// Lowercasing only, no stemming. Useful when norms come from an external
// lemmatizer and dictionary entries are already lemmas.
class LowercaseNormalizer : public Normalizer {
 public:
  std::string normalize(std::string_view surface) const override;
};

const Normalizer& default_normalizer();

}  // namespace termlink

#endif  // TERMLINK_NORMALIZE_HPP_
