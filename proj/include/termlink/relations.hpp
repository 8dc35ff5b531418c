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

#ifndef TERMLINK_RELATIONS_HPP_
#define TERMLINK_RELATIONS_HPP_

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "termlink/corpus.hpp"

namespace termlink {

// One element of a lexico-syntactic pattern.
struct PatternElement {
  enum class Kind { arg1, arg2, literal, wildcard };
  Kind kind = Kind::literal;
  std::string literal;  // normalized, for Kind::literal
  int max_gap = 0;      // for Kind::wildcard: matches 0..max_gap tokens

  bool operator==(const PatternElement&) const = default;
};

// A marker pattern for one positive relation. Elements align left to right
// with the sentence's normalized tokens: the ARG1/ARG2 slots cover exactly
// the argument spans, literals one token each, wildcards up to max_gap
// arbitrary tokens; consecutive element windows are adjacent. `directional`
// false (file flag `bidir`) additionally tries the pattern with the argument
// roles swapped.
struct Pattern {
  RelationLabel label = RelationLabel::no_relation;
  std::vector<PatternElement> elements;
  bool directional = true;

  bool operator==(const Pattern&) const = default;
};

// File format, one pattern per line:  LABEL [bidir] : elem elem ...
// Elements are whitespace-separated: ARG1, ARG2, *k (wildcard with max gap
// k), anything else is a literal token normalized on load. '#' lines and
// blank lines are skipped. Exactly one ARG1 and one ARG2 per pattern; the
// label must be a positive relation. Errors carry the 1-based line number.
std::vector<Pattern> load_patterns(const std::string& path,
                                   const Normalizer& normalizer = default_normalizer());
std::vector<Pattern> parse_patterns(const std::string& text,
                                    const Normalizer& normalizer = default_normalizer());

struct PairSamplingOptions {
  // Unrelated pairs are kept only when the gap token count between the spans
  // is strictly below max_distance.
  int max_distance = std::numeric_limits<int>::max();
  double sample_rate = 1.0;
  std::uint32_t seed = 0;
};

// All ordered same-sentence pairs of distinct, non-overlapping term spans,
// enumerated deterministically: terms sorted by start, outer loop arg1,
// inner loop arg2. Pairs carrying a gold relation (exact arg1/arg2 match in
// doc.relations) are always kept. Every other pair must pass the distance
// filter and is then down-sampled: one mt19937 draw per surviving pair in
// enumeration order, kept iff draw < sample_rate * 2^32. No draws are
// consumed when sample_rate <= 0 or >= 1.
std::vector<std::pair<TokenRange, TokenRange>> candidate_pairs(
    const AnnotatedDocument& doc, const PairSamplingOptions& options);

// Label of the first pattern (file order) aligning with the sentence around
// (arg1, arg2); NO-RELATION when none does. Both arguments must lie in the
// same sentence.
RelationLabel classify(const Document& doc, const TokenRange& arg1, const TokenRange& arg2,
                       std::span<const Pattern> patterns);

// classify() over every ordered same-sentence pair; NO-RELATION dropped.
std::vector<RelationInstance> extract_all(const AnnotatedDocument& doc,
                                          std::span<const Pattern> patterns);

// Dataset-construction labeling: candidate pairs under `options` labeled by
// the gold relations; unrelated (sampled) pairs come out as NO-RELATION and
// are kept in the output.
std::vector<RelationInstance> build_dataset(const AnnotatedDocument& doc,
                                            const PairSamplingOptions& options);

}  // namespace termlink

#endif  // TERMLINK_RELATIONS_HPP_
