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

#include <algorithm>
#include <random>

#include "termlink/relations.hpp"

using namespace termlink;

namespace {

AnnotatedDocument annotated(const std::string& text, std::vector<TokenRange> term_ranges) {
  AnnotatedDocument doc;
  doc.document = tokenize(text);
  doc.document.id = "d";
  for (const TokenRange& range : term_ranges) {
    doc.terms.push_back({range, AnnotationSource::gold});
  }
  return doc;
}

using Pairs = std::vector<std::pair<TokenRange, TokenRange>>;

}  // namespace

TEST_CASE("patterns: parsing, wildcards, flags and errors") {
  std::vector<Pattern> patterns = parse_patterns(
      "# comment\n"
      "PART-OF : ARG1 является частью ARG2\n"
      "\n"
      "COMPARE bidir : ARG1 против *2 ARG2\n");
  REQUIRE(patterns.size() == 2);
  CHECK(patterns[0].label == RelationLabel::part_of);
  CHECK(patterns[0].directional);
  CHECK(patterns[0].elements.size() == 4);
  CHECK(patterns[0].elements[1].literal == default_normalizer().normalize("является"));
  CHECK_FALSE(patterns[1].directional);
  CHECK(patterns[1].elements[2].kind == PatternElement::Kind::wildcard);
  CHECK(patterns[1].elements[2].max_gap == 2);

  CHECK_THROWS_WITH_AS(parse_patterns("PART-OF : ARG1 ARG1 ARG2\n"),
                       doctest::Contains("exactly one ARG1"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_patterns("NO-RELATION : ARG1 ARG2\n"),
                       doctest::Contains("NO-RELATION"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_patterns("PART-OF : ARG1 *x ARG2\n"),
                       doctest::Contains("wildcard"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_patterns("PART-OF ARG1 ARG2\n"), doctest::Contains("':'"),
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_patterns("BAD-LABEL : ARG1 ARG2\n"),
                       doctest::Contains("line 1"), std::runtime_error);
}

TEST_CASE("classify: marker pattern assigns PART-OF") {
  AnnotatedDocument doc = annotated("X является частью Y", {{0, 0}, {3, 3}});
  std::vector<Pattern> patterns = parse_patterns("PART-OF : ARG1 является частью ARG2\n");
  CHECK(classify(doc.document, {0, 0}, {3, 3}, patterns) == RelationLabel::part_of);
}

TEST_CASE("classify: no marker means NO-RELATION") {
  AnnotatedDocument doc = annotated("X и Y рядом", {{0, 0}, {2, 2}});
  std::vector<Pattern> patterns = parse_patterns("PART-OF : ARG1 является частью ARG2\n");
  CHECK(classify(doc.document, {0, 0}, {2, 2}, patterns) == RelationLabel::no_relation);
  CHECK(classify(doc.document, {0, 0}, {2, 2}, std::vector<Pattern>{}) ==
        RelationLabel::no_relation);
}

TEST_CASE("classify: earlier pattern in file order wins") {
  AnnotatedDocument doc = annotated("X является частью Y", {{0, 0}, {3, 3}});
  std::vector<Pattern> patterns = parse_patterns(
      "USED-FOR : ARG1 является *1 ARG2\n"
      "PART-OF : ARG1 является частью ARG2\n");
  CHECK(classify(doc.document, {0, 0}, {3, 3}, patterns) == RelationLabel::used_for);

  std::vector<Pattern> flipped = parse_patterns(
      "PART-OF : ARG1 является частью ARG2\n"
      "USED-FOR : ARG1 является *1 ARG2\n");
  CHECK(classify(doc.document, {0, 0}, {3, 3}, flipped) == RelationLabel::part_of);
}

TEST_CASE("classify: wildcard gap limits are enforced") {
  AnnotatedDocument doc = annotated("X один два три Y", {{0, 0}, {4, 4}});
  std::vector<Pattern> tight = parse_patterns("USED-FOR : ARG1 *2 ARG2\n");
  CHECK(classify(doc.document, {0, 0}, {4, 4}, tight) == RelationLabel::no_relation);
  std::vector<Pattern> wide = parse_patterns("USED-FOR : ARG1 *3 ARG2\n");
  CHECK(classify(doc.document, {0, 0}, {4, 4}, wide) == RelationLabel::used_for);
}

TEST_CASE("classify: reversed slot order captures reversed roles") {
  // "Y состоит из X" means X PART-OF Y.
  AnnotatedDocument doc = annotated("система состоит из модулей", {{0, 0}, {3, 3}});
  std::vector<Pattern> patterns = parse_patterns("PART-OF : ARG2 состоит из ARG1\n");
  CHECK(classify(doc.document, {3, 3}, {0, 0}, patterns) == RelationLabel::part_of);
  CHECK(classify(doc.document, {0, 0}, {3, 3}, patterns) == RelationLabel::no_relation);
}

TEST_CASE("classify: bidir flag also matches swapped roles") {
  AnnotatedDocument doc = annotated("X против Y", {{0, 0}, {2, 2}});
  std::vector<Pattern> directional = parse_patterns("COMPARE : ARG1 против ARG2\n");
  CHECK(classify(doc.document, {2, 2}, {0, 0}, directional) == RelationLabel::no_relation);
  std::vector<Pattern> bidir = parse_patterns("COMPARE bidir : ARG1 против ARG2\n");
  CHECK(classify(doc.document, {2, 2}, {0, 0}, bidir) == RelationLabel::compare);
}

TEST_CASE("candidate_pairs: no filtering keeps every ordered pair") {
  AnnotatedDocument doc = annotated("A B C", {{0, 0}, {1, 1}, {2, 2}});
  Pairs pairs = candidate_pairs(doc, {});
  CHECK(pairs.size() == 6);  // 3 * 2 ordered pairs
}

TEST_CASE("candidate_pairs: rate zero keeps only gold pairs") {
  AnnotatedDocument doc = annotated("A B C", {{0, 0}, {1, 1}, {2, 2}});
  doc.relations.push_back({{0, 0}, {2, 2}, RelationLabel::used_for, 0});
  PairSamplingOptions options;
  options.sample_rate = 0.0;
  Pairs pairs = candidate_pairs(doc, options);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].first == TokenRange{0, 0});
  CHECK(pairs[0].second == TokenRange{2, 2});
}

TEST_CASE("candidate_pairs: distance filter uses gap tokens") {
  AnnotatedDocument doc = annotated("A x x x B", {{0, 0}, {4, 4}});
  PairSamplingOptions tight;
  tight.max_distance = 3;  // gap is exactly 3, needs strict <
  CHECK(candidate_pairs(doc, tight).empty());
  PairSamplingOptions loose;
  loose.max_distance = 4;
  CHECK(candidate_pairs(doc, loose).size() == 2);
}

TEST_CASE("candidate_pairs: cross-sentence terms never pair") {
  AnnotatedDocument doc = annotated("A тут. B там", {{0, 0}, {3, 3}});
  REQUIRE(doc.document.sentences.size() == 2);
  CHECK(candidate_pairs(doc, {}).empty());
}

TEST_CASE("candidate_pairs: seeded sampling replays exactly") {
  // Six one-token terms in one sentence.
  AnnotatedDocument doc = annotated("t0 t1 t2 t3 t4 t5", std::vector<TokenRange>{});
  for (int i = 0; i < 6; ++i) doc.terms.push_back({{i, i}, AnnotationSource::gold});
  doc.relations.push_back({{0, 0}, {5, 5}, RelationLabel::compare, 0});

  PairSamplingOptions options;
  options.sample_rate = 0.5;
  options.max_distance = 10;
  options.seed = 42;
  Pairs got = candidate_pairs(doc, options);

  // Replay the documented contract independently.
  std::mt19937 rng(42);
  const std::uint64_t threshold = static_cast<std::uint64_t>(0.5 * 4294967296.0);
  Pairs expected;
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      if (a == b) continue;
      TokenRange arg1{a, a}, arg2{b, b};
      bool gold = (a == 0 && b == 5);
      if (gold) {
        expected.emplace_back(arg1, arg2);
        continue;
      }
      int gap = std::max(a, b) - std::min(a, b) - 1;
      if (gap >= 10) continue;
      if (static_cast<std::uint64_t>(rng()) < threshold) expected.emplace_back(arg1, arg2);
    }
  }
  CHECK(got == expected);
  CHECK(std::find(got.begin(), got.end(), std::make_pair(TokenRange{0, 0}, TokenRange{5, 5})) !=
        got.end());
  // Determinism: same seed, same result.
  CHECK(candidate_pairs(doc, options) == got);
}

TEST_CASE("extract_all: zero or one term yields nothing") {
  std::vector<Pattern> patterns = parse_patterns("PART-OF : ARG1 является частью ARG2\n");
  CHECK(extract_all(annotated("X является частью Y", {}), patterns).empty());
  CHECK(extract_all(annotated("X является частью Y", {{0, 0}}), patterns).empty());
}

TEST_CASE("extract_all: one marker yields exactly one instance") {
  AnnotatedDocument doc = annotated("X является частью Y", {{0, 0}, {3, 3}});
  std::vector<Pattern> patterns = parse_patterns("PART-OF : ARG1 является частью ARG2\n");
  std::vector<RelationInstance> instances = extract_all(doc, patterns);
  REQUIRE(instances.size() == 1);
  CHECK(instances[0].arg1 == TokenRange{0, 0});
  CHECK(instances[0].arg2 == TokenRange{3, 3});
  CHECK(instances[0].label == RelationLabel::part_of);
  CHECK(instances[0].sentence_index == 0);
}

TEST_CASE("extract_all: terms in different sentences are never paired") {
  AnnotatedDocument doc = annotated("X является частью. Y тут", {{0, 0}, {4, 4}});
  REQUIRE(doc.document.sentences.size() == 2);
  std::vector<Pattern> patterns = parse_patterns("PART-OF : ARG1 является частью ARG2\n");
  CHECK(extract_all(doc, patterns).empty());
}

TEST_CASE("extract_all: output is a labeled subset of unfiltered candidate pairs") {
  AnnotatedDocument doc =
      annotated("A является частью B и C применяется для D", {{0, 0}, {3, 3}, {5, 5}, {8, 8}});
  std::vector<Pattern> patterns = parse_patterns(
      "PART-OF : ARG1 является частью ARG2\n"
      "USED-FOR : ARG1 применяется для ARG2\n");
  std::vector<RelationInstance> instances = extract_all(doc, patterns);
  Pairs all = candidate_pairs(doc, {});
  for (const RelationInstance& instance : instances) {
    CHECK(instance.label != RelationLabel::no_relation);
    CHECK(std::find(all.begin(), all.end(), std::make_pair(instance.arg1, instance.arg2)) !=
          all.end());
  }
  CHECK(instances.size() == 2);
}

TEST_CASE("property: emitted relations stay inside one sentence and are order-stable") {
  std::mt19937 rng(17);
  std::vector<Pattern> patterns = parse_patterns(
      "PART-OF : ARG1 является частью ARG2\n"
      "USED-FOR : ARG1 для ARG2\n"
      "COMPARE bidir : ARG1 против ARG2\n");
  const std::vector<std::string> words = {"является", "частью", "для",  "против",
                                          "терм",     "слово",  "факт", "."};
  std::uniform_int_distribution<std::size_t> word(0, words.size() - 1);
  std::uniform_int_distribution<int> len(4, 30);
  std::uniform_int_distribution<int> coin(0, 2);

  for (int round = 0; round < 100; ++round) {
    std::string text = "Начало";
    int n = len(rng);
    for (int i = 0; i < n; ++i) text += " " + words[word(rng)];
    AnnotatedDocument doc;
    doc.document = tokenize(text);
    doc.document.id = "d";
    for (int i = 0; i < static_cast<int>(doc.document.tokens.size()); ++i) {
      if (doc.document.tokens[static_cast<std::size_t>(i)].is_word() && coin(rng) == 0) {
        doc.terms.push_back({{i, i}, AnnotationSource::gold});
      }
    }
    std::vector<RelationInstance> instances = extract_all(doc, patterns);
    for (const RelationInstance& instance : instances) {
      std::optional<int> s1 = doc.document.sentence_of(instance.arg1);
      std::optional<int> s2 = doc.document.sentence_of(instance.arg2);
      REQUIRE(s1.has_value());
      CHECK(*s1 == *s2);
      CHECK(*s1 == instance.sentence_index);
    }
    // Permuting the pair order never changes a pair's label.
    Pairs pairs = candidate_pairs(doc, {});
    std::shuffle(pairs.begin(), pairs.end(), rng);
    for (const auto& [arg1, arg2] : pairs) {
      RelationLabel direct = classify(doc.document, arg1, arg2, patterns);
      bool emitted = false;
      for (const RelationInstance& instance : instances) {
        if (instance.arg1 == arg1 && instance.arg2 == arg2) {
          CHECK(instance.label == direct);
          emitted = true;
        }
      }
      if (!emitted) CHECK(direct == RelationLabel::no_relation);
    }
  }
}

TEST_CASE("build_dataset: gold labels survive, sampled pairs are NO-RELATION") {
  AnnotatedDocument doc = annotated("A B C", {{0, 0}, {1, 1}, {2, 2}});
  doc.relations.push_back({{0, 0}, {1, 1}, RelationLabel::used_for, 0});
  std::vector<RelationInstance> dataset = build_dataset(doc, {});
  REQUIRE(dataset.size() == 6);
  int no_relation = 0, used_for = 0;
  for (const RelationInstance& instance : dataset) {
    if (instance.label == RelationLabel::no_relation) ++no_relation;
    if (instance.label == RelationLabel::used_for) ++used_for;
  }
  CHECK(used_for == 1);
  CHECK(no_relation == 5);
}
