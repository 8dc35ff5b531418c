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

#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "termlink/tagger.hpp"

using namespace termlink;

namespace {

Document doc_of(const std::string& text) {
  Document doc = tokenize(text);
  doc.id = "d";
  return doc;
}

TermDictionary dict_of(std::initializer_list<std::string> terms) {
  std::vector<std::string> list(terms);
  return TermDictionary::from_terms(list);
}

std::vector<TokenRange> ranges_of(const std::vector<TermAnnotation>& anns) {
  std::vector<TokenRange> out;
  for (const TermAnnotation& a : anns) out.push_back(a.range);
  return out;
}

bool non_overlapping(const std::vector<TermAnnotation>& anns) {
  for (std::size_t i = 0; i < anns.size(); ++i) {
    for (std::size_t j = i + 1; j < anns.size(); ++j) {
      if (anns[i].range.overlaps(anns[j].range)) return false;
    }
  }
  return true;
}

Document random_doc(std::mt19937& rng, int max_words) {
  return generators::random_tagger_doc(rng, max_words);
}

TermDictionary random_dict(std::mt19937& rng) {
  return TermDictionary::from_terms(generators::random_tagger_terms(rng));
}

}  // namespace

TEST_CASE("dictionary_tag: matches over norms within a sentence") {
  TermDictionary dict = dict_of({"опорный вектор"});
  Document doc = doc_of("метод опорных векторов");
  std::vector<TermAnnotation> anns = dictionary_tag(doc, dict);
  REQUIRE(anns.size() == 1);
  CHECK(anns[0].range == TokenRange{1, 2});
  CHECK(anns[0].source == AnnotationSource::dictionary);
}

TEST_CASE("dictionary_tag: longest match wins") {
  TermDictionary dict = dict_of({"a", "a b"});
  Document doc = doc_of("a b");
  std::vector<TermAnnotation> anns = dictionary_tag(doc, dict);
  REQUIRE(anns.size() == 1);
  CHECK(anns[0].range == TokenRange{0, 1});
}

TEST_CASE("dictionary_tag: empty dictionary tags nothing") {
  TermDictionary dict;
  CHECK(dictionary_tag(doc_of("что угодно"), dict).empty());
}

TEST_CASE("dictionary_tag: matches do not cross sentence boundaries") {
  TermDictionary dict = dict_of({"вектор Новый"});
  Document doc = doc_of("Это вектор. Новый метод.");
  CHECK(dictionary_tag(doc, dict).empty());
}

TEST_CASE("repair: leading prepositions are stripped to a fixpoint") {
  Document doc = doc_of("в машинном обучении");
  std::vector<TermAnnotation> anns = {{{0, 2}, AnnotationSource::dictionary}};
  std::vector<TermAnnotation> repaired = repair_boundaries(doc, anns);
  REQUIRE(repaired.size() == 1);
  CHECK(repaired[0].range == TokenRange{1, 2});

  Document doubled = doc_of("в на поле");
  std::vector<TermAnnotation> gone = repair_boundaries(doubled, {{{0, 2}, AnnotationSource::dictionary}});
  REQUIRE(gone.size() == 1);
  CHECK(gone[0].range == TokenRange{2, 2});

  std::vector<TermAnnotation> dropped =
      repair_boundaries(doc_of("в на"), {{{0, 1}, AnnotationSource::dictionary}});
  CHECK(dropped.empty());
}

TEST_CASE("repair: the next Latin token joins the term") {
  Document doc = doc_of("метод опорных векторов SVM подход");
  std::vector<TermAnnotation> repaired =
      repair_boundaries(doc, {{{1, 2}, AnnotationSource::dictionary}});
  REQUIRE(repaired.size() == 1);
  CHECK(repaired[0].range == TokenRange{1, 3});
}

TEST_CASE("repair: parenthesized Latin word joins the term") {
  Document doc = doc_of("метод опорных векторов (SVM) подход");
  std::vector<TermAnnotation> repaired =
      repair_boundaries(doc, {{{0, 2}, AnnotationSource::dictionary}});
  REQUIRE(repaired.size() == 1);
  CHECK(repaired[0].range == TokenRange{0, 5});
}

TEST_CASE("repair: untouched when no rule fires") {
  Document doc = doc_of("метод опорных векторов хорош");
  std::vector<TermAnnotation> anns = {{{0, 2}, AnnotationSource::dictionary}};
  CHECK(repair_boundaries(doc, anns) == anns);
}

TEST_CASE("repair: extension never crosses sentences or other annotations") {
  Document doc = doc_of("это метод. SVM работает");
  std::vector<TermAnnotation> repaired =
      repair_boundaries(doc, {{{1, 1}, AnnotationSource::dictionary}});
  REQUIRE(repaired.size() == 1);
  CHECK(repaired[0].range == TokenRange{1, 1});  // "SVM" is in the next sentence

  Document doc2 = doc_of("метод SVM подход");
  std::vector<TermAnnotation> two = {{{0, 0}, AnnotationSource::dictionary},
                                     {{1, 1}, AnnotationSource::model}};
  std::vector<TermAnnotation> repaired2 = repair_boundaries(doc2, two);
  REQUIRE(repaired2.size() == 2);
  CHECK(repaired2[0].range == TokenRange{0, 0});  // blocked by the SVM annotation
  CHECK(repaired2[1].range == TokenRange{1, 1});
}

TEST_CASE("property: repair_boundaries is idempotent") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> span(0, 3);
  for (int round = 0; round < 200; ++round) {
    Document doc = random_doc(rng, 40);
    if (doc.tokens.empty()) continue;
    // Random non-overlapping annotations.
    std::vector<TermAnnotation> anns;
    int pos = 0;
    while (pos < static_cast<int>(doc.tokens.size())) {
      int len = span(rng);
      if (len > 0 && pos + len - 1 < static_cast<int>(doc.tokens.size())) {
        anns.push_back({{pos, pos + len - 1}, AnnotationSource::dictionary});
        pos += len + span(rng);
      } else {
        pos += 1 + span(rng);
      }
    }
    std::vector<TermAnnotation> once = repair_boundaries(doc, anns);
    std::vector<TermAnnotation> twice = repair_boundaries(doc, once);
    CHECK(once == twice);
    CHECK(non_overlapping(once));
  }
}

TEST_CASE("property: dictionary_tag equals an independent greedy matcher") {
  std::mt19937 rng(31);
  for (int round = 0; round < 200; ++round) {
    Document doc = random_doc(rng, 100);
    TermDictionary dict = random_dict(rng);

    std::vector<TermAnnotation> tagged = dictionary_tag(doc, dict);
    CHECK(non_overlapping(tagged));

    std::set<std::string> entries;
    for (const auto& [entry, count] : dict.entries()) entries.insert(entry);
    std::vector<TokenRange> expected =
        oracles::naive_greedy_tag(doc, entries, dict.max_token_count());
    CHECK(ranges_of(tagged) == expected);

    // Coverage: every brute-force occurrence is either emitted or overlaps
    // an emitted span at least as long.
    for (const TokenRange& occurrence :
         oracles::all_dictionary_matches(doc, entries, dict.max_token_count())) {
      bool ok = false;
      for (const TermAnnotation& ann : tagged) {
        if (ann.range == occurrence ||
            (ann.range.overlaps(occurrence) && ann.range.length() >= occurrence.length())) {
          ok = true;
          break;
        }
      }
      CHECK(ok);
    }
  }
}

TEST_CASE("merge: longer span wins, ties go to the first list") {
  std::vector<TermAnnotation> a = {{{0, 2}, AnnotationSource::model}};
  std::vector<TermAnnotation> b = {{{1, 3}, AnnotationSource::dictionary}};
  std::vector<TermAnnotation> merged = merge_annotations(a, b, MergePolicy::union_prefer_longer);
  REQUIRE(merged.size() == 1);
  CHECK(merged[0].range == TokenRange{0, 2});
  CHECK(merged[0].source == AnnotationSource::merged);  // displaced b's span
}

TEST_CASE("merge: disjoint inputs concatenate sorted by start") {
  std::vector<TermAnnotation> a = {{{4, 5}, AnnotationSource::model}};
  std::vector<TermAnnotation> b = {{{0, 1}, AnnotationSource::dictionary}};
  std::vector<TermAnnotation> merged = merge_annotations(a, b, MergePolicy::union_prefer_longer);
  REQUIRE(merged.size() == 2);
  CHECK(merged[0].range == TokenRange{0, 1});
  CHECK(merged[0].source == AnnotationSource::dictionary);
  CHECK(merged[1].range == TokenRange{4, 5});

  // Commutativity on disjoint inputs.
  CHECK(merge_annotations(b, a, MergePolicy::union_prefer_longer) == merged);
}

TEST_CASE("merge: identical inputs are a fixed point") {
  std::vector<TermAnnotation> a = {{{0, 1}, AnnotationSource::dictionary},
                                   {{3, 4}, AnnotationSource::model}};
  CHECK(merge_annotations(a, a, MergePolicy::union_prefer_longer) == a);
}

TEST_CASE("merge: source priority policies") {
  std::vector<TermAnnotation> model = {{{0, 2}, AnnotationSource::model}};
  std::vector<TermAnnotation> dict = {{{2, 3}, AnnotationSource::dictionary}};

  std::vector<TermAnnotation> prefer_dict =
      merge_annotations(model, dict, MergePolicy::dictionary_priority);
  REQUIRE(prefer_dict.size() == 1);
  CHECK(prefer_dict[0].range == TokenRange{2, 3});

  std::vector<TermAnnotation> prefer_model =
      merge_annotations(model, dict, MergePolicy::model_priority);
  REQUIRE(prefer_model.size() == 1);
  CHECK(prefer_model[0].range == TokenRange{0, 2});
}

namespace {

// Deterministic stub that always adds one fixed span (when it fits).
class StubTagger : public TaggerInterface {
 public:
  explicit StubTagger(TokenRange span) : span_(span) {}
  std::vector<TermAnnotation> tag(const Document& doc) const override {
    if (span_.last < static_cast<int>(doc.tokens.size())) {
      return {{span_, AnnotationSource::model}};
    }
    return {};
  }
  std::string name() const override { return "stub"; }

 private:
  TokenRange span_;
};

class FailingTagger : public TaggerInterface {
 public:
  std::vector<TermAnnotation> tag(const Document&) const override {
    throw std::runtime_error("boom");
  }
  std::string name() const override { return "failing"; }
};

}  // namespace

TEST_CASE("weak supervision: dictionary tagger is a fixed point") {
  TermDictionary dict = dict_of({"опорный вектор", "метод"});
  std::vector<Document> corpus = {doc_of("метод опорных векторов"), doc_of("другой текст")};

  DictionaryTagger tagger(dict);
  WeakSupervisionConfig config;
  WeakSupervisionResult result = run_weak_supervision(corpus, dict, tagger, config);

  REQUIRE(result.corpus.size() == 2);
  std::vector<TermAnnotation> direct =
      repair_boundaries(corpus[0], dictionary_tag(corpus[0], dict));
  CHECK(ranges_of(result.corpus[0].terms) == ranges_of(direct));
  REQUIRE(result.stats.size() == 1);
  CHECK(result.stats[0].dictionary_spans == result.stats[0].merged_spans);
}

TEST_CASE("weak supervision: stub tagger spans merge with dictionary spans") {
  TermDictionary dict = dict_of({"вектор"});
  std::vector<Document> corpus = {doc_of("метод вектора длинный хвост")};
  StubTagger stub({2, 3});
  WeakSupervisionConfig config;
  WeakSupervisionResult result = run_weak_supervision(corpus, dict, stub, config);

  std::vector<TermAnnotation> expected =
      merge_annotations(stub.tag(corpus[0]),
                        repair_boundaries(corpus[0], dictionary_tag(corpus[0], dict)),
                        MergePolicy::union_prefer_longer);
  CHECK(result.corpus[0].terms == expected);
}

TEST_CASE("weak supervision: two iterations of a deterministic stub equal one") {
  TermDictionary dict = dict_of({"вектор", "метод"});
  std::vector<Document> corpus = {doc_of("метод вектора и ещё метод")};
  StubTagger stub({2, 2});

  WeakSupervisionConfig one;
  one.iterations = 1;
  StubTagger stub1({2, 2});
  WeakSupervisionResult first = run_weak_supervision(corpus, dict, stub1, one);

  WeakSupervisionConfig two;
  two.iterations = 2;
  WeakSupervisionResult second = run_weak_supervision(corpus, dict, stub, two);

  CHECK(first.corpus[0].terms == second.corpus[0].terms);
  CHECK(second.stats.size() == 2);
}

TEST_CASE("weak supervision: tagger failure reports the iteration") {
  TermDictionary dict = dict_of({"метод"});
  std::vector<Document> corpus = {doc_of("метод")};
  FailingTagger failing;
  WeakSupervisionConfig config;
  CHECK_THROWS_WITH_AS(run_weak_supervision(corpus, dict, failing, config),
                       doctest::Contains("iteration 1"), std::runtime_error);
}
