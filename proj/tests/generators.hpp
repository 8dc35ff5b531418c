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

// Randomized gold/pred fixture generators shared by the unit and acceptance
// suites.

#ifndef TERMLINK_TESTS_GENERATORS_HPP_
#define TERMLINK_TESTS_GENERATORS_HPP_

#include <random>
#include <string>
#include <vector>

#include "termlink/corpus.hpp"
#include "termlink/metrics.hpp"

namespace generators {

using namespace termlink;

inline Document words_doc(int n_tokens, const std::string& id) {
  std::string text;
  for (int i = 0; i < n_tokens; ++i) {
    if (i > 0) text += " ";
    text += "w" + std::to_string(i);
  }
  Document doc = tokenize(text);
  doc.id = id;
  return doc;
}

// Random non-overlapping term spans over the token range.
inline std::vector<TermAnnotation> random_terms(std::mt19937& rng, int n_tokens, int max_spans) {
  std::vector<TermAnnotation> terms;
  std::uniform_int_distribution<int> gap(0, 3);
  std::uniform_int_distribution<int> len(1, 3);
  int pos = 0;
  while (pos < n_tokens && static_cast<int>(terms.size()) < max_spans) {
    pos += gap(rng);
    int last = pos + len(rng) - 1;
    if (last >= n_tokens) break;
    terms.push_back({{pos, last}, AnnotationSource::gold});
    pos = last + 1 + gap(rng);
  }
  return terms;
}

// One gold/pred document pair with correlated but perturbed annotations.
struct TermFixture {
  AnnotatedDocument gold;
  AnnotatedDocument pred;
};

inline TermFixture random_term_fixture(std::mt19937& rng, const std::string& id,
                                       int max_annotations) {
  std::uniform_int_distribution<int> size(5, 40);
  int n_tokens = size(rng);
  TermFixture fx;
  fx.gold.document = words_doc(n_tokens, id);
  fx.pred.document = fx.gold.document;
  fx.gold.terms = random_terms(rng, n_tokens, max_annotations);

  // Pred: drop some gold spans, shift some boundaries, add noise spans.
  std::uniform_int_distribution<int> action(0, 3);
  std::vector<TermAnnotation> pred;
  for (const TermAnnotation& term : fx.gold.terms) {
    switch (action(rng)) {
      case 0: break;  // dropped
      case 1: {
        TermAnnotation moved = term;
        if (moved.range.first + 1 <= moved.range.last) {
          moved.range.first += 1;
        } else if (moved.range.last + 1 < n_tokens) {
          moved.range.last += 1;
        }
        pred.push_back(moved);
        break;
      }
      default: pred.push_back(term);
    }
  }
  for (const TermAnnotation& extra : random_terms(rng, n_tokens, 3)) {
    bool clash = false;
    for (const TermAnnotation& existing : pred) {
      if (existing.range.overlaps(extra.range)) clash = true;
    }
    if (!clash) pred.push_back(extra);
  }
  std::sort(pred.begin(), pred.end(),
            [](const TermAnnotation& a, const TermAnnotation& b) { return a.range < b.range; });
  pred.erase(std::unique(pred.begin(), pred.end()), pred.end());
  fx.pred.terms = pred;
  return fx;
}

// Same-document relation fixtures over shared term spans.
inline TermFixture random_relation_fixture(std::mt19937& rng, const std::string& id,
                                           int max_instances) {
  TermFixture fx;
  int n_tokens = 30;
  fx.gold.document = words_doc(n_tokens, id);
  fx.pred.document = fx.gold.document;
  std::vector<TermAnnotation> terms = random_terms(rng, n_tokens, 8);
  fx.gold.terms = terms;
  fx.pred.terms = terms;
  if (terms.size() < 2) return fx;

  const std::vector<RelationLabel>& labels = all_relation_labels();
  std::uniform_int_distribution<std::size_t> term_at(0, terms.size() - 1);
  std::uniform_int_distribution<std::size_t> label_at(0, labels.size() - 1);
  std::uniform_int_distribution<int> count(0, max_instances);
  std::uniform_int_distribution<int> keep(0, 3);

  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    std::size_t a = term_at(rng), b = term_at(rng);
    if (a == b) continue;
    RelationInstance instance{terms[a].range, terms[b].range, labels[label_at(rng)], 0};
    bool duplicate = false;
    for (const RelationInstance& existing : fx.gold.relations) {
      if (existing.arg1 == instance.arg1 && existing.arg2 == instance.arg2) duplicate = true;
    }
    if (duplicate) continue;
    fx.gold.relations.push_back(instance);
    RelationInstance guess = instance;
    if (keep(rng) == 0) guess.label = labels[label_at(rng)];  // label confusion
    if (keep(rng) != 1) fx.pred.relations.push_back(guess);   // sometimes dropped
  }
  // Spurious predictions.
  int extra = count(rng) / 2;
  for (int i = 0; i < extra; ++i) {
    std::size_t a = term_at(rng), b = term_at(rng);
    if (a == b) continue;
    RelationInstance instance{terms[a].range, terms[b].range, labels[label_at(rng)], 0};
    bool duplicate = false;
    for (const RelationInstance& existing : fx.pred.relations) {
      if (existing.arg1 == instance.arg1 && existing.arg2 == instance.arg2) duplicate = true;
    }
    if (!duplicate) fx.pred.relations.push_back(instance);
  }
  return fx;
}

// Random linking examples. Predictions are always drawn from the candidate
// set (or NONE), mirroring how a ranker behaves.
inline std::vector<LinkingExample> random_linking_examples(std::mt19937& rng, int max_examples) {
  std::uniform_int_distribution<int> count(1, max_examples);
  std::uniform_int_distribution<int> set_size(0, 5);
  std::uniform_int_distribution<int> qid_num(1, 12);
  std::uniform_int_distribution<int> coin(0, 3);

  std::vector<LinkingExample> examples;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    LinkingExample ex;
    int k = set_size(rng);
    for (int c = 0; c < k; ++c) {
      std::string qid = "Q" + std::to_string(qid_num(rng));
      bool seen = false;
      for (const std::string& existing : ex.candidate_qids) {
        if (existing == qid) seen = true;
      }
      if (!seen) ex.candidate_qids.push_back(qid);
    }
    if (coin(rng) != 0) {
      // Gold link: sometimes inside the candidate set, sometimes not.
      if (!ex.candidate_qids.empty() && coin(rng) != 0) {
        ex.gold_qid = ex.candidate_qids[static_cast<std::size_t>(coin(rng)) %
                                        ex.candidate_qids.size()];
      } else {
        ex.gold_qid = "Q" + std::to_string(qid_num(rng) + 100);
      }
    }
    if (!ex.candidate_qids.empty() && coin(rng) != 0) {
      ex.pred_qid = ex.candidate_qids[0];
    }
    examples.push_back(std::move(ex));
  }
  return examples;
}

// Random documents over a stem-stable syllable vocabulary, so norms equal
// lowercased surfaces and dictionary entries can be built from the same
// alphabet. Roughly one in ten words starts a new sentence.
inline const std::vector<std::string>& tagger_vocabulary() {
  static const std::vector<std::string> words = {"бакт", "вект", "гмет", "дсет",
                                                 "жмод", "зсис", "клинг", "мтерм"};
  return words;
}

inline Document random_tagger_doc(std::mt19937& rng, int max_words) {
  std::uniform_int_distribution<int> len(1, max_words);
  std::uniform_int_distribution<std::size_t> word(0, tagger_vocabulary().size() - 1);
  std::uniform_int_distribution<int> punct(0, 9);
  std::string text;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    if (i > 0) text += " ";
    if (punct(rng) == 0) {
      text += ". Глава";
      continue;
    }
    text += tagger_vocabulary()[word(rng)];
  }
  return tokenize(text);
}

inline std::vector<std::string> random_tagger_terms(std::mt19937& rng) {
  std::uniform_int_distribution<int> entries(1, 8);
  std::uniform_int_distribution<int> length(1, 3);
  std::uniform_int_distribution<std::size_t> word(0, tagger_vocabulary().size() - 1);
  std::vector<std::string> terms;
  int n = entries(rng);
  for (int i = 0; i < n; ++i) {
    std::string term;
    int len = length(rng);
    for (int k = 0; k < len; ++k) {
      if (k > 0) term += " ";
      term += tagger_vocabulary()[word(rng)];
    }
    terms.push_back(term);
  }
  return terms;
}

}  // namespace generators

#endif  // TERMLINK_TESTS_GENERATORS_HPP_
