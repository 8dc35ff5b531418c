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

#ifndef TERMLINK_TAGGER_HPP_
#define TERMLINK_TAGGER_HPP_

#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "termlink/corpus.hpp"
#include "termlink/dictionary.hpp"

namespace termlink {

// Slot for a trainable term tagger. The shipped default is the dictionary
// tagger itself, which keeps the supervision loop runnable end to end;
// external (e.g. neural) taggers plug in here.
class TaggerInterface {
 public:
  virtual ~TaggerInterface() = default;
  // Training hook; default is a no-op.
  virtual void train(std::span<const AnnotatedDocument> corpus) { (void)corpus; }
  // Must return valid, mutually non-overlapping annotations for doc.
  virtual std::vector<TermAnnotation> tag(const Document& doc) const = 0;
  virtual std::string name() const = 0;
};

class DictionaryTagger : public TaggerInterface {
 public:
  explicit DictionaryTagger(const TermDictionary& dict) : dict_(&dict) {}
  std::vector<TermAnnotation> tag(const Document& doc) const override;
  std::string name() const override { return "dictionary"; }

 private:
  const TermDictionary* dict_;
};

// Greedy longest-match gazetteer tagging over token norms, left to right
// within each sentence. Non-overlapping by construction; spans carry
// source=dictionary.
std::vector<TermAnnotation> dictionary_tag(const Document& doc, const TermDictionary& dict);

struct RepairOptions {
  // Checked against token norms. The default covers common Russian
  // prepositions; see default_preposition_stoplist().
  std::set<std::string> preposition_stoplist;

  RepairOptions();
};

const std::set<std::string>& default_preposition_stoplist();

// Boundary repair, applied as rule (a) then rule (b), each to a fixpoint so
// the whole operation is idempotent:
//   (a) strip leading stoplist prepositions (drop the term if nothing is
//       left);
//   (b) absorb the token right after the term when it is Latin-script, or a
//       parenthesized Latin word "( WORD )", staying inside the sentence and
//       never colliding with another annotation.
std::vector<TermAnnotation> repair_boundaries(const Document& doc,
                                              std::vector<TermAnnotation> annotations,
                                              const RepairOptions& options = {});

enum class MergePolicy { union_prefer_longer, dictionary_priority, model_priority };

std::string to_string(MergePolicy policy);
MergePolicy merge_policy_from_string(const std::string& name);

// Union of two annotation lists for one document. Exact-duplicate ranges
// collapse (source=merged when the sources differ). Overlap conflicts are
// resolved by the policy: union_prefer_longer keeps the longer span (ties go
// to list a); the *_priority policies prefer spans whose source matches, then
// fall back to longer/list-a. A span that displaced a span from the other
// list is marked source=merged. Result is sorted by start, non-overlapping.
std::vector<TermAnnotation> merge_annotations(std::span<const TermAnnotation> a,
                                              std::span<const TermAnnotation> b,
                                              MergePolicy policy);

struct WeakSupervisionConfig {
  int iterations = 1;
  MergePolicy merge_policy = MergePolicy::union_prefer_longer;
  bool repair = true;
};

struct WeakSupervisionStats {
  int iteration = 0;
  std::int64_t dictionary_spans = 0;
  std::int64_t model_spans = 0;
  std::int64_t merged_spans = 0;
};

struct WeakSupervisionResult {
  std::vector<AnnotatedDocument> corpus;
  std::vector<WeakSupervisionStats> stats;
};

// The four-step supervision loop: (1) dictionary-annotate, (2) train the
// tagger on it, then per iteration (3) re-annotate with tagger + dictionary
// and merge, (4) train again. Tagger failures abort with the iteration index.
WeakSupervisionResult run_weak_supervision(std::span<const Document> corpus,
                                           const TermDictionary& dict, TaggerInterface& tagger,
                                           const WeakSupervisionConfig& config);

}  // namespace termlink

#endif  // TERMLINK_TAGGER_HPP_
