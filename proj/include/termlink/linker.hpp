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

#ifndef TERMLINK_LINKER_HPP_
#define TERMLINK_LINKER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "termlink/corpus.hpp"
#include "termlink/embeddings.hpp"
#include "termlink/kb.hpp"

namespace termlink {

// One term occurrence to be linked, with its context window size (tokens on
// each side used for the mention vector).
struct Mention {
  const Document* document = nullptr;
  TokenRange range;
  int context_window = 5;
};

struct Candidate {
  const EntityRecord* entity = nullptr;
  std::string matched_via;  // the mention sub-n-gram that hit this entity
  int n_matching = 0;       // token length of the matching sub-n-gram
  int n_all = 0;            // token length of the full mention
  std::optional<double> raw_similarity;
  double weight = 0.0;  // n_matching / n_all
  double score = 0.0;
  bool below_threshold = false;
};

struct CandidateSet {
  Mention mention;
  std::vector<Candidate> candidates;
};

// Candidate generation: the full mention phrase plus every contiguous
// 1-, 2-, 3-gram of it (full phrase only when include_subngrams is false,
// as the baseline pipeline does) is looked up against normalized entity
// names and synonyms. Windows are tried by descending length, left to right,
// hits per window in ascending-qid order; the first hit per qid wins, which
// keeps the largest n_matching. Disambiguation entities are dropped.
CandidateSet generate_candidates(const Mention& mention, const KBStore& kb,
                                 int max_subngram = 3, bool include_subngrams = true);

// Weighted-cosine ranking: score = cosine(mention vector, entity vector) *
// weight. The mention vector averages the mention tokens plus the context
// window (clipped at document edges); the entity vector averages the tokens
// of name, description and synonyms. Candidates with either vector absent
// score weight * 0 and sort after all scored candidates; ties break by
// ascending qid. Candidates with score < threshold are flagged.
CandidateSet rank_weighted_cosine(CandidateSet set, const EmbeddingStore& embeddings,
                                  double threshold);

// KB-richness ranking: score = num_links + num_relations, descending, ties
// by ascending qid.
CandidateSet rank_baseline(CandidateSet set);

enum class LinkMode { weighted_cosine, baseline };

std::string to_string(LinkMode mode);
LinkMode link_mode_from_string(const std::string& name);

struct LinkConfig {
  LinkMode mode = LinkMode::weighted_cosine;
  double threshold = 0.0;
  int context_window = 5;
  int max_subngram = 3;
};

// Links every term annotation of the document: generate, rank per mode, emit
// the top candidate's qid (nullopt when the set is empty or, in
// weighted_cosine mode, the top score is below the threshold). Each
// annotation also records the ranked candidate qids. `embeddings` may be
// null in baseline mode.
std::vector<LinkAnnotation> link(const AnnotatedDocument& doc, const KBStore& kb,
                                 const EmbeddingStore* embeddings, const LinkConfig& config);

}  // namespace termlink

#endif  // TERMLINK_LINKER_HPP_
