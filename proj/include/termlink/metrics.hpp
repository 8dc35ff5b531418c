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

#ifndef TERMLINK_METRICS_HPP_
#define TERMLINK_METRICS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "termlink/corpus.hpp"

namespace termlink {

// 0/0 is defined as 0 for every precision, recall, F1 and accuracy here.

struct LabelScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::int64_t support = 0;  // gold instances of this label
};

struct MetricsReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::map<std::string, LabelScore> per_label;
  std::int64_t support = 0;          // gold units
  std::int64_t predicted = 0;        // predicted units
  std::int64_t true_positives = 0;
};

struct LinkingReport {
  double accuracy = 0.0;
  double linked_accuracy = 0.0;
  double top_k_accuracy = 0.0;
  double averaged_candidates = 0.0;
  double linked_averaged_candidates = 0.0;
  std::int64_t n_all_entities = 0;
  std::int64_t n_all_linked_entities = 0;
};

enum class AverageMode { macro, micro };

// Span-identity scoring: a predicted term counts iff its token range equals
// a gold range in the same document. Documents are paired by id; a pred
// document whose id or text is unknown raises an error.
MetricsReport term_metrics_exact(std::span<const AnnotatedDocument> gold,
                                 std::span<const AnnotatedDocument> pred);

// Token-level binary scoring: each token is in-term (covered by any term
// span) or out; P/R/F1 over corpus token counts.
MetricsReport term_metrics_partial(std::span<const AnnotatedDocument> gold,
                                   std::span<const AnnotatedDocument> pred);

// Per-label P/R/F1 where an instance matches iff document, both argument
// ranges and the label agree. Only instances whose label is in `labels` are
// evaluated. The overall row aggregates per the mode (macro by default).
MetricsReport relation_metrics(std::span<const AnnotatedDocument> gold,
                               std::span<const AnnotatedDocument> pred,
                               const std::vector<RelationLabel>& labels,
                               AverageMode mode = AverageMode::macro);

// One gold term with its gold link (nullopt = not in the KB), the candidate
// set produced for it, and the prediction.
struct LinkingExample {
  std::optional<std::string> gold_qid;
  std::vector<std::string> candidate_qids;
  std::optional<std::string> pred_qid;
};

// accuracy            = correct / all            (NONE == NONE counts)
// linked_accuracy     = correct over gold-linked terms only
// averaged_candidates = sum |candidates| / all
// linked_averaged_candidates = sum |candidates| over gold-linked / linked
// top_k_accuracy      = gold-linked terms whose candidate set contains the
//                       gold entity / linked (k = set size)
LinkingReport linking_metrics(std::span<const LinkingExample> examples);

// Builds LinkingExamples from two corpora: for every gold link, the pred
// document must carry a link with the same range; its candidates field
// supplies the candidate set. Mismatched or missing documents/links raise.
std::vector<LinkingExample> collect_linking_examples(std::span<const AnnotatedDocument> gold,
                                                     std::span<const AnnotatedDocument> pred);

}  // namespace termlink

#endif  // TERMLINK_METRICS_HPP_
