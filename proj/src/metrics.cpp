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

#include "termlink/metrics.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace termlink {

namespace {

double ratio(std::int64_t num, std::int64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

double f1_of(double p, double r) { return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0; }

// Pairs pred documents to gold documents by id, insisting on identical text
// and token layout.
std::vector<std::pair<const AnnotatedDocument*, const AnnotatedDocument*>> pair_documents(
    std::span<const AnnotatedDocument> gold, std::span<const AnnotatedDocument> pred) {
  std::map<std::string, const AnnotatedDocument*> by_id;
  for (const AnnotatedDocument& doc : pred) {
    if (!by_id.emplace(doc.document.id, &doc).second) {
      throw std::runtime_error("duplicate pred document id '" + doc.document.id + "'");
    }
  }
  std::vector<std::pair<const AnnotatedDocument*, const AnnotatedDocument*>> pairs;
  pairs.reserve(gold.size());
  for (const AnnotatedDocument& doc : gold) {
    auto it = by_id.find(doc.document.id);
    if (it == by_id.end()) {
      throw std::runtime_error("pred corpus is missing document '" + doc.document.id + "'");
    }
    const AnnotatedDocument* p = it->second;
    if (p->document.text != doc.document.text ||
        p->document.tokens.size() != doc.document.tokens.size()) {
      throw std::runtime_error("document '" + doc.document.id +
                               "' differs between gold and pred corpora");
    }
    pairs.emplace_back(&doc, p);
  }
  return pairs;
}

}  // namespace

MetricsReport term_metrics_exact(std::span<const AnnotatedDocument> gold,
                                 std::span<const AnnotatedDocument> pred) {
  MetricsReport report;
  for (const auto& [g, p] : pair_documents(gold, pred)) {
    std::set<TokenRange> gold_ranges;
    for (const TermAnnotation& term : g->terms) gold_ranges.insert(term.range);
    report.support += static_cast<std::int64_t>(gold_ranges.size());
    std::set<TokenRange> seen;
    for (const TermAnnotation& term : p->terms) {
      if (!seen.insert(term.range).second) continue;
      ++report.predicted;
      if (gold_ranges.count(term.range)) ++report.true_positives;
    }
  }
  report.precision = ratio(report.true_positives, report.predicted);
  report.recall = ratio(report.true_positives, report.support);
  report.f1 = f1_of(report.precision, report.recall);
  return report;
}

MetricsReport term_metrics_partial(std::span<const AnnotatedDocument> gold,
                                   std::span<const AnnotatedDocument> pred) {
  MetricsReport report;
  for (const auto& [g, p] : pair_documents(gold, pred)) {
    std::size_t n = g->document.tokens.size();
    std::vector<bool> in_gold(n, false), in_pred(n, false);
    for (const TermAnnotation& term : g->terms) {
      for (int i = term.range.first; i <= term.range.last; ++i) in_gold[static_cast<std::size_t>(i)] = true;
    }
    for (const TermAnnotation& term : p->terms) {
      for (int i = term.range.first; i <= term.range.last; ++i) in_pred[static_cast<std::size_t>(i)] = true;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (in_gold[i]) ++report.support;
      if (in_pred[i]) ++report.predicted;
      if (in_gold[i] && in_pred[i]) ++report.true_positives;
    }
  }
  report.precision = ratio(report.true_positives, report.predicted);
  report.recall = ratio(report.true_positives, report.support);
  report.f1 = f1_of(report.precision, report.recall);
  return report;
}

MetricsReport relation_metrics(std::span<const AnnotatedDocument> gold,
                               std::span<const AnnotatedDocument> pred,
                               const std::vector<RelationLabel>& labels, AverageMode mode) {
  if (labels.empty()) throw std::invalid_argument("relation_metrics: empty label set");
  std::set<RelationLabel> evaluated(labels.begin(), labels.end());

  struct Counts {
    std::int64_t tp = 0, predicted = 0, gold = 0;
  };
  std::map<RelationLabel, Counts> per_label;
  for (RelationLabel label : labels) per_label[label];

  using Key = std::tuple<std::string, TokenRange, TokenRange, RelationLabel>;
  for (const auto& [g, p] : pair_documents(gold, pred)) {
    std::set<Key> gold_set, pred_set;
    for (const RelationInstance& rel : g->relations) {
      if (!evaluated.count(rel.label)) continue;
      gold_set.insert({g->document.id, rel.arg1, rel.arg2, rel.label});
    }
    for (const RelationInstance& rel : p->relations) {
      if (!evaluated.count(rel.label)) continue;
      pred_set.insert({p->document.id, rel.arg1, rel.arg2, rel.label});
    }
    for (const Key& key : gold_set) ++per_label[std::get<3>(key)].gold;
    for (const Key& key : pred_set) {
      Counts& c = per_label[std::get<3>(key)];
      ++c.predicted;
      if (gold_set.count(key)) ++c.tp;
    }
  }

  MetricsReport report;
  std::int64_t total_tp = 0, total_pred = 0, total_gold = 0;
  double sum_p = 0.0, sum_r = 0.0, sum_f = 0.0;
  for (const auto& [label, counts] : per_label) {
    LabelScore score;
    score.precision = ratio(counts.tp, counts.predicted);
    score.recall = ratio(counts.tp, counts.gold);
    score.f1 = f1_of(score.precision, score.recall);
    score.support = counts.gold;
    report.per_label[to_string(label)] = score;
    total_tp += counts.tp;
    total_pred += counts.predicted;
    total_gold += counts.gold;
    sum_p += score.precision;
    sum_r += score.recall;
    sum_f += score.f1;
  }
  report.true_positives = total_tp;
  report.predicted = total_pred;
  report.support = total_gold;
  if (mode == AverageMode::macro) {
    double n = static_cast<double>(per_label.size());
    report.precision = sum_p / n;
    report.recall = sum_r / n;
    report.f1 = sum_f / n;
  } else {
    report.precision = ratio(total_tp, total_pred);
    report.recall = ratio(total_tp, total_gold);
    report.f1 = f1_of(report.precision, report.recall);
  }
  return report;
}

LinkingReport linking_metrics(std::span<const LinkingExample> examples) {
  LinkingReport report;
  report.n_all_entities = static_cast<std::int64_t>(examples.size());

  std::int64_t correct = 0, linked_correct = 0, correct_sets = 0;
  std::int64_t candidates_total = 0, linked_candidates_total = 0;
  for (const LinkingExample& ex : examples) {
    candidates_total += static_cast<std::int64_t>(ex.candidate_qids.size());
    if (ex.pred_qid == ex.gold_qid) ++correct;
    if (!ex.gold_qid.has_value()) continue;
    ++report.n_all_linked_entities;
    linked_candidates_total += static_cast<std::int64_t>(ex.candidate_qids.size());
    if (ex.pred_qid == ex.gold_qid) ++linked_correct;
    if (std::find(ex.candidate_qids.begin(), ex.candidate_qids.end(), *ex.gold_qid) !=
        ex.candidate_qids.end()) {
      ++correct_sets;
    }
  }
  report.accuracy = ratio(correct, report.n_all_entities);
  report.linked_accuracy = ratio(linked_correct, report.n_all_linked_entities);
  report.top_k_accuracy = ratio(correct_sets, report.n_all_linked_entities);
  report.averaged_candidates =
      report.n_all_entities == 0
          ? 0.0
          : static_cast<double>(candidates_total) / static_cast<double>(report.n_all_entities);
  report.linked_averaged_candidates =
      report.n_all_linked_entities == 0
          ? 0.0
          : static_cast<double>(linked_candidates_total) /
                static_cast<double>(report.n_all_linked_entities);
  return report;
}

std::vector<LinkingExample> collect_linking_examples(std::span<const AnnotatedDocument> gold,
                                                     std::span<const AnnotatedDocument> pred) {
  std::vector<LinkingExample> examples;
  for (const auto& [g, p] : pair_documents(gold, pred)) {
    std::map<TokenRange, const LinkAnnotation*> pred_links;
    for (const LinkAnnotation& link : p->links) pred_links.emplace(link.range, &link);
    for (const LinkAnnotation& gold_link : g->links) {
      auto it = pred_links.find(gold_link.range);
      if (it == pred_links.end()) {
        throw std::runtime_error("document '" + g->document.id +
                                 "': pred has no link for gold term [" +
                                 std::to_string(gold_link.range.first) + ", " +
                                 std::to_string(gold_link.range.last) + "]");
      }
      LinkingExample ex;
      ex.gold_qid = gold_link.qid;
      ex.pred_qid = it->second->qid;
      ex.candidate_qids = it->second->candidate_qids;
      examples.push_back(std::move(ex));
    }
  }
  return examples;
}

}  // namespace termlink
