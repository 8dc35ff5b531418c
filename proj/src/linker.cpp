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

#include "termlink/linker.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace termlink {

namespace {

std::vector<std::string> mention_norms(const Mention& mention) {
  std::vector<std::string> norms;
  for (int i = mention.range.first; i <= mention.range.last; ++i) {
    norms.push_back(mention.document->tokens[static_cast<std::size_t>(i)].norm);
  }
  return norms;
}

std::string join(std::span<const std::string> tokens, std::size_t first, std::size_t last) {
  std::string out;
  for (std::size_t i = first; i <= last; ++i) {
    if (!out.empty()) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

}  // namespace

CandidateSet generate_candidates(const Mention& mention, const KBStore& kb, int max_subngram,
                                 bool include_subngrams) {
  if (!mention.document) throw std::invalid_argument("generate_candidates: mention has no document");
  CandidateSet set;
  set.mention = mention;

  const std::vector<std::string> norms = mention_norms(mention);
  const int n_all = static_cast<int>(norms.size());
  if (n_all == 0) return set;

  // Window lengths by descending size: the full mention, then the sub-n-grams.
  std::vector<int> lengths;
  lengths.push_back(n_all);
  if (include_subngrams) {
    for (int len = std::min(max_subngram, n_all); len >= 1; --len) {
      if (len != n_all) lengths.push_back(len);
    }
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<int>());

  std::set<std::string> seen_qids;
  for (int len : lengths) {
    for (int start = 0; start + len <= n_all; ++start) {
      std::string phrase = join(norms, static_cast<std::size_t>(start),
                                static_cast<std::size_t>(start + len - 1));
      for (const EntityRecord* entity : kb.lookup_exact(phrase)) {
        if (entity->is_disambiguation) continue;
        if (!seen_qids.insert(entity->qid).second) continue;
        Candidate candidate;
        candidate.entity = entity;
        candidate.matched_via = phrase;
        candidate.n_matching = len;
        candidate.n_all = n_all;
        candidate.weight = static_cast<double>(len) / static_cast<double>(n_all);
        set.candidates.push_back(std::move(candidate));
      }
    }
  }
  return set;
}

CandidateSet rank_weighted_cosine(CandidateSet set, const EmbeddingStore& embeddings,
                                  double threshold) {
  if (threshold < -1.0 || threshold > 1.0) {
    throw std::invalid_argument("rank_weighted_cosine: threshold must be in [-1, 1]");
  }
  const Document& doc = *set.mention.document;

  // Mention vector over the span plus the context window, clipped at edges.
  std::vector<std::string> context_tokens;
  int first = std::max(0, set.mention.range.first - set.mention.context_window);
  int last = std::min(static_cast<int>(doc.tokens.size()) - 1,
                      set.mention.range.last + set.mention.context_window);
  for (int i = first; i <= last; ++i) {
    context_tokens.push_back(doc.tokens[static_cast<std::size_t>(i)].norm);
  }
  std::optional<std::vector<double>> mention_vec = embed_phrase(embeddings, context_tokens);

  for (Candidate& candidate : set.candidates) {
    std::vector<std::string> entity_tokens;
    auto append_phrase = [&](const std::string& text) {
      Document parsed = tokenize(text);
      for (const Token& tok : parsed.tokens) entity_tokens.push_back(tok.norm);
    };
    append_phrase(candidate.entity->name);
    append_phrase(candidate.entity->description);
    for (const std::string& synonym : candidate.entity->synonyms) append_phrase(synonym);
    std::optional<std::vector<double>> entity_vec = embed_phrase(embeddings, entity_tokens);

    if (mention_vec && entity_vec) {
      candidate.raw_similarity = cosine_similarity(*mention_vec, *entity_vec);
      candidate.score = *candidate.raw_similarity * candidate.weight;
    } else {
      candidate.raw_similarity = std::nullopt;
      candidate.score = candidate.weight * 0.0;
    }
    candidate.below_threshold = candidate.score < threshold;
  }

  std::stable_sort(set.candidates.begin(), set.candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     bool a_scored = a.raw_similarity.has_value();
                     bool b_scored = b.raw_similarity.has_value();
                     if (a_scored != b_scored) return a_scored;
                     if (a.score != b.score) return a.score > b.score;
                     return qid_less(a.entity->qid, b.entity->qid);
                   });
  return set;
}

CandidateSet rank_baseline(CandidateSet set) {
  for (Candidate& candidate : set.candidates) {
    candidate.raw_similarity = std::nullopt;
    candidate.score =
        static_cast<double>(candidate.entity->num_links + candidate.entity->num_relations);
    candidate.below_threshold = false;
  }
  std::stable_sort(set.candidates.begin(), set.candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     if (a.score != b.score) return a.score > b.score;
                     return qid_less(a.entity->qid, b.entity->qid);
                   });
  return set;
}

std::string to_string(LinkMode mode) {
  return mode == LinkMode::weighted_cosine ? "weighted_cosine" : "baseline";
}

LinkMode link_mode_from_string(const std::string& name) {
  if (name == "weighted_cosine") return LinkMode::weighted_cosine;
  if (name == "baseline") return LinkMode::baseline;
  throw std::runtime_error("unknown link mode: '" + name + "' (weighted_cosine|baseline)");
}

std::vector<LinkAnnotation> link(const AnnotatedDocument& doc, const KBStore& kb,
                                 const EmbeddingStore* embeddings, const LinkConfig& config) {
  if (config.mode == LinkMode::weighted_cosine && !embeddings) {
    throw std::invalid_argument("link: weighted_cosine mode requires an embedding store");
  }

  std::vector<LinkAnnotation> out;
  out.reserve(doc.terms.size());
  for (const TermAnnotation& term : doc.terms) {
    Mention mention{&doc.document, term.range, config.context_window};
    // The baseline compares only the full input string with entity names.
    CandidateSet set = generate_candidates(mention, kb, config.max_subngram,
                                           config.mode == LinkMode::weighted_cosine);
    set = config.mode == LinkMode::weighted_cosine
              ? rank_weighted_cosine(std::move(set), *embeddings, config.threshold)
              : rank_baseline(std::move(set));

    LinkAnnotation link_ann;
    link_ann.range = term.range;
    for (const Candidate& candidate : set.candidates) {
      link_ann.candidate_qids.push_back(candidate.entity->qid);
    }
    if (!set.candidates.empty() && !set.candidates.front().below_threshold) {
      link_ann.qid = set.candidates.front().entity->qid;
    }
    out.push_back(std::move(link_ann));
  }
  return out;
}

}  // namespace termlink
