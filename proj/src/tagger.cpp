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

#include "termlink/tagger.hpp"

#include <algorithm>
#include <stdexcept>

namespace termlink {

std::vector<TermAnnotation> DictionaryTagger::tag(const Document& doc) const {
  return dictionary_tag(doc, *dict_);
}

std::vector<TermAnnotation> dictionary_tag(const Document& doc, const TermDictionary& dict) {
  std::vector<TermAnnotation> out;
  const int longest = dict.max_token_count();
  if (longest == 0) return out;

  for (const SentenceSpan& sentence : doc.sentences) {
    int i = sentence.first_token;
    while (i <= sentence.last_token) {
      int best_len = 0;
      int max_len = std::min(longest, sentence.last_token - i + 1);
      std::string phrase;
      for (int len = max_len; len >= 1; --len) {
        phrase.clear();
        for (int k = i; k < i + len; ++k) {
          if (!phrase.empty()) phrase.push_back(' ');
          phrase += doc.tokens[static_cast<std::size_t>(k)].norm;
        }
        if (dict.contains(phrase)) {
          best_len = len;
          break;
        }
      }
      if (best_len > 0) {
        out.push_back(TermAnnotation{{i, i + best_len - 1}, AnnotationSource::dictionary});
        i += best_len;
      } else {
        ++i;
      }
    }
  }
  return out;
}

RepairOptions::RepairOptions() : preposition_stoplist(default_preposition_stoplist()) {}

const std::set<std::string>& default_preposition_stoplist() {
  static const std::set<std::string> stoplist = {
      "в",  "на", "с",  "по",  "для", "из",  "к",  "о",  "об",
      "от", "при", "у", "за",  "под", "над", "без", "до", "через",
  };
  return stoplist;
}

namespace {

bool is_latin_word(const Document& doc, int index) {
  return doc.tokens[static_cast<std::size_t>(index)].is_latin_script;
}

bool occupied(const std::vector<TermAnnotation>& anns, std::size_t self, int token_index) {
  for (std::size_t i = 0; i < anns.size(); ++i) {
    if (i != self && anns[i].range.contains(token_index)) return true;
  }
  return false;
}

}  // namespace

std::vector<TermAnnotation> repair_boundaries(const Document& doc,
                                              std::vector<TermAnnotation> annotations,
                                              const RepairOptions& options) {
  // Rule (a): strip leading prepositions.
  std::vector<TermAnnotation> kept;
  kept.reserve(annotations.size());
  for (TermAnnotation ann : annotations) {
    while (ann.range.first <= ann.range.last &&
           options.preposition_stoplist.count(
               doc.tokens[static_cast<std::size_t>(ann.range.first)].norm)) {
      ++ann.range.first;
    }
    if (ann.range.first <= ann.range.last) kept.push_back(ann);
  }

  std::sort(kept.begin(), kept.end(),
            [](const TermAnnotation& a, const TermAnnotation& b) { return a.range < b.range; });

  // Rule (b): absorb trailing Latin tokens and "( WORD )" groups.
  for (std::size_t i = 0; i < kept.size(); ++i) {
    TermAnnotation& ann = kept[i];
    int sentence = doc.sentence_of(ann.range.last);
    if (sentence < 0) continue;
    int sentence_end = doc.sentences[static_cast<std::size_t>(sentence)].last_token;
    bool extended = true;
    while (extended) {
      extended = false;
      int next = ann.range.last + 1;
      if (next <= sentence_end && !occupied(kept, i, next) && is_latin_word(doc, next)) {
        ann.range.last = next;
        extended = true;
        continue;
      }
      // "( WORD )" right after the term.
      if (next + 2 <= sentence_end &&
          doc.tokens[static_cast<std::size_t>(next)].surface == "(" &&
          is_latin_word(doc, next + 1) &&
          doc.tokens[static_cast<std::size_t>(next + 2)].surface == ")" &&
          !occupied(kept, i, next) && !occupied(kept, i, next + 1) &&
          !occupied(kept, i, next + 2)) {
        ann.range.last = next + 2;
        extended = true;
      }
    }
  }
  return kept;
}

std::string to_string(MergePolicy policy) {
  switch (policy) {
    case MergePolicy::union_prefer_longer: return "union_prefer_longer";
    case MergePolicy::dictionary_priority: return "dictionary_priority";
    case MergePolicy::model_priority: return "model_priority";
  }
  return "union_prefer_longer";
}

MergePolicy merge_policy_from_string(const std::string& name) {
  if (name == "union_prefer_longer") return MergePolicy::union_prefer_longer;
  if (name == "dictionary_priority") return MergePolicy::dictionary_priority;
  if (name == "model_priority") return MergePolicy::model_priority;
  throw std::runtime_error("unknown merge policy: '" + name + "'");
}

namespace {

struct MergeCandidate {
  TermAnnotation ann;
  bool from_a = false;
  bool duplicate_of_other_source = false;
};

int policy_rank(const MergeCandidate& c, MergePolicy policy) {
  if (policy == MergePolicy::dictionary_priority) {
    return c.ann.source == AnnotationSource::dictionary ? 0 : 1;
  }
  if (policy == MergePolicy::model_priority) {
    return c.ann.source == AnnotationSource::model ? 0 : 1;
  }
  return 0;
}

}  // namespace

std::vector<TermAnnotation> merge_annotations(std::span<const TermAnnotation> a,
                                              std::span<const TermAnnotation> b,
                                              MergePolicy policy) {
  std::vector<MergeCandidate> candidates;
  candidates.reserve(a.size() + b.size());
  for (const TermAnnotation& ann : a) candidates.push_back({ann, true, false});
  for (const TermAnnotation& ann : b) {
    // Exact-duplicate ranges collapse into the copy from a.
    auto dup = std::find_if(candidates.begin(), candidates.end(), [&](const MergeCandidate& c) {
      return c.from_a && c.ann.range == ann.range;
    });
    if (dup != candidates.end()) {
      if (dup->ann.source != ann.source) dup->duplicate_of_other_source = true;
      continue;
    }
    candidates.push_back({ann, false, false});
  }

  // Priority order; earlier candidates win overlap conflicts.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const MergeCandidate& x, const MergeCandidate& y) {
                     int rx = policy_rank(x, policy), ry = policy_rank(y, policy);
                     if (rx != ry) return rx < ry;
                     int lx = x.ann.range.length(), ly = y.ann.range.length();
                     if (lx != ly) return lx > ly;
                     if (x.from_a != y.from_a) return x.from_a;
                     return x.ann.range < y.ann.range;
                   });

  std::vector<MergeCandidate> accepted;
  for (const MergeCandidate& c : candidates) {
    bool displaced = false;
    bool overlaps_accepted = false;
    for (const MergeCandidate& acc : accepted) {
      if (acc.ann.range.overlaps(c.ann.range)) {
        overlaps_accepted = true;
        break;
      }
    }
    if (overlaps_accepted) continue;
    // Does this span displace anything from the other list?
    std::span<const TermAnnotation> other = c.from_a ? b : a;
    for (const TermAnnotation& o : other) {
      if (o.range != c.ann.range && o.range.overlaps(c.ann.range)) {
        displaced = true;
        break;
      }
    }
    MergeCandidate out = c;
    if (c.duplicate_of_other_source || displaced) out.ann.source = AnnotationSource::merged;
    accepted.push_back(out);
  }

  std::vector<TermAnnotation> result;
  result.reserve(accepted.size());
  for (const MergeCandidate& c : accepted) result.push_back(c.ann);
  std::sort(result.begin(), result.end(),
            [](const TermAnnotation& x, const TermAnnotation& y) { return x.range < y.range; });
  return result;
}

WeakSupervisionResult run_weak_supervision(std::span<const Document> corpus,
                                           const TermDictionary& dict, TaggerInterface& tagger,
                                           const WeakSupervisionConfig& config) {
  if (config.iterations < 1) {
    throw std::invalid_argument("run_weak_supervision: iterations must be >= 1");
  }

  auto dictionary_pass = [&](const Document& doc) {
    std::vector<TermAnnotation> anns = dictionary_tag(doc, dict);
    if (config.repair) anns = repair_boundaries(doc, std::move(anns));
    return anns;
  };

  WeakSupervisionResult result;
  result.corpus.reserve(corpus.size());
  for (const Document& doc : corpus) {
    AnnotatedDocument ann;
    ann.document = doc;
    ann.terms = dictionary_pass(doc);
    result.corpus.push_back(std::move(ann));
  }

  try {
    tagger.train(result.corpus);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("weak supervision aborted at iteration 0 (initial training): ") +
                             e.what());
  }

  for (int iteration = 1; iteration <= config.iterations; ++iteration) {
    WeakSupervisionStats stats;
    stats.iteration = iteration;
    try {
      for (AnnotatedDocument& ann : result.corpus) {
        std::vector<TermAnnotation> model_anns = tagger.tag(ann.document);
        if (config.repair) model_anns = repair_boundaries(ann.document, std::move(model_anns));
        std::vector<TermAnnotation> dict_anns = dictionary_pass(ann.document);
        stats.model_spans += static_cast<std::int64_t>(model_anns.size());
        stats.dictionary_spans += static_cast<std::int64_t>(dict_anns.size());
        ann.terms = merge_annotations(model_anns, dict_anns, config.merge_policy);
        stats.merged_spans += static_cast<std::int64_t>(ann.terms.size());
      }
      tagger.train(result.corpus);
    } catch (const std::exception& e) {
      throw std::runtime_error("weak supervision aborted at iteration " +
                               std::to_string(iteration) + ": " + e.what());
    }
    result.stats.push_back(stats);
  }
  return result;
}

}  // namespace termlink
