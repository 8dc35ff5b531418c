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

#ifndef TERMLINK_DICTIONARY_HPP_
#define TERMLINK_DICTIONARY_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "termlink/corpus.hpp"

namespace termlink {

// Corpus statistics of one n-gram. tf is the total occurrence count across
// the corpus, df the number of documents containing it at least once.
struct NGramStat {
  std::string ngram;  // space-joined (normalized) tokens
  std::int64_t tf = 0;
  std::int64_t df = 0;
  double tfidf = 0.0;

  bool operator==(const NGramStat&) const = default;
};

struct MineOptions {
  // Count n-grams of token norms (default) or of raw surfaces.
  bool over_norms = true;
};

// Collects every contiguous n-gram (n in n_values) that stays inside one
// sentence and contains no punctuation-only token. Exact counts; the result
// is sorted lexicographically by ngram. n_values must be within 1..6 and
// the corpus non-empty.
std::vector<NGramStat> mine_ngrams(std::span<const Document> corpus,
                                   const std::set<int>& n_values,
                                   const MineOptions& options = {});

// tfidf = tf * ln(corpus_size / df); sorted by tfidf descending, ties by
// ngram ascending (bytewise). Throws when df == 0 or df > corpus_size.
std::vector<NGramStat> rank_by_tfidf(std::vector<NGramStat> stats, std::int64_t corpus_size);

// TSV rows "ngram\ttf\tdf\ttfidf", one per stat, in the given order.
std::string ngram_stats_to_tsv(std::span<const NGramStat> stats);

// A set of normalized term entries for gazetteer tagging. Entries are
// space-joined token norms with 1..max_ngram tokens.
class TermDictionary {
 public:
  TermDictionary() = default;
  explicit TermDictionary(int max_ngram) : max_ngram_(max_ngram) {}

  // UTF-8 text file, one term per line (LF or CRLF, optional BOM). Lines are
  // tokenized and normalized; duplicates after normalization merge; lines
  // with more than max_ngram tokens are skipped (counted in skipped_lines).
  static TermDictionary load(const std::string& path,
                             const Normalizer& normalizer = default_normalizer(),
                             int max_ngram = 4);
  static TermDictionary from_terms(std::span<const std::string> raw_terms,
                                   const Normalizer& normalizer = default_normalizer(),
                                   int max_ngram = 4);

  // One entry per line, LF-terminated, sorted bytewise.
  void save(const std::string& path) const;

  void insert_raw(const std::string& raw_term, const Normalizer& normalizer);
  // Inserts an already-normalized entry. No-op for empty or over-long ones.
  void insert_normalized(const std::string& entry);

  bool contains(const std::string& normalized_phrase) const {
    return entries_.count(normalized_phrase) > 0;
  }

  static TermDictionary merge(const TermDictionary& a, const TermDictionary& b);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int max_ngram() const { return max_ngram_; }
  // Longest entry actually present, in tokens (0 for an empty dictionary).
  int max_token_count() const;
  std::int64_t raw_lines() const { return raw_lines_; }
  std::int64_t skipped_lines() const { return skipped_lines_; }

  // entry -> token count, ordered bytewise.
  const std::map<std::string, int>& entries() const { return entries_; }

 private:
  std::map<std::string, int> entries_;
  int max_ngram_ = 4;
  std::int64_t raw_lines_ = 0;
  std::int64_t skipped_lines_ = 0;
};

}  // namespace termlink

#endif  // TERMLINK_DICTIONARY_HPP_
