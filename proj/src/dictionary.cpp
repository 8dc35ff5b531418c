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

#include "termlink/dictionary.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace termlink {

std::vector<NGramStat> mine_ngrams(std::span<const Document> corpus,
                                   const std::set<int>& n_values, const MineOptions& options) {
  if (corpus.empty()) throw std::invalid_argument("mine_ngrams: empty corpus");
  for (int n : n_values) {
    if (n < 1 || n > 6) {
      throw std::invalid_argument("mine_ngrams: n must be within 1..6, got " + std::to_string(n));
    }
  }

  std::map<std::string, NGramStat> stats;
  for (const Document& doc : corpus) {
    std::set<std::string> seen_in_doc;
    for (const SentenceSpan& sentence : doc.sentences) {
      for (int n : n_values) {
        for (int start = sentence.first_token; start + n - 1 <= sentence.last_token; ++start) {
          bool ok = true;
          std::string key;
          for (int k = start; k < start + n; ++k) {
            const Token& tok = doc.tokens[static_cast<std::size_t>(k)];
            if (!tok.is_word()) {
              ok = false;
              break;
            }
            if (!key.empty()) key.push_back(' ');
            key += options.over_norms ? tok.norm : tok.surface;
          }
          if (!ok) continue;
          NGramStat& stat = stats[key];
          if (stat.ngram.empty()) stat.ngram = key;
          stat.tf += 1;
          if (seen_in_doc.insert(key).second) stat.df += 1;
        }
      }
    }
  }

  std::vector<NGramStat> out;
  out.reserve(stats.size());
  for (auto& [key, stat] : stats) out.push_back(std::move(stat));
  return out;  // std::map iteration is already lexicographic
}

std::vector<NGramStat> rank_by_tfidf(std::vector<NGramStat> stats, std::int64_t corpus_size) {
  if (corpus_size < 1) throw std::invalid_argument("rank_by_tfidf: corpus_size must be >= 1");
  for (NGramStat& stat : stats) {
    if (stat.df == 0) throw std::invalid_argument("rank_by_tfidf: df == 0 for '" + stat.ngram + "'");
    if (stat.df > corpus_size) {
      throw std::invalid_argument("rank_by_tfidf: df exceeds corpus_size for '" + stat.ngram + "'");
    }
    stat.tfidf = static_cast<double>(stat.tf) *
                 std::log(static_cast<double>(corpus_size) / static_cast<double>(stat.df));
  }
  std::stable_sort(stats.begin(), stats.end(), [](const NGramStat& a, const NGramStat& b) {
    if (a.tfidf != b.tfidf) return a.tfidf > b.tfidf;
    return a.ngram < b.ngram;
  });
  return stats;
}

std::string ngram_stats_to_tsv(std::span<const NGramStat> stats) {
  std::string out;
  char buf[64];
  for (const NGramStat& stat : stats) {
    out += stat.ngram;
    out.push_back('\t');
    out += std::to_string(stat.tf);
    out.push_back('\t');
    out += std::to_string(stat.df);
    out.push_back('\t');
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), stat.tfidf);
    out.append(buf, end);
    out.push_back('\n');
  }
  return out;
}

TermDictionary TermDictionary::load(const std::string& path, const Normalizer& normalizer,
                                    int max_ngram) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open dictionary '" + path + "'");
  TermDictionary dict(max_ngram);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first) {
      if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
      first = false;
    }
    if (line.empty()) continue;
    dict.insert_raw(line, normalizer);
  }
  return dict;
}

TermDictionary TermDictionary::from_terms(std::span<const std::string> raw_terms,
                                          const Normalizer& normalizer, int max_ngram) {
  TermDictionary dict(max_ngram);
  for (const std::string& term : raw_terms) dict.insert_raw(term, normalizer);
  return dict;
}

void TermDictionary::insert_raw(const std::string& raw_term, const Normalizer& normalizer) {
  ++raw_lines_;
  Document doc = tokenize(raw_term, normalizer);
  if (doc.tokens.empty()) {
    ++skipped_lines_;
    return;
  }
  int count = static_cast<int>(doc.tokens.size());
  if (count > max_ngram_) {
    ++skipped_lines_;
    return;
  }
  entries_.emplace(doc.norm_phrase({0, count - 1}), count);
}

void TermDictionary::insert_normalized(const std::string& entry) {
  if (entry.empty()) return;
  int count = 1 + static_cast<int>(std::count(entry.begin(), entry.end(), ' '));
  if (count > max_ngram_) return;
  entries_.emplace(entry, count);
}

void TermDictionary::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open dictionary '" + path + "' for writing");
  for (const auto& [entry, count] : entries_) out << entry << '\n';
  if (!out) throw std::runtime_error("failed writing dictionary '" + path + "'");
}

TermDictionary TermDictionary::merge(const TermDictionary& a, const TermDictionary& b) {
  TermDictionary out(std::max(a.max_ngram_, b.max_ngram_));
  out.entries_ = a.entries_;
  out.entries_.insert(b.entries_.begin(), b.entries_.end());
  return out;
}

int TermDictionary::max_token_count() const {
  int max_count = 0;
  for (const auto& [entry, count] : entries_) max_count = std::max(max_count, count);
  return max_count;
}

}  // namespace termlink
