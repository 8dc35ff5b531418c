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

#include "termlink/relations.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace termlink {

namespace {

Pattern parse_pattern_line(const std::string& line, const Normalizer& normalizer) {
  std::size_t colon = line.find(':');
  if (colon == std::string::npos) throw std::runtime_error("pattern line has no ':' separator");

  std::istringstream head(line.substr(0, colon));
  std::string label_name, flag;
  head >> label_name >> flag;
  if (label_name.empty()) throw std::runtime_error("pattern line has no label");

  Pattern pattern;
  pattern.label = relation_label_from_string(label_name);
  if (pattern.label == RelationLabel::no_relation) {
    throw std::runtime_error("patterns cannot carry NO-RELATION");
  }
  if (flag == "bidir") {
    pattern.directional = false;
  } else if (!flag.empty()) {
    throw std::runtime_error("unknown pattern flag '" + flag + "'");
  }

  std::istringstream body(line.substr(colon + 1));
  std::string element;
  int arg1_count = 0, arg2_count = 0;
  while (body >> element) {
    PatternElement pe;
    if (element == "ARG1") {
      pe.kind = PatternElement::Kind::arg1;
      ++arg1_count;
    } else if (element == "ARG2") {
      pe.kind = PatternElement::Kind::arg2;
      ++arg2_count;
    } else if (element[0] == '*') {
      pe.kind = PatternElement::Kind::wildcard;
      try {
        std::size_t used = 0;
        pe.max_gap = std::stoi(element.substr(1), &used);
        if (used != element.size() - 1 || pe.max_gap < 0) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::runtime_error("bad wildcard '" + element + "' (expected *k with k >= 0)");
      }
    } else {
      pe.kind = PatternElement::Kind::literal;
      pe.literal = normalizer.normalize(element);
    }
    pattern.elements.push_back(std::move(pe));
  }
  if (arg1_count != 1 || arg2_count != 1) {
    throw std::runtime_error("pattern must contain exactly one ARG1 and one ARG2");
  }
  return pattern;
}

// Does elements[e..] align with sentence tokens starting at `pos`?
// arg1/arg2 give the concrete slot spans; `used1`/`used2` guard against the
// wrong starting offset for each slot.
bool match_from(const Document& doc, std::span<const PatternElement> elements, std::size_t e,
                int pos, int sentence_end, const TokenRange& arg1, const TokenRange& arg2) {
  if (e == elements.size()) return true;
  const PatternElement& pe = elements[e];
  switch (pe.kind) {
    case PatternElement::Kind::arg1:
      if (pos != arg1.first) return false;
      return match_from(doc, elements, e + 1, arg1.last + 1, sentence_end, arg1, arg2);
    case PatternElement::Kind::arg2:
      if (pos != arg2.first) return false;
      return match_from(doc, elements, e + 1, arg2.last + 1, sentence_end, arg1, arg2);
    case PatternElement::Kind::literal:
      if (pos > sentence_end || doc.tokens[static_cast<std::size_t>(pos)].norm != pe.literal) {
        return false;
      }
      return match_from(doc, elements, e + 1, pos + 1, sentence_end, arg1, arg2);
    case PatternElement::Kind::wildcard:
      for (int gap = 0; gap <= pe.max_gap && pos + gap <= sentence_end + 1; ++gap) {
        if (match_from(doc, elements, e + 1, pos + gap, sentence_end, arg1, arg2)) return true;
      }
      return false;
  }
  return false;
}

bool pattern_matches(const Document& doc, const Pattern& pattern, const TokenRange& arg1,
                     const TokenRange& arg2, int sentence_index) {
  const SentenceSpan& sentence = doc.sentences[static_cast<std::size_t>(sentence_index)];
  for (int start = sentence.first_token; start <= sentence.last_token; ++start) {
    if (match_from(doc, pattern.elements, 0, start, sentence.last_token, arg1, arg2)) return true;
  }
  return false;
}

int gap_tokens(const TokenRange& a, const TokenRange& b) {
  int gap = std::max(a.first, b.first) - std::min(a.last, b.last) - 1;
  return std::max(gap, 0);
}

std::vector<TokenRange> sorted_terms(const AnnotatedDocument& doc) {
  std::vector<TokenRange> terms;
  terms.reserve(doc.terms.size());
  for (const TermAnnotation& t : doc.terms) terms.push_back(t.range);
  std::sort(terms.begin(), terms.end());
  return terms;
}

bool has_gold(const AnnotatedDocument& doc, const TokenRange& arg1, const TokenRange& arg2) {
  for (const RelationInstance& rel : doc.relations) {
    if (rel.arg1 == arg1 && rel.arg2 == arg2) return true;
  }
  return false;
}

}  // namespace

std::vector<Pattern> parse_patterns(const std::string& text, const Normalizer& normalizer) {
  std::vector<Pattern> patterns;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      patterns.push_back(parse_pattern_line(line, normalizer));
    } catch (const std::exception& e) {
      throw std::runtime_error("pattern line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return patterns;
}

std::vector<Pattern> load_patterns(const std::string& path, const Normalizer& normalizer) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open pattern file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_patterns(buffer.str(), normalizer);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::vector<std::pair<TokenRange, TokenRange>> candidate_pairs(
    const AnnotatedDocument& doc, const PairSamplingOptions& options) {
  if (options.sample_rate < 0.0 || options.sample_rate > 1.0) {
    throw std::invalid_argument("candidate_pairs: sample_rate must be in [0, 1]");
  }
  if (options.max_distance < 0) {
    throw std::invalid_argument("candidate_pairs: max_distance must be >= 0");
  }

  const std::vector<TokenRange> terms = sorted_terms(doc);
  const bool sampling = options.sample_rate > 0.0 && options.sample_rate < 1.0;
  std::mt19937 rng(options.seed);
  const auto threshold =
      static_cast<std::uint64_t>(options.sample_rate * 4294967296.0);  // rate * 2^32

  std::vector<std::pair<TokenRange, TokenRange>> pairs;
  for (const TokenRange& arg1 : terms) {
    std::optional<int> s1 = doc.document.sentence_of(arg1);
    if (!s1) continue;
    for (const TokenRange& arg2 : terms) {
      if (arg1 == arg2 || arg1.overlaps(arg2)) continue;
      std::optional<int> s2 = doc.document.sentence_of(arg2);
      if (!s2 || *s1 != *s2) continue;
      if (has_gold(doc, arg1, arg2)) {
        pairs.emplace_back(arg1, arg2);
        continue;
      }
      if (gap_tokens(arg1, arg2) >= options.max_distance) continue;
      if (options.sample_rate <= 0.0) continue;
      if (sampling && static_cast<std::uint64_t>(rng()) >= threshold) continue;
      pairs.emplace_back(arg1, arg2);
    }
  }
  return pairs;
}

RelationLabel classify(const Document& doc, const TokenRange& arg1, const TokenRange& arg2,
                       std::span<const Pattern> patterns) {
  std::optional<int> s1 = doc.sentence_of(arg1);
  std::optional<int> s2 = doc.sentence_of(arg2);
  if (!s1 || !s2 || *s1 != *s2) {
    throw std::invalid_argument("classify: arguments are not within one sentence");
  }
  for (const Pattern& pattern : patterns) {
    if (pattern_matches(doc, pattern, arg1, arg2, *s1)) return pattern.label;
    if (!pattern.directional && pattern_matches(doc, pattern, arg2, arg1, *s1)) {
      return pattern.label;
    }
  }
  return RelationLabel::no_relation;
}

std::vector<RelationInstance> extract_all(const AnnotatedDocument& doc,
                                          std::span<const Pattern> patterns) {
  std::vector<RelationInstance> out;
  PairSamplingOptions all;
  for (const auto& [arg1, arg2] : candidate_pairs(doc, all)) {
    RelationLabel label = classify(doc.document, arg1, arg2, patterns);
    if (label == RelationLabel::no_relation) continue;
    int sentence = doc.document.sentence_of(arg1).value();
    out.push_back(RelationInstance{arg1, arg2, label, sentence});
  }
  return out;
}

std::vector<RelationInstance> build_dataset(const AnnotatedDocument& doc,
                                            const PairSamplingOptions& options) {
  std::vector<RelationInstance> out;
  for (const auto& [arg1, arg2] : candidate_pairs(doc, options)) {
    RelationInstance instance;
    instance.arg1 = arg1;
    instance.arg2 = arg2;
    instance.label = RelationLabel::no_relation;
    instance.sentence_index = doc.document.sentence_of(arg1).value();
    for (const RelationInstance& rel : doc.relations) {
      if (rel.arg1 == arg1 && rel.arg2 == arg2) {
        instance.label = rel.label;
        break;
      }
    }
    out.push_back(instance);
  }
  return out;
}

}  // namespace termlink
