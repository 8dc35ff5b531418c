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

#ifndef TERMLINK_CORPUS_HPP_
#define TERMLINK_CORPUS_HPP_

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "termlink/normalize.hpp"

namespace termlink {

// One token of a document. Offsets are code-point offsets into the document
// text; text[start, end) equals the surface.
struct Token {
  std::string surface;
  int start = 0;
  int end = 0;
  std::string norm;
  bool is_latin_script = false;

  // True when the surface contains at least one letter or digit.
  bool is_word() const;

  bool operator==(const Token&) const = default;
};

// Inclusive token-index range of one sentence.
struct SentenceSpan {
  int first_token = 0;
  int last_token = 0;

  bool operator==(const SentenceSpan&) const = default;
};

// Inclusive token-index range of an annotation.
struct TokenRange {
  int first = 0;
  int last = 0;

  int length() const { return last - first + 1; }
  bool overlaps(const TokenRange& other) const {
    return first <= other.last && other.first <= last;
  }
  bool contains(int token_index) const { return first <= token_index && token_index <= last; }

  auto operator<=>(const TokenRange&) const = default;
};

enum class AnnotationSource { dictionary, model, gold, merged };

std::string to_string(AnnotationSource source);
AnnotationSource annotation_source_from_string(const std::string& name);

// A BIO-labeled term occurrence. The labels are fully determined by the
// range: first covered token B-TERM, the rest I-TERM.
struct TermAnnotation {
  TokenRange range;
  AnnotationSource source = AnnotationSource::dictionary;

  std::vector<std::string> bio_labels() const;

  auto operator<=>(const TermAnnotation&) const = default;
};

enum class RelationLabel { compare, hyponym_of, no_relation, part_of, used_for };

std::string to_string(RelationLabel label);
RelationLabel relation_label_from_string(const std::string& name);
// The closed label set, in the fixed COMPARE..USED-FOR order.
const std::vector<RelationLabel>& all_relation_labels();

// An ordered pair of term spans with a relation label; both arguments lie
// in the sentence sentence_index.
struct RelationInstance {
  TokenRange arg1;
  TokenRange arg2;
  RelationLabel label = RelationLabel::no_relation;
  int sentence_index = 0;

  auto operator<=>(const RelationInstance&) const = default;
};

// A term span linked to a KB entity, or to nothing (qid == nullopt).
// candidate_qids optionally records the ranked candidate list that produced
// the decision; it feeds the candidate-set evaluation metrics.
struct LinkAnnotation {
  TokenRange range;
  std::optional<std::string> qid;
  std::vector<std::string> candidate_qids;

  bool operator==(const LinkAnnotation&) const = default;
};

struct Document {
  std::string id;
  std::string text;
  std::vector<Token> tokens;
  std::vector<SentenceSpan> sentences;

  // Sentence index containing token_index, or -1.
  int sentence_of(int token_index) const;
  // Sentence index if the whole range lies in one sentence, nullopt otherwise.
  std::optional<int> sentence_of(const TokenRange& range) const;
  // Space-joined norms of the token range.
  std::string norm_phrase(const TokenRange& range) const;

  bool operator==(const Document&) const = default;
};

struct AnnotatedDocument {
  Document document;
  std::vector<TermAnnotation> terms;
  std::vector<RelationInstance> relations;
  std::vector<LinkAnnotation> links;

  bool operator==(const AnnotatedDocument&) const = default;
};

struct TokenizerOptions {
  // When false, a hyphen flanked by word characters stays inside the token
  // ("что-то" as one token). Default splits it out as punctuation.
  bool split_hyphens = true;
  // Extra abbreviation surfaces (lowercased) that suppress a sentence break
  // after the following period.
  std::set<std::string> extra_abbreviations;
};

// Rule-based tokenizer: maximal letter/digit runs and punctuation singletons,
// whitespace skipped. Sentence boundaries after {. ! ?} followed by
// whitespace and an uppercase letter, with an abbreviation guard before a
// period. Deterministic; empty text yields zero tokens and zero sentences.
Document tokenize(std::string_view text, const Normalizer& normalizer = default_normalizer(),
                  const TokenizerOptions& options = {});

// Tokenize-normalize-join: canonical form used for dictionary entries, KB
// aliases and mention phrases.
std::string normalize_phrase(std::string_view phrase,
                             const Normalizer& normalizer = default_normalizer(),
                             const TokenizerOptions& options = {});

// Checks every structural invariant (token ordering and offsets, sentence
// partition, annotation ranges, non-overlapping terms, same-sentence
// relations, qid shapes). Throws std::runtime_error on the first violation.
void validate_document(const AnnotatedDocument& doc);

bool is_valid_qid(std::string_view qid);

}  // namespace termlink

#endif  // TERMLINK_CORPUS_HPP_
