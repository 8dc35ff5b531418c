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

#include "termlink/corpus.hpp"

#include <stdexcept>

#include "termlink/utf8.hpp"

namespace termlink {

namespace {

// Abbreviations that do not end a sentence when followed by a period.
// Deliberately excludes bare Latin letters so that "Это X. Это Y." splits.
const std::set<std::string>& builtin_abbreviations() {
  static const std::set<std::string> abbrevs = {
      "т",    "д",   "е",    "п",    "г",    "гг",  "вв",   "др",   "пр",
      "см",   "ср",  "рис",  "табл", "им",   "тыс", "млн",  "млрд", "проф",
      "акад", "ул",  "стр",  "гл",   "al",   "etc", "vs",   "fig",  "eq",
  };
  return abbrevs;
}

bool is_word_char(char32_t c) { return utf8::is_letter(c) || utf8::is_digit(c); }

bool surface_is_latin(const std::u32string& cps) {
  bool has_letter = false;
  for (char32_t c : cps) {
    if (utf8::is_letter(c)) {
      has_letter = true;
      if (!utf8::is_latin_letter(c)) return false;
    }
  }
  return has_letter;
}

}  // namespace

bool Token::is_word() const {
  for (char32_t c : utf8::decode(surface).code_points) {
    if (is_word_char(c)) return true;
  }
  return false;
}

std::string to_string(AnnotationSource source) {
  switch (source) {
    case AnnotationSource::dictionary: return "dictionary";
    case AnnotationSource::model: return "model";
    case AnnotationSource::gold: return "gold";
    case AnnotationSource::merged: return "merged";
  }
  return "dictionary";
}

AnnotationSource annotation_source_from_string(const std::string& name) {
  if (name == "dictionary") return AnnotationSource::dictionary;
  if (name == "model") return AnnotationSource::model;
  if (name == "gold") return AnnotationSource::gold;
  if (name == "merged") return AnnotationSource::merged;
  throw std::runtime_error("unknown annotation source: '" + name + "'");
}

std::vector<std::string> TermAnnotation::bio_labels() const {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(range.length()));
  for (int i = range.first; i <= range.last; ++i) {
    labels.push_back(i == range.first ? "B-TERM" : "I-TERM");
  }
  return labels;
}

std::string to_string(RelationLabel label) {
  switch (label) {
    case RelationLabel::compare: return "COMPARE";
    case RelationLabel::hyponym_of: return "HYPONYM-OF";
    case RelationLabel::no_relation: return "NO-RELATION";
    case RelationLabel::part_of: return "PART-OF";
    case RelationLabel::used_for: return "USED-FOR";
  }
  return "NO-RELATION";
}

RelationLabel relation_label_from_string(const std::string& name) {
  if (name == "COMPARE") return RelationLabel::compare;
  if (name == "HYPONYM-OF") return RelationLabel::hyponym_of;
  if (name == "NO-RELATION") return RelationLabel::no_relation;
  if (name == "PART-OF") return RelationLabel::part_of;
  if (name == "USED-FOR") return RelationLabel::used_for;
  throw std::runtime_error("unknown relation label: '" + name + "'");
}

const std::vector<RelationLabel>& all_relation_labels() {
  static const std::vector<RelationLabel> labels = {
      RelationLabel::compare, RelationLabel::hyponym_of, RelationLabel::no_relation,
      RelationLabel::part_of, RelationLabel::used_for,
  };
  return labels;
}

int Document::sentence_of(int token_index) const {
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    if (sentences[s].first_token <= token_index && token_index <= sentences[s].last_token) {
      return static_cast<int>(s);
    }
  }
  return -1;
}

std::optional<int> Document::sentence_of(const TokenRange& range) const {
  int s = sentence_of(range.first);
  if (s < 0 || sentence_of(range.last) != s) return std::nullopt;
  return s;
}

std::string Document::norm_phrase(const TokenRange& range) const {
  std::string out;
  for (int i = range.first; i <= range.last; ++i) {
    if (!out.empty()) out.push_back(' ');
    out += tokens[static_cast<std::size_t>(i)].norm;
  }
  return out;
}

Document tokenize(std::string_view text, const Normalizer& normalizer,
                  const TokenizerOptions& options) {
  Document doc;
  doc.text = std::string(text);

  const utf8::DecodedText d = utf8::decode(text);
  const std::u32string& cps = d.code_points;
  const std::size_t n = cps.size();

  std::size_t i = 0;
  while (i < n) {
    if (utf8::is_space(cps[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    if (is_word_char(cps[i])) {
      ++j;
      while (j < n) {
        if (is_word_char(cps[j])) {
          ++j;
        } else if (!options.split_hyphens && cps[j] == U'-' && j + 1 < n && is_word_char(cps[j + 1])) {
          j += 2;
        } else {
          break;
        }
      }
    } else {
      ++j;  // punctuation singleton
    }
    Token tok;
    tok.surface = d.slice(text, i, j);
    tok.start = static_cast<int>(i);
    tok.end = static_cast<int>(j);
    tok.norm = normalizer.normalize(tok.surface);
    tok.is_latin_script = surface_is_latin(cps.substr(i, j - i));
    doc.tokens.push_back(std::move(tok));
    i = j;
  }

  // Sentence segmentation over the token list.
  const std::set<std::string>& abbrevs = builtin_abbreviations();
  int sentence_start = 0;
  for (std::size_t t = 0; t < doc.tokens.size(); ++t) {
    const Token& tok = doc.tokens[t];
    bool terminal = tok.surface == "." || tok.surface == "!" || tok.surface == "?";
    if (terminal) {
      // Needs whitespace then an uppercase letter right after the token.
      std::size_t pos = static_cast<std::size_t>(tok.end);
      bool saw_space = false;
      while (pos < n && utf8::is_space(cps[pos])) {
        saw_space = true;
        ++pos;
      }
      if (pos < n && (!saw_space || !utf8::is_upper(cps[pos]))) terminal = false;
      if (terminal && tok.surface == "." && t > 0) {
        std::string prev = utf8::lower_copy(doc.tokens[t - 1].surface);
        if (abbrevs.count(prev) || options.extra_abbreviations.count(prev)) terminal = false;
      }
    }
    if (terminal) {
      doc.sentences.push_back({sentence_start, static_cast<int>(t)});
      sentence_start = static_cast<int>(t) + 1;
    }
  }
  if (sentence_start < static_cast<int>(doc.tokens.size())) {
    doc.sentences.push_back({sentence_start, static_cast<int>(doc.tokens.size()) - 1});
  }
  return doc;
}

std::string normalize_phrase(std::string_view phrase, const Normalizer& normalizer,
                             const TokenizerOptions& options) {
  Document doc = tokenize(phrase, normalizer, options);
  if (doc.tokens.empty()) return "";
  return doc.norm_phrase({0, static_cast<int>(doc.tokens.size()) - 1});
}

bool is_valid_qid(std::string_view qid) {
  if (qid.size() < 2 || qid[0] != 'Q') return false;
  for (std::size_t i = 1; i < qid.size(); ++i) {
    if (qid[i] < '0' || qid[i] > '9') return false;
  }
  return true;
}

namespace {

void check(bool ok, const std::string& message) {
  if (!ok) throw std::runtime_error(message);
}

void check_range(const AnnotatedDocument& doc, const TokenRange& range, const std::string& what) {
  check(range.first >= 0 && range.last >= range.first &&
            range.last < static_cast<int>(doc.document.tokens.size()),
        "document '" + doc.document.id + "': " + what + " has invalid token range [" +
            std::to_string(range.first) + ", " + std::to_string(range.last) + "]");
}

}  // namespace

void validate_document(const AnnotatedDocument& doc) {
  const Document& d = doc.document;
  const utf8::DecodedText decoded = utf8::decode(d.text);
  const int n_cps = static_cast<int>(decoded.size());

  int prev_end = 0;
  for (std::size_t t = 0; t < d.tokens.size(); ++t) {
    const Token& tok = d.tokens[t];
    check(tok.start < tok.end, "document '" + d.id + "': token " + std::to_string(t) +
                                   " has empty or inverted offsets");
    check(tok.start >= prev_end,
          "document '" + d.id + "': token " + std::to_string(t) + " overlaps its predecessor");
    check(tok.end <= n_cps,
          "document '" + d.id + "': token " + std::to_string(t) + " exceeds the text");
    check(decoded.slice(d.text, static_cast<std::size_t>(tok.start),
                        static_cast<std::size_t>(tok.end)) == tok.surface,
          "document '" + d.id + "': token " + std::to_string(t) +
              " surface does not match text slice");
    check(!tok.norm.empty() || !tok.is_word(),
          "document '" + d.id + "': token " + std::to_string(t) + " has an empty norm");
    prev_end = tok.end;
  }

  // Sentences partition the token list.
  int expected_first = 0;
  for (std::size_t s = 0; s < d.sentences.size(); ++s) {
    const SentenceSpan& span = d.sentences[s];
    check(span.first_token == expected_first && span.last_token >= span.first_token,
          "document '" + d.id + "': sentence " + std::to_string(s) +
              " does not continue the partition");
    expected_first = span.last_token + 1;
  }
  check(expected_first == static_cast<int>(d.tokens.size()),
        "document '" + d.id + "': sentences do not cover all tokens");

  std::vector<TermAnnotation> terms = doc.terms;
  for (const TermAnnotation& term : terms) check_range(doc, term.range, "term");
  for (std::size_t a = 0; a < terms.size(); ++a) {
    for (std::size_t b = a + 1; b < terms.size(); ++b) {
      check(!terms[a].range.overlaps(terms[b].range),
            "document '" + d.id + "': overlapping term spans [" +
                std::to_string(terms[a].range.first) + ", " + std::to_string(terms[a].range.last) +
                "] and [" + std::to_string(terms[b].range.first) + ", " +
                std::to_string(terms[b].range.last) + "]");
    }
  }

  for (const RelationInstance& rel : doc.relations) {
    check_range(doc, rel.arg1, "relation arg1");
    check_range(doc, rel.arg2, "relation arg2");
    check(!rel.arg1.overlaps(rel.arg2),
          "document '" + d.id + "': relation arguments overlap");
    std::optional<int> s1 = d.sentence_of(rel.arg1);
    std::optional<int> s2 = d.sentence_of(rel.arg2);
    check(s1.has_value() && s2.has_value() && *s1 == *s2,
          "document '" + d.id + "': relation arguments are not in one sentence");
  }

  for (const LinkAnnotation& link : doc.links) {
    check_range(doc, link.range, "link");
    if (link.qid.has_value()) {
      check(is_valid_qid(*link.qid),
            "document '" + d.id + "': link qid '" + *link.qid + "' is not Q-prefixed digits");
    }
    for (const std::string& qid : link.candidate_qids) {
      check(is_valid_qid(qid),
            "document '" + d.id + "': candidate qid '" + qid + "' is not Q-prefixed digits");
    }
  }
}

}  // namespace termlink
