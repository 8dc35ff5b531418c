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

#include "termlink/jsonl.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "termlink/utf8.hpp"

namespace termlink {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

TokenRange range_from_json(const json& value, const char* what) {
  if (!value.is_array() || value.size() != 2 || !value[0].is_number_integer() ||
      !value[1].is_number_integer()) {
    throw std::runtime_error(std::string(what) + " must be a [first, last] integer pair");
  }
  return TokenRange{value[0].get<int>(), value[1].get<int>()};
}

AnnotatedDocument document_from_json(const json& obj, const Normalizer& normalizer) {
  if (!obj.is_object()) throw std::runtime_error("document line is not a JSON object");
  AnnotatedDocument doc;
  doc.document.id = obj.at("id").get<std::string>();
  doc.document.text = obj.at("text").get<std::string>();

  const utf8::DecodedText decoded = utf8::decode(doc.document.text);
  const int n_cps = static_cast<int>(decoded.size());

  for (const json& jt : obj.value("tokens", json::array())) {
    Token tok;
    tok.start = jt.at("s").get<int>();
    tok.end = jt.at("e").get<int>();
    if (tok.start < 0 || tok.end > n_cps || tok.start >= tok.end) {
      throw std::runtime_error("token offsets [" + std::to_string(tok.start) + ", " +
                               std::to_string(tok.end) + ") are inconsistent with the text");
    }
    tok.surface = decoded.slice(doc.document.text, static_cast<std::size_t>(tok.start),
                                static_cast<std::size_t>(tok.end));
    tok.norm = jt.contains("norm") && !jt["norm"].is_null()
                   ? jt["norm"].get<std::string>()
                   : normalizer.normalize(tok.surface);
    bool has_letter = false, all_latin = true;
    for (char32_t c : utf8::decode(tok.surface).code_points) {
      if (utf8::is_letter(c)) {
        has_letter = true;
        if (!utf8::is_latin_letter(c)) all_latin = false;
      }
    }
    tok.is_latin_script = has_letter && all_latin;
    doc.document.tokens.push_back(std::move(tok));
  }

  for (const json& js : obj.value("sentences", json::array())) {
    TokenRange r = range_from_json(js, "sentence");
    doc.document.sentences.push_back(SentenceSpan{r.first, r.last});
  }

  for (const json& jt : obj.value("terms", json::array())) {
    TermAnnotation term;
    term.range = range_from_json(jt.at("range"), "term range");
    term.source = annotation_source_from_string(jt.value("source", "gold"));
    doc.terms.push_back(term);
  }

  for (const json& jr : obj.value("relations", json::array())) {
    RelationInstance rel;
    rel.arg1 = range_from_json(jr.at("arg1"), "relation arg1");
    rel.arg2 = range_from_json(jr.at("arg2"), "relation arg2");
    rel.label = relation_label_from_string(jr.at("label").get<std::string>());
    doc.relations.push_back(rel);
  }

  for (const json& jl : obj.value("links", json::array())) {
    LinkAnnotation link;
    link.range = range_from_json(jl.at("range"), "link range");
    if (jl.contains("qid") && !jl["qid"].is_null()) {
      link.qid = jl["qid"].get<std::string>();
    }
    if (jl.contains("candidates")) {
      link.candidate_qids = jl["candidates"].get<std::vector<std::string>>();
    }
    doc.links.push_back(std::move(link));
  }

  // Relation sentence indices are derived, not stored.
  for (RelationInstance& rel : doc.relations) {
    std::optional<int> s = doc.document.sentence_of(rel.arg1);
    rel.sentence_index = s.value_or(-1);
  }

  validate_document(doc);
  return doc;
}

ordered_json document_to_json(const AnnotatedDocument& doc) {
  ordered_json obj;
  obj["id"] = doc.document.id;
  obj["text"] = doc.document.text;

  ordered_json tokens = ordered_json::array();
  for (const Token& tok : doc.document.tokens) {
    ordered_json jt;
    jt["s"] = tok.start;
    jt["e"] = tok.end;
    jt["norm"] = tok.norm;
    tokens.push_back(std::move(jt));
  }
  obj["tokens"] = std::move(tokens);

  ordered_json sentences = ordered_json::array();
  for (const SentenceSpan& s : doc.document.sentences) {
    sentences.push_back(ordered_json::array({s.first_token, s.last_token}));
  }
  obj["sentences"] = std::move(sentences);

  ordered_json terms = ordered_json::array();
  for (const TermAnnotation& term : doc.terms) {
    ordered_json jt;
    jt["range"] = ordered_json::array({term.range.first, term.range.last});
    jt["source"] = to_string(term.source);
    terms.push_back(std::move(jt));
  }
  obj["terms"] = std::move(terms);

  ordered_json relations = ordered_json::array();
  for (const RelationInstance& rel : doc.relations) {
    ordered_json jr;
    jr["arg1"] = ordered_json::array({rel.arg1.first, rel.arg1.last});
    jr["arg2"] = ordered_json::array({rel.arg2.first, rel.arg2.last});
    jr["label"] = to_string(rel.label);
    relations.push_back(std::move(jr));
  }
  obj["relations"] = std::move(relations);

  ordered_json links = ordered_json::array();
  for (const LinkAnnotation& link : doc.links) {
    ordered_json jl;
    jl["range"] = ordered_json::array({link.range.first, link.range.last});
    if (link.qid.has_value()) {
      jl["qid"] = *link.qid;
    } else {
      jl["qid"] = nullptr;
    }
    if (!link.candidate_qids.empty()) jl["candidates"] = link.candidate_qids;
    links.push_back(std::move(jl));
  }
  obj["links"] = std::move(links);

  return obj;
}

}  // namespace

AnnotatedDocument document_from_json_line(const std::string& line, const Normalizer& normalizer) {
  json obj = json::parse(line);
  return document_from_json(obj, normalizer);
}

std::string document_to_json_line(const AnnotatedDocument& doc) {
  return document_to_json(doc).dump();
}

std::vector<AnnotatedDocument> read_annotations(const std::string& path,
                                                const Normalizer& normalizer) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");

  std::vector<AnnotatedDocument> docs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      docs.push_back(document_from_json_line(line, normalizer));
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return docs;
}

void write_annotations(const std::vector<AnnotatedDocument>& docs, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  for (const AnnotatedDocument& doc : docs) {
    out << document_to_json_line(doc) << '\n';
  }
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace termlink
