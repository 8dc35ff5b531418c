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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>

#include "termlink/config.hpp"
#include "termlink/dictionary.hpp"
#include "termlink/embeddings.hpp"
#include "termlink/jsonl.hpp"
#include "termlink/kb.hpp"
#include "termlink/linker.hpp"
#include "termlink/metrics.hpp"
#include "termlink/pipeline.hpp"
#include "termlink/relations.hpp"
#include "termlink/tagger.hpp"

namespace py = pybind11;
using namespace termlink;

namespace {

// Candidate copies for python: no pointers into the KB store.
struct PyCandidate {
  std::string qid;
  std::string matched_via;
  int n_matching = 0;
  int n_all = 0;
  std::optional<double> raw_similarity;
  double weight = 0.0;
  double score = 0.0;
  bool below_threshold = false;
};

std::vector<PyCandidate> copy_candidates(const CandidateSet& set) {
  std::vector<PyCandidate> out;
  out.reserve(set.candidates.size());
  for (const Candidate& c : set.candidates) {
    out.push_back({c.entity->qid, c.matched_via, c.n_matching, c.n_all, c.raw_similarity,
                   c.weight, c.score, c.below_threshold});
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "term extraction, relation classification and entity linking toolkit";

  py::class_<Token>(m, "Token")
      .def_readonly("surface", &Token::surface)
      .def_readonly("start", &Token::start)
      .def_readonly("end", &Token::end)
      .def_readonly("norm", &Token::norm)
      .def_readonly("is_latin_script", &Token::is_latin_script)
      .def("__repr__", [](const Token& t) {
        return "Token('" + t.surface + "', " + std::to_string(t.start) + ", " +
               std::to_string(t.end) + ")";
      });

  py::class_<SentenceSpan>(m, "SentenceSpan")
      .def_readonly("first_token", &SentenceSpan::first_token)
      .def_readonly("last_token", &SentenceSpan::last_token);

  py::class_<TokenRange>(m, "TokenRange")
      .def(py::init<int, int>(), py::arg("first"), py::arg("last"))
      .def_readwrite("first", &TokenRange::first)
      .def_readwrite("last", &TokenRange::last)
      .def("__eq__", [](const TokenRange& a, const TokenRange& b) { return a == b; })
      .def("__repr__", [](const TokenRange& r) {
        return "TokenRange(" + std::to_string(r.first) + ", " + std::to_string(r.last) + ")";
      });

  py::class_<Document>(m, "Document")
      .def_readwrite("id", &Document::id)
      .def_readonly("text", &Document::text)
      .def_readonly("tokens", &Document::tokens)
      .def_readonly("sentences", &Document::sentences);

  py::class_<TermAnnotation>(m, "TermAnnotation")
      .def(py::init([](TokenRange range, const std::string& source) {
             return TermAnnotation{range, annotation_source_from_string(source)};
           }),
           py::arg("range"), py::arg("source") = "gold")
      .def_readwrite("range", &TermAnnotation::range)
      .def_property(
          "source",
          [](const TermAnnotation& a) { return to_string(a.source); },
          [](TermAnnotation& a, const std::string& s) {
            a.source = annotation_source_from_string(s);
          })
      .def("bio_labels", &TermAnnotation::bio_labels);

  py::class_<RelationInstance>(m, "RelationInstance")
      .def_readwrite("arg1", &RelationInstance::arg1)
      .def_readwrite("arg2", &RelationInstance::arg2)
      .def_property(
          "label", [](const RelationInstance& r) { return to_string(r.label); },
          [](RelationInstance& r, const std::string& s) { r.label = relation_label_from_string(s); })
      .def_readonly("sentence_index", &RelationInstance::sentence_index);

  py::class_<LinkAnnotation>(m, "LinkAnnotation")
      .def_readonly("range", &LinkAnnotation::range)
      .def_readonly("qid", &LinkAnnotation::qid)
      .def_readonly("candidate_qids", &LinkAnnotation::candidate_qids);

  py::class_<AnnotatedDocument>(m, "AnnotatedDocument")
      .def(py::init<>())
      .def_readwrite("document", &AnnotatedDocument::document)
      .def_readwrite("terms", &AnnotatedDocument::terms)
      .def_readwrite("relations", &AnnotatedDocument::relations)
      .def_readwrite("links", &AnnotatedDocument::links);

  m.def("tokenize",
        [](const std::string& text, bool split_hyphens) {
          TokenizerOptions options;
          options.split_hyphens = split_hyphens;
          return tokenize(text, default_normalizer(), options);
        },
        py::arg("text"), py::arg("split_hyphens") = true);
  m.def("normalize",
        [](const std::string& surface) { return default_normalizer().normalize(surface); });
  m.def("normalize_phrase",
        [](const std::string& phrase) { return normalize_phrase(phrase); });
  m.def("validate_document", &validate_document);
  m.def("read_annotations",
        [](const std::string& path) { return read_annotations(path); });
  m.def("write_annotations", &write_annotations);
  m.def("document_to_json_line", &document_to_json_line);
  m.def("document_from_json_line",
        [](const std::string& line) { return document_from_json_line(line); });

  py::class_<NGramStat>(m, "NGramStat")
      .def_readonly("ngram", &NGramStat::ngram)
      .def_readonly("tf", &NGramStat::tf)
      .def_readonly("df", &NGramStat::df)
      .def_readonly("tfidf", &NGramStat::tfidf);

  py::class_<TermDictionary>(m, "TermDictionary")
      .def_static("load",
                  [](const std::string& path, int max_ngram) {
                    return TermDictionary::load(path, default_normalizer(), max_ngram);
                  },
                  py::arg("path"), py::arg("max_ngram") = 4)
      .def_static("from_terms",
                  [](const std::vector<std::string>& terms, int max_ngram) {
                    return TermDictionary::from_terms(terms, default_normalizer(), max_ngram);
                  },
                  py::arg("terms"), py::arg("max_ngram") = 4)
      .def("save", &TermDictionary::save)
      .def("contains", &TermDictionary::contains)
      .def("merge", &TermDictionary::merge)
      .def("__len__", &TermDictionary::size)
      .def_property_readonly("entries", [](const TermDictionary& d) {
        std::vector<std::string> out;
        for (const auto& [entry, count] : d.entries()) out.push_back(entry);
        return out;
      });

  m.def("mine_ngrams",
        [](const std::vector<Document>& corpus, const std::set<int>& n_values, bool over_norms) {
          MineOptions options;
          options.over_norms = over_norms;
          return mine_ngrams(corpus, n_values, options);
        },
        py::arg("corpus"), py::arg("n_values"), py::arg("over_norms") = true);
  m.def("rank_by_tfidf", &rank_by_tfidf, py::arg("stats"), py::arg("corpus_size"));

  m.def("dictionary_tag", &dictionary_tag);
  m.def("repair_boundaries",
        [](const Document& doc, std::vector<TermAnnotation> anns) {
          return repair_boundaries(doc, std::move(anns));
        });
  m.def("merge_annotations",
        [](const std::vector<TermAnnotation>& a, const std::vector<TermAnnotation>& b,
           const std::string& policy) {
          return merge_annotations(a, b, merge_policy_from_string(policy));
        },
        py::arg("a"), py::arg("b"), py::arg("policy") = "union_prefer_longer");
  m.def("run_weak_supervision",
        [](const std::vector<Document>& corpus, const TermDictionary& dict, int iterations,
           const std::string& policy, bool repair) {
          DictionaryTagger tagger(dict);
          WeakSupervisionConfig config;
          config.iterations = iterations;
          config.merge_policy = merge_policy_from_string(policy);
          config.repair = repair;
          return run_weak_supervision(corpus, dict, tagger, config).corpus;
        },
        py::arg("corpus"), py::arg("dict"), py::arg("iterations") = 1,
        py::arg("policy") = "union_prefer_longer", py::arg("repair") = true);

  py::class_<Pattern>(m, "Pattern")
      .def_property_readonly("label", [](const Pattern& p) { return to_string(p.label); })
      .def_readonly("directional", &Pattern::directional);

  m.def("load_patterns",
        [](const std::string& path) { return load_patterns(path); });
  m.def("parse_patterns",
        [](const std::string& text) { return parse_patterns(text); });
  m.def("candidate_pairs",
        [](const AnnotatedDocument& doc, double sample_rate, int max_distance,
           std::uint32_t seed) {
          PairSamplingOptions options;
          options.sample_rate = sample_rate;
          options.max_distance =
              max_distance < 0 ? std::numeric_limits<int>::max() : max_distance;
          options.seed = seed;
          return candidate_pairs(doc, options);
        },
        py::arg("doc"), py::arg("sample_rate") = 1.0, py::arg("max_distance") = -1,
        py::arg("seed") = 0);
  m.def("classify",
        [](const Document& doc, const TokenRange& arg1, const TokenRange& arg2,
           const std::vector<Pattern>& patterns) {
          return to_string(classify(doc, arg1, arg2, patterns));
        });
  m.def("extract_all",
        [](const AnnotatedDocument& doc, const std::vector<Pattern>& patterns) {
          return extract_all(doc, patterns);
        });

  py::class_<EntityRecord>(m, "EntityRecord")
      .def_readonly("qid", &EntityRecord::qid)
      .def_readonly("name", &EntityRecord::name)
      .def_readonly("synonyms", &EntityRecord::synonyms)
      .def_readonly("description", &EntityRecord::description)
      .def_readonly("is_disambiguation", &EntityRecord::is_disambiguation)
      .def_readonly("num_links", &EntityRecord::num_links)
      .def_readonly("num_relations", &EntityRecord::num_relations);

  py::class_<KBStore>(m, "KBStore")
      .def_static("load",
                  [](const std::string& path, const std::string& marker) {
                    KBLoadOptions options;
                    options.disambiguation_marker = marker;
                    return KBStore::load(path, default_normalizer(), options);
                  },
                  py::arg("path"), py::arg("disambiguation_marker") = "disambiguation page")
      .def("lookup_exact",
           [](const KBStore& kb, const std::string& phrase) {
             std::vector<EntityRecord> out;
             for (const EntityRecord* e : kb.lookup_exact(phrase)) out.push_back(*e);
             return out;
           })
      .def("__len__", &KBStore::size)
      .def_property_readonly("warnings", &KBStore::warnings);

  py::class_<EmbeddingStore>(m, "EmbeddingStore")
      .def_static("load",
                  [](const std::string& path) { return EmbeddingStore::load(path); })
      .def_property_readonly("dimension", &EmbeddingStore::dimension)
      .def("__len__", &EmbeddingStore::size)
      .def("embed_phrase",
           [](const EmbeddingStore& store, const std::vector<std::string>& tokens) {
             return embed_phrase(store, tokens);
           });

  m.def("cosine_similarity",
        [](const std::vector<double>& a, const std::vector<double>& b) {
          return cosine_similarity(a, b);
        });

  py::class_<PyCandidate>(m, "Candidate")
      .def_readonly("qid", &PyCandidate::qid)
      .def_readonly("matched_via", &PyCandidate::matched_via)
      .def_readonly("n_matching", &PyCandidate::n_matching)
      .def_readonly("n_all", &PyCandidate::n_all)
      .def_readonly("raw_similarity", &PyCandidate::raw_similarity)
      .def_readonly("weight", &PyCandidate::weight)
      .def_readonly("score", &PyCandidate::score)
      .def_readonly("below_threshold", &PyCandidate::below_threshold);

  m.def("generate_candidates",
        [](const Document& doc, const TokenRange& range, const KBStore& kb, int max_subngram,
           bool include_subngrams) {
          Mention mention{&doc, range, 5};
          return copy_candidates(generate_candidates(mention, kb, max_subngram, include_subngrams));
        },
        py::arg("doc"), py::arg("range"), py::arg("kb"), py::arg("max_subngram") = 3,
        py::arg("include_subngrams") = true);
  m.def("link_document",
        [](const AnnotatedDocument& doc, const KBStore& kb, const EmbeddingStore* embeddings,
           const std::string& mode, double threshold, int context, int max_subngram) {
          LinkConfig config;
          config.mode = link_mode_from_string(mode);
          config.threshold = threshold;
          config.context_window = context;
          config.max_subngram = max_subngram;
          return link(doc, kb, embeddings, config);
        },
        py::arg("doc"), py::arg("kb"), py::arg("embeddings") = nullptr,
        py::arg("mode") = "weighted_cosine", py::arg("threshold") = 0.0, py::arg("context") = 5,
        py::arg("max_subngram") = 3);

  py::class_<LabelScore>(m, "LabelScore")
      .def_readonly("precision", &LabelScore::precision)
      .def_readonly("recall", &LabelScore::recall)
      .def_readonly("f1", &LabelScore::f1)
      .def_readonly("support", &LabelScore::support);

  py::class_<MetricsReport>(m, "MetricsReport")
      .def_readonly("precision", &MetricsReport::precision)
      .def_readonly("recall", &MetricsReport::recall)
      .def_readonly("f1", &MetricsReport::f1)
      .def_readonly("per_label", &MetricsReport::per_label)
      .def_readonly("support", &MetricsReport::support)
      .def_readonly("predicted", &MetricsReport::predicted)
      .def_readonly("true_positives", &MetricsReport::true_positives);

  py::class_<LinkingReport>(m, "LinkingReport")
      .def_readonly("accuracy", &LinkingReport::accuracy)
      .def_readonly("linked_accuracy", &LinkingReport::linked_accuracy)
      .def_readonly("top_k_accuracy", &LinkingReport::top_k_accuracy)
      .def_readonly("averaged_candidates", &LinkingReport::averaged_candidates)
      .def_readonly("linked_averaged_candidates", &LinkingReport::linked_averaged_candidates)
      .def_readonly("n_all_entities", &LinkingReport::n_all_entities)
      .def_readonly("n_all_linked_entities", &LinkingReport::n_all_linked_entities);

  m.def("term_metrics_exact",
        [](const std::vector<AnnotatedDocument>& gold, const std::vector<AnnotatedDocument>& pred) {
          return term_metrics_exact(gold, pred);
        });
  m.def("term_metrics_partial",
        [](const std::vector<AnnotatedDocument>& gold, const std::vector<AnnotatedDocument>& pred) {
          return term_metrics_partial(gold, pred);
        });
  m.def("relation_metrics",
        [](const std::vector<AnnotatedDocument>& gold, const std::vector<AnnotatedDocument>& pred,
           const std::vector<std::string>& labels, bool micro) {
          std::vector<RelationLabel> parsed;
          if (labels.empty()) {
            parsed = all_relation_labels();
          } else {
            for (const std::string& name : labels) parsed.push_back(relation_label_from_string(name));
          }
          return relation_metrics(gold, pred, parsed,
                                  micro ? AverageMode::micro : AverageMode::macro);
        },
        py::arg("gold"), py::arg("pred"), py::arg("labels") = std::vector<std::string>{},
        py::arg("micro") = false);

  py::class_<LinkingExample>(m, "LinkingExample")
      .def(py::init([](std::optional<std::string> gold_qid, std::vector<std::string> candidates,
                       std::optional<std::string> pred_qid) {
             return LinkingExample{std::move(gold_qid), std::move(candidates), std::move(pred_qid)};
           }),
           py::arg("gold_qid"), py::arg("candidate_qids") = std::vector<std::string>{},
           py::arg("pred_qid") = std::nullopt)
      .def_readwrite("gold_qid", &LinkingExample::gold_qid)
      .def_readwrite("candidate_qids", &LinkingExample::candidate_qids)
      .def_readwrite("pred_qid", &LinkingExample::pred_qid);

  m.def("linking_metrics",
        [](const std::vector<LinkingExample>& examples) { return linking_metrics(examples); });
  m.def("collect_linking_examples",
        [](const std::vector<AnnotatedDocument>& gold, const std::vector<AnnotatedDocument>& pred) {
          return collect_linking_examples(gold, pred);
        });

  m.def("run_pipeline",
        [](const std::string& config_path,
           const std::map<std::string, std::string>& overrides) {
          PipelineConfig config = PipelineConfig::from_file(config_path);
          for (const auto& [key, value] : overrides) config.apply(key, value);
          std::ostringstream log;
          run_pipeline(config, log);
          return log.str();
        },
        py::arg("config_path"), py::arg("overrides") = std::map<std::string, std::string>{});

#ifdef TERMLINK_VERSION
  m.attr("__version__") = TERMLINK_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
