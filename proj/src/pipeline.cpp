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

#include "termlink/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "termlink/dictionary.hpp"
#include "termlink/embeddings.hpp"
#include "termlink/jsonl.hpp"
#include "termlink/kb.hpp"
#include "termlink/linker.hpp"
#include "termlink/metrics.hpp"
#include "termlink/relations.hpp"
#include "termlink/tagger.hpp"

namespace termlink {

namespace fs = std::filesystem;

std::vector<AnnotatedDocument> load_corpus_input(const std::string& path,
                                                 const Normalizer& normalizer) {
  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const fs::directory_entry& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".txt") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    std::vector<AnnotatedDocument> docs;
    docs.reserve(files.size());
    for (const fs::path& file : files) {
      std::ifstream in(file, std::ios::binary);
      if (!in) throw std::runtime_error("cannot open '" + file.string() + "'");
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      if (!text.empty() && text.back() == '\n') text.pop_back();
      AnnotatedDocument doc;
      doc.document = tokenize(text, normalizer);
      doc.document.id = file.stem().string();
      docs.push_back(std::move(doc));
    }
    return docs;
  }
  return read_annotations(path, normalizer);
}

namespace {

void write_stage(const std::vector<AnnotatedDocument>& docs, const fs::path& target) {
  fs::path partial = target;
  partial += ".partial";
  write_annotations(docs, partial.string());
  fs::rename(partial, target);
}

nlohmann::ordered_json metrics_to_json(const MetricsReport& report) {
  nlohmann::ordered_json obj;
  obj["precision"] = report.precision;
  obj["recall"] = report.recall;
  obj["f1"] = report.f1;
  obj["support"] = report.support;
  obj["predicted"] = report.predicted;
  obj["true_positives"] = report.true_positives;
  if (!report.per_label.empty()) {
    nlohmann::ordered_json per_label;
    for (const auto& [label, score] : report.per_label) {
      nlohmann::ordered_json row;
      row["precision"] = score.precision;
      row["recall"] = score.recall;
      row["f1"] = score.f1;
      row["support"] = score.support;
      per_label[label] = std::move(row);
    }
    obj["per_label"] = std::move(per_label);
  }
  return obj;
}

nlohmann::ordered_json linking_to_json(const LinkingReport& report) {
  nlohmann::ordered_json obj;
  obj["accuracy"] = report.accuracy;
  obj["linked_accuracy"] = report.linked_accuracy;
  obj["top_k_accuracy"] = report.top_k_accuracy;
  obj["averaged_candidates"] = report.averaged_candidates;
  obj["linked_averaged_candidates"] = report.linked_averaged_candidates;
  obj["n_all_entities"] = report.n_all_entities;
  obj["n_all_linked_entities"] = report.n_all_linked_entities;
  return obj;
}

[[noreturn]] void stage_failed(const std::string& stage, const std::exception& e) {
  throw std::runtime_error("pipeline stage '" + stage + "' failed: " + e.what());
}

}  // namespace

void run_pipeline(const PipelineConfig& config, std::ostream& log) {
  config.validate();

  const Normalizer& normalizer = default_normalizer();
  fs::create_directories(config.out_dir);
  const fs::path out_dir(config.out_dir);

  bool want_tag = false, want_relate = false, want_link = false;
  for (const std::string& stage : config.stages) {
    want_tag |= stage == "tag";
    want_relate |= stage == "relate";
    want_link |= stage == "link";
  }

  std::vector<AnnotatedDocument> docs = load_corpus_input(config.corpus_in, normalizer);
  log << "pipeline: " << docs.size() << " documents from " << config.corpus_in << "\n";

  if (want_tag) {
    try {
      TermDictionary dict = TermDictionary::load(config.dict, normalizer, config.dict_max_ngram);
      DictionaryTagger tagger(dict);
      WeakSupervisionConfig ws;
      ws.iterations = config.iterations;
      ws.merge_policy = merge_policy_from_string(config.merge_policy);
      ws.repair = config.repair;

      std::vector<Document> plain;
      plain.reserve(docs.size());
      for (const AnnotatedDocument& doc : docs) plain.push_back(doc.document);
      WeakSupervisionResult result = run_weak_supervision(plain, dict, tagger, ws);
      // Keep any upstream relations/links untouched.
      for (std::size_t i = 0; i < docs.size(); ++i) docs[i].terms = result.corpus[i].terms;

      write_stage(docs, out_dir / "tagged.jsonl");
      for (const WeakSupervisionStats& stats : result.stats) {
        log << "tag: iteration " << stats.iteration << ": dictionary=" << stats.dictionary_spans
            << " model=" << stats.model_spans << " merged=" << stats.merged_spans << "\n";
      }
    } catch (const std::exception& e) {
      stage_failed("tag", e);
    }
  }

  if (want_relate) {
    try {
      PairSamplingOptions sampling;
      sampling.sample_rate = config.sample_rate;
      sampling.max_distance =
          config.max_distance < 0 ? std::numeric_limits<int>::max() : config.max_distance;
      sampling.seed = config.seed;

      std::vector<Pattern> patterns;
      if (config.relation_mode == "classify") {
        patterns = load_patterns(config.patterns, normalizer);
      }
      std::int64_t total = 0;
      for (AnnotatedDocument& doc : docs) {
        if (config.relation_mode == "dataset") {
          doc.relations = build_dataset(doc, sampling);
        } else if (config.sample_rate >= 1.0 && config.max_distance < 0) {
          doc.relations = extract_all(doc, patterns);
        } else {
          doc.relations.clear();
          for (const auto& [arg1, arg2] : candidate_pairs(doc, sampling)) {
            RelationLabel label = classify(doc.document, arg1, arg2, patterns);
            if (label == RelationLabel::no_relation) continue;
            doc.relations.push_back(
                RelationInstance{arg1, arg2, label, doc.document.sentence_of(arg1).value()});
          }
        }
        total += static_cast<std::int64_t>(doc.relations.size());
      }
      write_stage(docs, out_dir / "relations.jsonl");
      log << "relate: " << total << " instances (" << config.relation_mode << ")\n";
    } catch (const std::exception& e) {
      stage_failed("relate", e);
    }
  }

  if (want_link) {
    try {
      KBStore kb = KBStore::load(config.kb, normalizer);
      LinkConfig link_config;
      link_config.mode = link_mode_from_string(config.link_mode);
      link_config.threshold = config.threshold;
      link_config.context_window = config.context;
      link_config.max_subngram = config.link_max_ngram;

      EmbeddingStore embeddings;
      const EmbeddingStore* embeddings_ptr = nullptr;
      if (link_config.mode == LinkMode::weighted_cosine) {
        embeddings = EmbeddingStore::load(config.embeddings, normalizer);
        embeddings_ptr = &embeddings;
      }

      std::int64_t linked = 0;
      for (AnnotatedDocument& doc : docs) {
        doc.links = link(doc, kb, embeddings_ptr, link_config);
        for (const LinkAnnotation& ann : doc.links) linked += ann.qid.has_value() ? 1 : 0;
      }
      write_stage(docs, out_dir / "linked.jsonl");
      log << "link: " << linked << " terms linked (" << config.link_mode << ")\n";
    } catch (const std::exception& e) {
      stage_failed("link", e);
    }
  }

  try {
    write_stage(docs, out_dir / "final.jsonl");
  } catch (const std::exception& e) {
    stage_failed("final", e);
  }

  if (!config.gold.empty()) {
    try {
      std::vector<AnnotatedDocument> gold = read_annotations(config.gold, normalizer);
      nlohmann::ordered_json report;
      report["terms_exact"] = metrics_to_json(term_metrics_exact(gold, docs));
      report["terms_partial"] = metrics_to_json(term_metrics_partial(gold, docs));
      if (want_relate) {
        report["relations"] =
            metrics_to_json(relation_metrics(gold, docs, all_relation_labels()));
      }
      if (want_link) {
        report["links"] = linking_to_json(linking_metrics(collect_linking_examples(gold, docs)));
      }
      fs::path metrics_path = out_dir / "metrics.json";
      fs::path partial = metrics_path;
      partial += ".partial";
      {
        std::ofstream out(partial, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write metrics report");
        out << report.dump(2) << '\n';
      }
      fs::rename(partial, metrics_path);
      log << "evaluate: metrics written to " << metrics_path.string() << "\n";
    } catch (const std::exception& e) {
      stage_failed("evaluate", e);
    }
  }
}

}  // namespace termlink
