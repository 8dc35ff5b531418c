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

// termlink: term extraction, relation classification and entity linking for
// scientific text, plus the matching evaluation suite.

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

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

namespace {

using namespace termlink;

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

nlohmann::ordered_json metrics_json(const MetricsReport& report) {
  nlohmann::ordered_json obj;
  obj["precision"] = report.precision;
  obj["recall"] = report.recall;
  obj["f1"] = report.f1;
  obj["support"] = report.support;
  obj["predicted"] = report.predicted;
  obj["true_positives"] = report.true_positives;
  if (!report.per_label.empty()) {
    nlohmann::ordered_json rows;
    for (const auto& [label, score] : report.per_label) {
      rows[label] = {{"precision", score.precision},
                     {"recall", score.recall},
                     {"f1", score.f1},
                     {"support", score.support}};
    }
    obj["per_label"] = std::move(rows);
  }
  return obj;
}

void print_metrics(const std::string& title, const MetricsReport& report) {
  std::cout << title << ": P=" << report.precision << " R=" << report.recall
            << " F1=" << report.f1 << " (gold=" << report.support
            << " pred=" << report.predicted << " tp=" << report.true_positives << ")\n";
  for (const auto& [label, score] : report.per_label) {
    std::cout << "  " << label << ": P=" << score.precision << " R=" << score.recall
              << " F1=" << score.f1 << " support=" << score.support << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"term extraction, relation classification and entity linking toolkit"};
  app.require_subcommand(1);

  const Normalizer& normalizer = default_normalizer();

  // ---- mine-dict ----
  auto* mine = app.add_subcommand("mine-dict", "mine TF-IDF-ranked n-grams from a corpus");
  std::string mine_in, mine_out;
  std::vector<int> mine_n = {2, 3, 4};
  bool mine_surfaces = false;
  mine->add_option("--in", mine_in, "corpus: directory of .txt files or a .jsonl file")
      ->required();
  mine->add_option("--out", mine_out, "output TSV (ngram, tf, df, tfidf); default stdout");
  mine->add_option("--n", mine_n, "n-gram sizes (within 1..6)")->delimiter(',');
  mine->add_flag("--surfaces", mine_surfaces, "count surfaces instead of norms");
  mine->callback([&] {
    std::vector<AnnotatedDocument> docs = load_corpus_input(mine_in, normalizer);
    std::vector<Document> corpus;
    corpus.reserve(docs.size());
    for (AnnotatedDocument& doc : docs) corpus.push_back(std::move(doc.document));
    MineOptions options;
    options.over_norms = !mine_surfaces;
    std::set<int> n_values(mine_n.begin(), mine_n.end());
    std::vector<NGramStat> stats = mine_ngrams(corpus, n_values, options);
    stats = rank_by_tfidf(std::move(stats), static_cast<std::int64_t>(corpus.size()));
    std::string tsv = ngram_stats_to_tsv(stats);
    if (mine_out.empty()) {
      std::cout << tsv;
    } else {
      write_text_file(mine_out, tsv);
      std::cout << "wrote " << stats.size() << " n-grams to " << mine_out << "\n";
    }
  });

  // ---- tag ----
  auto* tag = app.add_subcommand("tag", "dictionary-tag terms (weak-supervision loop)");
  std::string tag_dict, tag_in, tag_out, tag_policy = "union_prefer_longer";
  bool tag_no_repair = false;
  int tag_iterations = 1, tag_max_ngram = 4;
  tag->add_option("--dict", tag_dict, "term dictionary, one term per line")->required();
  tag->add_option("--in", tag_in, "corpus: directory of .txt files or a .jsonl file")->required();
  tag->add_option("--out", tag_out, "output corpus .jsonl")->required();
  tag->add_flag("--no-repair", tag_no_repair, "disable boundary repair heuristics");
  tag->add_option("--iterations", tag_iterations, "supervision loop iterations (>= 1)");
  tag->add_option("--merge-policy", tag_policy,
                  "union_prefer_longer|dictionary_priority|model_priority");
  tag->add_option("--max-ngram", tag_max_ngram, "longest dictionary entry, in tokens");
  tag->callback([&] {
    TermDictionary dict = TermDictionary::load(tag_dict, normalizer, tag_max_ngram);
    std::cerr << "dictionary: " << dict.size() << " entries (" << dict.raw_lines()
              << " lines, " << dict.skipped_lines() << " skipped)\n";
    std::vector<AnnotatedDocument> docs = load_corpus_input(tag_in, normalizer);
    std::vector<Document> corpus;
    corpus.reserve(docs.size());
    for (const AnnotatedDocument& doc : docs) corpus.push_back(doc.document);

    DictionaryTagger tagger(dict);
    WeakSupervisionConfig config;
    config.iterations = tag_iterations;
    config.merge_policy = merge_policy_from_string(tag_policy);
    config.repair = !tag_no_repair;
    WeakSupervisionResult result = run_weak_supervision(corpus, dict, tagger, config);
    for (std::size_t i = 0; i < docs.size(); ++i) docs[i].terms = result.corpus[i].terms;
    write_annotations(docs, tag_out);
    std::int64_t total = 0;
    for (const AnnotatedDocument& doc : docs) total += static_cast<std::int64_t>(doc.terms.size());
    std::cout << "tagged " << total << " terms in " << docs.size() << " documents\n";
  });

  // ---- relate ----
  auto* relate = app.add_subcommand("relate", "classify relations between term pairs");
  std::string rel_patterns, rel_in, rel_out, rel_mode = "classify";
  double rel_rate = 1.0;
  int rel_distance = -1;
  std::uint32_t rel_seed = 0;
  relate->add_option("--patterns", rel_patterns, "pattern file (LABEL [bidir] : elem ...)");
  relate->add_option("--in", rel_in, "annotated corpus .jsonl")->required();
  relate->add_option("--out", rel_out, "output corpus .jsonl")->required();
  relate->add_option("--sample-rate", rel_rate, "keep fraction of unrelated pairs (0..1)");
  relate->add_option("--max-distance", rel_distance,
                     "max gap tokens between unrelated pair spans (-1 = unlimited)");
  relate->add_option("--seed", rel_seed, "sampling RNG seed");
  relate->add_option("--mode", rel_mode,
                     "classify: pattern labels; dataset: gold labels + NO-RELATION samples");
  relate->callback([&] {
    PairSamplingOptions sampling;
    sampling.sample_rate = rel_rate;
    sampling.max_distance = rel_distance < 0 ? std::numeric_limits<int>::max() : rel_distance;
    sampling.seed = rel_seed;

    std::vector<AnnotatedDocument> docs = read_annotations(rel_in, normalizer);
    std::int64_t total = 0;
    if (rel_mode == "dataset") {
      for (AnnotatedDocument& doc : docs) {
        doc.relations = build_dataset(doc, sampling);
        total += static_cast<std::int64_t>(doc.relations.size());
      }
    } else if (rel_mode == "classify") {
      if (rel_patterns.empty()) {
        throw std::runtime_error("--patterns is required in classify mode");
      }
      std::vector<Pattern> patterns = load_patterns(rel_patterns, normalizer);
      for (AnnotatedDocument& doc : docs) {
        doc.relations.clear();
        for (const auto& [arg1, arg2] : candidate_pairs(doc, sampling)) {
          RelationLabel label = classify(doc.document, arg1, arg2, patterns);
          if (label == RelationLabel::no_relation) continue;
          doc.relations.push_back(
              RelationInstance{arg1, arg2, label, doc.document.sentence_of(arg1).value()});
        }
        total += static_cast<std::int64_t>(doc.relations.size());
      }
    } else {
      throw std::runtime_error("unknown --mode '" + rel_mode + "' (classify|dataset)");
    }
    write_annotations(docs, rel_out);
    std::cout << "wrote " << total << " relation instances\n";
  });

  // ---- link ----
  auto* link_cmd = app.add_subcommand("link", "link terms to knowledge-base entities");
  std::string link_kb, link_emb, link_in, link_out, link_mode = "weighted_cosine";
  double link_threshold = 0.0;
  int link_context = 5, link_ngram = 3;
  link_cmd->add_option("--kb", link_kb, "KB dump .jsonl")->required();
  link_cmd->add_option("--emb", link_emb, "word vectors (header 'vocab dim')");
  link_cmd->add_option("--in", link_in, "annotated corpus .jsonl")->required();
  link_cmd->add_option("--out", link_out, "output corpus .jsonl")->required();
  link_cmd->add_option("--mode", link_mode, "weighted_cosine|baseline");
  link_cmd->add_option("--threshold", link_threshold, "minimum top score to emit a link");
  link_cmd->add_option("--context", link_context, "context window tokens on each side");
  link_cmd->add_option("--max-ngram", link_ngram, "longest mention sub-n-gram to look up");
  link_cmd->callback([&] {
    KBStore kb = KBStore::load(link_kb, normalizer);
    for (const std::string& warning : kb.warnings()) std::cerr << "warning: " << warning << "\n";

    LinkConfig config;
    config.mode = link_mode_from_string(link_mode);
    config.threshold = link_threshold;
    config.context_window = link_context;
    config.max_subngram = link_ngram;

    EmbeddingStore embeddings;
    const EmbeddingStore* embeddings_ptr = nullptr;
    if (config.mode == LinkMode::weighted_cosine) {
      if (link_emb.empty()) {
        throw std::runtime_error("--emb is required in weighted_cosine mode");
      }
      embeddings = EmbeddingStore::load(link_emb, normalizer);
      for (const std::string& warning : embeddings.warnings()) {
        std::cerr << "warning: " << warning << "\n";
      }
      embeddings_ptr = &embeddings;
    }

    std::vector<AnnotatedDocument> docs = read_annotations(link_in, normalizer);
    std::int64_t linked = 0, total = 0;
    for (AnnotatedDocument& doc : docs) {
      doc.links = link(doc, kb, embeddings_ptr, config);
      total += static_cast<std::int64_t>(doc.links.size());
      for (const LinkAnnotation& ann : doc.links) linked += ann.qid.has_value() ? 1 : 0;
    }
    write_annotations(docs, link_out);
    std::cout << "linked " << linked << " of " << total << " terms\n";
  });

  // ---- evaluate ----
  auto* evaluate = app.add_subcommand("evaluate", "score predictions against gold annotations");
  evaluate->require_subcommand(1);
  std::string eval_gold, eval_pred, eval_report;
  bool eval_micro = false;
  std::vector<std::string> eval_labels;
  for (auto* sub : {evaluate->add_subcommand("terms", "exact + partial term P/R/F1"),
                    evaluate->add_subcommand("relations", "per-label and overall P/R/F1"),
                    evaluate->add_subcommand("links", "the five linking metrics")}) {
    sub->add_option("--gold", eval_gold, "gold corpus .jsonl")->required();
    sub->add_option("--pred", eval_pred, "predicted corpus .jsonl")->required();
    sub->add_option("--report", eval_report, "also write a JSON report here");
  }
  evaluate->get_subcommand("relations")
      ->add_flag("--micro", eval_micro, "micro-average the overall row (default macro)");
  evaluate->get_subcommand("relations")
      ->add_option("--labels", eval_labels, "labels to evaluate (default all five)")
      ->delimiter(',');

  evaluate->get_subcommand("terms")->callback([&] {
    std::vector<AnnotatedDocument> gold = read_annotations(eval_gold, normalizer);
    std::vector<AnnotatedDocument> pred = read_annotations(eval_pred, normalizer);
    MetricsReport exact = term_metrics_exact(gold, pred);
    MetricsReport partial = term_metrics_partial(gold, pred);
    print_metrics("exact", exact);
    print_metrics("partial", partial);
    if (!eval_report.empty()) {
      nlohmann::ordered_json obj;
      obj["exact"] = metrics_json(exact);
      obj["partial"] = metrics_json(partial);
      write_text_file(eval_report, obj.dump(2) + "\n");
    }
  });

  evaluate->get_subcommand("relations")->callback([&] {
    std::vector<AnnotatedDocument> gold = read_annotations(eval_gold, normalizer);
    std::vector<AnnotatedDocument> pred = read_annotations(eval_pred, normalizer);
    std::vector<RelationLabel> labels;
    if (eval_labels.empty()) {
      labels = all_relation_labels();
    } else {
      for (const std::string& name : eval_labels) labels.push_back(relation_label_from_string(name));
    }
    MetricsReport report = relation_metrics(gold, pred, labels,
                                            eval_micro ? AverageMode::micro : AverageMode::macro);
    print_metrics("relations", report);
    if (!eval_report.empty()) write_text_file(eval_report, metrics_json(report).dump(2) + "\n");
  });

  evaluate->get_subcommand("links")->callback([&] {
    std::vector<AnnotatedDocument> gold = read_annotations(eval_gold, normalizer);
    std::vector<AnnotatedDocument> pred = read_annotations(eval_pred, normalizer);
    LinkingReport report = linking_metrics(collect_linking_examples(gold, pred));
    std::cout << "accuracy=" << report.accuracy
              << " linked_accuracy=" << report.linked_accuracy
              << " top_k_accuracy=" << report.top_k_accuracy
              << " averaged_candidates=" << report.averaged_candidates
              << " linked_averaged_candidates=" << report.linked_averaged_candidates
              << " (all=" << report.n_all_entities
              << " linked=" << report.n_all_linked_entities << ")\n";
    if (!eval_report.empty()) {
      nlohmann::ordered_json obj;
      obj["accuracy"] = report.accuracy;
      obj["linked_accuracy"] = report.linked_accuracy;
      obj["top_k_accuracy"] = report.top_k_accuracy;
      obj["averaged_candidates"] = report.averaged_candidates;
      obj["linked_averaged_candidates"] = report.linked_averaged_candidates;
      obj["n_all_entities"] = report.n_all_entities;
      obj["n_all_linked_entities"] = report.n_all_linked_entities;
      write_text_file(eval_report, obj.dump(2) + "\n");
    }
  });

  // ---- pipeline ----
  auto* pipeline = app.add_subcommand("pipeline", "run tag -> relate -> link from a config file");
  std::string pipe_config;
  std::vector<std::string> pipe_sets;
  std::string pipe_stages;
  std::uint32_t pipe_seed = 0;
  bool pipe_seed_given = false;
  pipeline->add_option("--config", pipe_config, "flat key = value config file")->required();
  pipeline->add_option("--stages", pipe_stages, "comma list of stages (tag,relate,link)");
  pipeline
      ->add_option("--seed", [&pipe_seed, &pipe_seed_given](const std::vector<std::string>& v) {
        pipe_seed = static_cast<std::uint32_t>(std::stoul(v[0]));
        pipe_seed_given = true;
        return true;
      }, "sampling RNG seed (default 0)")
      ->type_name("UINT");
  pipeline->add_option("--set", pipe_sets, "override any config key, key=value")
      ->type_name("KEY=VALUE");
  pipeline->callback([&] {
    PipelineConfig config = PipelineConfig::from_file(pipe_config);
    if (!pipe_stages.empty()) config.apply("stages", pipe_stages);
    if (pipe_seed_given) config.apply("seed", std::to_string(pipe_seed));
    for (const std::string& kv : pipe_sets) {
      std::size_t eq = kv.find('=');
      if (eq == std::string::npos) {
        throw std::runtime_error("--set expects key=value, got '" + kv + "'");
      }
      config.apply(kv.substr(0, eq), kv.substr(eq + 1));
    }
    run_pipeline(config, std::cout);
  });

  // ---- kb ----
  auto* kb_cmd = app.add_subcommand("kb", "knowledge-base dump utilities");
  kb_cmd->require_subcommand(1);
  auto* kb_validate = kb_cmd->add_subcommand("validate", "parse and validate a KB dump");
  auto* kb_stats = kb_cmd->add_subcommand("stats", "print entity/alias statistics");
  std::string kb_path;
  kb_validate->add_option("file", kb_path, "KB dump .jsonl")->required();
  kb_stats->add_option("file", kb_path, "KB dump .jsonl")->required();
  kb_validate->callback([&] {
    KBStore store = KBStore::load(kb_path, normalizer);
    for (const std::string& warning : store.warnings()) std::cerr << "warning: " << warning << "\n";
    std::cout << "ok: " << store.size() << " entities\n";
  });
  kb_stats->callback([&] {
    KBStore store = KBStore::load(kb_path, normalizer);
    std::int64_t synonyms = 0, disambiguation = 0, links = 0, relations = 0;
    for (const EntityRecord& entity : store.entities()) {
      synonyms += static_cast<std::int64_t>(entity.synonyms.size());
      disambiguation += entity.is_disambiguation ? 1 : 0;
      links += entity.num_links;
      relations += entity.num_relations;
    }
    std::cout << "entities: " << store.size() << "\n"
              << "synonyms: " << synonyms << "\n"
              << "disambiguation pages: " << disambiguation << "\n"
              << "total links: " << links << "\n"
              << "total relations: " << relations << "\n";
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
