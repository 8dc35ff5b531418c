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

#ifndef TERMLINK_PIPELINE_HPP_
#define TERMLINK_PIPELINE_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "termlink/config.hpp"
#include "termlink/corpus.hpp"

namespace termlink {

// Loads a corpus for processing: a .jsonl file is read as annotated
// documents; a directory is globbed for *.txt files (sorted by name), each
// tokenized into one document whose id is the file stem.
std::vector<AnnotatedDocument> load_corpus_input(const std::string& path,
                                                 const Normalizer& normalizer = default_normalizer());

// File-based pipeline in the order tag -> relate -> link. Each enabled stage
// reads the latest upstream artifact (or the input corpus), writes
// out_dir/<stage>.jsonl, and the run ends with out_dir/final.jsonl plus
// out_dir/metrics.json when a gold corpus is configured. Stage output is
// written to <file>.partial first and renamed on success, so a failed stage
// leaves its partial file behind. Deterministic for a fixed config and seed.
// Throws std::runtime_error tagged with the failing stage.
void run_pipeline(const PipelineConfig& config, std::ostream& log);

}  // namespace termlink

#endif  // TERMLINK_PIPELINE_HPP_
