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

#ifndef TERMLINK_JSONL_HPP_
#define TERMLINK_JSONL_HPP_

#include <string>
#include <vector>

#include "termlink/corpus.hpp"

namespace termlink {

// JSON Lines corpus format, one document object per line:
//   {"id": str, "text": str,
//    "tokens": [{"s": int, "e": int, "norm": str?}],
//    "sentences": [[first_tok, last_tok]],
//    "terms": [{"range": [i, j], "source": str}],
//    "relations": [{"arg1": [i, j], "arg2": [i, j], "label": str}],
//    "links": [{"range": [i, j], "qid": str|null, "candidates": [str]?}]}
// Offsets are character (code point) offsets into "text". A missing token
// norm is recomputed with the given normalizer. Every document is validated
// on read; errors carry the 1-based line number.

std::vector<AnnotatedDocument> read_annotations(
    const std::string& path, const Normalizer& normalizer = default_normalizer());

void write_annotations(const std::vector<AnnotatedDocument>& docs, const std::string& path);

// Single-line conversions used by the readers/writers and the bindings.
AnnotatedDocument document_from_json_line(const std::string& line,
                                          const Normalizer& normalizer = default_normalizer());
std::string document_to_json_line(const AnnotatedDocument& doc);

}  // namespace termlink

#endif  // TERMLINK_JSONL_HPP_
