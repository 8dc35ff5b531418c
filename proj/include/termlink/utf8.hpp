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

#ifndef TERMLINK_UTF8_HPP_
#define TERMLINK_UTF8_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace termlink::utf8 {

// Decoded view of a UTF-8 string. byte_offsets has size() + 1 entries so
// that the byte span of code points [a, b) is [byte_offsets[a], byte_offsets[b]).
struct DecodedText {
  std::u32string code_points;
  std::vector<std::size_t> byte_offsets;

  std::size_t size() const { return code_points.size(); }

  // UTF-8 slice covering code points [first, last).
  std::string slice(std::string_view original, std::size_t first, std::size_t last) const {
    return std::string(original.substr(byte_offsets[first], byte_offsets[last] - byte_offsets[first]));
  }
};

// Throws std::runtime_error on malformed UTF-8.
DecodedText decode(std::string_view text);

std::string encode(std::u32string_view code_points);

// Number of code points in a UTF-8 string.
std::size_t length(std::string_view text);

char32_t to_lower(char32_t c);

bool is_latin_letter(char32_t c);
bool is_cyrillic_letter(char32_t c);
bool is_letter(char32_t c);
bool is_digit(char32_t c);
bool is_space(char32_t c);
bool is_upper(char32_t c);

// Lowercases ASCII, Latin-1 and Cyrillic letters; other scripts unchanged.
std::string lower_copy(std::string_view text);

}  // namespace termlink::utf8

#endif  // TERMLINK_UTF8_HPP_
