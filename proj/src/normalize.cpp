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

#include "termlink/normalize.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "termlink/utf8.hpp"

namespace termlink {

namespace {

constexpr std::size_t kMinStem = 3;

// Common Russian noun and adjective endings. Stripped longest-first until no
// suffix fits; the fixpoint makes the whole normalization idempotent.
const std::array<std::u32string_view, 11> kSuffixes3 = {
    U"ами", U"ями", U"ыми", U"ими", U"ого", U"его", U"ому", U"ему", U"ией", U"иях", U"иям",
};
const std::array<std::u32string_view, 34> kSuffixes2 = {
    U"ов", U"ев", U"ёв", U"ей", U"ёй", U"ой", U"ый", U"ий", U"ая", U"яя", U"ое", U"ее",
    U"ую", U"юю", U"ые", U"ие", U"ия", U"ию", U"ии", U"ых", U"их", U"ым", U"им", U"ом",
    U"ем", U"ём", U"ам", U"ям", U"ах", U"ях", U"ья", U"ье", U"ью", U"ьи",
};
const std::array<char32_t, 9> kSuffixes1 = {U'а', U'я', U'ы', U'и', U'о', U'е', U'у', U'ю', U'ь'};

bool ends_with(const std::u32string& word, std::u32string_view suffix) {
  return word.size() >= suffix.size() &&
         std::equal(suffix.rbegin(), suffix.rend(), word.rbegin());
}

bool all_cyrillic(const std::u32string& word) {
  if (word.empty()) return false;
  for (char32_t c : word) {
    if (!utf8::is_cyrillic_letter(c)) return false;
  }
  return true;
}

// Longest suffix from the tables that leaves a stem of at least kMinStem
// code points, or 0 when none fits.
std::size_t strippable_suffix(const std::u32string& word) {
  for (auto s : kSuffixes3) {
    if (!s.empty() && word.size() >= s.size() + kMinStem && ends_with(word, s)) return s.size();
  }
  for (auto s : kSuffixes2) {
    if (!s.empty() && word.size() >= s.size() + kMinStem && ends_with(word, s)) return s.size();
  }
  for (char32_t c : kSuffixes1) {
    if (word.size() >= 1 + kMinStem && word.back() == c) return 1;
  }
  return 0;
}

}  // namespace

std::string SuffixNormalizer::normalize(std::string_view surface) const {
  utf8::DecodedText d = utf8::decode(surface);
  std::u32string word = d.code_points;
  for (char32_t& c : word) c = utf8::to_lower(c);
  if (all_cyrillic(word)) {
    for (std::size_t n = strippable_suffix(word); n != 0; n = strippable_suffix(word)) {
      word.resize(word.size() - n);
    }
  }
  return utf8::encode(word);
}

std::string LowercaseNormalizer::normalize(std::string_view surface) const {
  return utf8::lower_copy(surface);
}

const Normalizer& default_normalizer() {
  static const SuffixNormalizer instance;
  return instance;
}

}  // namespace termlink
