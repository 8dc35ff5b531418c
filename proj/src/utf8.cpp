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

#include "termlink/utf8.hpp"

#include <stdexcept>

namespace termlink::utf8 {

namespace {

[[noreturn]] void bad_utf8(std::size_t byte_pos) {
  throw std::runtime_error("invalid UTF-8 sequence at byte " + std::to_string(byte_pos));
}

}  // namespace

DecodedText decode(std::string_view text) {
  DecodedText out;
  out.code_points.reserve(text.size());
  out.byte_offsets.reserve(text.size() + 1);

  std::size_t i = 0;
  while (i < text.size()) {
    out.byte_offsets.push_back(i);
    unsigned char b0 = static_cast<unsigned char>(text[i]);
    char32_t cp = 0;
    std::size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      bad_utf8(i);
    }
    if (i + len > text.size()) bad_utf8(i);
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char bk = static_cast<unsigned char>(text[i + k]);
      if ((bk & 0xC0) != 0x80) bad_utf8(i + k);
      cp = (cp << 6) | (bk & 0x3F);
    }
    // Reject overlong encodings and surrogates.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
        (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
      bad_utf8(i);
    }
    out.code_points.push_back(cp);
    i += len;
  }
  out.byte_offsets.push_back(text.size());
  return out;
}

std::string encode(std::u32string_view code_points) {
  std::string out;
  out.reserve(code_points.size());
  for (char32_t cp : code_points) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

std::size_t length(std::string_view text) { return decode(text).size(); }

char32_t to_lower(char32_t c) {
  if (c >= U'A' && c <= U'Z') return c + 0x20;
  if (c >= 0x00C0 && c <= 0x00DE && c != 0x00D7) return c + 0x20;  // Latin-1 uppercase
  if (c >= 0x0410 && c <= 0x042F) return c + 0x20;                 // А..Я
  if (c >= 0x0400 && c <= 0x040F) return c + 0x50;                 // Ѐ..Џ (incl. Ё)
  return c;
}

bool is_latin_letter(char32_t c) {
  return (c >= U'A' && c <= U'Z') || (c >= U'a' && c <= U'z') ||
         (c >= 0x00C0 && c <= 0x00FF && c != 0x00D7 && c != 0x00F7) ||
         (c >= 0x0100 && c <= 0x024F);
}

bool is_cyrillic_letter(char32_t c) { return c >= 0x0400 && c <= 0x04FF; }

bool is_letter(char32_t c) { return is_latin_letter(c) || is_cyrillic_letter(c); }

bool is_digit(char32_t c) { return c >= U'0' && c <= U'9'; }

bool is_space(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' || c == U'\v' ||
         c == 0x00A0 || c == 0x2028 || c == 0x2029;
}

bool is_upper(char32_t c) { return is_letter(c) && to_lower(c) != c; }

std::string lower_copy(std::string_view text) {
  DecodedText d = decode(text);
  for (char32_t& c : d.code_points) c = to_lower(c);
  return encode(d.code_points);
}

}  // namespace termlink::utf8
