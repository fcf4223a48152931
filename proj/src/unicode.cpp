// Copyright 2026 The plspell authors
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

#include "plspell/unicode.hpp"

#include <array>

#include "plspell/error.hpp"

namespace plspell::uni {
namespace {

constexpr char32_t kCombiningAcute = U'́';
constexpr char32_t kCombiningDotAbove = U'̇';
constexpr char32_t kCombiningOgonek = U'̨';

struct Composition {
  char32_t base;
  char32_t mark;
  char32_t composed;
};

// Canonical compositions for every decomposable letter of the Polish
// alphabet, lowercase and uppercase.
constexpr std::array<Composition, 22> kCompositions{{
    {U'a', kCombiningOgonek, U'ą'},  {U'A', kCombiningOgonek, U'Ą'},
    {U'c', kCombiningAcute, U'ć'},   {U'C', kCombiningAcute, U'Ć'},
    {U'e', kCombiningOgonek, U'ę'},  {U'E', kCombiningOgonek, U'Ę'},
    {U'n', kCombiningAcute, U'ń'},   {U'N', kCombiningAcute, U'Ń'},
    {U'o', kCombiningAcute, U'ó'},   {U'O', kCombiningAcute, U'Ó'},
    {U's', kCombiningAcute, U'ś'},   {U'S', kCombiningAcute, U'Ś'},
    {U'z', kCombiningAcute, U'ź'},   {U'Z', kCombiningAcute, U'Ź'},
    {U'z', kCombiningDotAbove, U'ż'}, {U'Z', kCombiningDotAbove, U'Ż'},
    // Non-Polish but common in loaned proper names; composing them keeps
    // queries over mixed word lists consistent.
    {U'a', kCombiningAcute, U'á'},   {U'A', kCombiningAcute, U'Á'},
    {U'e', kCombiningAcute, U'é'},   {U'E', kCombiningAcute, U'É'},
    {U'i', kCombiningAcute, U'í'},   {U'I', kCombiningAcute, U'Í'},
}};

bool compose_pair(char32_t base, char32_t mark, char32_t& out) {
  for (const auto& c : kCompositions) {
    if (c.base == base && c.mark == mark) {
      out = c.composed;
      return true;
    }
  }
  return false;
}

}  // namespace

bool try_decode_utf8(std::string_view bytes, std::u32string& out,
                     std::size_t& bad_offset) {
  out.clear();
  out.reserve(bytes.size());
  std::size_t i = 0;
  const auto n = bytes.size();
  while (i < n) {
    const unsigned char b0 = static_cast<unsigned char>(bytes[i]);
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
      bad_offset = i;
      return false;
    }
    if (i + len > n) {
      bad_offset = i;
      return false;
    }
    for (std::size_t k = 1; k < len; ++k) {
      const unsigned char bk = static_cast<unsigned char>(bytes[i + k]);
      if ((bk & 0xC0) != 0x80) {
        bad_offset = i;
        return false;
      }
      cp = (cp << 6) | (bk & 0x3F);
    }
    // Reject overlong encodings, surrogates and out-of-range values.
    static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (len > 1 && cp < kMin[len]) {
      bad_offset = i;
      return false;
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      bad_offset = i;
      return false;
    }
    out.push_back(cp);
    i += len;
  }
  return true;
}

std::u32string decode_utf8(std::string_view bytes) {
  std::u32string out;
  std::size_t bad = 0;
  if (!try_decode_utf8(bytes, out, bad)) {
    throw Error("malformed UTF-8 at byte offset " + std::to_string(bad));
  }
  return out;
}

std::string encode_utf8(std::u32string_view code_points) {
  std::string out;
  out.reserve(code_points.size() * 2);
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

std::u32string compose_nfc(std::u32string_view code_points) {
  std::u32string out;
  out.reserve(code_points.size());
  for (char32_t cp : code_points) {
    char32_t composed = 0;
    if (!out.empty() && compose_pair(out.back(), cp, composed)) {
      out.back() = composed;
    } else {
      out.push_back(cp);
    }
  }
  return out;
}

std::u32string to_nfc_code_points(std::string_view bytes) {
  return compose_nfc(decode_utf8(bytes));
}

std::string nfc(std::string_view bytes) {
  return encode_utf8(to_nfc_code_points(bytes));
}

bool has_whitespace(std::u32string_view code_points) {
  for (char32_t cp : code_points) {
    if (cp == U' ' || cp == U'\t' || cp == U'\r' || cp == U'\n' ||
        cp == U'\f' || cp == U'\v') {
      return true;
    }
  }
  return false;
}

std::size_t length(std::string_view bytes) {
  return decode_utf8(bytes).size();
}

}  // namespace plspell::uni
