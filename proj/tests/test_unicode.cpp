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

#include <doctest.h>

#include "plspell/error.hpp"

using namespace plspell;

TEST_CASE("utf8 round trip over the Polish alphabet") {
  const std::string text = "zażółć gęślą jaźń ZAŻÓŁĆ GĘŚLĄ JAŹŃ";
  CHECK(uni::encode_utf8(uni::decode_utf8(text)) == text);
  CHECK(uni::decode_utf8("ołówek").size() == 6);
}

TEST_CASE("invalid utf8 is rejected with the offending offset") {
  std::u32string out;
  std::size_t bad = 0;

  CHECK_FALSE(uni::try_decode_utf8("ab\xFFzz", out, bad));
  CHECK(bad == 2);

  // truncated two-byte sequence
  CHECK_FALSE(uni::try_decode_utf8("ok\xC5", out, bad));
  CHECK(bad == 2);

  // overlong encoding of '/'
  CHECK_FALSE(uni::try_decode_utf8("\xC0\xAF", out, bad));
  CHECK(bad == 0);

  // UTF-16 surrogate
  CHECK_FALSE(uni::try_decode_utf8("\xED\xA0\x80", out, bad));

  CHECK_THROWS_AS(uni::decode_utf8("\xFF"), Error);
}

TEST_CASE("nfc composes decomposed Polish letters") {
  // z + combining dot above -> ż, a + combining ogonek -> ą
  CHECK(uni::nfc("żółtą") == "żółtą");
  // already composed input is untouched
  CHECK(uni::nfc("żółtą") == "żółtą");
  // ł has no decomposition; unknown marks pass through
  CHECK(uni::nfc("x́") == "x́");
}

TEST_CASE("composed and decomposed spellings are equal after nfc") {
  const std::string composed = "ołówek";
  const std::string decomposed = "ołówek";  // o + acute
  CHECK(uni::nfc(composed) == uni::nfc(decomposed));
}

TEST_CASE("whitespace detection and length") {
  CHECK(uni::has_whitespace(U"a b"));
  CHECK(uni::has_whitespace(U"a\tb"));
  CHECK_FALSE(uni::has_whitespace(U"ołówek"));
  CHECK(uni::length("ołówek") == 6);
  CHECK(uni::length("") == 0);
}
