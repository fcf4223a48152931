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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "plspell/candidate.hpp"
#include "plspell/lexicon.hpp"

namespace plspell {

/// Tokens at or above this many code points are not attempted by the
/// diacritic corrector; the variant space grows as a per-character product
/// and becomes intractable for long tokens.
inline constexpr std::size_t kDiacriticLengthGuard = 17;

/// Per-character swap options for the Polish diacritic pairs a↔ą, c↔ć, e↔ę,
/// l↔ł, n↔ń, o↔ó, s↔ś, z↔ż, z↔ź and their uppercase counterparts. A marked
/// letter swaps only down to its base form (ż and ź do not reach each other
/// in one move); a base letter swaps up to every marked form built on it.
class DiacriticTable {
 public:
  static const DiacriticTable& polish();

  /// Options for `c`, the character itself first, remaining options in code
  /// point order. Untabled characters map to themselves only.
  std::u32string options(char32_t c) const;

  bool tabled(char32_t c) const;

  /// Base letter with all marks removed (identity for untabled characters).
  char32_t strip(char32_t c) const;

 private:
  DiacriticTable();
  struct Entry {
    char32_t ch;
    std::u32string opts;  // excluding ch itself
    char32_t base;
  };
  const Entry* find(char32_t c) const;
  std::vector<Entry> entries_;
};

/// Streams the Cartesian product of per-character options without
/// materializing it. Positions advance odometer-style with the rightmost
/// position cycling fastest; the original token comes out first. Single
/// consumer; independent instances may run concurrently.
class VariantEnumerator {
 public:
  VariantEnumerator(std::u32string_view token, const DiacriticTable& table);

  /// Writes the next variant and returns true, or returns false when the
  /// product is exhausted.
  bool next(std::u32string& out);

 private:
  std::vector<std::u32string> options_;  // per position
  std::vector<std::size_t> odometer_;
  bool done_;
};

/// Number of diacritic variants of `token`: the product of per-character
/// option counts, computed without enumeration. Saturates at UINT64_MAX.
std::uint64_t variant_count(std::u32string_view token,
                            const DiacriticTable& table);
std::uint64_t variant_count(std::string_view token,
                            const DiacriticTable& table);

/// Diacritical swapping corrector: enumerates variants of `token`, keeps the
/// ones present in `lex` and ranks them by (Levenshtein distance to the
/// token asc, form lexicographic asc). Tokens of kDiacriticLengthGuard or
/// more code points yield an empty list.
std::vector<CorrectionCandidate> diacritic_correct(std::string_view token,
                                                   const Lexicon& lex);

/// All diacritic marks removed, e.g. "ołówek" -> "olowek".
std::string strip_diacritics(std::string_view token);

}  // namespace plspell
