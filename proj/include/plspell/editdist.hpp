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

#include <cstddef>
#include <string_view>

namespace plspell {

/// Unit-cost Levenshtein distance over Unicode code points. Insertions,
/// deletions and substitutions each cost one; transpositions get no special
/// treatment.
std::size_t levenshtein(std::u32string_view a, std::u32string_view b);

/// Convenience overload decoding UTF-8 and composing NFC first.
std::size_t levenshtein(std::string_view a, std::string_view b);

/// levenshtein(a, b) / max(|a|, |b|), measured in code points; 0 when both
/// strings are empty. Always in [0, 1].
double scaled_levenshtein(std::u32string_view a, std::u32string_view b);
double scaled_levenshtein(std::string_view a, std::string_view b);

}  // namespace plspell
