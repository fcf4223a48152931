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

#include "plspell/editdist.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "plspell/unicode.hpp"

namespace plspell {

// Single-row dynamic program; only the previous row and the top-left cell
// are live at any point.
std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);  // keep the row short
  const std::size_t m = a.size(), n = b.size();
  if (n == 0) return m;

  std::vector<std::size_t> row(n + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});

  for (std::size_t i = 1; i <= m; ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t up = row[j];
      const std::size_t subst = diag + (a[i - 1] == b[j - 1] ? 0 : 1);
      row[j] = std::min({subst, row[j - 1] + 1, up + 1});
      diag = up;
    }
  }
  return row[n];
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
  return levenshtein(uni::to_nfc_code_points(a), uni::to_nfc_code_points(b));
}

double scaled_levenshtein(std::u32string_view a, std::u32string_view b) {
  const std::size_t longer = std::max(a.size(), b.size());
  if (longer == 0) return 0.0;
  return static_cast<double>(levenshtein(a, b)) / static_cast<double>(longer);
}

double scaled_levenshtein(std::string_view a, std::string_view b) {
  return scaled_levenshtein(uni::to_nfc_code_points(a),
                            uni::to_nfc_code_points(b));
}

}  // namespace plspell
