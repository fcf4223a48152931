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
//
// Test-only oracles, independent of the library's implementation paths.

#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "plspell/lexicon.hpp"
#include "plspell/unicode.hpp"

namespace oracles {

/// Plain memoized recursion on the textbook definition; checks the
/// dynamic-programming implementation.
inline std::size_t levenshtein_recursive(std::u32string_view a,
                                         std::u32string_view b) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  const std::function<std::size_t(std::size_t, std::size_t)> go =
      [&](std::size_t i, std::size_t j) -> std::size_t {
    if (i == 0) return j;
    if (j == 0) return i;
    const auto key = std::make_pair(i, j);
    const auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const std::size_t subst =
        go(i - 1, j - 1) + (a[i - 1] == b[j - 1] ? 0 : 1);
    const std::size_t del = go(i - 1, j) + 1;
    const std::size_t ins = go(i, j - 1) + 1;
    const std::size_t best = std::min({subst, del, ins});
    memo.emplace(key, best);
    return best;
  };
  return go(a.size(), b.size());
}

/// Linear scan over every lexicon entry; the BK-tree must return exactly
/// this result set.
inline std::vector<plspell::Lexicon::Match> brute_force_search(
    const plspell::Lexicon& lex, const std::string& token,
    std::size_t max_dist, std::size_t (*distance)(std::u32string_view,
                                                  std::u32string_view)) {
  std::vector<plspell::Lexicon::Match> out;
  const std::u32string query = plspell::uni::to_nfc_code_points(token);
  for (const auto& word : lex.entries()) {
    const std::size_t d =
        distance(plspell::uni::to_nfc_code_points(word), query);
    if (d <= max_dist) out.push_back({word, d});
  }
  std::sort(out.begin(), out.end(),
            [](const plspell::Lexicon::Match& a,
               const plspell::Lexicon::Match& b) {
              if (a.distance != b.distance) return a.distance < b.distance;
              return a.word < b.word;
            });
  return out;
}

/// Random lowercase words over the Polish alphabet, possibly with repeats.
inline std::vector<std::string> random_words(std::size_t count,
                                             std::size_t max_len,
                                             std::mt19937_64& rng) {
  static const std::u32string alphabet =
      U"abcdefghijklmnoprstuwyzącęłńóśżź";
  std::vector<std::string> out;
  out.reserve(count);
  std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
  std::uniform_int_distribution<std::size_t> ch_dist(0, alphabet.size() - 1);
  for (std::size_t i = 0; i < count; ++i) {
    std::u32string w;
    const std::size_t len = len_dist(rng);
    for (std::size_t k = 0; k < len; ++k) w.push_back(alphabet[ch_dist(rng)]);
    out.push_back(plspell::uni::encode_utf8(w));
  }
  return out;
}

/// Writes `content` to a fresh file under the build dir and returns its path.
class TempFile {
 public:
  explicit TempFile(const std::string& content,
                    const std::string& suffix = ".txt") {
    static int counter = 0;
    path_ = "plspell_test_" + std::to_string(counter++) + suffix;
    std::ofstream out(path_, std::ios::binary);
    out << content;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace oracles
