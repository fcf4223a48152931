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

#include "plspell/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include "plspell/error.hpp"
#include "plspell/unicode.hpp"

namespace plspell {

ErrorCorpus ErrorCorpus::load_file(const std::string& path, bool dedup) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open corpus: " + path);

  std::vector<ErrorCase> cases;
  std::set<std::pair<std::string, std::string>> seen;
  std::string line;
  std::size_t line_no = 0;
  std::u32string decoded;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    std::size_t bad = 0;
    if (!uni::try_decode_utf8(line, decoded, bad)) {
      throw LoadError(path, line_no, "malformed UTF-8");
    }
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw LoadError(path, line_no, "expected exactly two tab-separated columns");
    }
    ErrorCase c{uni::nfc(line.substr(0, tab)), uni::nfc(line.substr(tab + 1))};
    if (c.error.empty() || c.correction.empty()) {
      throw LoadError(path, line_no, "empty column");
    }
    if (dedup && !seen.insert({c.error, c.correction}).second) continue;
    cases.push_back(std::move(c));
  }
  if (in.bad()) throw LoadError("read failure on corpus: " + path);
  return from_cases(std::move(cases));
}

ErrorCorpus ErrorCorpus::from_cases(std::vector<ErrorCase> cases) {
  for (const auto& c : cases) {
    if (c.error.empty() || c.correction.empty() ||
        c.error.find('\t') != std::string::npos ||
        c.correction.find('\t') != std::string::npos) {
      throw LoadError("invalid case: fields must be non-empty and tab-free");
    }
  }
  ErrorCorpus corpus;
  corpus.cases_ = std::move(cases);
  return corpus;
}

void ErrorCorpus::assign_splits(double train, double dev, double test,
                                std::uint64_t seed) {
  const std::array<double, 3> f{train, dev, test};
  for (double x : f) {
    if (x < 0.0 || !std::isfinite(x)) {
      throw ConfigError("split fractions must be non-negative");
    }
  }
  if (std::abs(f[0] + f[1] + f[2] - 1.0) > 1e-9) {
    throw ConfigError("split fractions must sum to 1");
  }

  const std::size_t n = cases_.size();

  // Largest-remainder apportionment: exact floor counts first, then the
  // leftover seats go to the largest fractional parts (ties by subset order).
  std::array<std::size_t, 3> counts{};
  std::array<double, 3> remainder{};
  std::size_t assigned = 0;
  for (int i = 0; i < 3; ++i) {
    const double exact = f[i] * static_cast<double>(n);
    counts[i] = static_cast<std::size_t>(std::floor(exact));
    remainder[i] = exact - std::floor(exact);
    assigned += counts[i];
  }
  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return remainder[a] > remainder[b]; });
  for (std::size_t k = 0; assigned < n; ++k, ++assigned) counts[order[k % 3]]++;

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);

  assignment_.assign(n, Split::test);
  std::size_t pos = 0;
  for (std::size_t k = 0; k < counts[0]; ++k) assignment_[perm[pos++]] = Split::train;
  for (std::size_t k = 0; k < counts[1]; ++k) assignment_[perm[pos++]] = Split::dev;
  for (std::size_t k = 0; k < counts[2]; ++k) assignment_[perm[pos++]] = Split::test;
}

Split ErrorCorpus::split_of(std::size_t index) const {
  if (index >= assignment_.size()) {
    throw ConfigError("split_of: corpus has no split assignment");
  }
  return assignment_[index];
}

std::vector<std::size_t> ErrorCorpus::indices(Split s) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    if (assignment_[i] == s) out.push_back(i);
  }
  return out;
}

std::vector<ErrorCase> ErrorCorpus::subset(Split s) const {
  std::vector<ErrorCase> out;
  for (std::size_t i : indices(s)) out.push_back(cases_[i]);
  return out;
}

void write_corpus(const std::string& path,
                  const std::vector<ErrorCase>& cases) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw LoadError("cannot write corpus: " + path);
  for (const auto& c : cases) {
    out << c.error << '\t' << c.correction << '\n';
  }
  if (!out) throw LoadError("write failure on corpus: " + path);
}

}  // namespace plspell
