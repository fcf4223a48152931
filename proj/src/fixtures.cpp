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

#include "plspell/fixtures.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <map>
#include <random>
#include <set>
#include <unordered_map>

#include "plspell/diacritics.hpp"
#include "plspell/error.hpp"
#include "plspell/unicode.hpp"

namespace plspell::fixtures {
namespace {

// QWERTY neighbors over the basic Latin letters; diacritic forms share the
// neighbors of their base key (they sit on the same physical key via AltGr).
const std::unordered_map<char32_t, std::u32string>& keyboard_neighbors() {
  static const std::unordered_map<char32_t, std::u32string> map = [] {
    std::unordered_map<char32_t, std::u32string> m;
    const char* rows[] = {"qwertyuiop", "asdfghjkl", "zxcvbnm"};
    for (int r = 0; r < 3; ++r) {
      const std::string row = rows[r];
      for (std::size_t i = 0; i < row.size(); ++i) {
        std::u32string n;
        if (i > 0) n.push_back(static_cast<char32_t>(row[i - 1]));
        if (i + 1 < row.size()) n.push_back(static_cast<char32_t>(row[i + 1]));
        m[static_cast<char32_t>(row[i])] = n;
      }
    }
    return m;
  }();
  return map;
}

std::u32string neighbors_of(char32_t c) {
  const auto& map = keyboard_neighbors();
  const char32_t base = DiacriticTable::polish().strip(c);
  const auto it = map.find(base);
  if (it != map.end()) return it->second;
  return U"";
}

// One random neighbor substitution, deletion or insertion.
std::u32string corrupt(const std::u32string& word, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pos_dist(0, word.size() - 1);
  const std::size_t pos = pos_dist(rng);
  std::u32string out = word;
  switch (rng() % 3) {
    case 0: {  // substitute
      const std::u32string n = neighbors_of(word[pos]);
      if (!n.empty()) {
        out[pos] = n[rng() % n.size()];
        break;
      }
      [[fallthrough]];
    }
    case 1:  // delete
      if (out.size() > 1) {
        out.erase(pos, 1);
        break;
      }
      [[fallthrough]];
    default: {  // insert a neighbor of the character at pos
      const std::u32string n = neighbors_of(word[pos]);
      const char32_t ins = n.empty() ? word[pos] : n[rng() % n.size()];
      out.insert(pos, 1, ins);
      break;
    }
  }
  return out;
}

void format_value(std::ofstream& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  out << buf;
}

}  // namespace

Mode parse_mode(const std::string& name) {
  if (name == "strip") return Mode::strip;
  if (name == "keyboard") return Mode::keyboard;
  if (name == "mixed") return Mode::mixed;
  throw ConfigError("unknown fixture mode '" + name +
                    "' (expected strip, keyboard or mixed)");
}

std::vector<std::string> unique_restoration_words(const Lexicon& lex) {
  // Two lexicon words collide exactly when they share a stripped image; a
  // bucket of one means its stripped form restores uniquely.
  std::map<std::string, std::size_t> bucket_sizes;
  for (const auto& w : lex.entries()) ++bucket_sizes[strip_diacritics(w)];

  std::vector<std::string> out;
  for (const auto& w : lex.entries()) {
    const std::string stripped = strip_diacritics(w);
    if (stripped == w) continue;
    if (bucket_sizes[stripped] != 1) continue;
    if (uni::length(stripped) >= kDiacriticLengthGuard) continue;
    out.push_back(w);
  }
  return out;
}

std::vector<ErrorCase> make_cases(const Lexicon& lex, Mode mode,
                                  std::size_t count, std::uint64_t seed) {
  if (lex.empty()) throw ConfigError("fixture generation needs a non-empty lexicon");
  std::mt19937_64 rng(seed);
  std::vector<ErrorCase> out;

  if (mode == Mode::strip || mode == Mode::mixed) {
    std::vector<std::string> words = unique_restoration_words(lex);
    std::shuffle(words.begin(), words.end(), rng);
    const std::size_t want = mode == Mode::mixed ? (count + 1) / 2 : count;
    for (const auto& w : words) {
      if (out.size() >= want) break;
      out.push_back(ErrorCase{strip_diacritics(w), w});
    }
  }

  if (mode == Mode::keyboard || mode == Mode::mixed) {
    std::uniform_int_distribution<std::size_t> word_dist(0, lex.size() - 1);
    std::set<std::string> used;
    std::size_t attempts = 0;
    const std::size_t max_attempts = count * 200 + 1000;
    while (out.size() < count && attempts++ < max_attempts) {
      const std::string& word = lex.entries()[word_dist(rng)];
      const std::u32string points = uni::to_nfc_code_points(word);
      if (points.empty()) continue;
      const std::u32string bad = corrupt(points, rng);
      if (bad == points || bad.empty()) continue;
      const std::string error = uni::encode_utf8(bad);
      if (lex.contains(error)) continue;  // must stay a non-word
      if (!used.insert(error + "\t" + word).second) continue;
      out.push_back(ErrorCase{error, word});
    }
  }

  if (out.size() > count) out.resize(count);
  return out;
}

void write_embedding_fixture(const std::string& path, const Lexicon& lex,
                             const std::vector<ErrorCase>& cases,
                             std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  const auto random_vec = [&] {
    std::vector<double> v(dim);
    for (double& x : v) x = gauss(rng);
    return v;
  };

  // Deterministic order: lexicon entries, then error tokens in case order.
  std::map<std::string, std::vector<double>> vectors;
  for (const auto& w : lex.entries()) vectors[w] = random_vec();
  for (const auto& c : cases) {
    if (vectors.count(c.error)) continue;
    auto it = vectors.find(c.correction);
    std::vector<double> v = it != vectors.end() ? it->second : random_vec();
    for (double& x : v) x += 0.1 * gauss(rng);  // error embeds near its gold
    vectors[c.error] = std::move(v);
  }

  std::ofstream out(path, std::ios::binary);
  if (!out) throw LoadError("cannot write embeddings: " + path);
  out << vectors.size() << ' ' << dim << '\n';
  for (const auto& [token, vec] : vectors) {
    out << token;
    for (double v : vec) {
      out << ' ';
      format_value(out, v);
    }
    out << '\n';
  }
  if (!out) throw LoadError("write failure on embeddings: " + path);
}

void write_external_layer_fixture(const std::string& path,
                                  const std::vector<ErrorCase>& cases,
                                  std::size_t dim, std::size_t layers,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::set<std::string> tokens;
  for (const auto& c : cases) tokens.insert(c.error);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw LoadError("cannot write external layers: " + path);
  for (const auto& token : tokens) {
    for (std::size_t l = 0; l < layers; ++l) {
      out << token << ' ' << l;
      for (std::size_t i = 0; i < dim; ++i) {
        out << ' ';
        format_value(out, gauss(rng));
      }
      out << '\n';
    }
  }
  if (!out) throw LoadError("write failure on external layers: " + path);
}

std::vector<std::string> sample_word_list(std::size_t count,
                                          std::uint64_t seed) {
  // Syllable soup with a Polish flavor; deduplicated, deterministic.
  static const char* kOnsets[] = {"k",  "p",  "t",  "m",  "n",   "r",  "s",
                                  "w",  "z",  "b",  "d",  "g",   "ch", "cz",
                                  "sz", "rz", "pr", "kr", "st",  "tr"};
  static const char* kNuclei[] = {"a", "e", "o", "u", "i", "y",
                                  "ą", "ę", "ó", "ie", "ia"};
  static const char* kCodas[] = {"",  "k", "m", "n", "r", "s",  "t",
                                 "w", "j", "l", "ł", "ść", "ń", "ż"};
  std::mt19937_64 rng(seed);
  std::set<std::string> words;
  while (words.size() < count) {
    std::string w;
    const std::size_t syllables = 2 + rng() % 3;
    for (std::size_t s = 0; s < syllables; ++s) {
      w += kOnsets[rng() % std::size(kOnsets)];
      w += kNuclei[rng() % std::size(kNuclei)];
      if (rng() % 2 == 0) w += kCodas[rng() % std::size(kCodas)];
    }
    words.insert(w);
  }
  return {words.begin(), words.end()};
}

}  // namespace plspell::fixtures
