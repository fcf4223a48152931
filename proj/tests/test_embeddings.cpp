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

#include "plspell/embeddings.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "plspell/error.hpp"

using namespace plspell;

TEST_CASE("load with header") {
  oracles::TempFile f("2 3\nkot 1.0 0.0 0.5\npies 0.25 -1.0 2.0\n");
  const EmbeddingStore store = EmbeddingStore::load_file(f.path());
  CHECK(store.dim() == 3);
  CHECK(store.vocab_size() == 2);
  REQUIRE(store.find("kot") != nullptr);
  CHECK((*store.find("kot"))[0] == 1.0);
  CHECK(store.find("ryba") == nullptr);
}

TEST_CASE("headerless files are autodetected") {
  oracles::TempFile f("kot 1.0 0.0\npies 0.5 0.5\n");
  const EmbeddingStore store = EmbeddingStore::load_file(f.path());
  CHECK(store.dim() == 2);
  CHECK(store.vocab_size() == 2);
}

TEST_CASE("dimension mismatch names the line") {
  oracles::TempFile f("3 3\nkot 1.0 0.0 0.5\npies 0.25 -1.0\nryba 1 2 3\n");
  CHECK_THROWS_WITH_AS(EmbeddingStore::load_file(f.path()),
                       doctest::Contains(":3:"), LoadError);
}

TEST_CASE("zero vectors are rejected") {
  oracles::TempFile f("kot 0.0 0.0 0.0\n");
  CHECK_THROWS_AS(EmbeddingStore::load_file(f.path()), LoadError);
}

TEST_CASE("duplicate tokens: last wins and the duplicate is counted") {
  oracles::TempFile f("kot 1.0 0.0\nkot 0.0 1.0\n");
  const EmbeddingStore store = EmbeddingStore::load_file(f.path());
  CHECK(store.vocab_size() == 1);
  CHECK(store.duplicate_count() == 1);
  CHECK((*store.find("kot"))[1] == 1.0);
}

TEST_CASE("text round trip") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> value(-5.0, 5.0);
  const std::size_t dim = 4;
  std::ostringstream content;
  std::vector<std::pair<std::string, std::vector<double>>> expected;
  content << 100 << ' ' << dim << '\n';
  const auto words = oracles::random_words(200, 8, rng);
  for (std::size_t i = 0; i < 100; ++i) {
    const std::string token = words[i] + std::to_string(i);  // unique
    std::vector<double> vec(dim);
    content << token;
    for (double& v : vec) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.6f", value(rng));
      v = std::strtod(buf, nullptr);
      content << ' ' << buf;
    }
    content << '\n';
    expected.emplace_back(token, vec);
  }
  oracles::TempFile f(content.str());
  const EmbeddingStore store = EmbeddingStore::load_file(f.path());
  REQUIRE(store.vocab_size() == 100);
  for (const auto& [token, vec] : expected) {
    const auto* got = store.find(token);
    REQUIRE(got != nullptr);
    for (std::size_t k = 0; k < dim; ++k) CHECK((*got)[k] == vec[k]);
  }
}

TEST_CASE("cosine distance basics") {
  const std::vector<double> ex{1.0, 0.0};
  const std::vector<double> ey{0.0, 1.0};
  const std::vector<double> nex{-1.0, 0.0};
  CHECK(cosine_distance(ex, ex) == doctest::Approx(0.0));
  CHECK(cosine_distance(ex, ey) == doctest::Approx(1.0));
  CHECK(cosine_distance(ex, nex) == doctest::Approx(2.0));

  const std::vector<double> zero{0.0, 0.0};
  CHECK_THROWS_AS(cosine_distance(ex, zero), MathDomainError);
  const std::vector<double> three{1.0, 2.0, 3.0};
  CHECK_THROWS_AS(cosine_distance(ex, three), MathDomainError);
}

namespace {

// Error token plus two candidates: c1 is further by edit distance (0.2 vs
// 0.1) but much closer semantically (0.1 vs 0.4), so c1 must win:
// D(c1) = (0.2 + 0.1)/2 = 0.15 < D(c2) = (0.1 + 0.4)/2 = 0.25.
const char* kToken = "aaaaaaaaaa";  // 10 chars
const char* kC1 = "aaaaaaaabb";     // 2 substitutions, scaled 0.2
const char* kC2 = "aaaaaaaaab";     // 1 substitution, scaled 0.1

EmbeddingStore two_candidate_store() {
  return EmbeddingStore::from_pairs(
      2, {
             {kToken, {1.0, 0.0}},
             {kC1, {0.9, std::sqrt(1.0 - 0.81)}},  // cos 0.9, CD 0.1
             {kC2, {0.6, 0.8}},                    // cos 0.6, CD 0.4
         });
}

}  // namespace

TEST_CASE("semantic signal can override a smaller edit distance") {
  const Lexicon lex = Lexicon::from_words({kC1, kC2});
  const EmbeddingStore emb = two_candidate_store();
  const auto ranked = vector_distance_correct(kToken, lex, emb, 3);
  REQUIRE(ranked.size() == 2);
  CHECK(ranked[0].form == kC1);
  CHECK(ranked[0].combined == doctest::Approx(0.15));
  CHECK(ranked[1].form == kC2);
  CHECK(ranked[1].combined == doctest::Approx(0.25));
  CHECK(ranked[0].source == "vector");
}

TEST_CASE("in-vocabulary token ranks itself first with score zero") {
  const Lexicon lex = Lexicon::from_words({"kot", "kos"});
  const EmbeddingStore emb = EmbeddingStore::from_pairs(
      2, {{"kot", {1.0, 0.5}}, {"kos", {0.5, 1.0}}});
  const auto ranked = vector_distance_correct("kot", lex, emb, 2);
  REQUIRE(!ranked.empty());
  CHECK(ranked[0].form == "kot");
  CHECK(ranked[0].combined == doctest::Approx(0.0));
}

TEST_CASE("no embedding and no nearby lexicon word gives an empty list") {
  const Lexicon lex = Lexicon::from_words({"zupełnie"});
  const EmbeddingStore emb =
      EmbeddingStore::from_pairs(2, {{"zupełnie", {1.0, 0.0}}});
  CHECK(vector_distance_correct("xyz", lex, emb, 1).empty());
}

TEST_CASE("tokens without vectors fall back to edit distance") {
  const Lexicon lex = Lexicon::from_words({"kot", "kos"});
  // neither candidate has a vector; were the pool intersected, it would be
  // empty rather than falling back
  const EmbeddingStore emb =
      EmbeddingStore::from_pairs(2, {{"inny", {1.0, 0.0}}});
  const auto ranked = vector_distance_correct("kox", lex, emb, 1);
  REQUIRE(ranked.size() == 2);
  CHECK(ranked[0].source == "vector:edit-fallback");
  CHECK_FALSE(ranked[0].semantic_score.has_value());
}

TEST_CASE("combined score is the mean of its two parts") {
  const Lexicon lex = Lexicon::from_words({kC1, kC2});
  const EmbeddingStore emb = two_candidate_store();
  for (const auto& c : vector_distance_correct(kToken, lex, emb, 3)) {
    REQUIRE(c.edit_score.has_value());
    REQUIRE(c.semantic_score.has_value());
    CHECK(c.combined == (*c.edit_score + *c.semantic_score) / 2.0);
  }
}

TEST_CASE("distance of a token to itself is zero and symmetric") {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<std::pair<std::string, std::vector<double>>> pairs;
  auto words = oracles::random_words(50, 8, rng);
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  for (const auto& w : words) {
    pairs.emplace_back(w, std::vector<double>{g(rng), g(rng), g(rng)});
  }
  const EmbeddingStore emb = EmbeddingStore::from_pairs(3, pairs);
  const Lexicon lex = Lexicon::from_words(words);
  for (const auto& w : words) {
    const auto ranked = vector_distance_correct(w, lex, emb, 1);
    REQUIRE(!ranked.empty());
    CHECK(ranked[0].form == w);
    CHECK(ranked[0].combined == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("ranking is invariant under uniform vector scaling") {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> g(0.0, 1.0);
  auto words = oracles::random_words(80, 6, rng);
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  std::vector<std::pair<std::string, std::vector<double>>> pairs;
  for (const auto& w : words) {
    pairs.emplace_back(w, std::vector<double>{g(rng), g(rng), g(rng), g(rng)});
  }
  const EmbeddingStore emb = EmbeddingStore::from_pairs(4, pairs);
  const EmbeddingStore scaled = emb.scaled(7.3);
  const Lexicon lex = Lexicon::from_words(words);

  for (const auto& q : oracles::random_words(40, 6, rng)) {
    const auto a = vector_distance_correct(q, lex, emb, 2);
    const auto b = vector_distance_correct(q, lex, scaled, 2);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].form == b[i].form);  // order equality, not score equality
    }
  }
}
