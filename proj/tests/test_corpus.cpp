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

#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "plspell/error.hpp"
#include "plspell/fixtures.hpp"

using namespace plspell;

TEST_CASE("dedup keeps the first occurrence") {
  oracles::TempFile f("kot\tkot\npies\tpies\nkot\tkot\n");
  CHECK(ErrorCorpus::load_file(f.path(), true).size() == 2);
  CHECK(ErrorCorpus::load_file(f.path(), false).size() == 3);
}

TEST_CASE("comments and blank lines are skipped") {
  oracles::TempFile f("# corpus\n\nkott\tkot\n");
  const ErrorCorpus corpus = ErrorCorpus::load_file(f.path(), true);
  REQUIRE(corpus.size() == 1);
  CHECK(corpus.cases()[0].error == "kott");
  CHECK(corpus.cases()[0].correction == "kot");
}

TEST_CASE("crlf and lf corpora load identically") {
  oracles::TempFile lf("kott\tkot\npiess\tpies\n");
  oracles::TempFile crlf("kott\tkot\r\npiess\tpies\r\n");
  const auto a = ErrorCorpus::load_file(lf.path(), false);
  const auto b = ErrorCorpus::load_file(crlf.path(), false);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.cases()[i] == b.cases()[i]);
  }
}

TEST_CASE("rows must have exactly two non-empty columns") {
  oracles::TempFile one_col("kot\n");
  CHECK_THROWS_WITH_AS(ErrorCorpus::load_file(one_col.path(), false),
                       doctest::Contains(":1:"), LoadError);
  oracles::TempFile three_col("a\tb\tc\n");
  CHECK_THROWS_AS(ErrorCorpus::load_file(three_col.path(), false), LoadError);
  oracles::TempFile empty_col("kot\t\n");
  CHECK_THROWS_AS(ErrorCorpus::load_file(empty_col.path(), false), LoadError);
}

TEST_CASE("exact split sizes at the paper's shares") {
  std::vector<ErrorCase> cases;
  for (int i = 0; i < 100; ++i) {
    cases.push_back({"e" + std::to_string(i), "c" + std::to_string(i)});
  }
  ErrorCorpus corpus = ErrorCorpus::from_cases(cases);
  corpus.assign_splits(0.70, 0.05, 0.25, 1);
  CHECK(corpus.indices(Split::train).size() == 70);
  CHECK(corpus.indices(Split::dev).size() == 5);
  CHECK(corpus.indices(Split::test).size() == 25);
}

TEST_CASE("degenerate fractions put everything in train") {
  std::vector<ErrorCase> cases;
  for (int i = 0; i < 17; ++i) {
    cases.push_back({"e" + std::to_string(i), "c"});
  }
  ErrorCorpus corpus = ErrorCorpus::from_cases(cases);
  corpus.assign_splits(1.0, 0.0, 0.0, 9);
  CHECK(corpus.indices(Split::train).size() == 17);
  CHECK(corpus.indices(Split::test).empty());
}

TEST_CASE("same seed reproduces the assignment, different seeds move it") {
  std::vector<ErrorCase> cases;
  for (int i = 0; i < 200; ++i) {
    cases.push_back({"e" + std::to_string(i), "c"});
  }
  ErrorCorpus a = ErrorCorpus::from_cases(cases);
  ErrorCorpus b = ErrorCorpus::from_cases(cases);
  ErrorCorpus c = ErrorCorpus::from_cases(cases);
  a.assign_splits(0.70, 0.05, 0.25, 42);
  b.assign_splits(0.70, 0.05, 0.25, 42);
  c.assign_splits(0.70, 0.05, 0.25, 43);

  bool same_ab = true, same_ac = true;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    same_ab = same_ab && a.split_of(i) == b.split_of(i);
    same_ac = same_ac && a.split_of(i) == c.split_of(i);
  }
  CHECK(same_ab);
  CHECK_FALSE(same_ac);
}

TEST_CASE("splits partition the corpus") {
  std::vector<ErrorCase> cases;
  for (int i = 0; i < 137; ++i) {
    cases.push_back({"e" + std::to_string(i), "c"});
  }
  ErrorCorpus corpus = ErrorCorpus::from_cases(cases);
  corpus.assign_splits(0.6, 0.15, 0.25, 5);
  std::set<std::size_t> seen;
  for (Split s : {Split::train, Split::dev, Split::test}) {
    for (std::size_t i : corpus.indices(s)) {
      CHECK(seen.insert(i).second);  // disjoint
    }
  }
  CHECK(seen.size() == corpus.size());  // covering

  // sizes within one case of the exact fractions
  CHECK(std::abs(static_cast<double>(corpus.indices(Split::train).size()) -
                 0.6 * 137.0) <= 1.0);
  CHECK(std::abs(static_cast<double>(corpus.indices(Split::dev).size()) -
                 0.15 * 137.0) <= 1.0);
}

TEST_CASE("invalid fractions are rejected") {
  ErrorCorpus corpus = ErrorCorpus::from_cases({{"a", "b"}});
  CHECK_THROWS_AS(corpus.assign_splits(0.5, 0.5, 0.5, 0), ConfigError);
  CHECK_THROWS_AS(corpus.assign_splits(-0.1, 0.6, 0.5, 0), ConfigError);
}

TEST_CASE("corpus write/load round trip") {
  const std::vector<ErrorCase> cases{{"kott", "kot"}, {"żólw", "żółw"}};
  oracles::TempFile f("");
  write_corpus(f.path(), cases);
  const ErrorCorpus corpus = ErrorCorpus::load_file(f.path(), false);
  REQUIRE(corpus.size() == 2);
  CHECK(corpus.cases()[0] == cases[0]);
  CHECK(corpus.cases()[1] == cases[1]);
}

TEST_CASE("strip fixtures restore uniquely by construction") {
  std::mt19937_64 rng(77);
  const Lexicon lex =
      Lexicon::from_words(fixtures::sample_word_list(400, 3));
  const auto cases = fixtures::make_cases(lex, fixtures::Mode::strip, 50, 1);
  CHECK(!cases.empty());
  for (const auto& c : cases) {
    CHECK(c.error != c.correction);
    CHECK(lex.contains(c.correction));
  }
}

TEST_CASE("keyboard fixtures corrupt into non-words") {
  const Lexicon lex = Lexicon::from_words(fixtures::sample_word_list(300, 4));
  const auto cases =
      fixtures::make_cases(lex, fixtures::Mode::keyboard, 60, 2);
  CHECK(cases.size() == 60);
  for (const auto& c : cases) {
    CHECK_FALSE(lex.contains(c.error));
    CHECK(lex.contains(c.correction));
  }
}
