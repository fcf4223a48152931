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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace plspell {

/// One (error, gold correction) pair. Both fields non-empty, tab-free.
struct ErrorCase {
  std::string error;
  std::string correction;

  bool operator==(const ErrorCase&) const = default;
};

enum class Split { train, dev, test };

constexpr const char* to_string(Split s) {
  switch (s) {
    case Split::train: return "train";
    case Split::dev: return "dev";
    case Split::test: return "test";
  }
  return "?";
}

/// Ordered list of error cases with an optional deterministic
/// train/dev/test assignment. Immutable once split; concurrent reads safe.
class ErrorCorpus {
 public:
  /// Loads a two-column TSV (error <TAB> correction); `#` comment lines and
  /// blank lines are skipped, CRLF accepted. With dedup, repeated
  /// (error, correction) pairs keep their first occurrence only. Throws
  /// LoadError with a line number on rows without exactly two non-empty
  /// columns or malformed UTF-8.
  static ErrorCorpus load_file(const std::string& path, bool dedup);

  static ErrorCorpus from_cases(std::vector<ErrorCase> cases);

  /// Assigns every case to train/dev/test. Subset sizes are exact up to the
  /// rounding of fraction*size (largest-remainder apportionment), and the
  /// assignment is a pure function of (seed, case index): a seeded
  /// permutation of the indices cut at the subset boundaries. Fractions must
  /// be non-negative and sum to 1 within 1e-9; throws ConfigError otherwise.
  void assign_splits(double train, double dev, double test,
                     std::uint64_t seed);

  const std::vector<ErrorCase>& cases() const { return cases_; }
  std::size_t size() const { return cases_.size(); }
  bool has_splits() const { return !assignment_.empty(); }

  /// Split of case `index`; requires assign_splits to have run.
  Split split_of(std::size_t index) const;

  /// Indices belonging to `s`, ascending.
  std::vector<std::size_t> indices(Split s) const;

  /// Cases belonging to `s`, in corpus order.
  std::vector<ErrorCase> subset(Split s) const;

 private:
  std::vector<ErrorCase> cases_;
  std::vector<Split> assignment_;
};

/// Writes cases as the TSV format load_file reads.
void write_corpus(const std::string& path, const std::vector<ErrorCase>& cases);

}  // namespace plspell
