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
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "plspell/candidate.hpp"
#include "plspell/lexicon.hpp"

namespace plspell {

/// Token -> dense vector map in the word2vec text convention. Immutable after
/// load; concurrent reads are safe.
class EmbeddingStore {
 public:
  /// Loads a word2vec-style text file: an optional "<count> <dim>" header
  /// (autodetected by the first line consisting of exactly two integers),
  /// then one "token v1 ... vdim" line per vector. Duplicate tokens: last
  /// occurrence wins and duplicate_count() is bumped. Throws LoadError with
  /// a line number on dimension mismatches, zero vectors or parse failures.
  static EmbeddingStore load_file(const std::string& path);

  /// Builds a store from in-memory pairs (fixtures and tests).
  static EmbeddingStore from_pairs(
      std::size_t dim,
      const std::vector<std::pair<std::string, std::vector<double>>>& pairs);

  std::size_t dim() const { return dim_; }
  std::size_t vocab_size() const { return vectors_.size(); }
  std::size_t duplicate_count() const { return duplicates_; }

  /// Vector for the NFC form of `token`, or nullptr when absent.
  const std::vector<double>* find(std::string_view token) const;

  /// Copy with every vector multiplied by `factor`. Cosine distance is
  /// scale-free, so candidate rankings must not change under this.
  EmbeddingStore scaled(double factor) const;

 private:
  std::size_t dim_ = 0;
  std::size_t duplicates_ = 0;
  std::unordered_map<std::string, std::vector<double>> vectors_;
};

/// 1 - cos(u, v), in [0, 2]. Throws MathDomainError on dimension mismatch or
/// a zero-norm operand.
double cosine_distance(std::span<const double> u, std::span<const double> v);

/// Combined edit/semantic corrector. Candidates come from
/// lex.fuzzy_search(token, max_edit); when the error token has a vector, the
/// pool is intersected with the embedding vocabulary and each candidate c is
/// scored
///
///   D = edit_weight * scaled_levenshtein(token, c)
///     + (1 - edit_weight) * cosine_distance(V(token), V(c))
///
/// which at the default edit_weight of 0.5 is the plain mean of the two
/// distances. When the token has no vector the pool is not intersected, the
/// ranking falls back to scaled edit distance alone and the candidates'
/// source field records the fallback. Ascending score, ties lexicographic.
std::vector<CorrectionCandidate> vector_distance_correct(
    std::string_view token, const Lexicon& lex, const EmbeddingStore& emb,
    std::size_t max_edit, double edit_weight = 0.5);

}  // namespace plspell
