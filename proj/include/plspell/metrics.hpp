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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace plspell {

/// Fraction of exact matches (code-point equality after NFC). Throws
/// MathDomainError on an empty list.
double accuracy(
    const std::vector<std::pair<std::string, std::string>>& predicted_gold);

/// Per-token perplexity 2^(-(1/N) sum log2 P(x_i)) over one probability
/// sequence. Probabilities <= 0 are clamped to 1e-12 and counted through
/// `clamped` when given, never thrown on.
double sequence_perplexity(std::span<const double> probs,
                           std::size_t* clamped = nullptr);

/// Cross-entropy in bits per character of one probability sequence; the
/// sequence perplexity is exactly 2 to this power.
double cross_entropy_bits(std::span<const double> probs,
                          std::size_t* clamped = nullptr);

/// Mean natural-log cross-entropy per character over all sequences pooled
/// (total nats / total characters).
double mean_cross_entropy_nats(const std::vector<std::vector<double>>& seqs,
                               std::size_t* clamped = nullptr);

struct PerplexityResult {
  double mean_perplexity = 0.0;  // arithmetic mean of per-token perplexities
  std::size_t clamped = 0;       // zero probabilities clamped to 1e-12
};

/// Corpus-level perplexity: the arithmetic mean of per-token perplexities.
PerplexityResult corpus_perplexity(
    const std::vector<std::vector<double>>& prob_seqs);

/// One row of the evaluation table. Perplexity and the cross-entropies are
/// present only for probabilistic (neural) methods.
struct EvalReport {
  std::string method;
  double accuracy = 0.0;
  std::optional<double> perplexity;
  std::optional<double> test_loss;  // mean cross-entropy, nats per character
  std::size_t case_count = 0;
};

/// Renders reports as an aligned text table (header + one row per method).
std::string render_table(const std::vector<EvalReport>& reports);

/// Same content as TSV: method, accuracy, perplexity, loss, cases.
/// Absent fields render as "-".
std::string render_tsv(const std::vector<EvalReport>& reports);

}  // namespace plspell
