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

#include "plspell/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "plspell/error.hpp"
#include "plspell/unicode.hpp"

namespace plspell {
namespace {

constexpr double kProbFloor = 1e-12;

double clamped_log2(double p, std::size_t* clamped) {
  if (p <= 0.0) {
    if (clamped != nullptr) ++*clamped;
    p = kProbFloor;
  }
  return std::log2(p);
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string format_opt(const std::optional<double>& v) {
  return v.has_value() ? format_value(*v) : std::string("-");
}

}  // namespace

double accuracy(
    const std::vector<std::pair<std::string, std::string>>& predicted_gold) {
  if (predicted_gold.empty()) {
    throw MathDomainError("accuracy: empty prediction list");
  }
  std::size_t hits = 0;
  for (const auto& [predicted, gold] : predicted_gold) {
    if (uni::nfc(predicted) == uni::nfc(gold)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(predicted_gold.size());
}

double cross_entropy_bits(std::span<const double> probs,
                          std::size_t* clamped) {
  if (probs.empty()) {
    throw MathDomainError("cross_entropy_bits: empty probability sequence");
  }
  double sum = 0.0;
  for (double p : probs) sum += clamped_log2(p, clamped);
  return -sum / static_cast<double>(probs.size());
}

double sequence_perplexity(std::span<const double> probs,
                           std::size_t* clamped) {
  return std::exp2(cross_entropy_bits(probs, clamped));
}

double mean_cross_entropy_nats(const std::vector<std::vector<double>>& seqs,
                               std::size_t* clamped) {
  double nats = 0.0;
  std::size_t chars = 0;
  for (const auto& seq : seqs) {
    for (double p : seq) {
      nats -= clamped_log2(p, clamped) * std::log(2.0);
      ++chars;
    }
  }
  if (chars == 0) {
    throw MathDomainError("mean_cross_entropy_nats: no characters");
  }
  return nats / static_cast<double>(chars);
}

PerplexityResult corpus_perplexity(
    const std::vector<std::vector<double>>& prob_seqs) {
  if (prob_seqs.empty()) {
    throw MathDomainError("corpus_perplexity: no sequences");
  }
  PerplexityResult r;
  double sum = 0.0;
  for (const auto& seq : prob_seqs) {
    sum += sequence_perplexity(seq, &r.clamped);
  }
  r.mean_perplexity = sum / static_cast<double>(prob_seqs.size());
  return r;
}

std::string render_table(const std::vector<EvalReport>& reports) {
  // Column widths match the longest cell; method column left-aligned.
  std::size_t method_w = std::string("Method").size();
  for (const auto& r : reports) method_w = std::max(method_w, r.method.size());

  std::ostringstream out;
  out << std::left;
  const auto row = [&](const std::string& m, const std::string& acc,
                       const std::string& ppl, const std::string& loss,
                       const std::string& cases) {
    out.width(static_cast<std::streamsize>(method_w));
    out << m;
    out << "  ";
    out.width(10);
    out << acc;
    out.width(14);
    out << ppl;
    out.width(12);
    out << loss;
    out << cases << '\n';
  };
  row("Method", "Accuracy", "Perplexity", "Loss(test)", "Cases");
  for (const auto& r : reports) {
    row(r.method, format_value(r.accuracy), format_opt(r.perplexity),
        format_opt(r.test_loss), std::to_string(r.case_count));
  }
  return out.str();
}

std::string render_tsv(const std::vector<EvalReport>& reports) {
  std::ostringstream out;
  out << "method\taccuracy\tperplexity\tloss_test\tcases\n";
  for (const auto& r : reports) {
    out << r.method << '\t' << format_value(r.accuracy) << '\t'
        << format_opt(r.perplexity) << '\t' << format_opt(r.test_loss) << '\t'
        << r.case_count << '\n';
  }
  return out.str();
}

}  // namespace plspell
