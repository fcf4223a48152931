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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "plspell/candidate.hpp"
#include "plspell/corpus.hpp"
#include "plspell/embeddings.hpp"
#include "plspell/lexicon.hpp"
#include "plspell/metrics.hpp"
#include "plspell/neural/external.hpp"
#include "plspell/neural/model.hpp"

namespace plspell {

/// The six evaluated correction methods.
enum class Method { edit, diacritic, vector, lstm1, lstm2, lstm_hook };

Method parse_method(const std::string& name);  // throws ConfigError
const char* to_string(Method m);

/// Which resources a method needs and how to run it. Paths left empty are
/// unset; Corrector::load validates that everything required is present.
struct CorrectorSpec {
  Method method = Method::edit;
  std::string lexicon_path;
  std::string embeddings_path;
  std::string model_path;
  std::string external_path;   // hook layer stacks
  std::size_t external_dim = 0;
  std::size_t external_layers = 3;
  std::size_t max_edit = 3;
  double edit_weight = 0.5;
  bool skip_known = false;     // return lexicon members unchanged
  std::size_t max_decode_extra = 8;
};

/// A loaded, ready-to-query corrector. Read-only after load; queries may run
/// concurrently.
class Corrector {
 public:
  /// Loads every resource the spec's method requires; throws ConfigError
  /// naming the missing path otherwise.
  static Corrector load(const CorrectorSpec& spec);

  /// Ranked corrections for one token (best first). Neural methods return a
  /// single greedy-decoded candidate with per-character probabilities.
  std::vector<CorrectionCandidate> correct(std::string_view token) const;

  /// True for methods that assign probabilities (the neural ones).
  bool probabilistic() const;

  /// Teacher-forced P(gold char) sequence for a test pair (neural only).
  std::vector<double> gold_probs(const std::string& error,
                                 const std::string& gold) const;

  const CorrectorSpec& spec() const { return spec_; }

 private:
  CorrectorSpec spec_;
  std::optional<Lexicon> lexicon_;
  std::optional<EmbeddingStore> embeddings_;
  std::shared_ptr<const neural::Seq2SeqModel> model_;
  std::optional<neural::ExternalLayerStore> external_;
};

/// One evaluated test case, in corpus order.
struct CaseResult {
  std::size_t index = 0;
  std::string error;
  std::string gold;
  std::string predicted;            // empty when no candidate was produced
  bool correct = false;
  std::vector<double> gold_probs;   // teacher-forced, neural methods only
};

struct Evaluation {
  EvalReport report;
  std::vector<CaseResult> cases;
};

/// Runs the corrector over the corpus test split: top-1 exact-match
/// accuracy for all methods, plus teacher-forced test loss and perplexity
/// for neural ones. Empty candidate lists count as wrong. `jobs` > 1 fans
/// the independent cases out across threads; results are merged in case
/// order, so the output is identical at any job count. Throws ConfigError
/// when the corpus has no test split.
Evaluation evaluate(const Corrector& corrector, const ErrorCorpus& corpus,
                    std::size_t jobs = 1);

/// TSV prediction log: case_index, error, gold, predicted, correct(0/1).
void write_prediction_log(const std::string& path,
                          const std::vector<CaseResult>& cases);

}  // namespace plspell
