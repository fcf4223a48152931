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

#include <optional>
#include <string>
#include <vector>

namespace plspell {

/// One proposed correction. `combined` is the ranking score (lower is
/// better): the raw edit distance for the edit and diacritic correctors, the
/// mean of scaled edit distance and cosine distance for the vector corrector,
/// and the negative log probability of the emitted sequence for the neural
/// ones.
struct CorrectionCandidate {
  std::string form;
  std::optional<double> edit_score;      // scaled Levenshtein, in [0,1]
  std::optional<double> semantic_score;  // cosine distance, in [0,2]
  double combined = 0.0;
  std::string source;                    // corrector identifier
  std::vector<double> char_probs;        // per-step P(chosen), neural only
};

}  // namespace plspell
