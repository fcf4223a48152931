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

#include <cstdint>
#include <vector>

#include "plspell/corpus.hpp"
#include "plspell/neural/model.hpp"

namespace plspell::neural {

struct TrainConfig {
  std::size_t epochs = 35;
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  std::size_t batch_size = 32;
  std::uint64_t seed = 0;
  std::size_t hidden_dim = 128;
  std::size_t embedding_dim = 64;
  std::size_t max_decode_extra = 8;  // decode budget: input length + this
};

/// Adam over a fixed parameter list, consuming the gradients accumulated in
/// the tensors.
class AdamOptimizer {
 public:
  AdamOptimizer(std::vector<Tensor*> params, double learning_rate,
                double beta1, double beta2, double epsilon);

  void step();

 private:
  std::vector<Tensor*> params_;
  std::vector<Matrix> m_, v_;
  double lr_, beta1_, beta2_, eps_;
  std::size_t t_ = 0;
};

struct TrainResult {
  std::vector<double> loss_history;   // one mean-per-character value per epoch
  std::size_t missing_external = 0;   // hook tokens without a layer stack
};

/// Teacher-forced training: per-epoch shuffled batches, loss is the mean
/// cross-entropy per character within each batch, minimized with Adam.
/// Deterministic for a fixed seed. Throws TrainError (naming epoch and
/// batch) when the loss turns non-finite.
TrainResult train(Seq2SeqModel& model, const std::vector<ErrorCase>& cases,
                  const TrainConfig& cfg,
                  const ExternalLayerStore* external = nullptr);

/// Central-difference gradient validation on one sample: every parameter
/// element is perturbed by +-eps and the numeric slopes compared against one
/// analytic backward pass, tensor by tensor. Returns the largest per-tensor
/// normwise relative error |ga-gn| / max(|ga|, |gn|, 1e-8). Intended for
/// small models (H <= 8).
double gradient_check(Seq2SeqModel& model, const ErrorCase& sample,
                      const ExternalLayerStore::LayerStack* ext = nullptr,
                      double eps = 1e-4);

}  // namespace plspell::neural
