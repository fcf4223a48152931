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

#include <random>

#include "plspell/neural/tensor.hpp"

namespace plspell::neural {

/// One LSTM cell in the standard formulation:
///   i, f, o = sigmoid gates,  g = tanh candidate,
///   c' = f.c + i.g,  h' = o.tanh(c').
/// Gates read the concatenation [x; h] of the input and the previous hidden
/// state, so each weight matrix is H x (I+H).
class LstmCell {
 public:
  LstmCell(const std::string& name, Eigen::Index input_dim,
           Eigen::Index hidden_dim);

  /// Gate weights uniform in +-sqrt(6/(I+2H)), biases zero except the forget
  /// gate bias at +1.
  void init_params(std::mt19937_64& rng);

  Eigen::Index input_dim() const { return input_dim_; }
  Eigen::Index hidden_dim() const { return hidden_dim_; }

  /// Forward intermediates kept for one timestep of backpropagation.
  struct StepTrace {
    Vector z;       // [x; h_prev], I+H
    Vector c_prev;  // H
    Vector i, f, o, g, c, tanh_c;
  };

  /// Advances (h, c) in place. Throws on dimension mismatch.
  void step(const Vector& x, Vector& h, Vector& c) const;

  /// step() that records the intermediates needed by step_backward.
  void step_traced(const Vector& x, Vector& h, Vector& c,
                   StepTrace& trace) const;

  /// One timestep of backpropagation. `dh` is the total gradient flowing
  /// into h_t; `dc` holds the gradient flowing into c_t from later steps on
  /// entry and the gradient for c_{t-1} on exit. Weight and bias gradients
  /// accumulate into the cell's tensors; `dx` and `dh_prev` receive the
  /// gradients for the step input and previous hidden state.
  void step_backward(const StepTrace& trace, const Vector& dh, Vector& dc,
                     Vector& dx, Vector& dh_prev);

  std::vector<Tensor*> params();
  std::vector<const Tensor*> params() const;

  Tensor w_input, w_forget, w_output, w_cand;  // each H x (I+H)
  Tensor b_input, b_forget, b_output, b_cand;  // each H x 1

 private:
  Eigen::Index input_dim_;
  Eigen::Index hidden_dim_;
};

}  // namespace plspell::neural
