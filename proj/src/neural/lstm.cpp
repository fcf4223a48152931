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

#include "plspell/neural/lstm.hpp"

#include <cmath>

#include "plspell/error.hpp"

namespace plspell::neural {
namespace {

inline Vector sigmoid(const Vector& x) {
  return (1.0 / (1.0 + (-x.array()).exp())).matrix();
}

}  // namespace

LstmCell::LstmCell(const std::string& name, Eigen::Index input_dim,
                   Eigen::Index hidden_dim)
    : w_input(name + ".w_input", hidden_dim, input_dim + hidden_dim),
      w_forget(name + ".w_forget", hidden_dim, input_dim + hidden_dim),
      w_output(name + ".w_output", hidden_dim, input_dim + hidden_dim),
      w_cand(name + ".w_cand", hidden_dim, input_dim + hidden_dim),
      b_input(name + ".b_input", hidden_dim, 1),
      b_forget(name + ".b_forget", hidden_dim, 1),
      b_output(name + ".b_output", hidden_dim, 1),
      b_cand(name + ".b_cand", hidden_dim, 1),
      input_dim_(input_dim),
      hidden_dim_(hidden_dim) {}

void LstmCell::init_params(std::mt19937_64& rng) {
  const double bound =
      std::sqrt(6.0 / static_cast<double>(input_dim_ + 2 * hidden_dim_));
  std::uniform_real_distribution<double> uniform(-bound, bound);
  for (Tensor* w : {&w_input, &w_forget, &w_output, &w_cand}) {
    for (Eigen::Index r = 0; r < w->value.rows(); ++r) {
      for (Eigen::Index c = 0; c < w->value.cols(); ++c) {
        w->value(r, c) = uniform(rng);
      }
    }
  }
  b_input.value.setZero();
  b_forget.value.setConstant(1.0);  // keeps early cell states stable
  b_output.value.setZero();
  b_cand.value.setZero();
}

void LstmCell::step(const Vector& x, Vector& h, Vector& c) const {
  StepTrace trace;
  step_traced(x, h, c, trace);
}

void LstmCell::step_traced(const Vector& x, Vector& h, Vector& c,
                           StepTrace& trace) const {
  if (x.size() != input_dim_ || h.size() != hidden_dim_ ||
      c.size() != hidden_dim_) {
    throw MathDomainError("lstm step: dimension mismatch");
  }
  trace.z.resize(input_dim_ + hidden_dim_);
  trace.z << x, h;
  trace.c_prev = c;

  trace.i = sigmoid(w_input.value * trace.z + b_input.value);
  trace.f = sigmoid(w_forget.value * trace.z + b_forget.value);
  trace.o = sigmoid(w_output.value * trace.z + b_output.value);
  trace.g = (w_cand.value * trace.z + b_cand.value).array().tanh().matrix();

  trace.c = trace.f.cwiseProduct(trace.c_prev) + trace.i.cwiseProduct(trace.g);
  trace.tanh_c = trace.c.array().tanh().matrix();

  c = trace.c;
  h = trace.o.cwiseProduct(trace.tanh_c);
}

void LstmCell::step_backward(const StepTrace& t, const Vector& dh, Vector& dc,
                             Vector& dx, Vector& dh_prev) {
  // dc on entry carries the gradient from later timesteps; fold in the path
  // through h = o.tanh(c).
  const Vector dc_total =
      dc + dh.cwiseProduct(t.o).cwiseProduct(
               (1.0 - t.tanh_c.array().square()).matrix());

  const Vector da_o = dh.cwiseProduct(t.tanh_c)
                          .cwiseProduct(t.o)
                          .cwiseProduct((1.0 - t.o.array()).matrix());
  const Vector da_f = dc_total.cwiseProduct(t.c_prev)
                          .cwiseProduct(t.f)
                          .cwiseProduct((1.0 - t.f.array()).matrix());
  const Vector da_i = dc_total.cwiseProduct(t.g)
                          .cwiseProduct(t.i)
                          .cwiseProduct((1.0 - t.i.array()).matrix());
  const Vector da_g = dc_total.cwiseProduct(t.i).cwiseProduct(
      (1.0 - t.g.array().square()).matrix());

  w_input.grad.noalias() += da_i * t.z.transpose();
  w_forget.grad.noalias() += da_f * t.z.transpose();
  w_output.grad.noalias() += da_o * t.z.transpose();
  w_cand.grad.noalias() += da_g * t.z.transpose();
  b_input.grad += da_i;
  b_forget.grad += da_f;
  b_output.grad += da_o;
  b_cand.grad += da_g;

  const Vector dz = w_input.value.transpose() * da_i +
                    w_forget.value.transpose() * da_f +
                    w_output.value.transpose() * da_o +
                    w_cand.value.transpose() * da_g;
  dx = dz.head(input_dim_);
  dh_prev = dz.tail(hidden_dim_);
  dc = dc_total.cwiseProduct(t.f);  // gradient for c_{t-1}
}

std::vector<Tensor*> LstmCell::params() {
  return {&w_input, &w_forget, &w_output, &w_cand,
          &b_input, &b_forget, &b_output, &b_cand};
}

std::vector<const Tensor*> LstmCell::params() const {
  return {&w_input, &w_forget, &w_output, &w_cand,
          &b_input, &b_forget, &b_output, &b_cand};
}

}  // namespace plspell::neural
