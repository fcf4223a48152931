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

#include <Eigen/Core>
#include <string>
#include <vector>

namespace plspell::neural {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// A named parameter with its gradient accumulator. Vectors are stored as
/// single-column matrices so every parameter walks the same code paths in
/// the optimizer, the gradient check and the serializer.
struct Tensor {
  std::string name;
  Matrix value;
  Matrix grad;

  Tensor(std::string n, Eigen::Index rows, Eigen::Index cols)
      : name(std::move(n)),
        value(Matrix::Zero(rows, cols)),
        grad(Matrix::Zero(rows, cols)) {}

  void zero_grad() { grad.setZero(); }
  Eigen::Index size() const { return value.size(); }
};

inline void zero_gradients(const std::vector<Tensor*>& params) {
  for (Tensor* p : params) p->zero_grad();
}

inline bool all_finite(const std::vector<Tensor*>& params) {
  for (const Tensor* p : params) {
    if (!p->value.allFinite()) return false;
  }
  return true;
}

}  // namespace plspell::neural
