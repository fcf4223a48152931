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

#include "plspell/neural/train.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "plspell/error.hpp"
#include "plspell/unicode.hpp"

namespace plspell::neural {

AdamOptimizer::AdamOptimizer(std::vector<Tensor*> params, double learning_rate,
                             double beta1, double beta2, double epsilon)
    : params_(std::move(params)),
      lr_(learning_rate),
      beta1_(beta1),
      beta2_(beta2),
      eps_(epsilon) {
  m_.reserve(params_.size());
  v_.reserve(params_.size());
  for (const Tensor* p : params_) {
    m_.push_back(Matrix::Zero(p->value.rows(), p->value.cols()));
    v_.push_back(Matrix::Zero(p->value.rows(), p->value.cols()));
  }
}

void AdamOptimizer::step() {
  ++t_;
  const double bias1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
  const double bias2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
  for (std::size_t k = 0; k < params_.size(); ++k) {
    Tensor& p = *params_[k];
    m_[k] = beta1_ * m_[k] + (1.0 - beta1_) * p.grad;
    v_[k] = beta2_ * v_[k] +
            (1.0 - beta2_) * p.grad.cwiseProduct(p.grad);
    const Matrix m_hat = m_[k] / bias1;
    const Matrix v_hat = v_[k] / bias2;
    p.value.array() -=
        lr_ * m_hat.array() / (v_hat.array().sqrt() + eps_);
  }
}

TrainResult train(Seq2SeqModel& model, const std::vector<ErrorCase>& cases,
                  const TrainConfig& cfg, const ExternalLayerStore* external) {
  if (cases.empty()) throw ConfigError("train: empty training set");
  if (cfg.epochs == 0) throw ConfigError("train: epochs must be >= 1");
  if (cfg.batch_size == 0) throw ConfigError("train: batch size must be >= 1");

  // Pre-decode the pairs once; training touches only code points.
  struct Sample {
    std::u32string error, gold;
    const ExternalLayerStore::LayerStack* ext;
  };
  TrainResult result;
  std::vector<Sample> samples;
  samples.reserve(cases.size());
  for (const auto& c : cases) {
    Sample s;
    s.error = uni::to_nfc_code_points(c.error);
    s.gold = uni::to_nfc_code_points(c.correction);
    s.ext = nullptr;
    if (model.has_hook() && external != nullptr) {
      s.ext = external->find(c.error);
      if (s.ext == nullptr) ++result.missing_external;
    } else if (model.has_hook()) {
      ++result.missing_external;
    }
    samples.push_back(std::move(s));
  }

  const std::vector<Tensor*> params = model.params();
  AdamOptimizer adam(params, cfg.learning_rate, cfg.beta1, cfg.beta2,
                     cfg.epsilon);

  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(cfg.seed);

  for (std::size_t epoch = 1; epoch <= cfg.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    double epoch_nats = 0.0;
    std::size_t epoch_chars = 0;

    std::size_t batch_index = 0;
    for (std::size_t begin = 0; begin < order.size();
         begin += cfg.batch_size, ++batch_index) {
      const std::size_t end = std::min(begin + cfg.batch_size, order.size());
      zero_gradients(params);
      double batch_nats = 0.0;
      std::size_t batch_chars = 0;
      for (std::size_t k = begin; k < end; ++k) {
        const Sample& s = samples[order[k]];
        const auto [nll, chars] =
            model.accumulate_gradients(s.error, s.gold, s.ext);
        batch_nats += nll;
        batch_chars += chars;
      }
      const double batch_loss =
          batch_nats / static_cast<double>(batch_chars);
      if (!std::isfinite(batch_loss)) {
        throw TrainError(epoch, batch_index, "non-finite loss");
      }
      // Loss is the mean per character, so the accumulated raw gradients
      // scale by the batch character count.
      for (Tensor* p : params) {
        p->grad /= static_cast<double>(batch_chars);
      }
      adam.step();
      epoch_nats += batch_nats;
      epoch_chars += batch_chars;
    }
    if (!all_finite(params)) {
      throw TrainError(epoch, batch_index, "non-finite parameters");
    }
    result.loss_history.push_back(epoch_nats /
                                  static_cast<double>(epoch_chars));
  }
  return result;
}

double gradient_check(Seq2SeqModel& model, const ErrorCase& sample,
                      const ExternalLayerStore::LayerStack* ext, double eps) {
  const std::u32string error = uni::to_nfc_code_points(sample.error);
  const std::u32string gold = uni::to_nfc_code_points(sample.correction);

  const std::vector<Tensor*> params = model.params();
  zero_gradients(params);
  const auto [nll, chars] = model.accumulate_gradients(error, gold, ext);
  (void)nll;
  const double scale = 1.0 / static_cast<double>(chars);

  // Loss used on both sides: mean cross-entropy per character of the sample.
  const auto loss = [&]() {
    return model.score(error, gold, ext).nll_nats * scale;
  };

  // Tensors are compared normwise: individual elements whose true gradient
  // sits near zero carry central-difference noise at the precision limit
  // (~1e-12 for an O(1) loss), which elementwise ratios would amplify past
  // any meaningful threshold.
  double max_rel = 0.0;
  for (Tensor* p : params) {
    Matrix numeric(p->value.rows(), p->value.cols());
    for (Eigen::Index r = 0; r < p->value.rows(); ++r) {
      for (Eigen::Index c = 0; c < p->value.cols(); ++c) {
        const double saved = p->value(r, c);
        p->value(r, c) = saved + eps;
        const double up = loss();
        p->value(r, c) = saved - eps;
        const double down = loss();
        p->value(r, c) = saved;
        numeric(r, c) = (up - down) / (2.0 * eps);
      }
    }
    const Matrix analytic = p->grad * scale;
    const double rel =
        (analytic - numeric).norm() /
        std::max({analytic.norm(), numeric.norm(), 1e-8});
    max_rel = std::max(max_rel, rel);
  }
  return max_rel;
}

}  // namespace plspell::neural
