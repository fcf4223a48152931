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

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "oracles.hpp"
#include "plspell/diacritics.hpp"
#include "plspell/error.hpp"
#include "plspell/unicode.hpp"

using namespace plspell;
using namespace plspell::neural;

namespace {

CharVocab small_vocab() { return CharVocab::build({U"abcde"}); }

ModelConfig small_config(Direction dir, bool hook) {
  ModelConfig cfg;
  cfg.embedding_dim = 4;
  cfg.hidden_dim = 6;
  cfg.direction = dir;
  if (hook) cfg.hook = HookConfig{3, 5};
  return cfg;
}

ExternalLayerStore::LayerStack random_stack(std::size_t layers,
                                            std::size_t dim,
                                            std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ExternalLayerStore::LayerStack stack;
  for (std::size_t l = 0; l < layers; ++l) {
    Vector v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = g(rng);
    stack.push_back(std::move(v));
  }
  return stack;
}

}  // namespace

TEST_CASE("gradient check passes for all three configurations") {
  std::mt19937_64 rng(7);
  const ErrorCase sample{"abca", "bcd"};

  SUBCASE("unidirectional") {
    Seq2SeqModel model(small_vocab(), small_config(Direction::uni, false), 3);
    CHECK(gradient_check(model, sample) < 1e-4);
  }
  SUBCASE("bidirectional") {
    Seq2SeqModel model(small_vocab(), small_config(Direction::bi, false), 4);
    CHECK(gradient_check(model, sample) < 1e-4);
  }
  SUBCASE("bidirectional with init hook") {
    const auto cfg = small_config(Direction::bi, true);
    Seq2SeqModel model(small_vocab(), cfg, 5);
    const auto stack = random_stack(cfg.hook->layers, cfg.hook->dim, rng);
    CHECK(gradient_check(model, sample, &stack) < 1e-4);
  }
  SUBCASE("hook without an external stack still checks out") {
    Seq2SeqModel model(small_vocab(), small_config(Direction::bi, true), 6);
    // The linear bias initializes to zero, which with an all-zero layer sum
    // puts every ReLU pre-activation exactly on the kink where central
    // differences disagree with the subgradient; move off it first.
    for (Tensor* t : model.params()) {
      if (t->name == "hook.lin_b") {
        std::mt19937_64 bias_rng(99);
        std::uniform_real_distribution<double> u(0.05, 0.5);
        for (Eigen::Index r = 0; r < t->value.rows(); ++r) {
          t->value(r, 0) = (r % 2 == 0 ? 1.0 : -1.0) * u(bias_rng);
        }
      }
    }
    CHECK(gradient_check(model, sample, nullptr) < 1e-4);
  }
}

TEST_CASE("gradient check flags a corrupted backward pass") {
  // Sharpness canary: recompute the check with the analytic gradient of one
  // tensor scaled by 1%; the normwise error must blow far past the bound.
  Seq2SeqModel model(small_vocab(), small_config(Direction::uni, false), 8);
  const std::u32string error = uni::to_nfc_code_points("abca");
  const std::u32string gold = uni::to_nfc_code_points("bcd");

  auto params = model.params();
  zero_gradients(params);
  const auto [nll, chars] = model.accumulate_gradients(error, gold);
  (void)nll;
  const double scale = 1.0 / static_cast<double>(chars);
  Tensor* victim = params[3];  // an encoder gate
  const double eps = 1e-4;

  Matrix numeric(victim->value.rows(), victim->value.cols());
  for (Eigen::Index r = 0; r < victim->value.rows(); ++r) {
    for (Eigen::Index c = 0; c < victim->value.cols(); ++c) {
      const double saved = victim->value(r, c);
      victim->value(r, c) = saved + eps;
      const double up = model.score(error, gold).nll_nats * scale;
      victim->value(r, c) = saved - eps;
      const double down = model.score(error, gold).nll_nats * scale;
      victim->value(r, c) = saved;
      numeric(r, c) = (up - down) / (2.0 * eps);
    }
  }
  const Matrix honest = victim->grad * scale;
  const Matrix corrupt = honest * 1.01;
  const double rel_honest = (honest - numeric).norm() /
                            std::max({honest.norm(), numeric.norm(), 1e-8});
  const double rel_corrupt = (corrupt - numeric).norm() /
                             std::max({corrupt.norm(), numeric.norm(), 1e-8});
  CHECK(rel_honest < 1e-4);
  CHECK(rel_corrupt > 1e-3);
}

TEST_CASE("hook parameters are absent from the set without a hook") {
  Seq2SeqModel without(small_vocab(), small_config(Direction::bi, false), 1);
  for (Tensor* t : without.params()) {
    CHECK(t->name.rfind("hook.", 0) == std::string::npos);
  }
  Seq2SeqModel with(small_vocab(), small_config(Direction::bi, true), 1);
  std::size_t hook_tensors = 0;
  for (Tensor* t : with.params()) {
    if (t->name.rfind("hook.", 0) == 0) ++hook_tensors;
  }
  CHECK(hook_tensors == 3);  // layer weights, linear map, linear bias
  // hook replaces the trainable initial states
  for (Tensor* t : with.params()) {
    CHECK(t->name.find(".h0") == std::string::npos);
    CHECK(t->name.find(".c0") == std::string::npos);
  }
}

TEST_CASE("training memorizes a small pair list") {
  // desk-scale memorization; the acceptance suite runs the full-size one
  std::vector<ErrorCase> pairs;
  std::mt19937_64 rng(11);
  const auto words = oracles::random_words(200, 5, rng);
  std::set<std::string> used;
  for (const auto& w : words) {
    if (pairs.size() >= 12) break;
    const std::string error = strip_diacritics(w);
    if (error.empty() || error == w || !used.insert(error).second) continue;
    pairs.push_back({error, w});
  }
  REQUIRE(pairs.size() == 12);

  std::vector<std::u32string> texts;
  for (const auto& p : pairs) {
    texts.push_back(uni::to_nfc_code_points(p.error));
    texts.push_back(uni::to_nfc_code_points(p.correction));
  }

  ModelConfig mcfg;
  mcfg.embedding_dim = 16;
  mcfg.hidden_dim = 32;
  Seq2SeqModel model(CharVocab::build(texts), mcfg, 21);

  TrainConfig tcfg;
  tcfg.epochs = 30;
  tcfg.learning_rate = 5e-3;
  tcfg.batch_size = 2;
  tcfg.seed = 21;
  const TrainResult result = train(model, pairs, tcfg);
  REQUIRE(result.loss_history.size() == 30);

  std::size_t hits = 0;
  for (const auto& p : pairs) {
    const auto decoded = model.correct(p.error, nullptr, 8);
    if (decoded.output == p.correction) ++hits;
  }
  CHECK(hits == pairs.size());
  CHECK(result.loss_history.back() < result.loss_history.front());
}

TEST_CASE("loss history is reproducible and seeds matter") {
  const std::vector<ErrorCase> pairs{
      {"ab", "ba"}, {"cd", "dc"}, {"ad", "da"}, {"bc", "cb"}};
  std::vector<std::u32string> texts{U"abcd"};

  const auto run = [&](std::uint64_t seed) {
    Seq2SeqModel model(CharVocab::build(texts), small_config(Direction::uni, false), seed);
    TrainConfig cfg;
    cfg.epochs = 5;
    cfg.batch_size = 2;
    cfg.seed = seed;
    return train(model, pairs, cfg).loss_history;
  };

  const auto a = run(42), b = run(42), c = run(43);
  CHECK(a == b);  // bit-identical histories
  CHECK(a != c);
}

TEST_CASE("training aborts on non-finite loss naming epoch and batch") {
  const std::vector<ErrorCase> pairs{{"ab", "ba"}};
  Seq2SeqModel model(CharVocab::build({U"ab"}),
                     small_config(Direction::uni, false), 9);
  // poison one parameter
  model.params()[0]->value(0, 0) = std::numeric_limits<double>::quiet_NaN();
  TrainConfig cfg;
  cfg.epochs = 2;
  try {
    train(model, pairs, cfg);
    FAIL("expected TrainError");
  } catch (const TrainError& e) {
    CHECK(e.epoch() == 1);
    CHECK(std::string(e.what()).find("epoch 1") != std::string::npos);
  }
}

TEST_CASE("training rejects empty inputs") {
  Seq2SeqModel model(CharVocab::build({U"ab"}),
                     small_config(Direction::uni, false), 9);
  TrainConfig cfg;
  CHECK_THROWS_AS(train(model, {}, cfg), ConfigError);
}

TEST_CASE("hook training moves the layer weights") {
  std::mt19937_64 rng(33);
  const auto cfg = small_config(Direction::bi, true);
  std::vector<std::pair<std::string, ExternalLayerStore::LayerStack>> stacks;
  const std::vector<ErrorCase> pairs{
      {"ab", "ba"}, {"cd", "dc"}, {"ade", "eda"}, {"bce", "ecb"}};
  for (const auto& p : pairs) {
    stacks.emplace_back(p.error,
                        random_stack(cfg.hook->layers, cfg.hook->dim, rng));
  }
  const auto store =
      ExternalLayerStore::from_stacks(cfg.hook->dim, cfg.hook->layers, stacks);

  Seq2SeqModel model(CharVocab::build({U"abcde"}), cfg, 17);
  const std::vector<double> before = model.hook_layer_weights();
  TrainConfig tcfg;
  tcfg.epochs = 3;
  tcfg.batch_size = 2;
  tcfg.seed = 17;
  const TrainResult result = train(model, pairs, tcfg, &store);
  CHECK(result.missing_external == 0);
  const std::vector<double> after = model.hook_layer_weights();
  REQUIRE(after.size() == 3);
  CHECK(after != before);  // gradients reached the layer weights
}

TEST_CASE("missing external stacks are counted") {
  const auto cfg = small_config(Direction::bi, true);
  const auto store = ExternalLayerStore::from_stacks(cfg.hook->dim,
                                                     cfg.hook->layers, {});
  Seq2SeqModel model(CharVocab::build({U"ab"}), cfg, 3);
  const std::vector<ErrorCase> pairs{{"ab", "ba"}, {"ba", "ab"}};
  TrainConfig tcfg;
  tcfg.epochs = 1;
  const TrainResult result = train(model, pairs, tcfg, &store);
  CHECK(result.missing_external == 2);
}
