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
#include <string_view>
#include <vector>

#include "plspell/neural/external.hpp"
#include "plspell/neural/lstm.hpp"
#include "plspell/neural/vocab.hpp"

namespace plspell::neural {

enum class Direction { uni, bi };

/// ELMo-style initialization: the encoder's initial (h, c) is
/// ReLU(Linear(sum_l w_l * layer_l)) over externally supplied per-token layer
/// vectors, with the scalar layer weights and the linear map trained along
/// with the network.
struct HookConfig {
  std::size_t layers = 3;
  std::size_t dim = 0;
};

struct ModelConfig {
  std::size_t embedding_dim = 64;
  std::size_t hidden_dim = 128;
  Direction direction = Direction::uni;
  std::optional<HookConfig> hook;
};

/// Character-level LSTM encoder-decoder. The encoder reads the error form;
/// the decoder emits the correction character by character, initialized from
/// the encoder's final state. The bidirectional variant runs two full
/// encoder/decoder stacks, one over the reversed input, and averages their
/// per-step output distributions. Immutable while shared: training mutates,
/// inference is const and safe to run concurrently.
class Seq2SeqModel {
 public:
  Seq2SeqModel(CharVocab vocab, const ModelConfig& config, std::uint64_t seed);

  const CharVocab& vocab() const { return vocab_; }
  const ModelConfig& config() const { return config_; }
  bool has_hook() const { return config_.hook.has_value(); }
  std::size_t directions() const { return stacks_.size(); }

  /// Hook layer weights w_1..w_L (empty without a hook).
  std::vector<double> hook_layer_weights() const;

  struct EncoderState {
    Vector h, c;
  };

  /// Final encoder state per direction. `ext` supplies the token's external
  /// layer stack when the hook is present; nullptr stands for all-zero
  /// layers (the initial state degrades to ReLU of the linear bias).
  std::vector<EncoderState> encode(std::u32string_view token,
                                   const ExternalLayerStore::LayerStack* ext =
                                       nullptr) const;

  struct DecodeResult {
    std::string output;              // emitted characters, EOS excluded
    std::vector<double> step_probs;  // P(chosen) per step, EOS step included
  };

  /// Greedy decoding: from SOS, take the argmax of the (averaged) output
  /// distribution each step until EOS or max_len steps. Argmax ties break
  /// toward the lowest vocabulary index.
  DecodeResult decode_greedy(const std::vector<EncoderState>& enc,
                             std::size_t max_len) const;

  /// encode + decode_greedy with max_len = |token| + extra.
  DecodeResult correct(std::string_view token,
                       const ExternalLayerStore::LayerStack* ext = nullptr,
                       std::size_t extra = 8) const;

  struct ScoreResult {
    double nll_nats = 0.0;           // total: -sum ln P(gold char)
    std::vector<double> gold_probs;  // P(gold char) per step, EOS included
    std::vector<Vector> distributions;  // averaged output distribution per step
  };

  /// Teacher-forced scoring of `gold` given `error`.
  ScoreResult score(std::u32string_view error, std::u32string_view gold,
                    const ExternalLayerStore::LayerStack* ext = nullptr) const;

  /// Teacher-forced forward and backward pass; adds d(total nll)/d(theta)
  /// into the parameter gradients. Returns the total nll in nats and the
  /// number of scored characters (|gold| + 1 for EOS).
  std::pair<double, std::size_t> accumulate_gradients(
      std::u32string_view error, std::u32string_view gold,
      const ExternalLayerStore::LayerStack* ext = nullptr);

  /// Every parameter tensor in the fixed order used by the optimizer, the
  /// gradient check and the model file: embedding, then per direction
  /// (encoder gates, decoder gates, projection, initial state), then the
  /// hook tensors.
  std::vector<Tensor*> params();
  std::vector<const Tensor*> params() const;

  /// Versioned binary model file: magic, format version, metadata (vocab
  /// listing, dims, direction mode, hook presence), then the params() in
  /// order as row-major little-endian IEEE-754 32-bit values.
  void save(const std::string& path) const;
  static Seq2SeqModel load(const std::string& path);

 private:
  struct Stack {
    LstmCell encoder;
    LstmCell decoder;
    Tensor proj_w;  // |V| x H
    Tensor proj_b;  // |V| x 1
    // Trainable initial encoder state; absent when the hook provides it.
    std::optional<Tensor> h0, c0;

    Stack(const std::string& name, Eigen::Index embed_dim,
          Eigen::Index hidden_dim, Eigen::Index vocab_size, bool with_init);
  };

  struct Hook {
    Tensor layer_w;  // L x 1
    Tensor lin_w;    // 2H x D
    Tensor lin_b;    // 2H x 1

    Hook(Eigen::Index layers, Eigen::Index dim, Eigen::Index hidden_dim);
  };

  struct HookTrace {
    Vector mixed;  // sum_l w_l layer_l
    Vector pre;    // lin_w * mixed + lin_b
  };

  // Initial (h, c) for one direction; records the hook trace when present.
  void initial_state(const ExternalLayerStore::LayerStack* ext,
                     std::size_t direction, Vector& h, Vector& c,
                     HookTrace* trace) const;

  Vector embedding_of(std::size_t id) const;

  // Averaged output distribution across directions, renormalized.
  Vector average_distributions(const std::vector<Vector>& per_direction) const;

  struct TeacherTrace;  // full forward record for backpropagation

  void forward_teacher(const std::vector<std::size_t>& input_ids,
                       const std::vector<std::size_t>& target_ids,
                       const ExternalLayerStore::LayerStack* ext,
                       TeacherTrace& trace) const;

  CharVocab vocab_;
  ModelConfig config_;
  Tensor embedding_;  // |V| x E
  std::vector<Stack> stacks_;
  std::optional<Hook> hook_;
};

}  // namespace plspell::neural
