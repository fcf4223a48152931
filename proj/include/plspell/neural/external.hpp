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

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "plspell/neural/tensor.hpp"

namespace plspell::neural {

/// Precomputed per-token layer stacks (the shape an external embedder such
/// as ELMo produces: L layer vectors per token). Loaded from a text file
/// with lines "token layer_index v1 ... vdim", layer_index in [0, L).
/// Every token must supply all L layers.
class ExternalLayerStore {
 public:
  using LayerStack = std::vector<Vector>;  // exactly L vectors of size dim

  ExternalLayerStore() = default;

  static ExternalLayerStore load_file(const std::string& path,
                                      std::size_t dim, std::size_t layers);

  static ExternalLayerStore from_stacks(
      std::size_t dim, std::size_t layers,
      const std::vector<std::pair<std::string, LayerStack>>& stacks);

  std::size_t dim() const { return dim_; }
  std::size_t layers() const { return layers_; }
  std::size_t size() const { return stacks_.size(); }

  /// Layer stack for the NFC form of `token`, nullptr when absent.
  const LayerStack* find(std::string_view token) const;

 private:
  std::size_t dim_ = 0;
  std::size_t layers_ = 0;
  std::unordered_map<std::string, LayerStack> stacks_;
};

}  // namespace plspell::neural
