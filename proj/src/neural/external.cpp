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

#include "plspell/neural/external.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "plspell/error.hpp"
#include "plspell/unicode.hpp"

namespace plspell::neural {

ExternalLayerStore ExternalLayerStore::load_file(const std::string& path,
                                                 std::size_t dim,
                                                 std::size_t layers) {
  if (dim == 0 || layers == 0) {
    throw ConfigError("external layers: dim and layer count must be positive");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open external layers: " + path);

  ExternalLayerStore store;
  store.dim_ = dim;
  store.layers_ = layers;

  std::unordered_map<std::string, std::vector<bool>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    std::istringstream ss(line);
    std::string token_raw;
    long layer_index = -1;
    if (!(ss >> token_raw >> layer_index)) {
      throw LoadError(path, line_no, "expected 'token layer_index v1 ... vdim'");
    }
    if (layer_index < 0 || static_cast<std::size_t>(layer_index) >= layers) {
      throw LoadError(path, line_no,
                      "layer index out of range [0, " + std::to_string(layers) + ")");
    }
    Vector vec(static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
      double v = 0.0;
      if (!(ss >> v) || !std::isfinite(v)) {
        throw LoadError(path, line_no, "expected " + std::to_string(dim) +
                                           " vector components");
      }
      vec(static_cast<Eigen::Index>(i)) = v;
    }
    std::string trailing;
    if (ss >> trailing) {
      throw LoadError(path, line_no, "trailing fields after " +
                                         std::to_string(dim) + " components");
    }

    const std::string token = uni::nfc(token_raw);
    auto [it, inserted] = store.stacks_.try_emplace(
        token, LayerStack(layers, Vector::Zero(static_cast<Eigen::Index>(dim))));
    auto [seen_it, seen_inserted] =
        seen.try_emplace(token, std::vector<bool>(layers, false));
    (void)inserted;
    (void)seen_inserted;
    if (seen_it->second[static_cast<std::size_t>(layer_index)]) {
      throw LoadError(path, line_no, "duplicate layer " +
                                         std::to_string(layer_index) +
                                         " for token '" + token + "'");
    }
    seen_it->second[static_cast<std::size_t>(layer_index)] = true;
    it->second[static_cast<std::size_t>(layer_index)] = std::move(vec);
  }
  if (in.bad()) throw LoadError("read failure on external layers: " + path);

  for (const auto& [token, present] : seen) {
    for (std::size_t l = 0; l < layers; ++l) {
      if (!present[l]) {
        throw LoadError("token '" + token + "' is missing layer " +
                        std::to_string(l) + " in " + path);
      }
    }
  }
  return store;
}

ExternalLayerStore ExternalLayerStore::from_stacks(
    std::size_t dim, std::size_t layers,
    const std::vector<std::pair<std::string, LayerStack>>& stacks) {
  ExternalLayerStore store;
  store.dim_ = dim;
  store.layers_ = layers;
  for (const auto& [token, stack] : stacks) {
    if (stack.size() != layers) {
      throw LoadError("token '" + token + "': expected " +
                      std::to_string(layers) + " layers");
    }
    for (const auto& v : stack) {
      if (static_cast<std::size_t>(v.size()) != dim) {
        throw LoadError("token '" + token + "': layer dimension mismatch");
      }
    }
    store.stacks_[uni::nfc(token)] = stack;
  }
  return store;
}

const ExternalLayerStore::LayerStack* ExternalLayerStore::find(
    std::string_view token) const {
  const auto it = stacks_.find(uni::nfc(token));
  return it == stacks_.end() ? nullptr : &it->second;
}

}  // namespace plspell::neural
