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

#include "plspell/neural/vocab.hpp"

#include <algorithm>

#include "plspell/error.hpp"

namespace plspell::neural {

CharVocab CharVocab::build(const std::vector<std::u32string>& texts) {
  std::u32string chars;
  for (const auto& t : texts) chars += t;
  std::sort(chars.begin(), chars.end());
  chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
  return from_chars(std::move(chars));
}

CharVocab CharVocab::from_chars(std::u32string chars) {
  CharVocab v;
  v.chars_ = std::move(chars);
  for (std::size_t i = 0; i < v.chars_.size(); ++i) {
    if (!v.index_.emplace(v.chars_[i], i + kReserved).second) {
      throw Error("duplicate character in vocabulary listing");
    }
  }
  return v;
}

std::size_t CharVocab::id_of(char32_t c) const {
  const auto it = index_.find(c);
  return it == index_.end() ? kUnk : it->second;
}

char32_t CharVocab::char_of(std::size_t id) const {
  if (id < kReserved || id >= size()) {
    throw Error("char_of: id " + std::to_string(id) + " is reserved or out of range");
  }
  return chars_[id - kReserved];
}

std::vector<std::size_t> CharVocab::encode(std::u32string_view text) const {
  std::vector<std::size_t> ids;
  ids.reserve(text.size());
  for (char32_t c : text) ids.push_back(id_of(c));
  return ids;
}

}  // namespace plspell::neural
