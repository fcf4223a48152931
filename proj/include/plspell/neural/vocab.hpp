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

namespace plspell::neural {

/// Character vocabulary with four reserved indices ahead of the real
/// characters. The character listing is kept in code point order and persists
/// with the model, so ids are stable across save/load.
class CharVocab {
 public:
  static constexpr std::size_t kPad = 0;
  static constexpr std::size_t kSos = 1;
  static constexpr std::size_t kEos = 2;
  static constexpr std::size_t kUnk = 3;
  static constexpr std::size_t kReserved = 4;

  CharVocab() = default;

  /// Collects every character of `texts` (sorted, deduplicated).
  static CharVocab build(const std::vector<std::u32string>& texts);

  /// Restores a vocabulary from its persisted character listing.
  static CharVocab from_chars(std::u32string chars);

  /// Total size including the reserved indices.
  std::size_t size() const { return chars_.size() + kReserved; }

  /// Id of `c`, kUnk when the character is not in the vocabulary.
  std::size_t id_of(char32_t c) const;

  /// Character for a non-reserved id.
  char32_t char_of(std::size_t id) const;

  bool reserved(std::size_t id) const { return id < kReserved; }

  /// Non-reserved characters in id order.
  const std::u32string& chars() const { return chars_; }

  std::vector<std::size_t> encode(std::u32string_view text) const;

 private:
  std::u32string chars_;
  std::unordered_map<char32_t, std::size_t> index_;
};

}  // namespace plspell::neural
