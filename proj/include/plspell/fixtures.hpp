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

#include <cstdint>
#include <string>
#include <vector>

#include "plspell/corpus.hpp"
#include "plspell/lexicon.hpp"

namespace plspell::fixtures {

enum class Mode { strip, keyboard, mixed };

Mode parse_mode(const std::string& name);  // throws ConfigError

/// Synthetic error corpus over a lexicon.
///
/// strip: pairs (word with diacritics removed, word), restricted to words
/// whose stripped form restores uniquely within the lexicon and fits the
/// diacritic corrector's length guard — the diacritic corrector must score
/// 1.0 on such a corpus.
///
/// keyboard: pairs (word with one random QWERTY-neighbor edit, word); the
/// corrupted form is guaranteed to be a non-word (absent from the lexicon).
///
/// mixed: alternates the two.
///
/// Deterministic for a fixed seed. Returns up to `count` cases.
std::vector<ErrorCase> make_cases(const Lexicon& lex, Mode mode,
                                  std::size_t count, std::uint64_t seed);

/// Lexicon words whose diacritic-stripped form differs from the word and
/// restores uniquely (no other lexicon word shares the stripped image),
/// shorter than the corrector's length guard.
std::vector<std::string> unique_restoration_words(const Lexicon& lex);

/// Random word2vec-style vectors for every lexicon word and every error
/// token: gold words get unit-scale Gaussian vectors, error tokens get their
/// gold's vector plus small noise (errors embed near their corrections).
/// Writes the text format EmbeddingStore::load_file reads.
void write_embedding_fixture(const std::string& path, const Lexicon& lex,
                             const std::vector<ErrorCase>& cases,
                             std::size_t dim, std::uint64_t seed);

/// Random external layer stacks (L layers of `dim` Gaussians) for every
/// error token of `cases`, in the ExternalLayerStore text format.
void write_external_layer_fixture(const std::string& path,
                                  const std::vector<ErrorCase>& cases,
                                  std::size_t dim, std::size_t layers,
                                  std::uint64_t seed);

/// A small deterministic Polish-like word list (for demos and tests that
/// need a lexicon without shipping one).
std::vector<std::string> sample_word_list(std::size_t count,
                                          std::uint64_t seed);

}  // namespace plspell::fixtures
