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

namespace plspell::uni {

/// Decodes UTF-8 into code points. Returns false and sets `bad_offset` to the
/// byte position of the first invalid sequence (overlong forms, surrogates,
/// truncated tails and out-of-range values all count as invalid).
bool try_decode_utf8(std::string_view bytes, std::u32string& out,
                     std::size_t& bad_offset);

/// Decoding that throws plspell::Error on malformed input.
std::u32string decode_utf8(std::string_view bytes);

std::string encode_utf8(std::u32string_view code_points);

/// Canonical composition restricted to the Polish alphabet: base letters
/// followed by U+0301 (acute), U+0307 (dot above) or U+0328 (ogonek) are
/// replaced by their precomposed forms (a+ogonek -> ą, z+dot -> ż, ...).
/// Everything else passes through unchanged. ł has no decomposition, so the
/// table above covers every Polish letter that does.
std::u32string compose_nfc(std::u32string_view code_points);

/// decode_utf8 + compose_nfc in one step.
std::u32string to_nfc_code_points(std::string_view bytes);

/// NFC-normalized UTF-8 form of `bytes`.
std::string nfc(std::string_view bytes);

/// True if the string contains an ASCII space, tab or other control byte.
bool has_whitespace(std::u32string_view code_points);

/// Code-point count of a UTF-8 string (throws on malformed input).
std::size_t length(std::string_view bytes);

}  // namespace plspell::uni
