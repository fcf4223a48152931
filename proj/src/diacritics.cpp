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

#include "plspell/diacritics.hpp"

#include <algorithm>
#include <limits>

#include "plspell/editdist.hpp"
#include "plspell/unicode.hpp"

namespace plspell {

DiacriticTable::DiacriticTable() {
  const auto add = [this](char32_t ch, std::u32string opts, char32_t base) {
    entries_.push_back(Entry{ch, std::move(opts), base});
  };
  // Base letters and the marked forms built on them.
  add(U'a', U"ą", U'a');
  add(U'c', U"ć", U'c');
  add(U'e', U"ę", U'e');
  add(U'l', U"ł", U'l');
  add(U'n', U"ń", U'n');
  add(U'o', U"ó", U'o');
  add(U's', U"ś", U's');
  add(U'z', U"źż", U'z');
  add(U'A', U"Ą", U'A');
  add(U'C', U"Ć", U'C');
  add(U'E', U"Ę", U'E');
  add(U'L', U"Ł", U'L');
  add(U'N', U"Ń", U'N');
  add(U'O', U"Ó", U'O');
  add(U'S', U"Ś", U'S');
  add(U'Z', U"ŹŻ", U'Z');
  // Marked letters swap down to their base only.
  add(U'ą', U"a", U'a');
  add(U'ć', U"c", U'c');
  add(U'ę', U"e", U'e');
  add(U'ł', U"l", U'l');
  add(U'ń', U"n", U'n');
  add(U'ó', U"o", U'o');
  add(U'ś', U"s", U's');
  add(U'ż', U"z", U'z');
  add(U'ź', U"z", U'z');
  add(U'Ą', U"A", U'A');
  add(U'Ć', U"C", U'C');
  add(U'Ę', U"E", U'E');
  add(U'Ł', U"L", U'L');
  add(U'Ń', U"N", U'N');
  add(U'Ó', U"O", U'O');
  add(U'Ś', U"S", U'S');
  add(U'Ż', U"Z", U'Z');
  add(U'Ź', U"Z", U'Z');
}

const DiacriticTable& DiacriticTable::polish() {
  static const DiacriticTable table;
  return table;
}

const DiacriticTable::Entry* DiacriticTable::find(char32_t c) const {
  for (const auto& e : entries_) {
    if (e.ch == c) return &e;
  }
  return nullptr;
}

std::u32string DiacriticTable::options(char32_t c) const {
  std::u32string out(1, c);
  if (const Entry* e = find(c)) out += e->opts;
  return out;
}

bool DiacriticTable::tabled(char32_t c) const { return find(c) != nullptr; }

char32_t DiacriticTable::strip(char32_t c) const {
  const Entry* e = find(c);
  return e ? e->base : c;
}

VariantEnumerator::VariantEnumerator(std::u32string_view token,
                                     const DiacriticTable& table)
    : odometer_(token.size(), 0), done_(false) {
  options_.reserve(token.size());
  for (char32_t c : token) options_.push_back(table.options(c));
}

bool VariantEnumerator::next(std::u32string& out) {
  if (done_) return false;
  out.clear();
  out.reserve(options_.size());
  for (std::size_t i = 0; i < options_.size(); ++i) {
    out.push_back(options_[i][odometer_[i]]);
  }
  // Advance, rightmost position fastest.
  std::size_t pos = options_.size();
  while (pos > 0) {
    --pos;
    if (++odometer_[pos] < options_[pos].size()) return true;
    odometer_[pos] = 0;
  }
  done_ = true;  // odometer wrapped; this was the last variant
  return true;
}

std::uint64_t variant_count(std::u32string_view token,
                            const DiacriticTable& table) {
  std::uint64_t count = 1;
  for (char32_t c : token) {
    const std::uint64_t opts = table.options(c).size();
    if (count > std::numeric_limits<std::uint64_t>::max() / opts) {
      return std::numeric_limits<std::uint64_t>::max();  // saturate
    }
    count *= opts;
  }
  return count;
}

std::uint64_t variant_count(std::string_view token,
                            const DiacriticTable& table) {
  return variant_count(uni::to_nfc_code_points(token), table);
}

std::vector<CorrectionCandidate> diacritic_correct(std::string_view token,
                                                   const Lexicon& lex) {
  std::vector<CorrectionCandidate> out;
  const std::u32string points = uni::to_nfc_code_points(token);
  if (points.size() >= kDiacriticLengthGuard) return out;

  VariantEnumerator en(points, DiacriticTable::polish());
  std::u32string variant;
  while (en.next(variant)) {
    const std::string form = uni::encode_utf8(variant);
    if (!lex.contains(form)) continue;
    CorrectionCandidate cand;
    cand.form = form;
    const std::size_t dist = levenshtein(points, variant);
    cand.edit_score = scaled_levenshtein(points, variant);
    cand.combined = static_cast<double>(dist);
    cand.source = "diacritic";
    out.push_back(std::move(cand));
  }
  std::sort(out.begin(), out.end(),
            [](const CorrectionCandidate& a, const CorrectionCandidate& b) {
              if (a.combined != b.combined) return a.combined < b.combined;
              return a.form < b.form;
            });
  return out;
}

std::string strip_diacritics(std::string_view token) {
  std::u32string points = uni::to_nfc_code_points(token);
  const DiacriticTable& table = DiacriticTable::polish();
  for (char32_t& c : points) c = table.strip(c);
  return uni::encode_utf8(points);
}

}  // namespace plspell
