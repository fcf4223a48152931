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

#include "plspell/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "plspell/editdist.hpp"
#include "plspell/error.hpp"
#include "plspell/unicode.hpp"

namespace plspell {
namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream ss(line);
  std::string f;
  while (ss >> f) fields.push_back(std::move(f));
  return fields;
}

bool parse_positive_int(const std::string& s, std::size_t& out) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
  if (errno != 0 || end != s.c_str() + s.size() || v == 0) return false;
  out = static_cast<std::size_t>(v);
  return true;
}

bool parse_double(const std::string& s, double& out) {
  char* end = nullptr;
  errno = 0;
  out = std::strtod(s.c_str(), &end);
  return errno == 0 && end == s.c_str() + s.size() && std::isfinite(out);
}

bool all_zero(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

}  // namespace

EmbeddingStore EmbeddingStore::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open embeddings: " + path);

  EmbeddingStore store;
  std::string line;
  std::size_t line_no = 0;
  bool first_content_line = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    auto fields = split_fields(line);
    if (first_content_line) {
      first_content_line = false;
      // A "<count> <dim>" header is exactly two positive integers.
      std::size_t count = 0, dim = 0;
      if (fields.size() == 2 && parse_positive_int(fields[0], count) &&
          parse_positive_int(fields[1], dim)) {
        store.dim_ = dim;
        continue;
      }
    }

    if (fields.size() < 2) {
      throw LoadError(path, line_no, "expected 'token v1 ... vdim'");
    }
    const std::string token = uni::nfc(fields[0]);
    std::vector<double> vec;
    vec.reserve(fields.size() - 1);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      double v = 0.0;
      if (!parse_double(fields[i], v)) {
        throw LoadError(path, line_no, "bad vector component '" + fields[i] + "'");
      }
      vec.push_back(v);
    }
    if (store.dim_ == 0) store.dim_ = vec.size();
    if (vec.size() != store.dim_) {
      throw LoadError(path, line_no,
                      "dimension mismatch: got " + std::to_string(vec.size()) +
                          ", expected " + std::to_string(store.dim_));
    }
    if (all_zero(vec)) {
      throw LoadError(path, line_no,
                      "zero vector for '" + token + "' (cosine undefined)");
    }
    auto it = store.vectors_.find(token);
    if (it == store.vectors_.end()) {
      store.vectors_.emplace(token, std::move(vec));
    } else {
      it->second = std::move(vec);  // last occurrence wins
      ++store.duplicates_;
    }
  }
  if (in.bad()) throw LoadError("read failure on embeddings: " + path);
  return store;
}

EmbeddingStore EmbeddingStore::from_pairs(
    std::size_t dim,
    const std::vector<std::pair<std::string, std::vector<double>>>& pairs) {
  EmbeddingStore store;
  store.dim_ = dim;
  for (const auto& [token, vec] : pairs) {
    if (vec.size() != dim) throw LoadError("dimension mismatch for '" + token + "'");
    if (all_zero(vec)) throw LoadError("zero vector for '" + token + "'");
    auto [it, inserted] = store.vectors_.emplace(uni::nfc(token), vec);
    if (!inserted) {
      it->second = vec;
      ++store.duplicates_;
    }
  }
  return store;
}

const std::vector<double>* EmbeddingStore::find(std::string_view token) const {
  const auto it = vectors_.find(uni::nfc(token));
  return it == vectors_.end() ? nullptr : &it->second;
}

EmbeddingStore EmbeddingStore::scaled(double factor) const {
  EmbeddingStore out;
  out.dim_ = dim_;
  out.duplicates_ = duplicates_;
  out.vectors_ = vectors_;
  for (auto& [token, vec] : out.vectors_) {
    for (double& v : vec) v *= factor;
  }
  return out;
}

double cosine_distance(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw MathDomainError("cosine distance: dimension mismatch");
  }
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (nu == 0.0 || nv == 0.0) {
    throw MathDomainError("cosine distance: zero-norm operand");
  }
  return 1.0 - dot / (std::sqrt(nu) * std::sqrt(nv));
}

std::vector<CorrectionCandidate> vector_distance_correct(
    std::string_view token, const Lexicon& lex, const EmbeddingStore& emb,
    std::size_t max_edit, double edit_weight) {
  std::vector<CorrectionCandidate> out;
  const auto matches = lex.fuzzy_search(token, max_edit);
  const std::vector<double>* token_vec = emb.find(token);
  const std::u32string token_points = uni::to_nfc_code_points(token);

  for (const auto& m : matches) {
    const double edit = scaled_levenshtein(token_points,
                                           uni::to_nfc_code_points(m.word));
    CorrectionCandidate cand;
    cand.form = m.word;
    cand.edit_score = edit;
    if (token_vec != nullptr) {
      const std::vector<double>* cand_vec = emb.find(m.word);
      if (cand_vec == nullptr) continue;  // intersect with embedding vocab
      cand.semantic_score = cosine_distance(*token_vec, *cand_vec);
      cand.combined =
          edit_weight * edit + (1.0 - edit_weight) * *cand.semantic_score;
      cand.source = "vector";
    } else {
      cand.combined = edit;
      cand.source = "vector:edit-fallback";
    }
    out.push_back(std::move(cand));
  }

  std::sort(out.begin(), out.end(),
            [](const CorrectionCandidate& a, const CorrectionCandidate& b) {
              if (a.combined != b.combined) return a.combined < b.combined;
              return a.form < b.form;
            });
  return out;
}

}  // namespace plspell
