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

#include "plspell/lexicon.hpp"

#include <algorithm>
#include <fstream>

#include "plspell/editdist.hpp"
#include "plspell/error.hpp"
#include "plspell/unicode.hpp"

namespace plspell {
namespace {

// Strips one trailing CR (CRLF input read in text mode on POSIX).
void chomp(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

Lexicon Lexicon::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open word list: " + path);

  Lexicon lex;
  std::string line;
  std::size_t line_no = 0;
  std::u32string decoded;
  while (std::getline(in, line)) {
    ++line_no;
    chomp(line);
    if (line.empty() || line[0] == '#') continue;

    std::size_t bad = 0;
    if (!uni::try_decode_utf8(line, decoded, bad)) {
      throw LoadError(path, line_no, "malformed UTF-8");
    }
    const std::u32string nfc = uni::compose_nfc(decoded);
    if (uni::has_whitespace(nfc)) {
      throw LoadError(path, line_no, "word form contains whitespace");
    }
    lex.points_.push_back(nfc);
  }
  if (in.bad()) throw LoadError("read failure on word list: " + path);
  lex.build_index();
  return lex;
}

Lexicon Lexicon::from_words(const std::vector<std::string>& words) {
  Lexicon lex;
  for (const auto& w : words) {
    const std::u32string nfc = uni::to_nfc_code_points(w);
    if (nfc.empty() || uni::has_whitespace(nfc)) {
      throw LoadError("invalid word form: '" + w + "'");
    }
    lex.points_.push_back(nfc);
  }
  lex.build_index();
  return lex;
}

void Lexicon::build_index() {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());

  forms_.reserve(points_.size());
  for (const auto& p : points_) {
    forms_.push_back(uni::encode_utf8(p));
    set_.insert(forms_.back());
  }

  // Inserting in sorted order keeps the tree layout deterministic.
  nodes_.reserve(points_.size());
  for (std::size_t e = 0; e < points_.size(); ++e) {
    if (nodes_.empty()) {
      nodes_.push_back(Node{e, {}});
      continue;
    }
    std::size_t cur = 0;
    for (;;) {
      const std::size_t d = levenshtein(points_[nodes_[cur].entry], points_[e]);
      auto it = nodes_[cur].children.find(d);
      if (it == nodes_[cur].children.end()) {
        nodes_.push_back(Node{e, {}});
        nodes_[cur].children.emplace(d, nodes_.size() - 1);
        break;
      }
      cur = it->second;
    }
  }
}

bool Lexicon::contains(std::string_view token) const {
  return set_.count(uni::nfc(token)) != 0;
}

void Lexicon::search_node(std::size_t node, const std::u32string& token,
                          std::size_t max_dist,
                          std::vector<Match>& out) const {
  const Node& n = nodes_[node];
  const std::size_t d = levenshtein(points_[n.entry], token);
  if (d <= max_dist) out.push_back(Match{forms_[n.entry], d});

  // Triangle inequality: children at distance outside [d-max, d+max] from
  // this node cannot hold matches.
  const std::size_t lo = d > max_dist ? d - max_dist : 0;
  const std::size_t hi = d + max_dist;
  for (auto it = n.children.lower_bound(lo);
       it != n.children.end() && it->first <= hi; ++it) {
    search_node(it->second, token, max_dist, out);
  }
}

std::vector<Lexicon::Match> Lexicon::fuzzy_search(std::string_view token,
                                                  std::size_t max_dist) const {
  std::vector<Match> out;
  if (nodes_.empty()) return out;
  const std::u32string query = uni::to_nfc_code_points(token);
  search_node(0, query, max_dist, out);
  std::sort(out.begin(), out.end(), [](const Match& a, const Match& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    return a.word < b.word;
  });
  return out;
}

}  // namespace plspell
