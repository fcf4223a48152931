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
#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace plspell {

/// Reference vocabulary: exact membership plus bounded fuzzy search through a
/// BK-tree keyed by unweighted Levenshtein distance. Entries are NFC-normalized
/// at load; queries are normalized the same way. Immutable after construction,
/// safe for concurrent reads.
class Lexicon {
 public:
  struct Match {
    std::string word;
    std::size_t distance;

    bool operator==(const Match&) const = default;
  };

  Lexicon() = default;

  /// Loads a plain word list: UTF-8, one form per line, LF or CRLF, lines
  /// starting with `#` and blank lines ignored. Duplicates are dropped.
  /// Throws LoadError (with line number) on malformed UTF-8 or entries that
  /// contain internal whitespace.
  static Lexicon load_file(const std::string& path);

  /// Builds a lexicon from in-memory words (same normalization and dedup as
  /// load_file). Used by fixtures and tests.
  static Lexicon from_words(const std::vector<std::string>& words);

  /// Exact, case-sensitive membership of the NFC form of `token`.
  bool contains(std::string_view token) const;

  /// All entries within `max_dist` of `token`, sorted by (distance asc,
  /// word lexicographic asc by code point). Exactly equivalent to a linear
  /// scan over the entries; the BK-tree only prunes it.
  std::vector<Match> fuzzy_search(std::string_view token,
                                  std::size_t max_dist) const;

  std::size_t size() const { return forms_.size(); }
  bool empty() const { return forms_.empty(); }

  /// Entries in code-point lexicographic order.
  const std::vector<std::string>& entries() const { return forms_; }

 private:
  struct Node {
    std::size_t entry;                   // index into forms_/points_
    std::map<std::size_t, std::size_t> children;  // distance -> node index
  };

  void build_index();
  void search_node(std::size_t node, const std::u32string& token,
                   std::size_t max_dist, std::vector<Match>& out) const;

  std::vector<std::string> forms_;       // NFC UTF-8, sorted
  std::vector<std::u32string> points_;   // code points of forms_
  std::unordered_set<std::string> set_;  // exact membership
  std::vector<Node> nodes_;              // BK-tree, nodes_[0] is the root
};

}  // namespace plspell
