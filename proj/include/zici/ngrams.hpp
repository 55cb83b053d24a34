// Copyright 2026 The zici Authors
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

#ifndef ZICI_NGRAMS_HPP_
#define ZICI_NGRAMS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zici/textprep.hpp"
#include "zici/utf8.hpp"

namespace zici {

/// Document-wide occurrence counts for every n-gram (2 <= n <= max_n) of
/// every Han chunk. Occurrences are counted at every start position, so
/// overlapping repeats all count. N-grams never span a chunk boundary.
class WeightTable {
 public:
  WeightTable() = default;
  explicit WeightTable(int max_n) : max_n_(max_n) {}

  int max_n() const { return max_n_; }
  std::size_t size() const { return counts_.size(); }

  /// Occurrence count; 0 for anything never counted (including n-grams
  /// longer than max_n).
  std::uint32_t count(std::u32string_view ngram) const {
    auto it = counts_.find(ngram);
    return it == counts_.end() ? 0 : it->second;
  }

  void add(std::u32string ngram, std::uint32_t n = 1) {
    counts_[std::move(ngram)] += n;
  }

  /// Entries in lexicon order (length desc, count desc, codepoint asc),
  /// for the debug dump.
  std::vector<std::pair<std::u32string, std::uint32_t>> sorted_entries() const;

 private:
  int max_n_ = 2;
  U32Map<std::uint32_t> counts_;
};

/// Counts every n-gram window of every Han chunk, n in [2, max_n].
/// max_n must be >= 2.
WeightTable count_ngrams(const Document& document, int max_n);

}  // namespace zici

#endif  // ZICI_NGRAMS_HPP_
