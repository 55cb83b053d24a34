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

#include "zici/ngrams.hpp"

#include <algorithm>

#include "zici/errors.hpp"
#include "zici/utf8.hpp"

namespace zici {

std::vector<std::pair<std::u32string, std::uint32_t>>
WeightTable::sorted_entries() const {
  std::vector<std::pair<std::u32string, std::uint32_t>> out(counts_.begin(),
                                                            counts_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return out;
}

WeightTable count_ngrams(const Document& document, int max_n) {
  if (max_n < 2) throw ConfigError("max ngram size must be at least 2");
  WeightTable table(max_n);
  for (const Token& tok : document.tokens) {
    if (tok.kind != TokenKind::kHanChunk) continue;
    const std::u32string chunk = decode_utf8(tok.text);
    const std::size_t len = chunk.size();
    const std::size_t top = std::min<std::size_t>(max_n, len);
    for (std::size_t n = 2; n <= top; ++n) {
      for (std::size_t start = 0; start + n <= len; ++start) {
        table.add(chunk.substr(start, n));
      }
    }
  }
  return table;
}

}  // namespace zici
