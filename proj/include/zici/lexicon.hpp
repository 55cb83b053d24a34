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

#ifndef ZICI_LEXICON_HPP_
#define ZICI_LEXICON_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zici/textprep.hpp"
#include "zici/utf8.hpp"

namespace zici {

struct LexiconEntry {
  std::u32string text;
  std::uint32_t count = 0;

  bool operator==(const LexiconEntry&) const = default;
};

/// Comparator for the canonical lexicon order: length descending, count
/// descending, codepoint ascending. The codepoint tiebreak makes every
/// listing fully deterministic.
bool lexicon_order_less(const LexiconEntry& a, const LexiconEntry& b);

/// Entry -> accumulated count. Iteration for output or replacement always
/// goes through sorted_entries(), never the underlying hash order.
class Lexicon {
 public:
  std::size_t size() const { return counts_.size(); }
  bool empty() const { return counts_.empty(); }

  std::uint32_t count(std::u32string_view entry) const {
    auto it = counts_.find(entry);
    return it == counts_.end() ? 0 : it->second;
  }
  bool contains(std::u32string_view entry) const {
    return counts_.find(entry) != counts_.end();
  }

  void add(std::u32string entry, std::uint32_t n = 1) {
    counts_[std::move(entry)] += n;
  }

  /// Drops every entry with count < min_count.
  void prune(std::uint32_t min_count);

  /// Entries in canonical order.
  std::vector<LexiconEntry> sorted_entries() const;

  const U32Map<std::uint32_t>& counts() const { return counts_; }

  /// TSV format, bit-exact: `entry<TAB>count<LF>` per line in canonical
  /// order, no header, no trailing blank line.
  void write_tsv(std::ostream& out) const;

  /// Parses the TSV format back. Throws ParseError naming the offending
  /// line; `source_name` labels the stream in messages.
  static Lexicon read_tsv(std::istream& in, std::string_view source_name = "");

  bool operator==(const Lexicon& other) const { return counts_ == other.counts_; }

 private:
  U32Map<std::uint32_t> counts_;
};

/// Pure form of Lexicon::prune.
Lexicon prune_singletons(Lexicon lexicon, std::uint32_t min_count);

/// Two lexicons folded together: counts summed, plus the set of entries
/// present in both inputs (the reinforced ones).
struct MergedLexicon {
  Lexicon lexicon;
  U32Set reinforced;

  /// Same TSV as Lexicon; with mark_reinforced a third column holds `R`
  /// for reinforced entries and `N` for new ones.
  void write_tsv(std::ostream& out, bool mark_reinforced) const;
};

MergedLexicon merge(const Lexicon& a, const Lexicon& b);

/// First k entries in canonical order: the longest, most frequent entries
/// are the most promising seeds for finding related documents.
std::vector<LexiconEntry> rank_promising(const Lexicon& lexicon, std::size_t k);

/// Second segmentation pass. Every chunk (no length guard this time) gets
/// each lexicon entry blank-wrapped in canonical order on top of the
/// first-pass segmentation, then each resulting segment bumps its lexicon
/// count by one. Counts accumulate over the input lexicon's counts; entries
/// discovered here are not used for wrapping within the same pass.
std::pair<SegmentedDocument, Lexicon> resegment_with_lexicon(
    const SegmentedDocument& segmented, const Lexicon& lexicon);

struct BuildOptions {
  int max_n = 8;               // largest n-gram length counted
  std::uint32_t min_count = 2; // entries below this are pruned
};

struct BuildResult {
  SegmentedDocument segmented;
  Lexicon lexicon;
};

/// Full pipeline over one document: split, count n-grams, self-segment,
/// prune, re-segment with the pruned lexicon, prune again. Deterministic:
/// identical input and options give byte-identical outputs. An optional
/// trace stream receives the per-chunk candidate/test/step log.
BuildResult build(std::string_view text, const BuildOptions& options = {},
                  std::ostream* trace = nullptr);

}  // namespace zici

#endif  // ZICI_LEXICON_HPP_
