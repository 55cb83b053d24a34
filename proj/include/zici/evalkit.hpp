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

#ifndef ZICI_EVALKIT_HPP_
#define ZICI_EVALKIT_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <unordered_set>
#include <vector>

#include "zici/lexicon.hpp"

namespace zici {

/// Which headword column of a dictionary line to keep.
enum class DictColumn { kSimplified, kTraditional };

/// Headwords loaded from a CEDICT-style dictionary file. Lines look like
///   TRAD SIMP [PINYIN] /GLOSS/GLOSS/.../
/// `#` lines are comments; malformed lines are counted, not fatal.
struct DictionarySet {
  std::unordered_set<std::string> headwords;  // UTF-8
  std::size_t line_count = 0;                 // all lines seen
  std::size_t malformed_count = 0;            // skipped, non-comment
};

DictionarySet parse_cedict(std::istream& in,
                           DictColumn column = DictColumn::kSimplified);

/// How much of a lexicon a dictionary covers.
struct CoverageReport {
  std::size_t total_entries = 0;
  std::size_t matched = 0;
  double ratio = 0.0;  // matched / total_entries; 0 when the lexicon is empty

  /// Percentage rounded to the nearest integer (69.75% reports as 70%).
  int percent() const;
};

CoverageReport coverage(const Lexicon& lexicon, const DictionarySet& dict);

/// Word-span precision/recall/F1 between a gold and predicted segmentation.
struct PrfScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t matched = 0;
  std::size_t gold_words = 0;
  std::size_t pred_words = 0;
};

/// One token list per line. Words are (start, end) spans over the line's
/// concatenated text; matched spans are those present in both sides, and
/// precision/recall are micro-averaged over all lines. gold and pred must
/// have the same line count and identical per-line concatenations, else
/// AlignmentError naming the first offending line. Two empty inputs agree
/// vacuously and score 1.0.
PrfScore score_segmentation(
    const std::vector<std::vector<std::string>>& gold,
    const std::vector<std::vector<std::string>>& pred);

/// Reads a whitespace-tokenized segmentation file: one line per sentence,
/// tokens separated by runs of ASCII whitespace.
std::vector<std::vector<std::string>> read_token_lines(std::istream& in);

}  // namespace zici

#endif  // ZICI_EVALKIT_HPP_
