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

#ifndef ZICI_SEGCORE_HPP_
#define ZICI_SEGCORE_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zici/lexicon.hpp"
#include "zici/ngrams.hpp"
#include "zici/textprep.hpp"

namespace zici {

/// An n-gram of one chunk whose document-wide count exceeds 1.
struct Candidate {
  std::u32string text;
  std::uint32_t weight = 0;    // document-wide occurrence count, always > 1
  std::size_t first_pos = 0;   // first occurrence offset within the chunk
  bool acceptable = true;

  std::size_t length() const { return text.size(); }
};

/// All candidates of one chunk, bucketed by length. Buckets keep first
/// occurrence order, which is the testing order within a length.
class CandidateSet {
 public:
  bool empty() const { return total_ == 0; }
  std::size_t size() const { return total_; }

  /// Largest candidate length present; 0 when empty.
  std::size_t max_length() const;

  /// Lengths present, descending.
  std::vector<std::size_t> lengths_desc() const;

  std::span<const Candidate> of_length(std::size_t n) const;
  std::span<Candidate> of_length(std::size_t n);

  const Candidate* find(std::u32string_view text) const;
  Candidate* find(std::u32string_view text);

  /// Appends a candidate; text must be new to the set.
  void insert(Candidate candidate);

  /// All candidates that survived acceptability testing, unordered.
  std::vector<Candidate> acceptables() const;

 private:
  std::vector<std::vector<Candidate>> by_length_;  // index = length
  U32Map<std::size_t> index_;                      // text -> slot in bucket
  std::size_t total_ = 0;
};

/// Collects the distinct n-grams of the chunk (2 <= n <= chunk length)
/// whose weight exceeds 1. Anything longer than weights.max_n has weight 0
/// and is therefore absent. Intended for chunks longer than 2 codepoints;
/// shorter chunks are skipped by the caller.
CandidateSet collect_candidates(std::u32string_view chunk,
                                const WeightTable& weights);

/// Tests every candidate pair (g, s) where s is one codepoint shorter and a
/// substring of g: the strictly heavier side survives, with ties going to
/// the longer one. Marks depend only on weights, so any evaluation order
/// yields the same acceptable set. Pass `trace` to log each comparison.
void mark_acceptability(CandidateSet& candidates, std::ostream* trace = nullptr);

/// Acceptable candidates sorted by length desc, weight desc, codepoint asc.
std::vector<Candidate> order_acceptables(const CandidateSet& candidates);

/// Blank-insertion segmentation: each acceptable candidate, in order, has
/// every left-to-right non-overlapping occurrence in the evolving text
/// wrapped with blanks; matches never cross a blank already inserted.
/// Returns the exploded segments; their concatenation equals the chunk.
std::vector<std::u32string> segment_chunk(
    std::u32string_view chunk, std::span<const Candidate> ordered_acceptables,
    std::ostream* trace = nullptr);

/// Wraps occurrences of `needle` across a segment list; used by both
/// segmentation passes. Matched occurrences become their own segments and
/// stay splittable by later, shorter needles.
void split_segments(std::vector<std::u32string>& segments,
                    std::u32string_view needle);

/// First pass over the whole document: every chunk longer than 2 codepoints
/// with at least one candidate is segmented, and each of its segments bumps
/// the pre-lexicon count by one per occurrence. Everything else stays a
/// single segment and is not counted. Returns the segmented document and
/// the raw, unpruned pre-lexicon.
std::pair<SegmentedDocument, Lexicon> self_segment_pass(
    const Document& document, const WeightTable& weights,
    std::ostream* trace = nullptr);

}  // namespace zici

#endif  // ZICI_SEGCORE_HPP_
