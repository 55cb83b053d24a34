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

#include "zici/segcore.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "zici/ngrams.hpp"
#include "zici/textprep.hpp"

namespace zici {
namespace {

// Weight table seen by the news-headline chunk when the surrounding document
// repeats 英国 three times and 斯特劳 (plus its two bigrams) twice.
WeightTable headline_weights() {
  WeightTable w(8);
  w.add(U"英国", 3);
  w.add(U"斯特劳", 2);
  w.add(U"斯特", 2);
  w.add(U"特劳", 2);
  return w;
}

std::vector<std::u32string> texts_of(const std::vector<Candidate>& cs) {
  std::vector<std::u32string> out;
  for (const Candidate& c : cs) out.push_back(c.text);
  return out;
}

TEST(CollectCandidates, HeadlineChunkFindsAllHeavyGrams) {
  const CandidateSet cs = collect_candidates(U"英国外相斯特劳对", headline_weights());
  EXPECT_EQ(cs.size(), 4u);
  ASSERT_NE(cs.find(U"英国"), nullptr);
  EXPECT_EQ(cs.find(U"英国")->weight, 3u);
  ASSERT_NE(cs.find(U"斯特劳"), nullptr);
  EXPECT_EQ(cs.find(U"斯特劳")->weight, 2u);
  EXPECT_NE(cs.find(U"斯特"), nullptr);
  EXPECT_NE(cs.find(U"特劳"), nullptr);
  EXPECT_EQ(cs.find(U"外相"), nullptr);  // weight <= 1
  EXPECT_EQ(cs.max_length(), 3u);
}

TEST(CollectCandidates, DedupesRepeatedGramsAndRecordsFirstPos) {
  WeightTable w(8);
  w.add(U"呵呵", 2);
  const CandidateSet cs = collect_candidates(U"呵呵呵", w);
  EXPECT_EQ(cs.size(), 1u);
  ASSERT_NE(cs.find(U"呵呵"), nullptr);
  EXPECT_EQ(cs.find(U"呵呵")->first_pos, 0u);
}

TEST(MarkAcceptability, HeavierShorterKillsLonger) {
  CandidateSet cs = collect_candidates(U"英国外相斯特劳对", headline_weights());
  mark_acceptability(cs);
  const std::vector<Candidate> ok = cs.acceptables();
  std::vector<std::u32string> names = texts_of(ok);
  std::sort(names.begin(), names.end());
  // 斯特劳 ties its bigrams (2 vs 2), so the bigrams lose; 英国 has no
  // competing candidate.
  EXPECT_EQ(names, (std::vector<std::u32string>{U"斯特劳", U"英国"}));
}

TEST(MarkAcceptability, StrictlyHeavierSubstringWins) {
  // 甲乙 outweighs 甲乙丙, so the trigram is dropped and the bigram stays.
  WeightTable w(8);
  w.add(U"甲乙", 5);
  w.add(U"甲乙丙", 2);
  w.add(U"乙丙", 2);
  CandidateSet cs = collect_candidates(U"甲乙丙丁", w);
  mark_acceptability(cs);
  const std::vector<std::u32string> names = texts_of(order_acceptables(cs));
  EXPECT_EQ(names, (std::vector<std::u32string>{U"甲乙"}));
}

TEST(OrderAcceptables, LengthThenWeightThenCodepoint) {
  WeightTable w(8);
  w.add(U"丙丁", 4);
  w.add(U"甲乙", 4);
  w.add(U"戊己", 7);
  CandidateSet cs = collect_candidates(U"甲乙戊己丙丁", w);
  mark_acceptability(cs);
  const std::vector<std::u32string> names = texts_of(order_acceptables(cs));
  EXPECT_EQ(names, (std::vector<std::u32string>{U"戊己", U"丙丁", U"甲乙"}));
}

TEST(SegmentChunk, HeadlineSegmentsLongestFirst) {
  CandidateSet cs = collect_candidates(U"英国外相斯特劳对", headline_weights());
  mark_acceptability(cs);
  const std::vector<Candidate> ordered = order_acceptables(cs);
  ASSERT_EQ(texts_of(ordered),
            (std::vector<std::u32string>{U"斯特劳", U"英国"}));
  const std::vector<std::u32string> segs =
      segment_chunk(U"英国外相斯特劳对", ordered);
  EXPECT_EQ(segs, (std::vector<std::u32string>{U"英国", U"外相", U"斯特劳", U"对"}));
}

TEST(SegmentChunk, EmptyAcceptablesKeepChunkWhole) {
  const std::vector<Candidate> none;
  EXPECT_EQ(segment_chunk(U"甲乙丙", none),
            (std::vector<std::u32string>{U"甲乙丙"}));
}

TEST(SegmentChunk, OverlapResolvesLeftToRight) {
  WeightTable w(8);
  w.add(U"呵呵", 2);
  CandidateSet cs = collect_candidates(U"呵呵呵", w);
  mark_acceptability(cs);
  EXPECT_EQ(segment_chunk(U"呵呵呵", order_acceptables(cs)),
            (std::vector<std::u32string>{U"呵呵", U"呵"}));
}

TEST(SplitSegments, MatchedPieceStaysSplittable) {
  std::vector<std::u32string> segs{U"甲乙丙丁"};
  split_segments(segs, U"甲乙丙");
  EXPECT_EQ(segs, (std::vector<std::u32string>{U"甲乙丙", U"丁"}));
  split_segments(segs, U"乙丙");
  EXPECT_EQ(segs, (std::vector<std::u32string>{U"甲", U"乙丙", U"丁"}));
}

TEST(SplitSegments, NeverMatchesAcrossSegmentBoundaries) {
  std::vector<std::u32string> segs{U"甲乙", U"丙丁"};
  split_segments(segs, U"乙丙");
  EXPECT_EQ(segs, (std::vector<std::u32string>{U"甲乙", U"丙丁"}));
}

TEST(SelfSegmentPass, RepeatedPrefixDoc) {
  const Document doc = split_document("甲乙丙丁。甲乙丙戊。甲乙己");
  const auto [segmented, prelex] = self_segment_pass(doc, count_ngrams(doc, 8));

  std::vector<std::vector<std::string>> segs;
  for (const SegmentedToken& st : segmented.tokens) {
    if (st.token.kind == TokenKind::kHanChunk) segs.push_back(st.segments);
  }
  EXPECT_EQ(segs, (std::vector<std::vector<std::string>>{
                      {"甲乙", "丙丁"}, {"甲乙", "丙戊"}, {"甲乙", "己"}}));

  EXPECT_EQ(prelex.count(U"甲乙"), 3u);
  EXPECT_EQ(prelex.count(U"丙丁"), 1u);
  EXPECT_EQ(prelex.count(U"丙戊"), 1u);
  EXPECT_EQ(prelex.count(U"己"), 1u);
  EXPECT_EQ(prelex.size(), 4u);
}

TEST(SelfSegmentPass, ShortChunksAreSkippedAndUncounted) {
  const Document doc = split_document("甲乙丙。甲乙丙。甲乙");
  const auto [segmented, prelex] = self_segment_pass(doc, count_ngrams(doc, 8));

  // The length-2 trailing chunk stays whole and contributes nothing.
  const SegmentedToken& last = segmented.tokens.back();
  ASSERT_EQ(last.token.kind, TokenKind::kHanChunk);
  EXPECT_EQ(last.segments, (std::vector<std::string>{"甲乙"}));
  EXPECT_EQ(prelex.count(U"甲乙"), 2u);
  EXPECT_EQ(prelex.count(U"丙"), 2u);
  EXPECT_EQ(prelex.size(), 2u);
}

TEST(SelfSegmentPass, NoRepeatsMeansNoSegmentsAndEmptyPrelexicon) {
  const Document doc = split_document("甲乙丙丁戊。己庚辛壬癸");
  const auto [segmented, prelex] = self_segment_pass(doc, count_ngrams(doc, 8));
  for (const SegmentedToken& st : segmented.tokens) {
    if (st.token.kind == TokenKind::kHanChunk) {
      EXPECT_EQ(st.segments.size(), 1u);
    }
  }
  EXPECT_TRUE(prelex.empty());
}

TEST(SelfSegmentPass, SegmentsConcatenateBackToChunks) {
  const Document doc = split_document("甲乙丙丁。甲乙丙戊。甲乙己");
  const auto [segmented, prelex] = self_segment_pass(doc, count_ngrams(doc, 8));
  for (const SegmentedToken& st : segmented.tokens) {
    if (st.token.kind != TokenKind::kHanChunk) continue;
    std::string joined;
    for (const std::string& s : st.segments) joined += s;
    EXPECT_EQ(joined, st.token.text);
  }
}

}  // namespace
}  // namespace zici
