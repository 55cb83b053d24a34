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

#include <gtest/gtest.h>

#include <string>

#include "zici/errors.hpp"
#include "zici/textprep.hpp"

namespace zici {
namespace {

TEST(CountNgrams, RepeatedPrefixDocWeights) {
  // "甲乙丙丁。甲乙丙戊。甲乙己": 甲乙 appears 3 times, 乙丙 and 甲乙丙 twice,
  // everything else once.
  const WeightTable w = count_ngrams(split_document("甲乙丙丁。甲乙丙戊。甲乙己"), 8);
  EXPECT_EQ(w.count(U"甲乙"), 3u);
  EXPECT_EQ(w.count(U"乙丙"), 2u);
  EXPECT_EQ(w.count(U"甲乙丙"), 2u);
  EXPECT_EQ(w.count(U"丙丁"), 1u);
  EXPECT_EQ(w.count(U"甲乙丙丁"), 1u);
  EXPECT_EQ(w.count(U"乙己"), 1u);
  EXPECT_EQ(w.count(U"丁甲"), 0u);  // crosses a break point
  EXPECT_EQ(w.count(U"甲"), 0u);    // unigrams are never counted
}

TEST(CountNgrams, OverlappingOccurrencesCount) {
  const WeightTable w = count_ngrams(split_document("呵呵呵"), 8);
  EXPECT_EQ(w.count(U"呵呵"), 2u);
  EXPECT_EQ(w.count(U"呵呵呵"), 1u);
}

TEST(CountNgrams, MaxNgramCapsLength) {
  const WeightTable w = count_ngrams(split_document("甲乙丙丁甲乙丙丁"), 3);
  EXPECT_EQ(w.count(U"甲乙丙"), 2u);
  EXPECT_EQ(w.count(U"甲乙丙丁"), 0u);  // longer than max_n, never counted
  EXPECT_EQ(w.max_n(), 3);
}

TEST(CountNgrams, CountsSpanChunksButNgramsDoNot) {
  // The same bigram in two different chunks accumulates document-wide.
  const WeightTable w = count_ngrams(split_document("甲乙。甲乙"), 8);
  EXPECT_EQ(w.count(U"甲乙"), 2u);
  EXPECT_EQ(w.count(U"乙甲"), 0u);
}

TEST(CountNgrams, EmptyAndTinyInputs) {
  EXPECT_EQ(count_ngrams(split_document(""), 8).size(), 0u);
  EXPECT_EQ(count_ngrams(split_document("甲"), 8).size(), 0u);
  EXPECT_EQ(count_ngrams(split_document("ABC, def."), 8).size(), 0u);
}

TEST(CountNgrams, RejectsMaxNgramBelowTwo) {
  const Document doc = split_document("甲乙丙");
  EXPECT_THROW(count_ngrams(doc, 1), ConfigError);
  EXPECT_THROW(count_ngrams(doc, 0), ConfigError);
  EXPECT_THROW(count_ngrams(doc, -4), ConfigError);
}

TEST(WeightTable, SortedEntriesUseCanonicalOrder) {
  WeightTable w(8);
  w.add(U"乙丙", 2);
  w.add(U"甲乙", 3);
  w.add(U"甲乙丙", 2);
  const auto entries = w.sorted_entries();
  ASSERT_EQ(entries.size(), 3u);
  EXPECT_EQ(entries[0].first, U"甲乙丙");  // longest first
  EXPECT_EQ(entries[1].first, U"甲乙");    // then higher count
  EXPECT_EQ(entries[2].first, U"乙丙");
}

TEST(WeightTable, HeterogeneousLookupNeedsNoAllocation) {
  WeightTable w(8);
  w.add(U"甲乙");
  const std::u32string key = U"X甲乙X";
  const std::u32string_view view(key.data() + 1, 2);
  EXPECT_EQ(w.count(view), 1u);
}

}  // namespace
}  // namespace zici
