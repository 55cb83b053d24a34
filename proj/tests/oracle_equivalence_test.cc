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

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "testutil.hpp"
#include "zici/lexicon.hpp"
#include "zici/textprep.hpp"
#include "zici/utf8.hpp"

namespace {

// Segments of the library result per Han chunk, re-encoded for comparison.
std::vector<std::vector<std::u32string>> library_segments(
    const zici::SegmentedDocument& doc) {
  std::vector<std::vector<std::u32string>> out;
  for (const zici::SegmentedToken& st : doc.tokens) {
    if (st.token.kind != zici::TokenKind::kHanChunk) continue;
    std::vector<std::u32string> segs;
    for (const std::string& s : st.segments) segs.push_back(zici::decode_utf8(s));
    out.push_back(std::move(segs));
  }
  return out;
}

std::vector<std::pair<std::u32string, std::uint32_t>> library_lexicon(
    const zici::Lexicon& lex) {
  std::vector<std::pair<std::u32string, std::uint32_t>> out;
  for (const zici::LexiconEntry& e : lex.sorted_entries()) {
    out.emplace_back(e.text, e.count);
  }
  return out;
}

void expect_agreement(const testutil::RandomDoc& doc, int max_n,
                      std::uint32_t min_count, unsigned seed) {
  const oracle::Result expected =
      oracle::self_segment(doc.chunks, max_n, min_count);
  const zici::BuildResult actual = zici::build(
      doc.text, zici::BuildOptions{max_n, min_count});

  ASSERT_EQ(library_segments(actual.segmented), expected.chunk_segments)
      << "seed " << seed;
  ASSERT_EQ(library_lexicon(actual.lexicon), expected.lexicon)
      << "seed " << seed;
}

TEST(OracleEquivalence, UniformDocsDefaultOptions) {
  for (unsigned seed = 1; seed <= 60; ++seed) {
    std::mt19937 rng(seed);
    expect_agreement(testutil::make_uniform_doc(rng), 8, 2, seed);
  }
}

TEST(OracleEquivalence, WordyDocsDefaultOptions) {
  for (unsigned seed = 1000; seed < 1060; ++seed) {
    std::mt19937 rng(seed);
    expect_agreement(testutil::make_wordy_doc(rng), 8, 2, seed);
  }
}

TEST(OracleEquivalence, AlternateOptionSettings) {
  for (unsigned seed = 2000; seed < 2020; ++seed) {
    std::mt19937 rng(seed);
    const testutil::RandomDoc doc = testutil::make_wordy_doc(rng);
    expect_agreement(doc, 4, 2, seed);
    expect_agreement(doc, 12, 3, seed);
    expect_agreement(doc, 8, 1, seed);
  }
}

TEST(OracleEquivalence, FixtureTexts) {
  std::mt19937 rng(7);
  const std::vector<std::vector<std::u32string>> fixtures = {
      {U"甲乙丙丁", U"甲乙丙戊", U"甲乙己"},
      {U"甲乙丙", U"甲乙丙", U"甲乙"},
      {U"呵呵呵"},
      {U"甲乙丙丁", U"乙丙", U"乙丙"},
  };
  for (const auto& chunks : fixtures) {
    testutil::RandomDoc doc;
    doc.chunks = chunks;
    doc.text = testutil::join_chunks(doc.chunks, rng);
    expect_agreement(doc, 8, 2, 7);
  }
}

}  // namespace
