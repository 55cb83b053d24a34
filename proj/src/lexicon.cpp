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

#include "zici/lexicon.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "zici/errors.hpp"
#include "zici/ngrams.hpp"
#include "zici/segcore.hpp"
#include "zici/utf8.hpp"

namespace zici {

bool lexicon_order_less(const LexiconEntry& a, const LexiconEntry& b) {
  if (a.text.size() != b.text.size()) return a.text.size() > b.text.size();
  if (a.count != b.count) return a.count > b.count;
  return a.text < b.text;
}

void Lexicon::prune(std::uint32_t min_count) {
  for (auto it = counts_.begin(); it != counts_.end();) {
    if (it->second < min_count) {
      it = counts_.erase(it);
    } else {
      ++it;
    }
  }
}

std::vector<LexiconEntry> Lexicon::sorted_entries() const {
  std::vector<LexiconEntry> out;
  out.reserve(counts_.size());
  for (const auto& [text, count] : counts_) out.push_back({text, count});
  std::sort(out.begin(), out.end(), lexicon_order_less);
  return out;
}

void Lexicon::write_tsv(std::ostream& out) const {
  for (const LexiconEntry& e : sorted_entries()) {
    out << encode_utf8(e.text) << '\t' << e.count << '\n';
  }
}

Lexicon Lexicon::read_tsv(std::istream& in, std::string_view source_name) {
  Lexicon lex;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    std::string where(source_name);
    if (!where.empty()) where += ":";
    throw ParseError(where + "line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) fail("blank line in lexicon file");
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      fail("expected `entry<TAB>count`");
    }
    const std::string entry_utf8 = line.substr(0, tab);
    const std::string count_str = line.substr(tab + 1);
    if (count_str.empty() ||
        count_str.find_first_not_of("0123456789") != std::string::npos) {
      fail("count is not a positive integer");
    }
    unsigned long parsed = 0;
    try {
      parsed = std::stoul(count_str);
    } catch (const std::exception&) {
      fail("count out of range");
    }
    if (parsed == 0 || parsed > 0xFFFFFFFFul) fail("count out of range");
    const std::uint32_t count = static_cast<std::uint32_t>(parsed);
    std::u32string entry;
    try {
      entry = decode_utf8(entry_utf8);
    } catch (const EncodingError&) {
      fail("entry is not valid UTF-8");
    }
    lex.add(std::move(entry), count);
  }
  return lex;
}

Lexicon prune_singletons(Lexicon lexicon, std::uint32_t min_count) {
  lexicon.prune(min_count);
  return lexicon;
}

void MergedLexicon::write_tsv(std::ostream& out, bool mark_reinforced) const {
  for (const LexiconEntry& e : lexicon.sorted_entries()) {
    out << encode_utf8(e.text) << '\t' << e.count;
    if (mark_reinforced) {
      out << '\t' << (reinforced.find(e.text) != reinforced.end() ? 'R' : 'N');
    }
    out << '\n';
  }
}

MergedLexicon merge(const Lexicon& a, const Lexicon& b) {
  MergedLexicon out;
  out.lexicon = a;
  for (const auto& [text, count] : b.counts()) {
    if (a.contains(text)) out.reinforced.insert(text);
    out.lexicon.add(text, count);
  }
  return out;
}

std::vector<LexiconEntry> rank_promising(const Lexicon& lexicon,
                                         std::size_t k) {
  std::vector<LexiconEntry> entries = lexicon.sorted_entries();
  if (entries.size() > k) entries.resize(k);
  return entries;
}

std::pair<SegmentedDocument, Lexicon> resegment_with_lexicon(
    const SegmentedDocument& segmented, const Lexicon& lexicon) {
  // The replacement list is the lexicon as handed in, sorted once; entries
  // discovered while re-exploding do not join it.
  const std::vector<LexiconEntry> ordered = lexicon.sorted_entries();
  Lexicon accumulated = lexicon;

  SegmentedDocument out;
  out.source = segmented.source;
  out.tokens.reserve(segmented.tokens.size());

  // Keyed by the incoming segment state, not the chunk text: callers may
  // hand over documents where equal chunks carry different segmentations.
  std::unordered_map<std::string, std::vector<std::string>> cache;

  auto process_chunk =
      [&](const SegmentedToken& st) -> std::vector<std::string> {
    std::vector<std::u32string> segs;
    segs.reserve(st.segments.size());
    for (const std::string& seg : st.segments) segs.push_back(decode_utf8(seg));
    for (const LexiconEntry& e : ordered) split_segments(segs, e.text);
    std::vector<std::string> result;
    result.reserve(segs.size());
    for (const std::u32string& seg : segs) result.push_back(encode_utf8(seg));
    return result;
  };

  for (const SegmentedToken& st : segmented.tokens) {
    SegmentedToken next;
    next.token = st.token;
    if (st.token.kind == TokenKind::kHanChunk) {
      std::string key;
      for (const std::string& seg : st.segments) {
        key += seg;
        key += ' ';
      }
      auto it = cache.find(key);
      if (it == cache.end()) {
        it = cache.emplace(std::move(key), process_chunk(st)).first;
      }
      next.segments = it->second;
      for (const std::string& seg : next.segments) {
        accumulated.add(decode_utf8(seg));
      }
    }
    out.tokens.push_back(std::move(next));
  }
  return {std::move(out), std::move(accumulated)};
}

BuildResult build(std::string_view text, const BuildOptions& options,
                  std::ostream* trace) {
  if (options.max_n < 2) throw ConfigError("max ngram size must be at least 2");
  if (options.min_count < 1) throw ConfigError("min count must be at least 1");

  const Document document = split_document(text);
  const WeightTable weights = count_ngrams(document, options.max_n);
  auto [first_pass, prelexicon] = self_segment_pass(document, weights, trace);
  prelexicon.prune(options.min_count);
  if (trace) {
    *trace << "lexicon after first pass:\n";
    for (const LexiconEntry& e : prelexicon.sorted_entries()) {
      *trace << "  " << encode_utf8(e.text) << "\t" << e.count << "\n";
    }
  }
  auto [second_pass, lexicon] = resegment_with_lexicon(first_pass, prelexicon);
  lexicon.prune(options.min_count);
  return {std::move(second_pass), std::move(lexicon)};
}

}  // namespace zici
