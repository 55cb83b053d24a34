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

#include <algorithm>
#include <cassert>
#include <ostream>

#include "zici/utf8.hpp"

namespace zici {

namespace {

// The blank wrapped around accepted n-grams. Not a Han codepoint, so no
// candidate or lexicon entry can ever match across it.
constexpr char32_t kBlank = U' ';
static_assert(!((kBlank >= 0x4E00 && kBlank <= 0x9FFF) ||
                (kBlank >= 0x3400 && kBlank <= 0x4DBF)),
              "blank marker must not be a Han codepoint");

void trace_candidates(std::ostream& out, const CandidateSet& set) {
  out << "candidates:\n";
  for (std::size_t n : set.lengths_desc()) {
    for (const Candidate& c : set.of_length(n)) {
      out << "  " << encode_utf8(c.text) << "\t" << c.weight << "\n";
    }
  }
}

}  // namespace

std::size_t CandidateSet::max_length() const {
  for (std::size_t n = by_length_.size(); n-- > 0;) {
    if (!by_length_[n].empty()) return n;
  }
  return 0;
}

std::vector<std::size_t> CandidateSet::lengths_desc() const {
  std::vector<std::size_t> out;
  for (std::size_t n = by_length_.size(); n-- > 0;) {
    if (!by_length_[n].empty()) out.push_back(n);
  }
  return out;
}

std::span<const Candidate> CandidateSet::of_length(std::size_t n) const {
  if (n >= by_length_.size()) return {};
  return by_length_[n];
}

std::span<Candidate> CandidateSet::of_length(std::size_t n) {
  if (n >= by_length_.size()) return {};
  return by_length_[n];
}

const Candidate* CandidateSet::find(std::u32string_view text) const {
  auto it = index_.find(text);
  if (it == index_.end()) return nullptr;
  return &by_length_[text.size()][it->second];
}

Candidate* CandidateSet::find(std::u32string_view text) {
  auto it = index_.find(text);
  if (it == index_.end()) return nullptr;
  return &by_length_[text.size()][it->second];
}

void CandidateSet::insert(Candidate candidate) {
  const std::size_t n = candidate.length();
  if (by_length_.size() <= n) by_length_.resize(n + 1);
  index_.emplace(candidate.text, by_length_[n].size());
  by_length_[n].push_back(std::move(candidate));
  ++total_;
}

std::vector<Candidate> CandidateSet::acceptables() const {
  std::vector<Candidate> out;
  for (const auto& bucket : by_length_) {
    for (const Candidate& c : bucket) {
      if (c.acceptable) out.push_back(c);
    }
  }
  return out;
}

CandidateSet collect_candidates(std::u32string_view chunk,
                                const WeightTable& weights) {
  CandidateSet set;
  const std::size_t len = chunk.size();
  const std::size_t top =
      std::min<std::size_t>(len, static_cast<std::size_t>(weights.max_n()));
  for (std::size_t n = 2; n <= top; ++n) {
    for (std::size_t start = 0; start + n <= len; ++start) {
      const std::u32string_view gram = chunk.substr(start, n);
      if (set.find(gram) != nullptr) continue;  // later occurrence
      const std::uint32_t w = weights.count(gram);
      if (w > 1) {
        set.insert(Candidate{std::u32string(gram), w, start, true});
      }
    }
  }
  return set;
}

void mark_acceptability(CandidateSet& candidates, std::ostream* trace) {
  // Every candidate of length n >= 3 has exactly two constituent
  // (n-1)-grams, its prefix and suffix, and both are always candidates too:
  // sub-n-grams can only be more frequent. Each (candidate, constituent)
  // pair is judged on weights alone, so marks are order independent.
  for (std::size_t n : candidates.lengths_desc()) {
    if (n < 3) break;
    for (Candidate& g : candidates.of_length(n)) {
      const std::u32string_view text = g.text;
      auto judge = [&](std::u32string_view part) {
        Candidate* s = candidates.find(part);
        assert(s != nullptr);
        Candidate& loser = s->weight > g.weight ? g : *s;
        loser.acceptable = false;
        if (trace) {
          *trace << "test: " << encode_utf8(text) << " (" << g.weight
                 << ") vs " << encode_utf8(part) << " (" << s->weight
                 << ") -> " << encode_utf8(loser.text) << " unacceptable\n";
        }
      };
      const std::u32string_view prefix = text.substr(0, n - 1);
      const std::u32string_view suffix = text.substr(1, n - 1);
      judge(prefix);
      if (suffix != prefix) judge(suffix);
    }
  }
}

std::vector<Candidate> order_acceptables(const CandidateSet& candidates) {
  std::vector<Candidate> out = candidates.acceptables();
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    if (a.text.size() != b.text.size()) return a.text.size() > b.text.size();
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.text < b.text;
  });
  return out;
}

void split_segments(std::vector<std::u32string>& segments,
                    std::u32string_view needle) {
  if (needle.empty()) return;
  std::vector<std::u32string> next;
  next.reserve(segments.size());
  for (std::u32string& seg : segments) {
    std::size_t pos = 0;
    std::size_t hit = seg.find(needle, pos);
    if (hit == std::u32string::npos) {
      next.push_back(std::move(seg));
      continue;
    }
    while (hit != std::u32string::npos) {
      if (hit > pos) next.push_back(seg.substr(pos, hit - pos));
      next.push_back(seg.substr(hit, needle.size()));
      pos = hit + needle.size();
      hit = seg.find(needle, pos);
    }
    if (pos < seg.size()) next.push_back(seg.substr(pos));
  }
  segments = std::move(next);
}

std::vector<std::u32string> segment_chunk(
    std::u32string_view chunk, std::span<const Candidate> ordered_acceptables,
    std::ostream* trace) {
  std::vector<std::u32string> segments{std::u32string(chunk)};
  std::size_t step = 0;
  if (trace) *trace << "segmentation:\n  0. " << encode_utf8(chunk) << "\n";
  for (const Candidate& c : ordered_acceptables) {
    split_segments(segments, c.text);
    if (trace) {
      *trace << "  " << ++step << ".";
      for (const auto& seg : segments) *trace << " " << encode_utf8(seg);
      *trace << "\n";
    }
  }
  return segments;
}

std::pair<SegmentedDocument, Lexicon> self_segment_pass(
    const Document& document, const WeightTable& weights, std::ostream* trace) {
  SegmentedDocument segmented;
  segmented.source = document.source;
  segmented.tokens.reserve(document.tokens.size());
  Lexicon prelexicon;

  struct ChunkResult {
    std::vector<std::string> segments;
    bool counted = false;  // whether segments feed the pre-lexicon
  };
  // Identical chunk text always segments identically, so repeated chunks
  // are computed once. Tracing bypasses the cache to log every instance.
  U32Map<ChunkResult> cache;

  auto process_chunk = [&](const std::u32string& chunk) -> ChunkResult {
    ChunkResult result;
    if (chunk.size() <= 2) {
      result.segments.push_back(encode_utf8(chunk));
      return result;
    }
    CandidateSet candidates = collect_candidates(chunk, weights);
    if (candidates.empty()) {
      result.segments.push_back(encode_utf8(chunk));
      return result;
    }
    if (trace) {
      *trace << "chunk: " << encode_utf8(chunk) << "\n";
      trace_candidates(*trace, candidates);
    }
    mark_acceptability(candidates, trace);
    const std::vector<Candidate> ordered = order_acceptables(candidates);
    if (trace) {
      *trace << "acceptable:\n";
      for (const Candidate& c : ordered) {
        *trace << "  " << encode_utf8(c.text) << "\t" << c.weight << "\n";
      }
    }
    for (const std::u32string& seg : segment_chunk(chunk, ordered, trace)) {
      result.segments.push_back(encode_utf8(seg));
    }
    result.counted = true;
    return result;
  };

  for (const Token& tok : document.tokens) {
    SegmentedToken st;
    st.token = tok;
    if (tok.kind == TokenKind::kHanChunk) {
      const std::u32string chunk = decode_utf8(tok.text);
      ChunkResult traced;
      const ChunkResult* result;
      if (trace) {
        traced = process_chunk(chunk);
        result = &traced;
      } else {
        auto it = cache.find(chunk);
        if (it == cache.end()) {
          it = cache.emplace(chunk, process_chunk(chunk)).first;
        }
        result = &it->second;
      }
      st.segments = result->segments;
      if (result->counted) {
        for (const std::string& seg : st.segments) {
          prelexicon.add(decode_utf8(seg));
        }
      }
    }
    segmented.tokens.push_back(std::move(st));
  }
  return {std::move(segmented), std::move(prelexicon)};
}

}  // namespace zici
