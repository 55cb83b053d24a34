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

#include "zici/evalkit.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zici/errors.hpp"
#include "zici/utf8.hpp"

namespace zici {

namespace {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\v' || c == '\f' || c == '\r';
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), is_ascii_space);
}

bool valid_utf8(std::string_view text) {
  try {
    decode_utf8(text);
  } catch (const EncodingError&) {
    return false;
  }
  return true;
}

// Extracts the headword from one dictionary line, or returns false. The
// expected shape is `TRAD SIMP [PINYIN] /GLOSS/.../`.
bool parse_dict_line(std::string_view line, DictColumn column,
                     std::string& headword) {
  const std::size_t first_space = line.find(' ');
  if (first_space == std::string_view::npos || first_space == 0) return false;
  const std::size_t second_space = line.find(' ', first_space + 1);
  if (second_space == std::string_view::npos ||
      second_space == first_space + 1) {
    return false;
  }
  const std::string_view trad = line.substr(0, first_space);
  const std::string_view simp =
      line.substr(first_space + 1, second_space - first_space - 1);

  const std::string_view rest = line.substr(second_space + 1);
  const std::size_t open = rest.find('[');
  if (open == std::string_view::npos) return false;
  const std::size_t close = rest.find(']', open + 1);
  if (close == std::string_view::npos) return false;
  const std::size_t slash = rest.find('/', close + 1);
  if (slash == std::string_view::npos) return false;
  if (rest.find('/', slash + 1) == std::string_view::npos) return false;

  const std::string_view picked =
      column == DictColumn::kTraditional ? trad : simp;
  if (!valid_utf8(picked)) return false;
  headword.assign(picked);
  return true;
}

}  // namespace

DictionarySet parse_cedict(std::istream& in, DictColumn column) {
  DictionarySet dict;
  std::string line;
  std::string headword;
  while (std::getline(in, line)) {
    ++dict.line_count;
    strip_cr(line);
    if (is_blank(line)) continue;
    if (line.front() == '#') continue;
    if (parse_dict_line(line, column, headword)) {
      dict.headwords.insert(headword);
    } else {
      ++dict.malformed_count;
    }
  }
  return dict;
}

int CoverageReport::percent() const {
  return static_cast<int>(std::lround(ratio * 100.0));
}

CoverageReport coverage(const Lexicon& lexicon, const DictionarySet& dict) {
  CoverageReport report;
  report.total_entries = lexicon.size();
  for (const auto& [text, count] : lexicon.counts()) {
    (void)count;
    if (dict.headwords.count(encode_utf8(text)) != 0) ++report.matched;
  }
  if (report.total_entries > 0) {
    report.ratio = static_cast<double>(report.matched) /
                   static_cast<double>(report.total_entries);
  }
  return report;
}

namespace {

// Byte-offset spans of a line's non-empty tokens over its concatenation,
// sorted for set intersection.
std::vector<std::pair<std::size_t, std::size_t>> token_spans(
    const std::vector<std::string>& tokens) {
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  spans.reserve(tokens.size());
  std::size_t offset = 0;
  for (const std::string& token : tokens) {
    if (token.empty()) continue;
    spans.emplace_back(offset, offset + token.size());
    offset += token.size();
  }
  std::sort(spans.begin(), spans.end());
  return spans;
}

std::string concat(const std::vector<std::string>& tokens) {
  std::string text;
  for (const std::string& token : tokens) text += token;
  return text;
}

}  // namespace

PrfScore score_segmentation(const std::vector<std::vector<std::string>>& gold,
                            const std::vector<std::vector<std::string>>& pred) {
  if (gold.size() != pred.size()) {
    throw AlignmentError("line count mismatch: gold " +
                         std::to_string(gold.size()) + " lines, pred " +
                         std::to_string(pred.size()) + " lines");
  }

  PrfScore score;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (concat(gold[i]) != concat(pred[i])) {
      throw AlignmentError("line " + std::to_string(i + 1) +
                           ": gold and pred texts differ");
    }
    const auto gold_spans = token_spans(gold[i]);
    const auto pred_spans = token_spans(pred[i]);
    score.gold_words += gold_spans.size();
    score.pred_words += pred_spans.size();
    for (const auto& span : pred_spans) {
      if (std::binary_search(gold_spans.begin(), gold_spans.end(), span)) {
        ++score.matched;
      }
    }
  }

  if (score.gold_words == 0 && score.pred_words == 0) {
    score.precision = score.recall = score.f1 = 1.0;
    return score;
  }
  if (score.pred_words > 0) {
    score.precision = static_cast<double>(score.matched) /
                      static_cast<double>(score.pred_words);
  }
  if (score.gold_words > 0) {
    score.recall = static_cast<double>(score.matched) /
                   static_cast<double>(score.gold_words);
  }
  if (score.precision + score.recall > 0.0) {
    score.f1 = 2.0 * score.precision * score.recall /
               (score.precision + score.recall);
  }
  return score;
}

std::vector<std::vector<std::string>> read_token_lines(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(in, line)) {
    strip_cr(line);
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_ascii_space(line[i])) ++i;
      const std::size_t start = i;
      while (i < line.size() && !is_ascii_space(line[i])) ++i;
      if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    lines.push_back(std::move(tokens));
  }
  return lines;
}

}  // namespace zici
