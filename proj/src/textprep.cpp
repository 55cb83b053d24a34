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

#include "zici/textprep.hpp"

#include "zici/errors.hpp"
#include "zici/utf8.hpp"

namespace zici {

Document split_document(std::string_view text) {
  Document doc;
  doc.source.assign(text);

  // Walk codepoints, tracking byte spans so token texts are exact slices of
  // the source.
  std::size_t byte = 0;       // current byte offset
  std::size_t cp_index = 0;   // current codepoint offset
  std::size_t run_byte = 0;   // byte offset where the current run started
  std::size_t run_cp = 0;     // codepoint offset of the current run
  bool run_open = false;
  bool run_han = false;

  auto close_run = [&](std::size_t end_byte) {
    if (!run_open) return;
    Token tok;
    tok.kind = run_han ? TokenKind::kHanChunk : TokenKind::kLiteral;
    tok.text = doc.source.substr(run_byte, end_byte - run_byte);
    tok.start = run_cp;
    doc.tokens.push_back(std::move(tok));
    run_open = false;
  };

  while (byte < text.size()) {
    const std::size_t cp_byte = byte;
    const char32_t cp = decode_next(text, byte);
    const bool han = is_han(cp);
    if (!run_open || han != run_han) {
      close_run(cp_byte);
      run_open = true;
      run_han = han;
      run_byte = cp_byte;
      run_cp = cp_index;
    }
    ++cp_index;
  }
  close_run(byte);
  return doc;
}

SegmentedDocument make_unsegmented(const Document& document) {
  SegmentedDocument out;
  out.source = document.source;
  out.tokens.reserve(document.tokens.size());
  for (const Token& tok : document.tokens) {
    SegmentedToken st;
    st.token = tok;
    if (tok.kind == TokenKind::kHanChunk) st.segments.push_back(tok.text);
    out.tokens.push_back(std::move(st));
  }
  return out;
}

std::string render(const SegmentedDocument& document,
                   std::string_view separator) {
  try {
    if (contains_han(separator)) {
      throw ConfigError("separator must not contain Han codepoints");
    }
  } catch (const EncodingError&) {
    throw ConfigError("separator is not valid UTF-8");
  }

  std::string out;
  out.reserve(document.source.size() + document.source.size() / 2);
  bool line_has_item = false;

  auto emit_item = [&](std::string_view item) {
    if (item.empty()) return;
    if (line_has_item) out += separator;
    out += item;
    line_has_item = true;
  };

  for (const SegmentedToken& st : document.tokens) {
    if (st.token.kind == TokenKind::kHanChunk) {
      for (const std::string& seg : st.segments) emit_item(seg);
      continue;
    }
    // Literal run: pieces between newlines are items of their lines; the
    // newlines themselves pass through verbatim and reset the line state.
    std::string_view t = st.token.text;
    std::size_t pos = 0;
    while (true) {
      const std::size_t nl = t.find('\n', pos);
      if (nl == std::string_view::npos) {
        emit_item(t.substr(pos));
        break;
      }
      emit_item(t.substr(pos, nl - pos));
      out += '\n';
      line_has_item = false;
      pos = nl + 1;
    }
  }
  return out;
}

}  // namespace zici
