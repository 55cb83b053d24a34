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

#ifndef ZICI_TEXTPREP_HPP_
#define ZICI_TEXTPREP_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace zici {

enum class TokenKind { kHanChunk, kLiteral };

/// One maximal run of the input: either pure Han text (a chunk, the unit the
/// segmenter works on) or a literal break run (Latin, digits, punctuation,
/// whitespace) that is passed through untouched.
struct Token {
  TokenKind kind = TokenKind::kLiteral;
  std::string text;        // UTF-8, non-empty slice of the source
  std::size_t start = 0;   // codepoint offset into the source
};

/// Tokens tile the source text: concatenating their texts reproduces it.
struct Document {
  std::string source;
  std::vector<Token> tokens;
};

/// A token plus, for Han chunks, the ordered list of segments it was split
/// into. Segment concatenation equals the chunk text. Literal tokens carry
/// no segments.
struct SegmentedToken {
  Token token;
  std::vector<std::string> segments;
};

struct SegmentedDocument {
  std::string source;
  std::vector<SegmentedToken> tokens;
};

/// Splits raw text into maximal Han chunks and literal break runs.
/// Break points are everything outside the Han ranges, mirroring the usual
/// roman-characters/numbers/punctuation convention. Throws EncodingError on
/// malformed UTF-8.
Document split_document(std::string_view text);

/// Wraps a document with each chunk as a single segment (nothing split yet).
SegmentedDocument make_unsegmented(const Document& document);

/// Emits all segments and literal tokens in document order joined by
/// `separator`. Newlines inside literal tokens are kept verbatim and never
/// get a separator glued to either side, so no line starts or ends with one.
/// Throws ConfigError if the separator contains Han codepoints or is not
/// valid UTF-8.
std::string render(const SegmentedDocument& document,
                   std::string_view separator);

}  // namespace zici

#endif  // ZICI_TEXTPREP_HPP_
