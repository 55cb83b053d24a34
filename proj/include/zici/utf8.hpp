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

#ifndef ZICI_UTF8_HPP_
#define ZICI_UTF8_HPP_

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace zici {

/// Strict UTF-8 decode. Rejects overlong forms, surrogates, values past
/// U+10FFFF and truncated sequences; throws EncodingError with the byte
/// offset of the offending sequence.
std::u32string decode_utf8(std::string_view text);

/// Decodes the codepoint starting at byte offset `i` (must be < text.size())
/// and advances `i` past it. Same validation as decode_utf8.
char32_t decode_next(std::string_view text, std::size_t& i);

/// Appends the UTF-8 encoding of one codepoint.
void append_utf8(std::string& out, char32_t cp);

std::string encode_utf8(std::u32string_view text);

/// True for codepoints treated as Chinese text: CJK Unified Ideographs
/// (U+4E00..U+9FFF) and Extension A (U+3400..U+4DBF). Everything else,
/// including fullwidth digits and Latin, is a break point.
inline bool is_han(char32_t cp) {
  return (cp >= 0x4E00 && cp <= 0x9FFF) || (cp >= 0x3400 && cp <= 0x4DBF);
}

/// True if the (valid UTF-8) text contains at least one Han codepoint.
bool contains_han(std::string_view text);

// Transparent hashing so u32string-keyed containers accept string_view
// lookups without a copy.
struct U32Hash {
  using is_transparent = void;
  std::size_t operator()(std::u32string_view s) const noexcept {
    return std::hash<std::u32string_view>{}(s);
  }
};

struct U32Eq {
  using is_transparent = void;
  bool operator()(std::u32string_view a,
                  std::u32string_view b) const noexcept {
    return a == b;
  }
};

template <typename V>
using U32Map = std::unordered_map<std::u32string, V, U32Hash, U32Eq>;
using U32Set = std::unordered_set<std::u32string, U32Hash, U32Eq>;

}  // namespace zici

#endif  // ZICI_UTF8_HPP_
