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

#ifndef ZICI_ERRORS_HPP_
#define ZICI_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zici {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text is not valid UTF-8. Carries the byte offset of the offending
/// sequence start.
class EncodingError : public Error {
 public:
  explicit EncodingError(std::size_t byte_offset)
      : Error("invalid UTF-8 sequence at byte offset " +
              std::to_string(byte_offset)),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// Invalid configuration value (separator, ngram size, count threshold).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// File could not be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Structured input (lexicon TSV, dictionary file) violates its line grammar
/// in a way that cannot be skipped.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Gold and predicted segmentations do not cover the same text.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

}  // namespace zici

#endif  // ZICI_ERRORS_HPP_
