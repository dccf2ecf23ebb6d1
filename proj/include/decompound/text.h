// Copyright 2026 The decompound Authors.
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

// Text conventions shared by every module. All lengths and offsets count
// Unicode scalar values; UTF-8 is only an interchange encoding.

#ifndef DECOMPOUND_TEXT_H_
#define DECOMPOUND_TEXT_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace decompound {

// Raised for malformed input data (bad UTF-8, bad rows, bad model files).
// The CLI maps it to exit status 1.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by Utf8ToUtf32 when the input is not well-formed UTF-8.
class Utf8Error : public DataError {
 public:
  Utf8Error(const std::string &what, std::size_t byte_offset)
      : DataError(what), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

std::u32string Utf8ToUtf32(std::string_view utf8);
std::string Utf32ToUtf8(std::u32string_view text);
std::string Utf32ToUtf8(char32_t c);

// Number of scalar values in a UTF-8 string.
std::size_t CharLen(std::string_view utf8);

// Scalar values [begin, end) of a UTF-8 string. Throws std::out_of_range
// unless begin <= end <= CharLen(utf8).
std::string Slice(std::string_view utf8, std::size_t begin, std::size_t end);
std::u32string Slice(std::u32string_view text, std::size_t begin,
                     std::size_t end);

// NFC normalization (ICU).
std::string NormalizeNfc(std::string_view utf8);
std::u32string NormalizeNfc(std::u32string_view text);

bool IsWhitespace(char32_t c);
bool IsPunctuation(char32_t c);
bool IsDigit(char32_t c);
// Letters (L*) and combining marks (M*).
bool IsLetterOrMark(char32_t c);
bool ContainsWhitespace(std::u32string_view text);

// Splits on runs of Unicode whitespace; never returns empty pieces.
std::vector<std::u32string_view> SplitWhitespace(std::u32string_view text);

}  // namespace decompound

#endif  // DECOMPOUND_TEXT_H_
