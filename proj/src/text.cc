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

#include "decompound/text.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <string>

namespace decompound {

std::u32string Utf8ToUtf32(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  const auto *s = reinterpret_cast<const uint8_t *>(utf8.data());
  const int32_t length = static_cast<int32_t>(utf8.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) {
      throw Utf8Error("invalid UTF-8 at byte offset " + std::to_string(start),
                      static_cast<std::size_t>(start));
    }
    out.push_back(static_cast<char32_t>(c));
  }
  return out;
}

std::string Utf32ToUtf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    char buf[U8_MAX_LENGTH];
    int32_t n = 0;
    UBool error = false;
    U8_APPEND(reinterpret_cast<uint8_t *>(buf), n, U8_MAX_LENGTH,
              static_cast<UChar32>(c), error);
    if (error) {
      throw DataError("not a Unicode scalar value: " +
                      std::to_string(static_cast<uint32_t>(c)));
    }
    out.append(buf, n);
  }
  return out;
}

std::string Utf32ToUtf8(char32_t c) {
  return Utf32ToUtf8(std::u32string_view(&c, 1));
}

std::size_t CharLen(std::string_view utf8) { return Utf8ToUtf32(utf8).size(); }

std::u32string Slice(std::u32string_view text, std::size_t begin,
                     std::size_t end) {
  if (begin > end || end > text.size()) {
    throw std::out_of_range("slice [" + std::to_string(begin) + ", " +
                            std::to_string(end) + ") out of range for length " +
                            std::to_string(text.size()));
  }
  return std::u32string(text.substr(begin, end - begin));
}

std::string Slice(std::string_view utf8, std::size_t begin, std::size_t end) {
  return Utf32ToUtf8(Slice(std::u32string_view(Utf8ToUtf32(utf8)), begin, end));
}

std::string NormalizeNfc(std::string_view utf8) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw std::runtime_error("ICU NFC normalizer unavailable");
  }
  const auto input = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  if (nfc->isNormalized(input, status) && U_SUCCESS(status)) {
    return std::string(utf8);
  }
  status = U_ZERO_ERROR;
  const icu::UnicodeString normalized = nfc->normalize(input, status);
  if (U_FAILURE(status)) {
    throw DataError("NFC normalization failed");
  }
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

std::u32string NormalizeNfc(std::u32string_view text) {
  return Utf8ToUtf32(NormalizeNfc(Utf32ToUtf8(text)));
}

bool IsWhitespace(char32_t c) {
  return u_isUWhiteSpace(static_cast<UChar32>(c));
}

bool IsPunctuation(char32_t c) { return u_ispunct(static_cast<UChar32>(c)); }

bool IsDigit(char32_t c) { return u_isdigit(static_cast<UChar32>(c)); }

bool IsLetterOrMark(char32_t c) {
  return (U_GET_GC_MASK(static_cast<UChar32>(c)) & (U_GC_L_MASK | U_GC_M_MASK)) != 0;
}

bool ContainsWhitespace(std::u32string_view text) {
  for (char32_t c : text) {
    if (IsWhitespace(c)) return true;
  }
  return false;
}

std::vector<std::u32string_view> SplitWhitespace(std::u32string_view text) {
  std::vector<std::u32string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsWhitespace(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !IsWhitespace(text[i])) ++i;
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

}  // namespace decompound
