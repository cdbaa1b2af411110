// Copyright 2026 The ctxdenoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CTXDENOISE_UNICODE_H_
#define CTXDENOISE_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace ctxdenoise {

struct DecodedChar {
  char32_t code_point;
  std::size_t length;  // bytes consumed, >= 1
};

// Decodes the code point starting at byte `pos` (< text.size()). A malformed
// sequence yields U+FFFD and consumes one byte.
DecodedChar DecodeUtf8At(std::string_view text, std::size_t pos);

// UTF-8 <-> code points. Malformed sequences decode to U+FFFD.
std::u32string DecodeUtf8(std::string_view text);
std::string EncodeUtf8(std::u32string_view text);

// Character classification uses the C.UTF-8 locale tables when the platform
// provides them and falls back to ASCII otherwise.
bool IsAlpha(char32_t c);
char32_t ToLower(char32_t c);
bool IsSpace(char32_t c);

std::string ToLowerUtf8(std::string_view text);
bool ContainsAlpha(std::string_view text);

}  // namespace ctxdenoise

#endif  // CTXDENOISE_UNICODE_H_
