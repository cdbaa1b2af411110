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

#ifndef CTXDENOISE_EDIT_DISTANCE_H_
#define CTXDENOISE_EDIT_DISTANCE_H_

#include <cstddef>
#include <string_view>

namespace ctxdenoise {

// Unit-cost Levenshtein distance over code points, exact comparison.
std::size_t Levenshtein(std::u32string_view a, std::u32string_view b);

// Levenshtein distance between two UTF-8 strings, compared case-insensitively.
std::size_t EditDistance(std::string_view a, std::string_view b);

}  // namespace ctxdenoise

#endif  // CTXDENOISE_EDIT_DISTANCE_H_
