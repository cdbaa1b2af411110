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

#include "ctxdenoise/edit_distance.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "ctxdenoise/unicode.h"

namespace ctxdenoise {

std::size_t Levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return a.size();
  // Single row over the shorter string; `diagonal` carries row[j-1] of the
  // previous iteration.
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t above = row[j];
      const std::size_t substitute = diagonal + (a[i - 1] == b[j - 1] ? 0 : 1);
      row[j] = std::min({above + 1, row[j - 1] + 1, substitute});
      diagonal = above;
    }
  }
  return row[b.size()];
}

std::size_t EditDistance(std::string_view a, std::string_view b) {
  std::u32string lhs = DecodeUtf8(a);
  std::u32string rhs = DecodeUtf8(b);
  for (char32_t& c : lhs) c = ToLower(c);
  for (char32_t& c : rhs) c = ToLower(c);
  return Levenshtein(lhs, rhs);
}

}  // namespace ctxdenoise
