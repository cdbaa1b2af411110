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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ctxdenoise {
namespace {

// Plain recursive definition, memoized on suffix pairs.
std::size_t Recursive(const std::string& a, const std::string& b,
                      std::map<std::pair<std::string, std::string>,
                               std::size_t>& memo) {
  if (a.empty()) return b.size();
  if (b.empty()) return a.size();
  const auto key = std::make_pair(a, b);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const std::string ra = a.substr(1);
  const std::string rb = b.substr(1);
  std::size_t best = Recursive(ra, rb, memo) + (a[0] == b[0] ? 0 : 1);
  best = std::min(best, Recursive(ra, b, memo) + 1);
  best = std::min(best, Recursive(a, rb, memo) + 1);
  memo.emplace(key, best);
  return best;
}

std::vector<std::string> AllStrings(const std::string& alphabet,
                                    std::size_t max_len) {
  std::vector<std::string> out = {""};
  std::vector<std::string> layer = {""};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& s : layer) {
      for (char c : alphabet) next.push_back(s + c);
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

TEST(EditDistanceTest, Examples) {
  EXPECT_EQ(EditDistance("duck", "dack"), 1u);
  EXPECT_EQ(EditDistance("lake", "leake"), 1u);
  EXPECT_EQ(EditDistance("kitten", "sitting"), 3u);
  EXPECT_EQ(EditDistance("", "abc"), 3u);
  EXPECT_EQ(EditDistance("abc", ""), 3u);
  EXPECT_EQ(EditDistance("", ""), 0u);
  EXPECT_EQ(EditDistance("flaw", "lawn"), 2u);
}

TEST(EditDistanceTest, CaseInsensitive) {
  EXPECT_EQ(EditDistance("Duck", "duck"), 0u);
  EXPECT_EQ(EditDistance("LAKE", "leake"), 1u);
  EXPECT_EQ(EditDistance("Ärger", "ärger"), 0u);
}

TEST(EditDistanceTest, CountsCodePointsNotBytes) {
  EXPECT_EQ(EditDistance("café", "cafe"), 1u);
  EXPECT_EQ(EditDistance("ξζ", "ζξ"), 2u);
}

TEST(EditDistanceTest, MatchesRecursiveDefinitionExhaustively) {
  const std::vector<std::string> all = AllStrings("abc", 5);
  std::map<std::pair<std::string, std::string>, std::size_t> memo;
  for (const auto& a : all) {
    for (const auto& b : all) {
      ASSERT_EQ(EditDistance(a, b), Recursive(a, b, memo))
          << "'" << a << "' vs '" << b << "'";
    }
  }
}

TEST(EditDistanceTest, MetricProperties) {
  const std::vector<std::string> all = AllStrings("ab", 4);
  for (const auto& a : all) {
    EXPECT_EQ(EditDistance(a, a), 0u);
    for (const auto& b : all) {
      const std::size_t ab = EditDistance(a, b);
      EXPECT_EQ(ab, EditDistance(b, a));
      EXPECT_EQ(ab == 0, a == b);
      EXPECT_LE(ab, std::max(a.size(), b.size()));
      EXPECT_GE(ab, a.size() > b.size() ? a.size() - b.size()
                                        : b.size() - a.size());
      for (const auto& c : all) {
        EXPECT_LE(EditDistance(a, c), ab + EditDistance(b, c));
      }
    }
  }
}

}  // namespace
}  // namespace ctxdenoise
