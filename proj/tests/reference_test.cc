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

// Checks on the independent reference used by the acceptance suite. It must
// reproduce the hand-traced example before its output can serve as an oracle.

#include "reference/reference_denoiser.h"

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

namespace reference {
namespace {

const std::set<std::string>& DuckLakeVocab() {
  static const std::set<std::string> vocab = {
      "[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]", "there", "is", "a",
      "fat", "duck", "dog", "dock", "sack", "swimming", "in", "the", "lake",
      "pond", "sea", "leak", "d", "##ack", "lea", "le", "##ke", "##ake",
      "##a", "##k", "##e"};
  return vocab;
}

std::string Join(const std::vector<std::string>& pieces) {
  std::string out;
  for (const auto& p : pieces) out += (out.empty() ? "" : " ") + p;
  return out;
}

TEST(ReferenceTest, Pieces) {
  EXPECT_EQ(Pieces("leake", DuckLakeVocab()),
            (std::vector<std::string>{"leak", "##e"}));
  EXPECT_EQ(Pieces("dack", DuckLakeVocab()),
            (std::vector<std::string>{"d", "##ack"}));
  EXPECT_EQ(Pieces("zzz", DuckLakeVocab()), (std::vector<std::string>{"[UNK]"}));
}

TEST(ReferenceTest, Levenshtein) {
  EXPECT_EQ(Levenshtein("duck", "dack"), 1u);
  EXPECT_EQ(Levenshtein("lake", "leake"), 1u);
  EXPECT_EQ(Levenshtein("kitten", "sitting"), 3u);
}

TEST(ReferenceTest, HandTracedExample) {
  using Lists = std::vector<std::vector<Prediction>>;
  const std::map<std::string, Lists> table = {
      {"[CLS] there is a fat [MASK] swimming in the leak ##e [SEP] there is a "
       "fat d ##ack swimming in the leak ##e [SEP]",
       {{{"duck", -0.1}, {"dog", -2.5}, {"dock", -3.0}, {"sack", -3.5}}}},
      {"[CLS] there is a fat duck swimming in the [MASK] [SEP] there is a fat "
       "duck swimming in the leak ##e [SEP]",
       {{{"lake", -0.5}, {"pond", -1.0}, {"sea", -1.5}, {"leak", -4.0}}}},
      {"[CLS] there is a fat duck swimming in the [MASK] [MASK] [SEP] there "
       "is a fat duck swimming in the leak ##e [SEP]",
       {{{"lea", -1.0}, {"le", -1.5}}, {{"##k", -2.0}, {"lake", -2.5}}}},
  };
  const Query query = [&](const std::vector<std::string>& pieces,
                          const std::vector<std::size_t>& positions, int,
                          const QueryContext&) {
    auto it = table.find(Join(pieces));
    if (it != table.end()) return it->second;
    return Lists(positions.size());
  };
  std::vector<std::string> seen;
  const Observer observer = [&](std::size_t, const std::string& noisy,
                                const std::vector<Scored>& candidates,
                                const std::string& chosen) {
    if (!candidates.empty()) seen.push_back(noisy + ">" + chosen);
  };
  EXPECT_EQ(Denoise("there is a fat dack swimming in the leake", DuckLakeVocab(),
                    Settings{}, query, observer),
            "there is a fat duck swimming in the lake");
  EXPECT_EQ(seen, (std::vector<std::string>{"dack>duck", "leake>lake"}));
}

}  // namespace
}  // namespace reference
