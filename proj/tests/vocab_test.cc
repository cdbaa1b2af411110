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

#include "ctxdenoise/vocab.h"

#include <gtest/gtest.h>

#include "ctxdenoise/errors.h"
#include "test_util.h"

namespace ctxdenoise {
namespace {

using testing::TempDir;

TEST(VocabTest, LoadsFiveLineFile) {
  TempDir dir;
  const auto path = dir.Write("v.txt", "[MASK]\n[CLS]\n[SEP]\n[UNK]\nthe\n");
  const Vocab vocab = Vocab::Load(path);
  EXPECT_EQ(vocab.size(), 5u);
  EXPECT_EQ(vocab.mask_id(), 0);
  EXPECT_EQ(vocab.start_id(), 1);
  EXPECT_EQ(vocab.separator_id(), 2);
  EXPECT_EQ(vocab.unknown_id(), 3);
  EXPECT_EQ(vocab.Find("the"), 4);
  EXPECT_EQ(vocab.Piece(4), "the");
  EXPECT_FALSE(vocab.Find("cat").has_value());
}

TEST(VocabTest, DuplicatePieceIsFatal) {
  TempDir dir;
  const auto path =
      dir.Write("v.txt", "[MASK]\n[CLS]\n[SEP]\n[UNK]\nthe\nthe\n");
  EXPECT_THROW(Vocab::Load(path), ConfigError);
}

TEST(VocabTest, MissingSpecialIsFatal) {
  TempDir dir;
  const auto path = dir.Write("v.txt", "[CLS]\n[SEP]\n[UNK]\nthe\n");
  try {
    Vocab::Load(path);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("[MASK]"), std::string::npos);
  }
}

TEST(VocabTest, MissingFileIsFatal) {
  EXPECT_THROW(Vocab::Load("/nonexistent/vocab.txt"), ConfigError);
}

TEST(VocabTest, EmptyLineIsFatal) {
  EXPECT_THROW(Vocab::FromPieces({"[MASK]", "[CLS]", "", "[SEP]", "[UNK]"}),
               ConfigError);
}

TEST(VocabTest, CrlfLinesAreAccepted) {
  TempDir dir;
  const auto path = dir.Write("v.txt", "[MASK]\r\n[CLS]\r\n[SEP]\r\n[UNK]\r\n");
  EXPECT_EQ(Vocab::Load(path).size(), 4u);
}

TEST(VocabTest, Sha256KnownVector) {
  EXPECT_EQ(Sha256Hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(VocabTest, HashIsDigestOfFileBytes) {
  TempDir dir;
  const std::string bytes = "[MASK]\n[CLS]\n[SEP]\n[UNK]\nthe\n";
  const auto path = dir.Write("v.txt", bytes);
  const Vocab loaded = Vocab::Load(path);
  EXPECT_EQ(loaded.hash(), Sha256Hex(bytes));
  EXPECT_EQ(Vocab::FromPieces({"[MASK]", "[CLS]", "[SEP]", "[UNK]", "the"})
                .hash(),
            loaded.hash());
}

TEST(VocabTest, ContinuationAndSpecials) {
  const Vocab vocab = testing::MakeVocab({"lea", "##ke"});
  EXPECT_TRUE(vocab.IsContinuation(*vocab.Find("##ke")));
  EXPECT_FALSE(vocab.IsContinuation(*vocab.Find("lea")));
  EXPECT_TRUE(vocab.IsSpecial(vocab.mask_id()));
  EXPECT_FALSE(vocab.IsSpecial(*vocab.Find("[PAD]")));
  EXPECT_EQ(Vocab::StripContinuation("##ke"), "ke");
  EXPECT_EQ(Vocab::StripContinuation("lea"), "lea");
  EXPECT_THROW(vocab.Piece(999), ContractError);
}

}  // namespace
}  // namespace ctxdenoise
