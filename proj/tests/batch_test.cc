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

#include "ctxdenoise/batch.h"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "ctxdenoise/errors.h"
#include "test_util.h"

namespace ctxdenoise {
namespace {

using testing::FunctionBackend;

class BatchTest : public ::testing::Test {
 protected:
  BatchTest() : vocab_(testing::MakeVocab({"good", "bad", "word", "x"})) {}

  // Proposes "word" and "good" for every mask; fails whenever "bad" is in the
  // input.
  MaskPredictions Answer(const ScoreRequest& r) const {
    for (PieceId id : r.pieces) {
      if (id == *vocab_.Find("bad")) throw BackendError("injected failure");
    }
    MaskPredictions p(r.mask_positions.size());
    p[0].push_back({*vocab_.Find("word"), -1.0});
    p[0].push_back({*vocab_.Find("good"), -2.0});
    return p;
  }

  Vocab vocab_;
};

TEST_F(BatchTest, OutputOrderMatchesInputForAnyWorkerCount) {
  FunctionBackend backend([this](const ScoreRequest& r) { return Answer(r); });
  DenoiseConfig config;
  config.max_masks = 1;
  config.per_n_top_k = {2};
  const Denoiser denoiser(vocab_, backend, config);
  std::vector<std::string> input;
  for (int i = 0; i < 50; ++i) {
    input.push_back(i % 2 == 0 ? "wrd " + std::to_string(i) : "good");
  }
  const BatchResult serial = DenoiseBatch(input, denoiser, 1);
  ASSERT_TRUE(serial.failures.empty());
  EXPECT_EQ(serial.outputs[0], "word 0");
  EXPECT_EQ(serial.outputs[1], "good");
  for (std::size_t workers : {2u, 5u, 16u, 100u}) {
    EXPECT_EQ(DenoiseBatch(input, denoiser, workers).outputs, serial.outputs)
        << workers;
  }
}

TEST_F(BatchTest, FailuresAreReportedPerLine) {
  FunctionBackend backend([this](const ScoreRequest& r) { return Answer(r); });
  DenoiseConfig config;
  config.max_masks = 1;
  config.per_n_top_k = {2};
  const Denoiser denoiser(vocab_, backend, config);
  const std::vector<std::string> input = {"wrd", "x bad", "good", "bad"};
  const BatchResult result = DenoiseBatch(input, denoiser, 3);
  EXPECT_EQ(result.outputs,
            (std::vector<std::string>{"word", "x bad", "good", "bad"}));
  ASSERT_EQ(result.failures.size(), 2u);
  EXPECT_EQ(result.failures[0].line, 1u);
  EXPECT_EQ(result.failures[1].line, 3u);
  EXPECT_TRUE(result.failures[0].backend_failure);
  const BatchError error(result.failures);
  EXPECT_TRUE(error.backend_failure());
}

TEST_F(BatchTest, EmptyInput) {
  FunctionBackend backend([this](const ScoreRequest& r) { return Answer(r); });
  const Denoiser denoiser(vocab_, backend, DenoiseConfig{});
  const BatchResult result = DenoiseBatch({}, denoiser, 4);
  EXPECT_TRUE(result.outputs.empty());
  EXPECT_EQ(backend.calls(), 0);
}

}  // namespace
}  // namespace ctxdenoise
