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

#include "ctxdenoise/remote_backend.h"

#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include "ctxdenoise/errors.h"
#include "fake_service.h"
#include "test_util.h"

namespace ctxdenoise {
namespace {

using namespace std::chrono_literals;

class RemoteBackendTest : public ::testing::Test {
 protected:
  RemoteBackendTest()
      : vocab_(testing::MakeVocab({"a", "fat", "duck", "dog", "swimming"})),
        oracle_(TableOracle::Parse(R"({
          "fallback": ["a"],
          "entries": {
            "[CLS] a fat [MASK] swimming [SEP]": [
              [{"piece": "duck", "log_prob": -0.1}, {"piece": "dog", "log_prob": -2.5}]
            ]
          }})",
                                   vocab_)),
        service_(vocab_, oracle_) {}

  RemoteOptions Options() const {
    RemoteOptions options;
    options.endpoint = service_.endpoint();
    options.initial_backoff = 1ms;
    options.timeout = 2s;
    return options;
  }

  ScoreRequest Request(int top_k = 3) const {
    ScoreRequest r;
    r.pieces = {vocab_.start_id(), *vocab_.Find("a"), *vocab_.Find("fat"),
                vocab_.mask_id(), *vocab_.Find("swimming"),
                vocab_.separator_id()};
    r.mask_positions = {3};
    r.top_k = top_k;
    return r;
  }

  Vocab vocab_;
  TableOracle oracle_;
  testing::FakeService service_;
};

TEST_F(RemoteBackendTest, HealthyServiceMatchesOracle) {
  const RemoteBackend remote(vocab_, Options());
  EXPECT_EQ(remote.info().model, "fake");
  EXPECT_EQ(remote.info().vocab_hash, vocab_.hash());
  const MaskPredictions p = remote.Score(Request());
  EXPECT_NO_THROW(ValidatePredictions(Request(), p, vocab_));
  EXPECT_EQ(p, oracle_.Score(Request()));
  EXPECT_EQ(remote.Score(Request(1))[0].size(), 1u);
}

TEST_F(RemoteBackendTest, VocabHashMismatchIsFatal) {
  service_.set_vocab_hash(std::string(64, '0'));
  EXPECT_THROW(RemoteBackend(vocab_, Options()), ConfigError);
}

TEST_F(RemoteBackendTest, UnreachableServiceNamesEndpoint) {
  RemoteOptions options = Options();
  options.endpoint = "http://127.0.0.1:1";
  try {
    RemoteBackend remote(vocab_, options);
    FAIL() << "expected BackendError";
  } catch (const BackendError& e) {
    EXPECT_NE(std::string(e.what()).find("http://127.0.0.1:1"),
              std::string::npos);
  }
}

TEST_F(RemoteBackendTest, ThreeTimeoutsSurfaceAsUnavailable) {
  RemoteOptions options = Options();
  options.timeout = 100ms;
  const RemoteBackend remote(vocab_, options);
  service_.StallNext(3, 400ms);
  EXPECT_THROW(remote.Score(Request()), BackendError);
  EXPECT_EQ(service_.score_calls(), 3);
}

TEST_F(RemoteBackendTest, TransientFailuresAreRetried) {
  const RemoteBackend remote(vocab_, Options());
  service_.FailNext(2, 503);
  EXPECT_EQ(remote.Score(Request()), oracle_.Score(Request()));
  EXPECT_EQ(service_.score_calls(), 3);
}

TEST_F(RemoteBackendTest, PersistentFailureGivesUp) {
  const RemoteBackend remote(vocab_, Options());
  service_.FailNext(5, 503);
  EXPECT_THROW(remote.Score(Request()), BackendError);
  EXPECT_EQ(service_.score_calls(), 3);
}

TEST_F(RemoteBackendTest, ClientErrorsAreNotRetried) {
  const RemoteBackend remote(vocab_, Options());
  service_.FailNext(1, 400);
  EXPECT_THROW(remote.Score(Request()), ContractError);
  EXPECT_EQ(service_.score_calls(), 1);
}

TEST_F(RemoteBackendTest, PreconditionCheckedBeforeSending) {
  const RemoteBackend remote(vocab_, Options());
  ScoreRequest r = Request();
  r.mask_positions = {2};
  EXPECT_THROW(remote.Score(r), ContractError);
  EXPECT_EQ(service_.score_calls(), 0);
}

TEST_F(RemoteBackendTest, ContractBreachByServiceIsRejected) {
  const RemoteBackend remote(vocab_, Options());
  service_.set_mutator([](nlohmann::json& reply) {
    reply["predictions"][0].push_back({{"piece", "a"}, {"log_prob", 0.5}});
  });
  EXPECT_THROW(remote.Score(Request()), BackendError);
  service_.set_mutator([](nlohmann::json& reply) {
    reply["predictions"].push_back(nlohmann::json::array());
  });
  EXPECT_THROW(remote.Score(Request()), BackendError);
  service_.set_mutator([](nlohmann::json& reply) {
    reply["predictions"][0][0]["piece"] = "zebra";
  });
  EXPECT_THROW(remote.Score(Request()), BackendError);
}

TEST_F(RemoteBackendTest, InFlightRequestsAreBounded) {
  RemoteOptions options = Options();
  options.max_in_flight = 2;
  const RemoteBackend remote(vocab_, options);
  service_.set_hold(30ms);
  std::vector<std::thread> callers;
  for (int i = 0; i < 8; ++i) {
    callers.emplace_back([&] { remote.Score(Request()); });
  }
  for (auto& t : callers) t.join();
  EXPECT_EQ(service_.score_calls(), 8);
  EXPECT_LE(service_.max_concurrent(), 2);
  EXPECT_GE(service_.max_concurrent(), 1);
}

}  // namespace
}  // namespace ctxdenoise
