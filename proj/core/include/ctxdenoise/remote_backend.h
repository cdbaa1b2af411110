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

#ifndef CTXDENOISE_REMOTE_BACKEND_H_
#define CTXDENOISE_REMOTE_BACKEND_H_

#include <chrono>
#include <cstddef>
#include <memory>
#include <string>

#include "ctxdenoise/mlm_backend.h"
#include "ctxdenoise/vocab.h"

namespace ctxdenoise {

struct RemoteOptions {
  // Scheme, host and port, e.g. "http://127.0.0.1:8500".
  std::string endpoint;
  int max_attempts = 3;
  std::chrono::milliseconds initial_backoff{200};
  std::chrono::milliseconds timeout{30000};
  int max_in_flight = 8;
};

struct ServiceInfo {
  std::string model;
  std::string vocab_hash;
  std::size_t max_sequence_length = 0;
};

// Client for the inference service:
//
//   GET  /v1/info   -> {"model", "vocab_hash", "max_sequence_length"}
//   GET  /v1/health -> {"status"}
//   POST /v1/score  {"pieces": [str], "mask_positions": [int], "top_k": int}
//                   -> {"predictions": [[{"piece": str, "log_prob": num}]]}
//
// Pieces travel as strings. The constructor fetches /v1/info and refuses a
// service whose vocab hash differs from the local vocabulary (ConfigError).
// Connection failures, timeouts and 429/5xx responses are retried with
// exponential backoff up to max_attempts, then surface as BackendError.
class RemoteBackend : public MlmBackend {
 public:
  RemoteBackend(const Vocab& vocab, RemoteOptions options);
  ~RemoteBackend() override;

  MaskPredictions Score(const ScoreRequest& request) const override;

  const ServiceInfo& info() const { return info_; }
  const RemoteOptions& options() const { return options_; }

 private:
  struct InFlight;

  const Vocab& vocab_;
  RemoteOptions options_;
  ServiceInfo info_;
  std::unique_ptr<InFlight> in_flight_;
};

}  // namespace ctxdenoise

#endif  // CTXDENOISE_REMOTE_BACKEND_H_
