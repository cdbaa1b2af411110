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

#ifndef CTXDENOISE_TOOLS_CLI_APP_CONFIG_H_
#define CTXDENOISE_TOOLS_CLI_APP_CONFIG_H_

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "ctxdenoise/denoiser.h"
#include "ctxdenoise/mlm_backend.h"
#include "ctxdenoise/noise.h"
#include "ctxdenoise/remote_backend.h"
#include "ctxdenoise/vocab.h"

namespace ctxdenoise::cli {

// Environment variable that replaces the configured backend with a remote
// endpoint.
inline constexpr const char* kEndpointEnv = "CTXDENOISE_ENDPOINT";

struct BackendConfig {
  std::optional<std::filesystem::path> oracle;
  std::optional<RemoteOptions> remote;
};

// One structured file:
//
//   {
//     "vocab": "vocab.txt",
//     "backend": {"oracle": "fixture.json"}
//              | {"endpoint": "http://host:port", "timeout_ms": 30000,
//                 "max_attempts": 3, "max_in_flight": 8},
//     "denoise": {"max_masks": 4, "per_n_top_k": [3000, 5, 3, 2],
//                 "candidate_cap": 3068, "max_sequence_length": 512},
//     "noise": {"word_prob": 0.2, "mode": "artificial", "seed": 1,
//               "type_probs": {"swap": 0.25, "delete": 0.25,
//                              "replace": 0.25, "insert": 0.25},
//               "table": "natural.tsv"},
//     "workers": 4
//   }
//
// Relative paths resolve against the directory of the file they appear in.
struct AppConfig {
  std::filesystem::path vocab;
  BackendConfig backend;
  DenoiseConfig denoise;
  NoiseSpec noise;
  std::optional<std::filesystem::path> noise_table;
  std::size_t worker_count = 1;

  // Throws ConfigError naming the field: exactly one backend, worker_count
  // >= 1, valid denoise and noise sections.
  void Validate() const;
};

// Throws ConfigError (with field) or IoError.
AppConfig LoadAppConfig(const std::filesystem::path& path);

// Reads the "noise" section of a spec file into `config`. The file may be
// either a full config or a bare noise object.
void LoadNoiseSpec(const std::filesystem::path& path, AppConfig& config);

// Points the backend at `endpoint` (dropping any oracle).
void OverrideEndpoint(AppConfig& config, const std::string& endpoint);
// Points the backend at an oracle fixture (dropping any endpoint).
void OverrideOracle(AppConfig& config, const std::filesystem::path& fixture);
// Applies kEndpointEnv when set.
void ApplyEnvironment(AppConfig& config);

std::unique_ptr<MlmBackend> MakeBackend(const AppConfig& config,
                                        const Vocab& vocab);

}  // namespace ctxdenoise::cli

#endif  // CTXDENOISE_TOOLS_CLI_APP_CONFIG_H_
