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

#ifndef CTXDENOISE_TOOLS_CLI_COMMANDS_H_
#define CTXDENOISE_TOOLS_CLI_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace ctxdenoise::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitBackend = 2,
  kExitIo = 3,
};

struct BackendOverrides {
  std::optional<std::filesystem::path> vocab;
  std::optional<std::filesystem::path> oracle;
  std::optional<std::string> endpoint;
  std::optional<std::size_t> workers;
};

struct DenoiseArgs {
  std::filesystem::path input;
  std::filesystem::path output;
  std::filesystem::path config;
  BackendOverrides overrides;
};

struct CorruptArgs {
  std::filesystem::path input;
  std::filesystem::path output;
  std::filesystem::path spec;
  std::optional<std::filesystem::path> table;
  // Defaults to "<output>.alignment.jsonl".
  std::optional<std::filesystem::path> alignment;
  std::optional<std::uint64_t> seed;
  std::optional<double> word_prob;
};

struct EvalArgs {
  std::filesystem::path clean;
  std::filesystem::path spec;
  std::filesystem::path config;
  std::filesystem::path outdir;
  std::optional<std::filesystem::path> table;
  std::optional<std::uint64_t> seed;
  BackendOverrides overrides;
};

// Each command reports progress on `out`, diagnostics on `err`, and returns
// an ExitCode.
int RunDenoise(const DenoiseArgs& args, std::ostream& out, std::ostream& err);
int RunCorrupt(const CorruptArgs& args, std::ostream& out, std::ostream& err);
int RunEval(const EvalArgs& args, std::ostream& out, std::ostream& err);

}  // namespace ctxdenoise::cli

#endif  // CTXDENOISE_TOOLS_CLI_COMMANDS_H_
