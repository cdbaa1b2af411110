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

// ctxdenoise: contextual text denoising with a masked language model.
//
//   ctxdenoise denoise --input noisy.txt --output clean.txt --config app.json
//   ctxdenoise corrupt --input clean.txt --output noisy.txt --spec noise.json
//   ctxdenoise eval --clean clean.txt --spec noise.json --config app.json
//                   --outdir run/

#include <iostream>

#include "CLI11.hpp"
#include "cli/commands.h"

namespace {

template <typename T>
void OptionalFlag(CLI::App* app, const std::string& name,
                  std::optional<T>& target, const std::string& help) {
  app->add_option_function<T>(
      name, [&target](const T& value) { target = value; }, help);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace ctxdenoise::cli;

  CLI::App app{"Contextual text denoising with a masked language model"};
  app.require_subcommand(1);

  DenoiseArgs denoise;
  auto* denoise_cmd =
      app.add_subcommand("denoise", "Denoise one sentence per line");
  denoise_cmd->add_option("--input", denoise.input, "Noisy sentences")
      ->required();
  denoise_cmd->add_option("--output", denoise.output, "Denoised sentences")
      ->required();
  denoise_cmd->add_option("--config", denoise.config, "Config file (JSON)")
      ->required();

  CorruptArgs corrupt;
  auto* corrupt_cmd =
      app.add_subcommand("corrupt", "Inject artificial or natural noise");
  corrupt_cmd->add_option("--input", corrupt.input, "Clean sentences")
      ->required();
  corrupt_cmd->add_option("--output", corrupt.output, "Noisy sentences")
      ->required();
  corrupt_cmd->add_option("--spec", corrupt.spec, "Noise spec file (JSON)")
      ->required();
  OptionalFlag(corrupt_cmd, "--table", corrupt.table,
               "Natural noise table (TSV word<TAB>variant)");
  OptionalFlag(corrupt_cmd, "--alignment", corrupt.alignment,
               "Alignment output (default: <output>.alignment.jsonl)");
  OptionalFlag(corrupt_cmd, "--seed", corrupt.seed, "Override the seed");
  OptionalFlag(corrupt_cmd, "--word-prob", corrupt.word_prob,
               "Override the per-word perturbation probability");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand(
      "eval", "Corrupt, denoise and score a clean corpus");
  eval_cmd->add_option("--clean", eval.clean, "Clean sentences")->required();
  eval_cmd->add_option("--spec", eval.spec, "Noise spec file (JSON)")
      ->required();
  eval_cmd->add_option("--config", eval.config, "Config file (JSON)")
      ->required();
  eval_cmd->add_option("--outdir", eval.outdir, "Artifact directory")
      ->required();
  OptionalFlag(eval_cmd, "--table", eval.table, "Natural noise table");
  OptionalFlag(eval_cmd, "--seed", eval.seed, "Override the seed");

  for (auto [cmd, overrides] :
       {std::pair{denoise_cmd, &denoise.overrides},
        std::pair{eval_cmd, &eval.overrides}}) {
    OptionalFlag(cmd, "--vocab", overrides->vocab, "Override the vocabulary");
    OptionalFlag(cmd, "--oracle", overrides->oracle,
                 "Use a table-oracle fixture as backend");
    OptionalFlag(cmd, "--endpoint", overrides->endpoint,
                 "Use the inference service at this URL");
    OptionalFlag(cmd, "--workers", overrides->workers, "Worker threads");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*denoise_cmd) return RunDenoise(denoise, std::cout, std::cerr);
  if (*corrupt_cmd) return RunCorrupt(corrupt, std::cout, std::cerr);
  return RunEval(eval, std::cout, std::cerr);
}
