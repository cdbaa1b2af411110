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

#include "cli/commands.h"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "cli/app_config.h"
#include "ctxdenoise/batch.h"
#include "ctxdenoise/denoiser.h"
#include "ctxdenoise/errors.h"
#include "ctxdenoise/eval.h"
#include "ctxdenoise/noise.h"
#include "ctxdenoise/vocab.h"

namespace ctxdenoise::cli {
namespace {

// Maps library exceptions onto exit codes.
template <typename Fn>
int Guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    err << "error: " << e.what();
    if (!e.field().empty()) err << " [field: " << e.field() << "]";
    err << "\n";
    return kExitUsage;
  } catch (const BackendError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBackend;
  } catch (const BatchError& e) {
    for (const auto& failure : e.failures()) {
      err << "line " << failure.line + 1 << ": " << failure.message << "\n";
    }
    return e.backend_failure() ? kExitBackend : kExitUsage;
  } catch (const DenoiseError& e) {
    err << "error: " << e.what() << "\n";
    return e.backend_failure() ? kExitBackend : kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

AppConfig PrepareConfig(const std::filesystem::path& path,
                        const BackendOverrides& overrides) {
  AppConfig config = LoadAppConfig(path);
  ApplyEnvironment(config);
  if (overrides.vocab) config.vocab = *overrides.vocab;
  if (overrides.oracle) OverrideOracle(config, *overrides.oracle);
  if (overrides.endpoint) OverrideEndpoint(config, *overrides.endpoint);
  if (overrides.workers) config.worker_count = *overrides.workers;
  if (config.vocab.empty()) {
    throw ConfigError("no vocabulary configured", "vocab");
  }
  return config;
}

std::optional<NaturalNoiseTable> LoadTable(const AppConfig& config,
                                           std::ostream& err) {
  if (!config.noise_table) return std::nullopt;
  std::vector<std::string> warnings;
  NaturalNoiseTable table = NaturalNoiseTable::Load(*config.noise_table,
                                                    &warnings);
  for (const auto& warning : warnings) err << "warning: " << warning << "\n";
  return table;
}

void RequireTable(const AppConfig& config) {
  if (config.noise.mode == NoiseMode::kNatural && !config.noise_table) {
    throw ConfigError("natural noise mode requires --table", "noise.table");
  }
}

}  // namespace

int RunDenoise(const DenoiseArgs& args, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    AppConfig config = PrepareConfig(args.config, args.overrides);
    config.Validate();
    const Vocab vocab = Vocab::Load(config.vocab);
    const auto backend = MakeBackend(config, vocab);
    const Denoiser denoiser(vocab, *backend, config.denoise);

    const std::vector<std::string> lines = ReadLines(args.input);
    BatchResult batch = DenoiseBatch(lines, denoiser, config.worker_count);
    WriteLines(args.output, batch.outputs);

    bool backend_failure = false;
    for (const auto& failure : batch.failures) {
      err << "line " << failure.line + 1 << ": " << failure.message << "\n";
      backend_failure = backend_failure || failure.backend_failure;
    }
    out << "denoised " << lines.size() - batch.failures.size() << " of "
        << lines.size() << " sentences\n";
    if (batch.failures.empty()) return static_cast<int>(kExitOk);
    return static_cast<int>(backend_failure ? kExitBackend : kExitUsage);
  });
}

int RunCorrupt(const CorruptArgs& args, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    AppConfig config;
    LoadNoiseSpec(args.spec, config);
    if (args.table) config.noise_table = *args.table;
    if (args.seed) config.noise.seed = *args.seed;
    if (args.word_prob) config.noise.word_prob = *args.word_prob;
    config.noise.Validate();
    RequireTable(config);
    const auto table = LoadTable(config, err);

    const std::vector<std::string> lines = ReadLines(args.input);
    const PerturbResult result =
        PerturbCorpus(lines, config.noise, table ? &*table : nullptr);
    WriteLines(args.output, result.noisy);

    const std::filesystem::path alignment_path =
        args.alignment.value_or(args.output.string() + ".alignment.jsonl");
    std::ofstream alignment(alignment_path, std::ios::binary);
    if (!alignment) throw IoError("cannot write " + alignment_path.string());
    WriteAlignment(alignment, result.alignment);
    if (!alignment) throw IoError("failed writing " + alignment_path.string());

    out << "corrupted " << result.alignment.size() << " words in "
        << lines.size() << " sentences\n";
    return static_cast<int>(kExitOk);
  });
}

int RunEval(const EvalArgs& args, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    AppConfig config = PrepareConfig(args.config, args.overrides);
    LoadNoiseSpec(args.spec, config);
    if (args.table) config.noise_table = *args.table;
    if (args.seed) config.noise.seed = *args.seed;
    config.Validate();
    RequireTable(config);
    const auto table = LoadTable(config, err);

    const Vocab vocab = Vocab::Load(config.vocab);
    const auto backend = MakeBackend(config, vocab);
    const Denoiser denoiser(vocab, *backend, config.denoise);

    ExperimentOptions options;
    options.corpus = args.clean;
    options.outdir = args.outdir;
    options.noise = config.noise;
    options.table = table ? &*table : nullptr;
    options.workers = config.worker_count;
    const ExperimentResult result = RunExperiment(options, denoiser);

    const EvalReport& r = result.report;
    out << "sentences:          " << result.clean.size() << "\n"
        << "corrupted words:    " << r.corrupted_total << "\n"
        << "corrected:          " << r.corrected << "\n"
        << "missed:             " << r.missed << "\n"
        << "clean words:        " << r.clean_total << "\n"
        << "false corrections:  " << r.false_corrections << "\n"
        << "correction recall:  " << r.correction_recall() << "\n"
        << "clean preservation: " << r.clean_preservation() << "\n"
        << "artifacts:          " << args.outdir.string() << "\n";
    return static_cast<int>(kExitOk);
  });
}

}  // namespace ctxdenoise::cli
