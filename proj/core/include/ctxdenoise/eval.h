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

#ifndef CTXDENOISE_EVAL_H_
#define CTXDENOISE_EVAL_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ctxdenoise/denoiser.h"
#include "ctxdenoise/noise.h"

namespace ctxdenoise {

// Word-level correction quality. Counts aggregate with operator+=.
struct EvalReport {
  std::size_t corrupted_total = 0;
  std::size_t corrected = 0;  // corrupted words restored exactly
  std::size_t missed = 0;
  std::size_t clean_total = 0;
  std::size_t false_corrections = 0;  // clean words altered

  // corrected / corrupted_total; 1.0 when nothing was corrupted.
  double correction_recall() const;
  // 1 - false_corrections / clean_total; 1.0 when there are no clean words.
  double clean_preservation() const;

  EvalReport& operator+=(const EvalReport& other);
  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

std::string ReportToJson(const EvalReport& report);

// Compares word-aligned corpora case-insensitively. Words named by
// `alignment` count as corrupted, every other word as clean. Throws
// WordCountMismatch when a sentence has different word counts across the
// three corpora, ContractError for alignment records out of range.
EvalReport ScoreCorrections(std::span<const std::string> clean,
                            std::span<const std::string> noisy,
                            std::span<const std::string> denoised,
                            std::span<const AlignmentRecord> alignment);

struct ExperimentOptions {
  std::filesystem::path corpus;  // one sentence per line
  std::filesystem::path outdir;  // created if missing
  NoiseSpec noise;
  const NaturalNoiseTable* table = nullptr;
  std::size_t workers = 1;
};

struct ExperimentResult {
  EvalReport report;
  std::vector<std::string> clean;
  std::vector<std::string> noisy;
  std::vector<std::string> denoised;
  std::vector<AlignmentRecord> alignment;
};

// Clean -> corrupt -> denoise -> score. Writes clean.txt, noisy.txt,
// denoised.txt, alignment.jsonl and report.json into `outdir`. Throws
// BatchError if any sentence fails to denoise, IoError on file problems.
ExperimentResult RunExperiment(const ExperimentOptions& options,
                               const Denoiser& denoiser);

// Reads a line-delimited corpus. Throws IoError.
std::vector<std::string> ReadLines(const std::filesystem::path& path);
// Writes one line per entry, each terminated by '\n'. Throws IoError.
void WriteLines(const std::filesystem::path& path,
                std::span<const std::string> lines);

}  // namespace ctxdenoise

#endif  // CTXDENOISE_EVAL_H_
