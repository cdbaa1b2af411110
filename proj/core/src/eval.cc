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

#include "ctxdenoise/eval.h"

#include <fstream>
#include <sstream>

#include "ctxdenoise/batch.h"
#include "ctxdenoise/errors.h"
#include "ctxdenoise/tokenizer.h"
#include "json.hpp"

namespace ctxdenoise {
namespace {

using nlohmann::json;

std::vector<std::string> WordsOf(const std::string& sentence) {
  std::vector<std::string> out;
  for (Word& w : SegmentSentence(sentence)) out.push_back(std::move(w.surface));
  return out;
}

std::string JoinWords(const std::string& sentence) {
  std::string out;
  for (const Word& w : SegmentSentence(sentence)) {
    if (!out.empty()) out.push_back(' ');
    out += w.surface;
  }
  return out;
}

void WriteText(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace

double EvalReport::correction_recall() const {
  if (corrupted_total == 0) return 1.0;
  return static_cast<double>(corrected) / static_cast<double>(corrupted_total);
}

double EvalReport::clean_preservation() const {
  if (clean_total == 0) return 1.0;
  return 1.0 - static_cast<double>(false_corrections) /
                   static_cast<double>(clean_total);
}

EvalReport& EvalReport::operator+=(const EvalReport& other) {
  corrupted_total += other.corrupted_total;
  corrected += other.corrected;
  missed += other.missed;
  clean_total += other.clean_total;
  false_corrections += other.false_corrections;
  return *this;
}

std::string ReportToJson(const EvalReport& report) {
  json doc = {{"corrupted_total", report.corrupted_total},
              {"corrected", report.corrected},
              {"missed", report.missed},
              {"clean_total", report.clean_total},
              {"false_corrections", report.false_corrections},
              {"correction_recall", report.correction_recall()},
              {"clean_preservation", report.clean_preservation()}};
  return doc.dump(2);
}

EvalReport ScoreCorrections(std::span<const std::string> clean,
                            std::span<const std::string> noisy,
                            std::span<const std::string> denoised,
                            std::span<const AlignmentRecord> alignment) {
  if (noisy.size() != clean.size() || denoised.size() != clean.size()) {
    throw ContractError("corpora differ in sentence count: clean " +
                        std::to_string(clean.size()) + ", noisy " +
                        std::to_string(noisy.size()) + ", denoised " +
                        std::to_string(denoised.size()));
  }
  std::vector<std::vector<std::string>> clean_words(clean.size());
  std::vector<std::vector<bool>> corrupted(clean.size());
  for (std::size_t s = 0; s < clean.size(); ++s) {
    clean_words[s] = WordsOf(clean[s]);
    corrupted[s].assign(clean_words[s].size(), false);
  }
  for (const AlignmentRecord& r : alignment) {
    if (r.sentence >= clean.size() || r.word >= corrupted[r.sentence].size()) {
      throw ContractError("alignment record (" + std::to_string(r.sentence) +
                          ", " + std::to_string(r.word) + ") out of range");
    }
    corrupted[r.sentence][r.word] = true;
  }

  EvalReport report;
  for (std::size_t s = 0; s < clean.size(); ++s) {
    const auto& reference = clean_words[s];
    const auto noisy_words = WordsOf(noisy[s]);
    const auto output = WordsOf(denoised[s]);
    if (noisy_words.size() != reference.size()) {
      throw WordCountMismatch(s, reference.size(), noisy_words.size());
    }
    if (output.size() != reference.size()) {
      throw WordCountMismatch(s, reference.size(), output.size());
    }
    for (std::size_t w = 0; w < reference.size(); ++w) {
      const bool same = NormalizeWord(output[w]) == NormalizeWord(reference[w]);
      if (corrupted[s][w]) {
        ++report.corrupted_total;
        ++(same ? report.corrected : report.missed);
      } else {
        ++report.clean_total;
        if (!same) ++report.false_corrections;
      }
    }
  }
  return report;
}

std::vector<std::string> ReadLines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  if (in.bad()) throw IoError("failed reading " + path.string());
  return lines;
}

void WriteLines(const std::filesystem::path& path,
                std::span<const std::string> lines) {
  std::string text;
  for (const auto& line : lines) {
    text += line;
    text.push_back('\n');
  }
  WriteText(path, text);
}

ExperimentResult RunExperiment(const ExperimentOptions& options,
                               const Denoiser& denoiser) {
  ExperimentResult result;
  for (const std::string& line : ReadLines(options.corpus)) {
    result.clean.push_back(JoinWords(line));
  }

  PerturbResult perturbed =
      PerturbCorpus(result.clean, options.noise, options.table);
  result.noisy = std::move(perturbed.noisy);
  result.alignment = std::move(perturbed.alignment);

  BatchResult batch = DenoiseBatch(result.noisy, denoiser, options.workers);
  if (!batch.failures.empty()) throw BatchError(std::move(batch.failures));
  result.denoised = std::move(batch.outputs);

  result.report = ScoreCorrections(result.clean, result.noisy,
                                   result.denoised, result.alignment);

  std::error_code ec;
  std::filesystem::create_directories(options.outdir, ec);
  if (ec) {
    throw IoError("cannot create " + options.outdir.string() + ": " +
                  ec.message());
  }
  WriteLines(options.outdir / "clean.txt", result.clean);
  WriteLines(options.outdir / "noisy.txt", result.noisy);
  WriteLines(options.outdir / "denoised.txt", result.denoised);
  std::ostringstream alignment;
  WriteAlignment(alignment, result.alignment);
  WriteText(options.outdir / "alignment.jsonl", alignment.str());
  WriteText(options.outdir / "report.json", ReportToJson(result.report) + "\n");
  return result;
}

}  // namespace ctxdenoise
