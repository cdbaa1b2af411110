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

#ifndef CTXDENOISE_NOISE_H_
#define CTXDENOISE_NOISE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ctxdenoise/rng.h"

namespace ctxdenoise {

enum class NoiseType { kSwap, kDelete, kReplace, kInsert, kNatural };

inline constexpr std::array<NoiseType, 4> kArtificialNoiseTypes = {
    NoiseType::kSwap, NoiseType::kDelete, NoiseType::kReplace,
    NoiseType::kInsert};

std::string_view NoiseTypeName(NoiseType type);
// Throws ConfigError for an unknown name.
NoiseType ParseNoiseType(std::string_view name);

enum class NoiseMode { kArtificial, kNatural };

struct NoiseSpec {
  double word_prob = 0.2;
  // Probabilities of swap, delete, replace, insert, in that order.
  std::array<double, 4> type_probs = {0.25, 0.25, 0.25, 0.25};
  NoiseMode mode = NoiseMode::kArtificial;
  std::uint64_t seed = 0;

  // Throws ConfigError naming the offending field.
  void Validate() const;
};

// Word -> observed misspellings. Keys are lowercase; no variant equals its key.
class NaturalNoiseTable {
 public:
  // "word<TAB>variant" per line. Malformed lines throw ConfigError; a variant
  // equal to its key is dropped and reported through `warnings`.
  static NaturalNoiseTable Load(const std::filesystem::path& path,
                                std::vector<std::string>* warnings = nullptr);
  static NaturalNoiseTable Parse(std::istream& in,
                                 std::vector<std::string>* warnings = nullptr);

  // Returns false (and stores nothing) when the variant equals the key.
  bool Add(std::string_view word, std::string variant);
  const std::vector<std::string>* Find(std::string_view word) const;

  std::size_t size() const { return variants_.size(); }
  bool empty() const { return variants_.empty(); }

 private:
  std::map<std::string, std::vector<std::string>, std::less<>> variants_;
};

// Artificial perturbations over code points. The first and last characters
// never change; words too short to have the needed interior are returned
// unchanged (swap < 4, delete/replace < 3, insert < 2 characters).
std::string SwapNoise(std::string_view word, Rng& rng);
std::string DeleteNoise(std::string_view word, Rng& rng);
std::string ReplaceNoise(std::string_view word, Rng& rng);
std::string InsertNoise(std::string_view word, Rng& rng);
std::string ApplyNoise(NoiseType type, std::string_view word, Rng& rng);

// Categorical draw over spec.type_probs.
NoiseType DrawNoiseType(const NoiseSpec& spec, Rng& rng);

struct AlignmentRecord {
  std::size_t sentence = 0;
  std::size_t word = 0;
  std::string original;
  std::string corrupted;
  NoiseType noise_type = NoiseType::kSwap;

  friend bool operator==(const AlignmentRecord&,
                         const AlignmentRecord&) = default;
};

struct PerturbResult {
  // Sentences with words joined by single spaces.
  std::vector<std::string> noisy;
  // One record per word that differs from its clean form.
  std::vector<AlignmentRecord> alignment;
  // How often each NoiseType was drawn for a selected word, indexed by
  // static_cast<size_t>(NoiseType). Counts draws even when the perturbation
  // left the word unchanged.
  std::array<std::size_t, 5> selections = {};
};

// Perturbs each alphabetic word independently with probability word_prob.
// Sentence i draws from Rng(DeriveSeed(seed, i)), so the result does not
// depend on how sentences are scheduled. Natural mode requires `table`.
PerturbResult PerturbCorpus(std::span<const std::string> sentences,
                            const NoiseSpec& spec,
                            const NaturalNoiseTable* table = nullptr);

// One JSON object per line: {sentence, word, original, corrupted, noise_type}.
void WriteAlignment(std::ostream& out,
                    std::span<const AlignmentRecord> records);
std::vector<AlignmentRecord> ReadAlignment(std::istream& in);

}  // namespace ctxdenoise

#endif  // CTXDENOISE_NOISE_H_
