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

#ifndef CTXDENOISE_DENOISER_H_
#define CTXDENOISE_DENOISER_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ctxdenoise/mlm_backend.h"
#include "ctxdenoise/tokenizer.h"
#include "ctxdenoise/vocab.h"

namespace ctxdenoise {

struct DenoiseConfig {
  // Largest number of masks substituted for one word.
  int max_masks = 4;
  // Pieces requested per mask for the variant with n masks (index n - 1).
  std::vector<int> per_n_top_k = {3000, 5, 3, 2};
  // Candidates kept after the union across n, best mlm_score first.
  std::size_t candidate_cap = 3068;
  // Model input limit, special tokens included.
  std::size_t max_sequence_length = 512;

  // Throws ConfigError naming the offending field.
  void Validate() const;
};

// The current sentence with one word's pieces replaced by `n` masks.
struct MaskedVariant {
  int n = 0;
  std::vector<PieceId> pieces;
  std::vector<std::size_t> mask_positions;
};

struct Candidate {
  std::string surface;
  std::vector<PieceId> pieces;
  double mlm_score = 0.0;  // sum of the member log_probs
  std::size_t edit_distance = 0;  // filled by SelectCandidate()
};

struct CandidateSet {
  std::vector<Candidate> candidates;
  // Size of the Cartesian product for each variant, before any filtering.
  std::vector<std::size_t> raw_pool_sizes;
};

// One variant per n in [1, max_masks]. Throws ContractError when the word
// index is out of range or the word is skipped.
std::vector<MaskedVariant> BuildMaskedVariants(const TokenizedSentence& sentence,
                                               std::size_t word_index,
                                               const DenoiseConfig& config,
                                               const Vocab& vocab);

// Builds "[start] variant [sep] current [sep]". Mask positions shift by one
// for the start token. When the result exceeds `max_sequence_length`, the
// trailing pieces of the second segment are dropped; ContractError if even
// an empty second segment does not fit.
ScoreRequest Augment(const MaskedVariant& variant,
                     const TokenizedSentence& current, const Vocab& vocab,
                     std::size_t max_sequence_length, int top_k);

// Queries the backend once per variant and recombines the per-mask top-k
// lists by Cartesian product. Only combinations forming a single word are
// kept: a non-special, non-continuation first piece followed by continuation
// pieces. Surfaces are deduplicated across variants keeping the best
// mlm_score (then fewer pieces), ordered by mlm_score descending, piece
// count, surface, and truncated to candidate_cap.
CandidateSet GenerateCandidates(std::span<const MaskedVariant> variants,
                                const TokenizedSentence& current,
                                const MlmBackend& backend,
                                const DenoiseConfig& config,
                                const Vocab& vocab);

// Candidate closest to `noisy_word` by EditDistance(). Ties go to the higher
// mlm_score, then fewer pieces, then the lexicographically smaller surface.
// Throws ContractError on an empty candidate list.
Candidate SelectCandidate(std::span<const Candidate> candidates,
                          std::string_view noisy_word);

struct WordOutcome {
  std::string original;
  std::string output;
  bool skipped = false;
  bool replaced = false;
  std::size_t candidate_count = 0;
};

struct DenoiseResult {
  std::string text;
  std::vector<WordOutcome> words;
};

// Cleans a sentence word by word, left to right. Each corrected word is
// written back into the working sentence before the next word is visited,
// so later words see the corrected left context in both the masked and the
// augmentation segment. Skipped words are copied verbatim; unchanged words
// keep their original casing.
//
// The vocab and backend must outlive the denoiser. Run() is const and may
// be called concurrently.
class Denoiser {
 public:
  Denoiser(const Vocab& vocab, const MlmBackend& backend, DenoiseConfig config);

  // Throws DenoiseError naming the word index reached when the backend fails.
  DenoiseResult Run(std::string_view text) const;
  std::string Denoise(std::string_view text) const { return Run(text).text; }

  const DenoiseConfig& config() const { return config_; }
  const Vocab& vocab() const { return vocab_; }

 private:
  const Vocab& vocab_;
  const MlmBackend& backend_;
  DenoiseConfig config_;
};

std::string DenoiseSentence(std::string_view text, const MlmBackend& backend,
                            const DenoiseConfig& config, const Vocab& vocab);

}  // namespace ctxdenoise

#endif  // CTXDENOISE_DENOISER_H_
