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

#include "ctxdenoise/denoiser.h"

#include <algorithm>
#include <tuple>
#include <unordered_map>

#include "ctxdenoise/edit_distance.h"
#include "ctxdenoise/errors.h"

namespace ctxdenoise {
namespace {

bool BetterRepresentative(const Candidate& a, const Candidate& b) {
  if (a.mlm_score != b.mlm_score) return a.mlm_score > b.mlm_score;
  return a.pieces.size() < b.pieces.size();
}

bool RankOrder(const Candidate& a, const Candidate& b) {
  if (a.mlm_score != b.mlm_score) return a.mlm_score > b.mlm_score;
  if (a.pieces.size() != b.pieces.size()) {
    return a.pieces.size() < b.pieces.size();
  }
  return a.surface < b.surface;
}

bool WordForm(std::span<const PieceId> pieces, const Vocab& vocab) {
  if (vocab.IsSpecial(pieces[0]) || vocab.IsContinuation(pieces[0])) {
    return false;
  }
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (!vocab.IsContinuation(pieces[i])) return false;
  }
  return true;
}

}  // namespace

void DenoiseConfig::Validate() const {
  if (max_masks < 1) {
    throw ConfigError("max_masks must be >= 1", "denoise.max_masks");
  }
  if (per_n_top_k.size() != static_cast<std::size_t>(max_masks)) {
    throw ConfigError("per_n_top_k needs exactly max_masks = " +
                          std::to_string(max_masks) + " entries, got " +
                          std::to_string(per_n_top_k.size()),
                      "denoise.per_n_top_k");
  }
  for (int k : per_n_top_k) {
    if (k < 1) {
      throw ConfigError("per_n_top_k entries must be >= 1",
                        "denoise.per_n_top_k");
    }
  }
  if (candidate_cap < 1) {
    throw ConfigError("candidate_cap must be >= 1", "denoise.candidate_cap");
  }
  // Start token, one mask and two separators.
  if (max_sequence_length < 4) {
    throw ConfigError("max_sequence_length must be >= 4",
                      "denoise.max_sequence_length");
  }
}

std::vector<MaskedVariant> BuildMaskedVariants(const TokenizedSentence& sentence,
                                               std::size_t word_index,
                                               const DenoiseConfig& config,
                                               const Vocab& vocab) {
  if (word_index >= sentence.words.size()) {
    throw ContractError("word index " + std::to_string(word_index) +
                        " out of range for sentence of " +
                        std::to_string(sentence.words.size()) + " words");
  }
  if (sentence.words[word_index].skip) {
    throw ContractError("word " + std::to_string(word_index) + " ('" +
                        sentence.words[word_index].surface +
                        "') is skipped and cannot be masked");
  }
  const PieceSpan span = sentence.word_spans[word_index];
  const auto before = sentence.pieces.begin() +
                      static_cast<std::ptrdiff_t>(span.begin);
  const auto after =
      sentence.pieces.begin() + static_cast<std::ptrdiff_t>(span.end);

  std::vector<MaskedVariant> variants;
  variants.reserve(static_cast<std::size_t>(config.max_masks));
  for (int n = 1; n <= config.max_masks; ++n) {
    MaskedVariant variant;
    variant.n = n;
    variant.pieces.reserve(sentence.pieces.size() - span.size() +
                           static_cast<std::size_t>(n));
    variant.pieces.insert(variant.pieces.end(), sentence.pieces.begin(), before);
    for (int m = 0; m < n; ++m) {
      variant.mask_positions.push_back(variant.pieces.size());
      variant.pieces.push_back(vocab.mask_id());
    }
    variant.pieces.insert(variant.pieces.end(), after, sentence.pieces.end());
    variants.push_back(std::move(variant));
  }
  return variants;
}

ScoreRequest Augment(const MaskedVariant& variant,
                     const TokenizedSentence& current, const Vocab& vocab,
                     std::size_t max_sequence_length, int top_k) {
  const std::size_t first = variant.pieces.size();
  if (first + 3 > max_sequence_length) {
    throw ContractError("masked segment of " + std::to_string(first) +
                        " pieces does not fit max_sequence_length " +
                        std::to_string(max_sequence_length));
  }
  const std::size_t second =
      std::min(current.pieces.size(), max_sequence_length - first - 3);

  ScoreRequest request;
  request.top_k = top_k;
  request.pieces.reserve(first + second + 3);
  request.pieces.push_back(vocab.start_id());
  request.pieces.insert(request.pieces.end(), variant.pieces.begin(),
                        variant.pieces.end());
  request.pieces.push_back(vocab.separator_id());
  request.pieces.insert(request.pieces.end(), current.pieces.begin(),
                        current.pieces.begin() +
                            static_cast<std::ptrdiff_t>(second));
  request.pieces.push_back(vocab.separator_id());
  request.mask_positions.reserve(variant.mask_positions.size());
  for (std::size_t pos : variant.mask_positions) {
    request.mask_positions.push_back(pos + 1);
  }
  return request;
}

CandidateSet GenerateCandidates(std::span<const MaskedVariant> variants,
                                const TokenizedSentence& current,
                                const MlmBackend& backend,
                                const DenoiseConfig& config,
                                const Vocab& vocab) {
  CandidateSet result;
  std::vector<Candidate> pool;
  std::unordered_map<std::string, std::size_t> by_surface;

  for (const MaskedVariant& variant : variants) {
    if (variant.n < 1 || variant.n > config.max_masks) {
      throw ContractError("variant with " + std::to_string(variant.n) +
                          " masks outside [1, max_masks]");
    }
    const int top_k = config.per_n_top_k[static_cast<std::size_t>(variant.n - 1)];
    const ScoreRequest request =
        Augment(variant, current, vocab, config.max_sequence_length, top_k);
    const MaskPredictions predictions = backend.Score(request);
    try {
      ValidatePredictions(request, predictions, vocab);
    } catch (const ContractError& e) {
      throw BackendError(std::string("backend broke its contract: ") +
                         e.what());
    }

    std::size_t raw = 1;
    for (const auto& list : predictions) raw *= list.size();
    result.raw_pool_sizes.push_back(raw);
    if (raw == 0) continue;

    // Odometer over the Cartesian product, last mask varying fastest.
    std::vector<std::size_t> digit(predictions.size(), 0);
    std::vector<PieceId> pieces(predictions.size());
    for (std::size_t combo = 0; combo < raw; ++combo) {
      for (std::size_t m = 0; m < predictions.size(); ++m) {
        pieces[m] = predictions[m][digit[m]].piece;
      }
      if (WordForm(pieces, vocab)) {
        Candidate candidate;
        candidate.pieces = pieces;
        for (std::size_t m = 0; m < predictions.size(); ++m) {
          candidate.mlm_score += predictions[m][digit[m]].log_prob;
          candidate.surface += Vocab::StripContinuation(vocab.Piece(pieces[m]));
        }
        auto [it, inserted] =
            by_surface.emplace(candidate.surface, pool.size());
        if (inserted) {
          pool.push_back(std::move(candidate));
        } else if (BetterRepresentative(candidate, pool[it->second])) {
          pool[it->second] = std::move(candidate);
        }
      }
      for (std::size_t m = predictions.size(); m-- > 0;) {
        if (++digit[m] < predictions[m].size()) break;
        digit[m] = 0;
      }
    }
  }

  std::sort(pool.begin(), pool.end(), RankOrder);
  if (pool.size() > config.candidate_cap) pool.resize(config.candidate_cap);
  result.candidates = std::move(pool);
  return result;
}

Candidate SelectCandidate(std::span<const Candidate> candidates,
                          std::string_view noisy_word) {
  if (candidates.empty()) {
    throw ContractError("cannot select from an empty candidate set");
  }
  const Candidate* best = nullptr;
  std::size_t best_distance = 0;
  for (const Candidate& candidate : candidates) {
    const std::size_t distance = EditDistance(candidate.surface, noisy_word);
    if (best == nullptr ||
        std::forward_as_tuple(distance, -candidate.mlm_score,
                              candidate.pieces.size(), candidate.surface) <
            std::forward_as_tuple(best_distance, -best->mlm_score,
                                  best->pieces.size(), best->surface)) {
      best = &candidate;
      best_distance = distance;
    }
  }
  Candidate chosen = *best;
  chosen.edit_distance = best_distance;
  return chosen;
}

Denoiser::Denoiser(const Vocab& vocab, const MlmBackend& backend,
                   DenoiseConfig config)
    : vocab_(vocab), backend_(backend), config_(std::move(config)) {
  config_.Validate();
}

DenoiseResult Denoiser::Run(std::string_view text) const {
  TokenizedSentence sentence = TokenizeSentence(text, vocab_);
  DenoiseResult result;
  result.words.reserve(sentence.words.size());

  for (std::size_t i = 0; i < sentence.words.size(); ++i) {
    WordOutcome outcome;
    outcome.original = sentence.words[i].surface;
    outcome.output = outcome.original;
    if (sentence.words[i].skip) {
      outcome.skipped = true;
      result.words.push_back(std::move(outcome));
      continue;
    }

    CandidateSet candidates;
    try {
      const auto variants = BuildMaskedVariants(sentence, i, config_, vocab_);
      candidates =
          GenerateCandidates(variants, sentence, backend_, config_, vocab_);
    } catch (const BackendError& e) {
      throw DenoiseError(i, e.what(), /*backend_failure=*/true);
    } catch (const ContractError& e) {
      throw DenoiseError(i, e.what(), /*backend_failure=*/false);
    }
    outcome.candidate_count = candidates.candidates.size();

    if (!candidates.candidates.empty()) {
      const std::string noisy = NormalizeWord(sentence.words[i].surface);
      Candidate chosen = SelectCandidate(candidates.candidates, noisy);
      if (chosen.surface != noisy) {
        outcome.output = chosen.surface;
        outcome.replaced = true;
        sentence.ReplaceWord(i, std::move(chosen.surface), vocab_);
      }
    }
    result.words.push_back(std::move(outcome));
  }
  result.text = sentence.Text();
  return result;
}

std::string DenoiseSentence(std::string_view text, const MlmBackend& backend,
                            const DenoiseConfig& config, const Vocab& vocab) {
  return Denoiser(vocab, backend, config).Denoise(text);
}

}  // namespace ctxdenoise
