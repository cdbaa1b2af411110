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

// Straight-line reference of the denoising loop, written against strings
// only and sharing no code with the library. Test use only. Handles ASCII
// text (lowercasing and the alphabetic test are ASCII-only).

#ifndef CTXDENOISE_TESTS_REFERENCE_REFERENCE_DENOISER_H_
#define CTXDENOISE_TESTS_REFERENCE_REFERENCE_DENOISER_H_

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace reference {

struct Prediction {
  std::string piece;
  double log_prob;
};

// What the reference knows about a model query.
struct QueryContext {
  std::size_t word_index;
  int n;
  // Pieces of the word being replaced, in the working sentence.
  std::vector<std::string> word_pieces;
};

using Query = std::function<std::vector<std::vector<Prediction>>(
    const std::vector<std::string>& pieces,
    const std::vector<std::size_t>& mask_positions, int top_k,
    const QueryContext& context)>;

struct Settings {
  int max_masks = 4;
  std::vector<int> top_k = {3000, 5, 3, 2};
  std::size_t cap = 3068;
  std::size_t max_len = 512;
};

struct Scored {
  std::string surface;
  double score;
  std::size_t pieces;
};

// Called once per visited word with the final candidate list (after the cap)
// and the word chosen (empty when the list was empty).
using Observer = std::function<void(std::size_t word_index,
                                    const std::string& noisy,
                                    const std::vector<Scored>& candidates,
                                    const std::string& chosen)>;

std::string Lower(const std::string& s);
bool HasLetter(const std::string& s);
std::vector<std::string> Pieces(const std::string& word,
                                const std::set<std::string>& vocab);
std::size_t Levenshtein(const std::string& a, const std::string& b);

// Throws std::length_error when a masked sentence alone exceeds max_len.
std::string Denoise(const std::string& text, const std::set<std::string>& vocab,
                    const Settings& settings, const Query& query,
                    const Observer& observer = nullptr);

}  // namespace reference

#endif  // CTXDENOISE_TESTS_REFERENCE_REFERENCE_DENOISER_H_
