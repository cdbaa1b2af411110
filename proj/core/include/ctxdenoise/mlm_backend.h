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

#ifndef CTXDENOISE_MLM_BACKEND_H_
#define CTXDENOISE_MLM_BACKEND_H_

#include <cstddef>
#include <string>
#include <vector>

#include "ctxdenoise/vocab.h"

namespace ctxdenoise {

struct ScoreRequest {
  // Full model input: start token, masks and separators included.
  std::vector<PieceId> pieces;
  // Strictly increasing indices into `pieces`, each pointing at a mask.
  std::vector<std::size_t> mask_positions;
  int top_k = 1;
};

struct PiecePrediction {
  PieceId piece;
  double log_prob;  // natural log

  friend bool operator==(const PiecePrediction&,
                         const PiecePrediction&) = default;
};

// One list per mask position, in request order. Each list is sorted by
// log_prob descending and holds at most top_k entries.
using MaskPredictions = std::vector<std::vector<PiecePrediction>>;

// A masked language model that returns independent per-mask marginals.
// Implementations must allow concurrent Score() calls.
class MlmBackend {
 public:
  virtual ~MlmBackend() = default;

  virtual MaskPredictions Score(const ScoreRequest& request) const = 0;
};

// Throws ContractError unless every piece id is valid, top_k >= 1, and the
// mask positions are strictly increasing and point at mask tokens.
void ValidateRequest(const ScoreRequest& request, const Vocab& vocab);

// Throws ContractError unless `predictions` honours the MaskPredictions
// contract for `request`.
void ValidatePredictions(const ScoreRequest& request,
                         const MaskPredictions& predictions,
                         const Vocab& vocab);

// The request pieces rendered as strings and joined by single spaces. This
// is the lookup key of the table oracle.
std::string Fingerprint(const std::vector<PieceId>& pieces, const Vocab& vocab);

}  // namespace ctxdenoise

#endif  // CTXDENOISE_MLM_BACKEND_H_
