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

#include "ctxdenoise/mlm_backend.h"

#include <cmath>

#include "ctxdenoise/errors.h"

namespace ctxdenoise {

void ValidateRequest(const ScoreRequest& request, const Vocab& vocab) {
  if (request.top_k < 1) {
    throw ContractError("top_k must be >= 1, got " +
                        std::to_string(request.top_k));
  }
  for (std::size_t i = 0; i < request.pieces.size(); ++i) {
    if (!vocab.Contains(request.pieces[i])) {
      throw ContractError("unknown piece id " +
                          std::to_string(request.pieces[i]) + " at position " +
                          std::to_string(i));
    }
  }
  for (std::size_t m = 0; m < request.mask_positions.size(); ++m) {
    const std::size_t pos = request.mask_positions[m];
    if (m > 0 && pos <= request.mask_positions[m - 1]) {
      throw ContractError("mask positions must be strictly increasing");
    }
    if (pos >= request.pieces.size()) {
      throw ContractError("mask position " + std::to_string(pos) +
                          " beyond sequence of length " +
                          std::to_string(request.pieces.size()));
    }
    if (request.pieces[pos] != vocab.mask_id()) {
      throw ContractError("mask position " + std::to_string(pos) +
                          " holds '" + vocab.Piece(request.pieces[pos]) +
                          "', not a mask token");
    }
  }
}

void ValidatePredictions(const ScoreRequest& request,
                         const MaskPredictions& predictions,
                         const Vocab& vocab) {
  if (predictions.size() != request.mask_positions.size()) {
    throw ContractError("expected predictions for " +
                        std::to_string(request.mask_positions.size()) +
                        " masks, got " + std::to_string(predictions.size()));
  }
  for (std::size_t m = 0; m < predictions.size(); ++m) {
    const auto& list = predictions[m];
    if (list.size() > static_cast<std::size_t>(request.top_k)) {
      throw ContractError("mask " + std::to_string(m) + " returned " +
                          std::to_string(list.size()) + " entries for top_k " +
                          std::to_string(request.top_k));
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (!vocab.Contains(list[i].piece)) {
        throw ContractError("mask " + std::to_string(m) +
                            " predicted unknown piece id " +
                            std::to_string(list[i].piece));
      }
      if (!std::isfinite(list[i].log_prob) || list[i].log_prob > 0.0) {
        throw ContractError("mask " + std::to_string(m) +
                            " has invalid log_prob " +
                            std::to_string(list[i].log_prob));
      }
      if (i > 0 && list[i].log_prob > list[i - 1].log_prob) {
        throw ContractError("mask " + std::to_string(m) +
                            " predictions not sorted by log_prob");
      }
    }
  }
}

std::string Fingerprint(const std::vector<PieceId>& pieces,
                        const Vocab& vocab) {
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += vocab.Piece(pieces[i]);
  }
  return out;
}

}  // namespace ctxdenoise
