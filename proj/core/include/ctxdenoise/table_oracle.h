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

#ifndef CTXDENOISE_TABLE_ORACLE_H_
#define CTXDENOISE_TABLE_ORACLE_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ctxdenoise/mlm_backend.h"
#include "ctxdenoise/vocab.h"

namespace ctxdenoise {

// Deterministic backend that answers from a fixture table keyed by request
// fingerprint (see Fingerprint()).
//
// Fixture format (JSON):
//
//   {
//     "fallback": ["the", "a", "of"],
//     "entries": {
//       "[CLS] a fat [MASK] [SEP] a fat dack [SEP]": [
//         [{"piece": "duck", "log_prob": -0.1}, {"piece": "dog", "log_prob": -2.5}]
//       ]
//     }
//   }
//
// Each entry holds one list per mask in the fingerprint. A fingerprint with
// no entry gets, for every mask, the uniform distribution over "fallback".
// Holds a reference to the vocab, which must outlive the oracle.
class TableOracle : public MlmBackend {
 public:
  using Table =
      std::unordered_map<std::string, std::vector<std::vector<PiecePrediction>>>;

  // Validates the table: finite log_probs <= 0, one list per mask in each
  // fingerprint, known pieces. Throws ConfigError.
  TableOracle(const Vocab& vocab, Table table, std::vector<PieceId> fallback);

  static TableOracle Load(const std::filesystem::path& path,
                          const Vocab& vocab);
  static TableOracle Parse(std::string_view json_text, const Vocab& vocab);

  MaskPredictions Score(const ScoreRequest& request) const override;

  std::size_t size() const { return table_.size(); }
  const std::vector<PieceId>& fallback() const { return fallback_; }

 private:
  const Vocab& vocab_;
  Table table_;
  std::vector<PieceId> fallback_;
};

// Renders a table in the fixture format accepted by TableOracle::Parse().
std::string SerializeOracleTable(const TableOracle::Table& table,
                                 const std::vector<PieceId>& fallback,
                                 const Vocab& vocab);

}  // namespace ctxdenoise

#endif  // CTXDENOISE_TABLE_ORACLE_H_
