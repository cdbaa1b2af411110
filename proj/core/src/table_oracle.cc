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

#include "ctxdenoise/table_oracle.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <map>

#include "ctxdenoise/errors.h"
#include "json.hpp"

namespace ctxdenoise {
namespace {

using nlohmann::json;

std::size_t CountMasks(std::string_view fingerprint, const Vocab& vocab) {
  const std::string& mask = vocab.Piece(vocab.mask_id());
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos <= fingerprint.size()) {
    std::size_t next = fingerprint.find(' ', pos);
    if (next == std::string_view::npos) next = fingerprint.size();
    if (fingerprint.substr(pos, next - pos) == mask) ++count;
    pos = next + 1;
  }
  return count;
}

PieceId RequirePiece(const Vocab& vocab, const std::string& piece,
                     const std::string& where) {
  auto id = vocab.Find(piece);
  if (!id) {
    throw ConfigError("oracle fixture " + where + ": piece '" + piece +
                      "' not in vocabulary");
  }
  return *id;
}

}  // namespace

TableOracle::TableOracle(const Vocab& vocab, Table table,
                         std::vector<PieceId> fallback)
    : vocab_(vocab), table_(std::move(table)), fallback_(std::move(fallback)) {
  for (PieceId id : fallback_) {
    if (!vocab_.Contains(id)) {
      throw ConfigError("oracle fallback piece id " + std::to_string(id) +
                        " not in vocabulary");
    }
  }
  for (auto& [fingerprint, lists] : table_) {
    const std::size_t masks = CountMasks(fingerprint, vocab_);
    if (lists.size() != masks) {
      throw ConfigError("oracle entry '" + fingerprint + "' has " +
                        std::to_string(masks) + " masks but " +
                        std::to_string(lists.size()) + " prediction lists");
    }
    for (auto& list : lists) {
      for (const PiecePrediction& p : list) {
        if (!vocab_.Contains(p.piece)) {
          throw ConfigError("oracle entry '" + fingerprint +
                            "' predicts unknown piece id " +
                            std::to_string(p.piece));
        }
        if (!std::isfinite(p.log_prob) || p.log_prob > 0.0) {
          throw ConfigError("oracle entry '" + fingerprint +
                            "' has log_prob " + std::to_string(p.log_prob) +
                            " outside (-inf, 0]");
        }
      }
      std::stable_sort(list.begin(), list.end(),
                       [](const PiecePrediction& a, const PiecePrediction& b) {
                         return a.log_prob > b.log_prob;
                       });
    }
  }
}

TableOracle TableOracle::Parse(std::string_view json_text, const Vocab& vocab) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed oracle fixture: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError("malformed oracle fixture: top level must be an object");
  }
  try {
    std::vector<PieceId> fallback;
    if (doc.contains("fallback")) {
      for (const auto& piece : doc.at("fallback")) {
        fallback.push_back(
            RequirePiece(vocab, piece.get<std::string>(), "fallback"));
      }
    }
    Table table;
    if (doc.contains("entries")) {
      for (const auto& [fingerprint, lists] : doc.at("entries").items()) {
        auto& out = table[fingerprint];
        for (const auto& list : lists) {
          auto& out_list = out.emplace_back();
          for (const auto& entry : list) {
            out_list.push_back(
                {RequirePiece(vocab, entry.at("piece").get<std::string>(),
                              "entry '" + fingerprint + "'"),
                 entry.at("log_prob").get<double>()});
          }
        }
      }
    }
    return TableOracle(vocab, std::move(table), std::move(fallback));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed oracle fixture: ") + e.what());
  }
}

TableOracle TableOracle::Load(const std::filesystem::path& path,
                              const Vocab& vocab) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open oracle fixture " + path.string());
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return Parse(text, vocab);
}

MaskPredictions TableOracle::Score(const ScoreRequest& request) const {
  ValidateRequest(request, vocab_);
  const auto top_k = static_cast<std::size_t>(request.top_k);
  MaskPredictions out;
  out.reserve(request.mask_positions.size());
  auto it = table_.find(Fingerprint(request.pieces, vocab_));
  if (it != table_.end()) {
    for (const auto& list : it->second) {
      out.emplace_back(list.begin(),
                       list.begin() + static_cast<std::ptrdiff_t>(
                                          std::min(top_k, list.size())));
    }
    return out;
  }
  const double uniform =
      fallback_.empty() ? 0.0 : -std::log(static_cast<double>(fallback_.size()));
  for (std::size_t m = 0; m < request.mask_positions.size(); ++m) {
    auto& list = out.emplace_back();
    for (std::size_t i = 0; i < fallback_.size() && i < top_k; ++i) {
      list.push_back({fallback_[i], uniform});
    }
  }
  return out;
}

std::string SerializeOracleTable(const TableOracle::Table& table,
                                 const std::vector<PieceId>& fallback,
                                 const Vocab& vocab) {
  json doc;
  doc["fallback"] = json::array();
  for (PieceId id : fallback) doc["fallback"].push_back(vocab.Piece(id));
  // std::map keeps the output byte-stable.
  std::map<std::string, const std::vector<std::vector<PiecePrediction>>*>
      ordered;
  for (const auto& [fingerprint, lists] : table) ordered[fingerprint] = &lists;
  json entries = json::object();
  for (const auto& [fingerprint, lists] : ordered) {
    json per_mask = json::array();
    for (const auto& list : *lists) {
      json items = json::array();
      for (const PiecePrediction& p : list) {
        items.push_back({{"piece", vocab.Piece(p.piece)}, {"log_prob", p.log_prob}});
      }
      per_mask.push_back(std::move(items));
    }
    entries[fingerprint] = std::move(per_mask);
  }
  doc["entries"] = std::move(entries);
  return doc.dump(2);
}

}  // namespace ctxdenoise
