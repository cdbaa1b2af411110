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

#ifndef CTXDENOISE_VOCAB_H_
#define CTXDENOISE_VOCAB_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ctxdenoise {

using PieceId = std::int32_t;

struct SpecialTokens {
  std::string mask = "[MASK]";
  std::string start = "[CLS]";
  std::string separator = "[SEP]";
  std::string unknown = "[UNK]";
};

// WordPiece vocabulary. Ids are dense line numbers of the vocabulary file.
// Immutable after construction; safe to share between threads.
class Vocab {
 public:
  static constexpr std::string_view kContinuationPrefix = "##";

  // One piece per line, id = zero-based line number. Throws ConfigError on a
  // missing file, an empty or duplicate piece, or a missing special token.
  static Vocab Load(const std::filesystem::path& path,
                    const SpecialTokens& specials = {});

  // Same validation as Load(). The hash is computed over the pieces rendered
  // the way Load() expects them on disk ("piece\n" per entry).
  static Vocab FromPieces(std::vector<std::string> pieces,
                          const SpecialTokens& specials = {});

  std::size_t size() const { return pieces_.size(); }

  std::optional<PieceId> Find(const std::string& piece) const;
  bool Contains(PieceId id) const {
    return id >= 0 && static_cast<std::size_t>(id) < pieces_.size();
  }
  // Throws ContractError for an invalid id.
  const std::string& Piece(PieceId id) const;

  PieceId mask_id() const { return mask_id_; }
  PieceId start_id() const { return start_id_; }
  PieceId separator_id() const { return separator_id_; }
  PieceId unknown_id() const { return unknown_id_; }

  bool IsSpecial(PieceId id) const {
    return id == mask_id_ || id == start_id_ || id == separator_id_ ||
           id == unknown_id_;
  }
  bool IsContinuation(PieceId id) const;

  // Piece text with the continuation prefix removed, if present.
  static std::string_view StripContinuation(std::string_view piece);

  // Lowercase hex SHA-256 of the vocabulary file bytes.
  const std::string& hash() const { return hash_; }

 private:
  Vocab(std::vector<std::string> pieces, const SpecialTokens& specials,
        std::string hash);

  std::vector<std::string> pieces_;
  std::unordered_map<std::string, PieceId> ids_;
  PieceId mask_id_ = -1;
  PieceId start_id_ = -1;
  PieceId separator_id_ = -1;
  PieceId unknown_id_ = -1;
  std::string hash_;
};

// Lowercase hex SHA-256 digest of `bytes`.
std::string Sha256Hex(std::string_view bytes);

}  // namespace ctxdenoise

#endif  // CTXDENOISE_VOCAB_H_
