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

#include "ctxdenoise/vocab.h"

#include <openssl/evp.h>

#include <fstream>
#include <iterator>
#include <memory>
#include <sstream>

#include "ctxdenoise/errors.h"

namespace ctxdenoise {

std::string Sha256Hex(std::string_view bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                              EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &length) != 1) {
    throw Error("sha256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

Vocab::Vocab(std::vector<std::string> pieces, const SpecialTokens& specials,
             std::string hash)
    : pieces_(std::move(pieces)), hash_(std::move(hash)) {
  ids_.reserve(pieces_.size());
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const std::string& piece = pieces_[i];
    if (piece.empty()) {
      throw ConfigError("vocabulary line " + std::to_string(i + 1) +
                        " is empty");
    }
    auto [it, inserted] = ids_.emplace(piece, static_cast<PieceId>(i));
    if (!inserted) {
      throw ConfigError("duplicate vocabulary piece '" + piece + "' at lines " +
                        std::to_string(it->second + 1) + " and " +
                        std::to_string(i + 1));
    }
  }
  auto require = [this](const std::string& token) {
    auto it = ids_.find(token);
    if (it == ids_.end()) {
      throw ConfigError("vocabulary is missing special token '" + token + "'");
    }
    return it->second;
  };
  mask_id_ = require(specials.mask);
  start_id_ = require(specials.start);
  separator_id_ = require(specials.separator);
  unknown_id_ = require(specials.unknown);
}

Vocab Vocab::Load(const std::filesystem::path& path,
                  const SpecialTokens& specials) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open vocabulary file " + path.string());
  }
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  std::vector<std::string> pieces;
  std::istringstream lines(bytes);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    pieces.push_back(std::move(line));
  }
  return Vocab(std::move(pieces), specials, Sha256Hex(bytes));
}

Vocab Vocab::FromPieces(std::vector<std::string> pieces,
                        const SpecialTokens& specials) {
  std::string rendered;
  for (const auto& piece : pieces) {
    rendered += piece;
    rendered += '\n';
  }
  return Vocab(std::move(pieces), specials, Sha256Hex(rendered));
}

std::optional<PieceId> Vocab::Find(const std::string& piece) const {
  auto it = ids_.find(piece);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

const std::string& Vocab::Piece(PieceId id) const {
  if (!Contains(id)) {
    throw ContractError("piece id " + std::to_string(id) +
                        " outside vocabulary of size " +
                        std::to_string(pieces_.size()));
  }
  return pieces_[static_cast<std::size_t>(id)];
}

bool Vocab::IsContinuation(PieceId id) const {
  return Piece(id).starts_with(kContinuationPrefix);
}

std::string_view Vocab::StripContinuation(std::string_view piece) {
  if (piece.starts_with(kContinuationPrefix)) {
    piece.remove_prefix(kContinuationPrefix.size());
  }
  return piece;
}

}  // namespace ctxdenoise
