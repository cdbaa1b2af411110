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

#include "ctxdenoise/noise.h"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "ctxdenoise/errors.h"
#include "ctxdenoise/tokenizer.h"
#include "ctxdenoise/unicode.h"
#include "json.hpp"

namespace ctxdenoise {
namespace {

using nlohmann::json;

constexpr std::uint64_t kAlphabetSize = 26;

char32_t DrawLetter(Rng& rng) {
  return U'a' + static_cast<char32_t>(rng.UniformBelow(kAlphabetSize));
}

// A letter different from `current` (compared case-insensitively).
char32_t DrawDifferentLetter(char32_t current, Rng& rng) {
  const char32_t lowered = ToLower(current);
  if (lowered < U'a' || lowered > U'z') return DrawLetter(rng);
  char32_t letter =
      U'a' + static_cast<char32_t>(rng.UniformBelow(kAlphabetSize - 1));
  if (letter >= lowered) ++letter;
  return letter;
}

}  // namespace

std::string_view NoiseTypeName(NoiseType type) {
  switch (type) {
    case NoiseType::kSwap:
      return "swap";
    case NoiseType::kDelete:
      return "delete";
    case NoiseType::kReplace:
      return "replace";
    case NoiseType::kInsert:
      return "insert";
    case NoiseType::kNatural:
      return "natural";
  }
  return "unknown";
}

NoiseType ParseNoiseType(std::string_view name) {
  for (NoiseType type : {NoiseType::kSwap, NoiseType::kDelete,
                         NoiseType::kReplace, NoiseType::kInsert,
                         NoiseType::kNatural}) {
    if (NoiseTypeName(type) == name) return type;
  }
  throw ConfigError("unknown noise type '" + std::string(name) + "'",
                    "noise_type");
}

void NoiseSpec::Validate() const {
  if (!(word_prob >= 0.0 && word_prob <= 1.0)) {
    throw ConfigError("word_prob must lie in [0, 1]", "noise.word_prob");
  }
  double total = 0.0;
  for (double p : type_probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw ConfigError("type_probs must be non-negative", "noise.type_probs");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw ConfigError("type_probs must sum to 1", "noise.type_probs");
  }
}

bool NaturalNoiseTable::Add(std::string_view word, std::string variant) {
  std::string key = NormalizeWord(word);
  if (variant == key) return false;
  variants_[std::move(key)].push_back(std::move(variant));
  return true;
}

const std::vector<std::string>* NaturalNoiseTable::Find(
    std::string_view word) const {
  auto it = variants_.find(word);
  return it == variants_.end() ? nullptr : &it->second;
}

NaturalNoiseTable NaturalNoiseTable::Parse(std::istream& in,
                                           std::vector<std::string>* warnings) {
  NaturalNoiseTable table;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size() ||
        line.find('\t', tab + 1) != std::string::npos) {
      throw ConfigError("natural noise table line " +
                        std::to_string(line_number) +
                        ": expected 'word<TAB>variant'");
    }
    const std::string_view word(line.data(), tab);
    std::string variant = line.substr(tab + 1);
    if (!table.Add(word, variant) && warnings != nullptr) {
      warnings->push_back("natural noise table line " +
                          std::to_string(line_number) + ": variant '" +
                          variant + "' equals its word, dropped");
    }
  }
  return table;
}

NaturalNoiseTable NaturalNoiseTable::Load(const std::filesystem::path& path,
                                          std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open natural noise table " + path.string());
  }
  return Parse(in, warnings);
}

std::string SwapNoise(std::string_view word, Rng& rng) {
  std::u32string cps = DecodeUtf8(word);
  if (cps.size() < 4) return std::string(word);
  // Pairs (i, i + 1) with 1 <= i and i + 1 <= size - 2.
  const std::size_t i = 1 + rng.UniformBelow(cps.size() - 3);
  std::swap(cps[i], cps[i + 1]);
  return EncodeUtf8(cps);
}

std::string DeleteNoise(std::string_view word, Rng& rng) {
  std::u32string cps = DecodeUtf8(word);
  if (cps.size() < 3) return std::string(word);
  const std::size_t i = 1 + rng.UniformBelow(cps.size() - 2);
  cps.erase(i, 1);
  return EncodeUtf8(cps);
}

std::string ReplaceNoise(std::string_view word, Rng& rng) {
  std::u32string cps = DecodeUtf8(word);
  if (cps.size() < 3) return std::string(word);
  const std::size_t i = 1 + rng.UniformBelow(cps.size() - 2);
  cps[i] = DrawDifferentLetter(cps[i], rng);
  return EncodeUtf8(cps);
}

std::string InsertNoise(std::string_view word, Rng& rng) {
  std::u32string cps = DecodeUtf8(word);
  if (cps.size() < 2) return std::string(word);
  // Insert before index i, 1 <= i <= size - 1.
  const std::size_t i = 1 + rng.UniformBelow(cps.size() - 1);
  cps.insert(cps.begin() + static_cast<std::ptrdiff_t>(i), DrawLetter(rng));
  return EncodeUtf8(cps);
}

std::string ApplyNoise(NoiseType type, std::string_view word, Rng& rng) {
  switch (type) {
    case NoiseType::kSwap:
      return SwapNoise(word, rng);
    case NoiseType::kDelete:
      return DeleteNoise(word, rng);
    case NoiseType::kReplace:
      return ReplaceNoise(word, rng);
    case NoiseType::kInsert:
      return InsertNoise(word, rng);
    case NoiseType::kNatural:
      break;
  }
  throw ContractError("natural noise needs a lookup table");
}

NoiseType DrawNoiseType(const NoiseSpec& spec, Rng& rng) {
  const double u = rng.UniformUnit();
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t t = 0; t < spec.type_probs.size(); ++t) {
    if (spec.type_probs[t] <= 0.0) continue;
    last_positive = t;
    cumulative += spec.type_probs[t];
    if (u < cumulative) return kArtificialNoiseTypes[t];
  }
  // Rounding left u above the final cumulative sum.
  return kArtificialNoiseTypes[last_positive];
}

PerturbResult PerturbCorpus(std::span<const std::string> sentences,
                            const NoiseSpec& spec,
                            const NaturalNoiseTable* table) {
  spec.Validate();
  if (spec.mode == NoiseMode::kNatural && table == nullptr) {
    throw ConfigError("natural noise mode requires a lookup table",
                      "noise.table");
  }
  PerturbResult result;
  result.noisy.reserve(sentences.size());
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    Rng rng(DeriveSeed(spec.seed, s));
    std::vector<Word> words = SegmentSentence(sentences[s]);
    std::string noisy;
    for (std::size_t w = 0; w < words.size(); ++w) {
      std::string corrupted = words[w].surface;
      NoiseType type = NoiseType::kNatural;
      if (!words[w].skip && rng.UniformUnit() < spec.word_prob) {
        if (spec.mode == NoiseMode::kArtificial) {
          type = DrawNoiseType(spec, rng);
          corrupted = ApplyNoise(type, words[w].surface, rng);
        } else if (const auto* variants =
                       table->Find(NormalizeWord(words[w].surface))) {
          corrupted = (*variants)[rng.UniformBelow(variants->size())];
        }
        ++result.selections[static_cast<std::size_t>(type)];
      }
      if (corrupted != words[w].surface) {
        result.alignment.push_back(
            {s, w, words[w].surface, corrupted, type});
      }
      if (w > 0) noisy.push_back(' ');
      noisy += corrupted;
    }
    result.noisy.push_back(std::move(noisy));
  }
  return result;
}

void WriteAlignment(std::ostream& out,
                    std::span<const AlignmentRecord> records) {
  for (const AlignmentRecord& r : records) {
    json line = {{"sentence", r.sentence},
                 {"word", r.word},
                 {"original", r.original},
                 {"corrupted", r.corrupted},
                 {"noise_type", NoiseTypeName(r.noise_type)}};
    out << line.dump() << '\n';
  }
}

std::vector<AlignmentRecord> ReadAlignment(std::istream& in) {
  std::vector<AlignmentRecord> records;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    try {
      const json doc = json::parse(line);
      records.push_back({doc.at("sentence").get<std::size_t>(),
                         doc.at("word").get<std::size_t>(),
                         doc.at("original").get<std::string>(),
                         doc.at("corrupted").get<std::string>(),
                         ParseNoiseType(doc.at("noise_type").get<std::string>())});
    } catch (const json::exception& e) {
      throw ConfigError("alignment line " + std::to_string(line_number) +
                        ": " + e.what());
    }
  }
  return records;
}

}  // namespace ctxdenoise
