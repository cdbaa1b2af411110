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

#ifndef CTXDENOISE_TOKENIZER_H_
#define CTXDENOISE_TOKENIZER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ctxdenoise/vocab.h"

namespace ctxdenoise {

// Words longer than this many code points tokenize to the unknown piece.
inline constexpr std::size_t kMaxWordChars = 100;

struct Word {
  std::string surface;
  // Byte offsets of the surface in the segmented text, [begin, end).
  std::size_t begin = 0;
  std::size_t end = 0;
  // True iff the surface has no alphabetic character. Skipped words are
  // tokenized for context but never rewritten.
  bool skip = false;
};

// Half-open range of piece indices, [begin, end).
struct PieceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  friend bool operator==(const PieceSpan&, const PieceSpan&) = default;
};

struct TokenizedSentence {
  std::vector<Word> words;
  std::vector<PieceId> pieces;
  // One span per word; spans are contiguous and cover `pieces` exactly.
  std::vector<PieceSpan> word_spans;

  // Replaces word `index` with `surface`, retokenizing it and shifting the
  // spans of the words after it. Character offsets are left untouched.
  void ReplaceWord(std::size_t index, std::string surface, const Vocab& vocab);

  // Words joined by single spaces.
  std::string Text() const;
};

// Whitespace segmentation; surfaces and order are preserved.
std::vector<Word> SegmentSentence(std::string_view text);

// Lowercased form used for tokenization and comparisons.
std::string NormalizeWord(std::string_view word);

// Greedy longest-match-first WordPiece over code points. Non-initial pieces
// are looked up with the continuation prefix. If any step finds no match,
// or the word exceeds kMaxWordChars, the result is the single unknown piece.
// `word` is used as given; callers normalize first.
std::vector<PieceId> WordpieceTokenize(std::string_view word,
                                       const Vocab& vocab);

TokenizedSentence TokenizeSentence(std::string_view text, const Vocab& vocab);

}  // namespace ctxdenoise

#endif  // CTXDENOISE_TOKENIZER_H_
