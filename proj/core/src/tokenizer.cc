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

#include "ctxdenoise/tokenizer.h"

#include "ctxdenoise/errors.h"
#include "ctxdenoise/unicode.h"

namespace ctxdenoise {
namespace {

void RebuildSpans(TokenizedSentence& sentence,
                  const std::vector<std::vector<PieceId>>& per_word) {
  sentence.pieces.clear();
  sentence.word_spans.clear();
  for (const auto& word_pieces : per_word) {
    const std::size_t begin = sentence.pieces.size();
    sentence.pieces.insert(sentence.pieces.end(), word_pieces.begin(),
                           word_pieces.end());
    sentence.word_spans.push_back({begin, sentence.pieces.size()});
  }
}

}  // namespace

std::vector<Word> SegmentSentence(std::string_view text) {
  std::vector<Word> words;
  std::size_t pos = 0;
  while (pos < text.size()) {
    DecodedChar c = DecodeUtf8At(text, pos);
    if (IsSpace(c.code_point)) {
      pos += c.length;
      continue;
    }
    Word word;
    word.begin = pos;
    while (pos < text.size()) {
      c = DecodeUtf8At(text, pos);
      if (IsSpace(c.code_point)) break;
      pos += c.length;
    }
    word.end = pos;
    word.surface = std::string(text.substr(word.begin, word.end - word.begin));
    word.skip = !ContainsAlpha(word.surface);
    words.push_back(std::move(word));
  }
  return words;
}

std::string NormalizeWord(std::string_view word) { return ToLowerUtf8(word); }

std::vector<PieceId> WordpieceTokenize(std::string_view word,
                                       const Vocab& vocab) {
  const std::u32string cps = DecodeUtf8(word);
  if (cps.empty() || cps.size() > kMaxWordChars) return {vocab.unknown_id()};

  std::vector<PieceId> pieces;
  std::size_t start = 0;
  while (start < cps.size()) {
    std::optional<PieceId> match;
    std::size_t end = cps.size();
    for (; end > start; --end) {
      std::string candidate =
          EncodeUtf8(std::u32string_view(cps).substr(start, end - start));
      if (start > 0) {
        candidate.insert(0, Vocab::kContinuationPrefix);
      }
      match = vocab.Find(candidate);
      if (match) break;
    }
    if (!match) return {vocab.unknown_id()};
    pieces.push_back(*match);
    start = end;
  }
  return pieces;
}

TokenizedSentence TokenizeSentence(std::string_view text, const Vocab& vocab) {
  TokenizedSentence sentence;
  sentence.words = SegmentSentence(text);
  std::vector<std::vector<PieceId>> per_word;
  per_word.reserve(sentence.words.size());
  for (const Word& word : sentence.words) {
    per_word.push_back(WordpieceTokenize(NormalizeWord(word.surface), vocab));
  }
  RebuildSpans(sentence, per_word);
  return sentence;
}

void TokenizedSentence::ReplaceWord(std::size_t index, std::string surface,
                                    const Vocab& vocab) {
  if (index >= words.size()) {
    throw ContractError("word index " + std::to_string(index) +
                        " out of range for sentence of " +
                        std::to_string(words.size()) + " words");
  }
  const std::vector<PieceId> replacement =
      WordpieceTokenize(NormalizeWord(surface), vocab);
  const PieceSpan old = word_spans[index];
  pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(old.begin),
               pieces.begin() + static_cast<std::ptrdiff_t>(old.end));
  pieces.insert(pieces.begin() + static_cast<std::ptrdiff_t>(old.begin),
                replacement.begin(), replacement.end());
  const auto delta = static_cast<std::ptrdiff_t>(replacement.size()) -
                     static_cast<std::ptrdiff_t>(old.size());
  word_spans[index].end = old.begin + replacement.size();
  for (std::size_t w = index + 1; w < word_spans.size(); ++w) {
    word_spans[w].begin = static_cast<std::size_t>(
        static_cast<std::ptrdiff_t>(word_spans[w].begin) + delta);
    word_spans[w].end = static_cast<std::size_t>(
        static_cast<std::ptrdiff_t>(word_spans[w].end) + delta);
  }
  words[index].skip = !ContainsAlpha(surface);
  words[index].surface = std::move(surface);
}

std::string TokenizedSentence::Text() const {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += words[i].surface;
  }
  return out;
}

}  // namespace ctxdenoise
