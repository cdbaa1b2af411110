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

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "ctxdenoise/tokenizer.h"
#include "ctxdenoise/vocab.h"

namespace ctxdenoise {
namespace {

Vocab BenchVocab() {
  std::vector<std::string> pieces = {"[PAD]", "[UNK]", "[CLS]", "[SEP]",
                                     "[MASK]"};
  for (char c = 'a'; c <= 'z'; ++c) {
    pieces.emplace_back(1, c);
    pieces.push_back(std::string("##") + c);
  }
  for (const char* w : {"there", "is", "fat", "duck", "swimming", "in",
                        "the", "lake", "lea", "##ke", "##ing", "swim"}) {
    pieces.emplace_back(w);
  }
  return Vocab::FromPieces(std::move(pieces));
}

void BM_WordpieceTokenize(benchmark::State& state) {
  const Vocab vocab = BenchVocab();
  for (auto _ : state) {
    benchmark::DoNotOptimize(WordpieceTokenize("swimming", vocab));
    benchmark::DoNotOptimize(WordpieceTokenize("leake", vocab));
    benchmark::DoNotOptimize(WordpieceTokenize("qzxv", vocab));
  }
}
BENCHMARK(BM_WordpieceTokenize);

void BM_TokenizeSentence(benchmark::State& state) {
  const Vocab vocab = BenchVocab();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        TokenizeSentence("there is a fat dack swimming in the leake", vocab));
  }
}
BENCHMARK(BM_TokenizeSentence);

}  // namespace
}  // namespace ctxdenoise
