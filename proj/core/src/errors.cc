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

#include "ctxdenoise/errors.h"

namespace ctxdenoise {

DenoiseError::DenoiseError(std::size_t word_index, const std::string& cause,
                           bool backend_failure)
    : Error("denoising aborted at word " + std::to_string(word_index) + ": " +
            cause),
      word_index_(word_index),
      backend_failure_(backend_failure) {}

WordCountMismatch::WordCountMismatch(std::size_t sentence, std::size_t expected,
                                     std::size_t actual)
    : Error("sentence " + std::to_string(sentence) + ": expected " +
            std::to_string(expected) + " words, got " + std::to_string(actual)),
      sentence_(sentence),
      expected_(expected),
      actual_(actual) {}

}  // namespace ctxdenoise
