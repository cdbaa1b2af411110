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

#ifndef CTXDENOISE_BATCH_H_
#define CTXDENOISE_BATCH_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ctxdenoise/denoiser.h"
#include "ctxdenoise/errors.h"

namespace ctxdenoise {

struct SentenceFailure {
  std::size_t line = 0;  // zero-based
  std::string message;
  bool backend_failure = false;
};

struct BatchResult {
  // One entry per input, in input order. A failed sentence keeps its input.
  std::vector<std::string> outputs;
  // Sorted by line.
  std::vector<SentenceFailure> failures;
};

// Denoises sentences on a pool of `workers` threads (at least one).
// Output order equals input order regardless of scheduling.
BatchResult DenoiseBatch(std::span<const std::string> sentences,
                         const Denoiser& denoiser, std::size_t workers);

class BatchError : public Error {
 public:
  explicit BatchError(std::vector<SentenceFailure> failures);

  const std::vector<SentenceFailure>& failures() const { return failures_; }
  bool backend_failure() const;

 private:
  std::vector<SentenceFailure> failures_;
};

}  // namespace ctxdenoise

#endif  // CTXDENOISE_BATCH_H_
