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

#include "ctxdenoise/batch.h"

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>

namespace ctxdenoise {
namespace {

std::string Summarize(const std::vector<SentenceFailure>& failures) {
  std::string out = std::to_string(failures.size()) + " sentence(s) failed";
  if (!failures.empty()) {
    out += "; first at line " + std::to_string(failures.front().line + 1) +
           ": " + failures.front().message;
  }
  return out;
}

}  // namespace

BatchResult DenoiseBatch(std::span<const std::string> sentences,
                         const Denoiser& denoiser, std::size_t workers) {
  BatchResult result;
  result.outputs.assign(sentences.begin(), sentences.end());
  std::vector<std::optional<SentenceFailure>> failed(sentences.size());

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < sentences.size();
         i = next.fetch_add(1)) {
      try {
        result.outputs[i] = denoiser.Denoise(sentences[i]);
      } catch (const DenoiseError& e) {
        failed[i] = SentenceFailure{i, e.what(), e.backend_failure()};
      } catch (const Error& e) {
        failed[i] = SentenceFailure{i, e.what(), false};
      }
    }
  };

  const std::size_t threads =
      std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(1, sentences.size()));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  for (auto& failure : failed) {
    if (failure) result.failures.push_back(std::move(*failure));
  }
  return result;
}

BatchError::BatchError(std::vector<SentenceFailure> failures)
    : Error(Summarize(failures)), failures_(std::move(failures)) {}

bool BatchError::backend_failure() const {
  return std::any_of(failures_.begin(), failures_.end(),
                     [](const SentenceFailure& f) { return f.backend_failure; });
}

}  // namespace ctxdenoise
