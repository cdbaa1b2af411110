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

#ifndef CTXDENOISE_ERRORS_H_
#define CTXDENOISE_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ctxdenoise {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad vocabulary, fixture, config value or a vocab-hash mismatch. Fatal.
// `field()` names the offending config key when there is one.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message, std::string field = "")
      : Error(message), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// A caller broke an operation's precondition (mask position that is not a
// mask, unknown piece id, word index out of range, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

// The masked language model could not be reached or answered badly.
class BackendError : public Error {
 public:
  using Error::Error;
};

// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Denoising a sentence aborted at `word_index`.
class DenoiseError : public Error {
 public:
  DenoiseError(std::size_t word_index, const std::string& cause,
               bool backend_failure);

  std::size_t word_index() const { return word_index_; }
  bool backend_failure() const { return backend_failure_; }

 private:
  std::size_t word_index_;
  bool backend_failure_;
};

// Clean, noisy and denoised corpora disagree on the word count of a sentence.
class WordCountMismatch : public Error {
 public:
  WordCountMismatch(std::size_t sentence, std::size_t expected,
                    std::size_t actual);

  std::size_t sentence() const { return sentence_; }
  std::size_t expected() const { return expected_; }
  std::size_t actual() const { return actual_; }

 private:
  std::size_t sentence_;
  std::size_t expected_;
  std::size_t actual_;
};

}  // namespace ctxdenoise

#endif  // CTXDENOISE_ERRORS_H_
