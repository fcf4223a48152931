// Copyright 2026 The plspell authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plspell {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Unreadable or malformed input data (word lists, corpora, embeddings,
/// model files). Carries the offending line when one is known.
class LoadError : public Error {
 public:
  explicit LoadError(const std::string& what) : Error(what), line_(0) {}
  LoadError(const std::string& file, std::size_t line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Invalid configuration: bad fractions, missing resources, contradictory
/// flags. Distinct from LoadError so the CLI can map it to a usage failure.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Mathematical precondition violated (zero-norm vector, empty input).
class MathDomainError : public Error {
 public:
  explicit MathDomainError(const std::string& what) : Error(what) {}
};

/// Training diverged; names the epoch and batch that produced the bad loss.
class TrainError : public Error {
 public:
  TrainError(std::size_t epoch, std::size_t batch, const std::string& what)
      : Error("epoch " + std::to_string(epoch) + ", batch " +
              std::to_string(batch) + ": " + what),
        epoch_(epoch),
        batch_(batch) {}

  std::size_t epoch() const { return epoch_; }
  std::size_t batch() const { return batch_; }

 private:
  std::size_t epoch_;
  std::size_t batch_;
};

}  // namespace plspell
