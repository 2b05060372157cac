// Copyright 2026 The quditsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace qudit {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Entries with magnitude below this are dropped when an operator is
/// canonicalized.
inline constexpr double kPruneThreshold = 1e-14;

/// Largest square dimension a SparseOperator can address (32-bit indices).
inline constexpr std::size_t kMaxOperatorDim =
    std::numeric_limits<std::uint32_t>::max();

/// One stored non-zero of a sparse operator.
struct Triplet {
    std::uint32_t row;
    std::uint32_t col;
    Complex value;
};
static_assert(sizeof(Triplet) == 24);

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an index, dimension or wire was violated.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// A basis-state label could not be parsed.
class ParseError : public Error {
  public:
    enum class Kind { TokenCount, NonNumeric, OutOfRange };

    ParseError(Kind kind, const std::string &what) : Error(what), kind_(kind) {}
    [[nodiscard]] Kind kind() const noexcept { return kind_; }

  private:
    Kind kind_;
};

/// A user-supplied operator failed a numeric validation (e.g. unitarity).
class ValidationError : public Error {
  public:
    ValidationError(const std::string &what, double deviation)
        : Error(what), deviation_(deviation) {}
    [[nodiscard]] double deviation() const noexcept { return deviation_; }

  private:
    double deviation_;
};

/// A circuit description did not match the JSON schema.
class SchemaError : public Error {
  public:
    explicit SchemaError(const std::string &what,
                         std::optional<std::size_t> op_index = std::nullopt)
        : Error(op_index ? "op " + std::to_string(*op_index) + ": " + what
                         : what),
          op_index_(op_index) {}
    [[nodiscard]] std::optional<std::size_t> op_index() const noexcept {
        return op_index_;
    }

  private:
    std::optional<std::size_t> op_index_;
};

/// Reading or writing a file failed.
class IoError : public Error {
  public:
    using Error::Error;
};

/// Training produced a NaN or infinite loss.
class NonFiniteLoss : public Error {
  public:
    explicit NonFiniteLoss(std::size_t step)
        : Error("non-finite loss at step " + std::to_string(step)),
          step_(step) {}
    [[nodiscard]] std::size_t step() const noexcept { return step_; }

  private:
    std::size_t step_;
};

} // namespace qudit
