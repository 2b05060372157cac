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

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qudit/common.hpp"

namespace qudit {

/**
 * @brief Ordered list of per-wire qudit dimensions.
 *
 * Wire 0 is the most significant digit of the composite index: the place
 * value of wire k is the product of the dimensions of all wires after it.
 * For uniform dimension d this is the usual j = sum_k j_k d^(N-1-k).
 */
class Register {
  public:
    explicit Register(std::vector<std::size_t> dims);

    static Register uniform(std::size_t dim, std::size_t wires);

    [[nodiscard]] std::size_t wires() const noexcept { return dims_.size(); }
    [[nodiscard]] std::size_t dim(std::size_t wire) const;
    [[nodiscard]] const std::vector<std::size_t> &dims() const noexcept {
        return dims_;
    }
    [[nodiscard]] std::size_t total_size() const noexcept { return total_; }

    /// Place value of `wire` in the composite index.
    [[nodiscard]] std::size_t stride(std::size_t wire) const {
        return strides_.at(wire);
    }

    /// Digit of `wire` inside composite index `index` (no range check).
    [[nodiscard]] std::size_t digit(std::size_t index,
                                    std::size_t wire) const noexcept {
        return (index / strides_[wire]) % dims_[wire];
    }

    [[nodiscard]] bool is_uniform() const noexcept;

    bool operator==(const Register &other) const noexcept {
        return dims_ == other.dims_;
    }

  private:
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> strides_;
    std::size_t total_ = 1;
};

[[nodiscard]] std::size_t encode_index(std::span<const std::size_t> digits,
                                       const Register &reg);
[[nodiscard]] std::vector<std::size_t> decode_index(std::size_t index,
                                                    const Register &reg);

/// Dense amplitude vector over a register. Immutable once built.
class StateVector {
  public:
    StateVector(Register reg, std::vector<Complex> amplitudes);

    /// |index> with amplitude exactly 1.
    static StateVector basis(Register reg, std::size_t index);

    [[nodiscard]] const Register &reg() const noexcept { return reg_; }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] Complex operator[](std::size_t i) const { return amps_[i]; }
    [[nodiscard]] double norm() const;

  private:
    Register reg_;
    std::vector<Complex> amps_;
};

/// Splits a "0-1-3" style label into per-wire digits, validating each
/// against the register. Throws ParseError.
[[nodiscard]] std::vector<std::size_t> parse_label(std::string_view label,
                                                   const Register &reg);

[[nodiscard]] StateVector parse_state(std::string_view label,
                                      const Register &reg);

/// Inverse of parse_label: digits joined by '-'.
[[nodiscard]] std::string format_label(std::span<const std::size_t> digits);

} // namespace qudit
