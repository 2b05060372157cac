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
#include "qudit/register.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "qudit/simd/kernels.hpp"

namespace qudit {

Register::Register(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) {
        throw DomainError("register needs at least one wire");
    }
    for (std::size_t w = 0; w < dims_.size(); ++w) {
        if (dims_[w] < 2) {
            throw DomainError("wire " + std::to_string(w) +
                              " has dimension " + std::to_string(dims_[w]) +
                              " (must be >= 2)");
        }
    }
    strides_.assign(dims_.size(), 1);
    std::size_t total = 1;
    for (std::size_t w = dims_.size(); w-- > 0;) {
        strides_[w] = total;
        if (total > std::numeric_limits<std::size_t>::max() / dims_[w]) {
            throw DomainError("register size overflows the index type");
        }
        total *= dims_[w];
    }
    total_ = total;
}

Register Register::uniform(std::size_t dim, std::size_t wires) {
    return Register(std::vector<std::size_t>(wires, dim));
}

std::size_t Register::dim(std::size_t wire) const {
    if (wire >= dims_.size()) {
        throw DomainError("wire " + std::to_string(wire) + " out of range for " +
                          std::to_string(dims_.size()) + "-wire register");
    }
    return dims_[wire];
}

bool Register::is_uniform() const noexcept {
    return std::all_of(dims_.begin(), dims_.end(),
                       [&](std::size_t d) { return d == dims_.front(); });
}

std::size_t encode_index(std::span<const std::size_t> digits,
                         const Register &reg) {
    if (digits.size() != reg.wires()) {
        throw DomainError("expected " + std::to_string(reg.wires()) +
                          " digits, got " + std::to_string(digits.size()));
    }
    std::size_t index = 0;
    for (std::size_t w = 0; w < digits.size(); ++w) {
        if (digits[w] >= reg.dims()[w]) {
            throw DomainError("digit " + std::to_string(digits[w]) +
                              " out of range on wire " + std::to_string(w) +
                              " (dimension " +
                              std::to_string(reg.dims()[w]) + ")");
        }
        index += digits[w] * reg.stride(w);
    }
    return index;
}

std::vector<std::size_t> decode_index(std::size_t index, const Register &reg) {
    if (index >= reg.total_size()) {
        throw DomainError("index " + std::to_string(index) +
                          " out of range for register of size " +
                          std::to_string(reg.total_size()));
    }
    std::vector<std::size_t> digits(reg.wires());
    for (std::size_t w = 0; w < reg.wires(); ++w) {
        digits[w] = reg.digit(index, w);
    }
    return digits;
}

StateVector::StateVector(Register reg, std::vector<Complex> amplitudes)
    : reg_(std::move(reg)), amps_(std::move(amplitudes)) {
    if (amps_.size() != reg_.total_size()) {
        throw DomainError("state has " + std::to_string(amps_.size()) +
                          " amplitudes, register needs " +
                          std::to_string(reg_.total_size()));
    }
}

StateVector StateVector::basis(Register reg, std::size_t index) {
    if (index >= reg.total_size()) {
        throw DomainError("basis index " + std::to_string(index) +
                          " out of range");
    }
    std::vector<Complex> amps(reg.total_size());
    amps[index] = 1.0;
    return {std::move(reg), std::move(amps)};
}

double StateVector::norm() const {
    const Complex s = simd::kernels().dot(amps_.data(), amps_.data(),
                                          amps_.size());
    return std::sqrt(s.real());
}

std::vector<std::size_t> parse_label(std::string_view label,
                                     const Register &reg) {
    std::vector<std::string_view> tokens;
    std::size_t start = 0;
    while (true) {
        const std::size_t dash = label.find('-', start);
        tokens.push_back(label.substr(start, dash - start));
        if (dash == std::string_view::npos) {
            break;
        }
        start = dash + 1;
    }
    if (tokens.size() != reg.wires()) {
        throw ParseError(ParseError::Kind::TokenCount,
                         "label '" + std::string(label) + "' has " +
                             std::to_string(tokens.size()) +
                             " tokens, register has " +
                             std::to_string(reg.wires()) + " wires");
    }
    std::vector<std::size_t> digits(tokens.size());
    for (std::size_t w = 0; w < tokens.size(); ++w) {
        const std::string_view tok = tokens[w];
        const auto *first = tok.data();
        const auto *last = tok.data() + tok.size();
        auto [ptr, ec] = std::from_chars(first, last, digits[w]);
        if (tok.empty() || ec != std::errc{} || ptr != last) {
            throw ParseError(ParseError::Kind::NonNumeric,
                             "token '" + std::string(tok) + "' on wire " +
                                 std::to_string(w) + " is not a number");
        }
        if (digits[w] >= reg.dims()[w]) {
            throw ParseError(ParseError::Kind::OutOfRange,
                             "label " + std::to_string(digits[w]) +
                                 " on wire " + std::to_string(w) +
                                 " exceeds dimension " +
                                 std::to_string(reg.dims()[w]));
        }
    }
    return digits;
}

StateVector parse_state(std::string_view label, const Register &reg) {
    const auto digits = parse_label(label, reg);
    return StateVector::basis(reg, encode_index(digits, reg));
}

std::string format_label(std::span<const std::size_t> digits) {
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i > 0) {
            out += '-';
        }
        out += std::to_string(digits[i]);
    }
    return out;
}

} // namespace qudit
