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

#include "qudit/register.hpp"
#include "qudit/sparsela.hpp"

/**
 * Gate builders. The functions in `qudit::gates` enumerate non-zeros
 * directly and never allocate a dense matrix. `qudit::gates::dense` holds
 * independent reference constructions (matrix exponentials, projector sums
 * of Kronecker products) used as oracles and by the dense backend.
 *
 * All level indices are 0-based.
 */
namespace qudit::gates {

enum class Axis { X, Y, Z };

/**
 * @brief Selects one generalized Gell-Mann generator.
 *
 * X and Y act on the level pair j < k. Z is the diagonal generator with
 * parameter j in [1, d-1]:
 *   sqrt(2 / (j (j+1))) * (sum_{l<j} |l><l| - j |j><j|)
 * and k is ignored.
 */
struct Generator {
    Axis axis = Axis::X;
    std::size_t j = 0;
    std::size_t k = 1;

    static constexpr Generator x(std::size_t j, std::size_t k) {
        return {Axis::X, j, k};
    }
    static constexpr Generator y(std::size_t j, std::size_t k) {
        return {Axis::Y, j, k};
    }
    static constexpr Generator z(std::size_t j) { return {Axis::Z, j, 0}; }

    bool operator==(const Generator &) const = default;
    auto operator<=>(const Generator &) const = default;
};

/// Throws DomainError unless `gen` is valid for dimension d.
void validate(const Generator &gen, std::size_t d);

[[nodiscard]] std::string to_string(Axis axis);
[[nodiscard]] std::string to_string(const Generator &gen);

/// Diagonal entries of the Z generator for dimension d.
[[nodiscard]] std::vector<double> z_diagonal(std::size_t j, std::size_t d);

[[nodiscard]] SparseOperator build_not(std::size_t d, std::size_t shift = 1);
[[nodiscard]] SparseOperator build_phase(std::size_t d);
[[nodiscard]] DenseOperator build_fourier(std::size_t d);
[[nodiscard]] SparseOperator build_fourier_sparse(std::size_t d);
[[nodiscard]] SparseOperator build_gellmann(const Generator &gen,
                                            std::size_t d);
/// exp(-i theta S / 2) in closed form.
[[nodiscard]] SparseOperator build_rotation(const Generator &gen, double theta,
                                            std::size_t d);

/// k_t -> (k_t + shift * k_c) mod dims[t] on every basis state.
[[nodiscard]] SparseOperator build_cnot(const Register &reg,
                                        std::size_t control,
                                        std::size_t target,
                                        std::size_t shift = 1);
[[nodiscard]] SparseOperator build_swap(const Register &reg, std::size_t a,
                                        std::size_t b);
/// sum_m |m><m|_c (x) R(m theta)_t
[[nodiscard]] SparseOperator
build_controlled_rotation(const Register &reg, std::size_t control,
                          std::size_t target, const Generator &gen,
                          double theta);
/// Shift-by-`shift` on the target iff every control sits at its top level.
[[nodiscard]] SparseOperator build_mcx(const Register &reg,
                                       std::span<const std::size_t> controls,
                                       std::size_t target,
                                       std::size_t shift = 1);
/// Validates unitarity at `tol`; throws ValidationError with the deviation.
[[nodiscard]] SparseOperator build_custom(const DenseOperator &matrix,
                                          double tol = 1e-8);

/// Derivative generators G with dU/dtheta = G U = U G.
[[nodiscard]] SparseOperator rotation_generator(const Generator &gen,
                                                std::size_t d);
[[nodiscard]] SparseOperator
controlled_rotation_generator(const Register &reg, std::size_t control,
                              std::size_t target, const Generator &gen);

namespace dense {

[[nodiscard]] DenseOperator not_gate(std::size_t d, std::size_t shift = 1);
[[nodiscard]] DenseOperator phase(std::size_t d);
[[nodiscard]] DenseOperator fourier(std::size_t d);
[[nodiscard]] DenseOperator gellmann(const Generator &gen, std::size_t d);
/// expm(-i theta S / 2) by series.
[[nodiscard]] DenseOperator rotation(const Generator &gen, double theta,
                                     std::size_t d);
[[nodiscard]] DenseOperator cnot(const Register &reg, std::size_t control,
                                 std::size_t target, std::size_t shift = 1);
[[nodiscard]] DenseOperator swap(const Register &reg, std::size_t a,
                                 std::size_t b);
[[nodiscard]] DenseOperator controlled_rotation(const Register &reg,
                                                std::size_t control,
                                                std::size_t target,
                                                const Generator &gen,
                                                double theta);
[[nodiscard]] DenseOperator mcx(const Register &reg,
                                std::span<const std::size_t> controls,
                                std::size_t target, std::size_t shift = 1);

} // namespace dense

} // namespace qudit::gates
