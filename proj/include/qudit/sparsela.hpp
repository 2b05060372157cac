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
#include <vector>

#include "qudit/common.hpp"

namespace qudit {

/**
 * @brief Square complex operator stored as (row, col, value) triplets.
 *
 * Construction canonicalizes: entries are sorted row-major, duplicate
 * coordinates are summed and magnitudes below the prune threshold dropped.
 */
class SparseOperator {
  public:
    SparseOperator() = default;
    SparseOperator(std::size_t dim, std::vector<Triplet> entries,
                   double prune = kPruneThreshold);

    static SparseOperator identity(std::size_t dim);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t nnz() const noexcept { return entries_.size(); }
    [[nodiscard]] std::span<const Triplet> entries() const noexcept {
        return entries_;
    }
    /// Storage held by the triplets.
    [[nodiscard]] std::size_t bytes() const noexcept {
        return entries_.size() * sizeof(Triplet);
    }

    /// Element lookup (binary search); zero when not stored.
    [[nodiscard]] Complex at(std::size_t row, std::size_t col) const;

    [[nodiscard]] SparseOperator adjoint() const;
    [[nodiscard]] SparseOperator scaled(Complex factor) const;

  private:
    std::size_t dim_ = 0;
    std::vector<Triplet> entries_;
};

/// Row-major dense square operator.
class DenseOperator {
  public:
    DenseOperator() = default;
    explicit DenseOperator(std::size_t dim);
    DenseOperator(std::size_t dim, std::vector<Complex> data);

    static DenseOperator identity(std::size_t dim);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::span<const Complex> data() const noexcept {
        return data_;
    }
    [[nodiscard]] std::size_t bytes() const noexcept {
        return data_.size() * sizeof(Complex);
    }

    Complex &operator()(std::size_t r, std::size_t c) {
        return data_[r * dim_ + c];
    }
    Complex operator()(std::size_t r, std::size_t c) const {
        return data_[r * dim_ + c];
    }

  private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// Checks a*b against kMaxOperatorDim; throws DomainError on overflow.
[[nodiscard]] std::size_t checked_dim_product(std::size_t a, std::size_t b);

[[nodiscard]] SparseOperator kron(const SparseOperator &a,
                                  const SparseOperator &b);
[[nodiscard]] DenseOperator kron(const DenseOperator &a,
                                 const DenseOperator &b);

[[nodiscard]] std::vector<Complex> matvec(const SparseOperator &op,
                                          std::span<const Complex> v);
[[nodiscard]] std::vector<Complex> matvec(const DenseOperator &op,
                                          std::span<const Complex> v);

[[nodiscard]] DenseOperator to_dense(const SparseOperator &op);
[[nodiscard]] SparseOperator from_dense(const DenseOperator &m,
                                        double prune = kPruneThreshold);

/// max_ij |(U^dagger U - I)_ij|, computed without densifying.
[[nodiscard]] double unitarity_deviation(const SparseOperator &op);
[[nodiscard]] bool check_unitary(const SparseOperator &op, double tol);

// Dense helpers used by the reference gate builders and tests.
[[nodiscard]] DenseOperator matmul(const DenseOperator &a,
                                   const DenseOperator &b);
[[nodiscard]] DenseOperator adjoint(const DenseOperator &a);
[[nodiscard]] DenseOperator scaled(const DenseOperator &a, Complex factor);
[[nodiscard]] DenseOperator add(const DenseOperator &a, const DenseOperator &b);
[[nodiscard]] DenseOperator power(const DenseOperator &a, unsigned exponent);
/// Matrix exponential by scaling and squaring of a Taylor series.
[[nodiscard]] DenseOperator expm(const DenseOperator &a);
[[nodiscard]] double max_abs_diff(const DenseOperator &a,
                                  const DenseOperator &b);

} // namespace qudit
