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
#include <string_view>

#include "qudit/common.hpp"

/// Inner loops of the simulator. Every kernel has a portable scalar
/// reference; vectorized variants are picked at runtime from the CPU
/// features and must agree with the reference to rounding.
namespace qudit::simd {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
    Isa isa;
    std::string_view name;

    /// y = M x for a row-major n x n matrix.
    void (*dense_matvec)(const Complex *m, std::size_t n, const Complex *x,
                         Complex *y);

    /// y = A x for triplets sorted by (row, col). y has n entries and is
    /// overwritten. Each row is summed in storage order.
    void (*coo_matvec)(const Triplet *entries, std::size_t nnz,
                       const Complex *x, Complex *y, std::size_t n);

    /// out[i] = |x[i]|^2
    void (*abs2)(const Complex *x, double *out, std::size_t n);

    /// sum_i conj(a[i]) * b[i]
    Complex (*dot)(const Complex *a, const Complex *b, std::size_t n);
};

[[nodiscard]] bool isa_supported(Isa isa) noexcept;

/// Best ISA this CPU can run. QUDIT_ISA=scalar in the environment forces the
/// reference kernels.
[[nodiscard]] Isa detect_isa() noexcept;

/// Table for a specific ISA. Throws DomainError if the CPU lacks it.
[[nodiscard]] const KernelTable &kernels(Isa isa);

/// Currently active table (detect_isa() unless overridden).
[[nodiscard]] const KernelTable &kernels() noexcept;

void set_active_isa(Isa isa);

namespace detail {
extern const KernelTable scalar_table;
#if defined(QUDIT_HAVE_AVX2)
extern const KernelTable avx2_table;
#endif
} // namespace detail

} // namespace qudit::simd
