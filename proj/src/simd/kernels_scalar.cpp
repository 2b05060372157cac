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
#include "qudit/simd/kernels.hpp"

namespace qudit::simd {
namespace {

// Complex products are spelled out so the compiler does not route them
// through the NaN-checking __muldc3 path.
inline void cmul_acc(double &re, double &im, Complex a, Complex b) {
    re += a.real() * b.real() - a.imag() * b.imag();
    im += a.real() * b.imag() + a.imag() * b.real();
}

void dense_matvec(const Complex *m, std::size_t n, const Complex *x,
                  Complex *y) {
    for (std::size_t r = 0; r < n; ++r) {
        const Complex *row = m + r * n;
        double re = 0.0;
        double im = 0.0;
        for (std::size_t c = 0; c < n; ++c) {
            cmul_acc(re, im, row[c], x[c]);
        }
        y[r] = {re, im};
    }
}

void coo_matvec(const Triplet *entries, std::size_t nnz, const Complex *x,
                Complex *y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = {};
    }
    std::size_t e = 0;
    while (e < nnz) {
        const std::uint32_t row = entries[e].row;
        double re = 0.0;
        double im = 0.0;
        for (; e < nnz && entries[e].row == row; ++e) {
            cmul_acc(re, im, entries[e].value, x[entries[e].col]);
        }
        y[row] = {re, im};
    }
}

void abs2(const Complex *x, double *out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    }
}

Complex dot(const Complex *a, const Complex *b, std::size_t n) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

} // namespace

namespace detail {
const KernelTable scalar_table{Isa::Scalar, "scalar", &dense_matvec,
                               &coo_matvec,  &abs2,    &dot};
} // namespace detail

} // namespace qudit::simd
