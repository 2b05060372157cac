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

// AVX2 + FMA variants. This translation unit is the only one compiled with
// -mavx2 -mfma; nothing here may run before dispatch has checked the CPU.

#include "qudit/simd/kernels.hpp"

#include <cstddef>

#include <immintrin.h>

namespace qudit::simd {
namespace {

// Two complex doubles per register: (re0, im0, re1, im1).
inline __m256d cmul(__m256d a, __m256d b) {
    const __m256d b_re = _mm256_movedup_pd(b);
    const __m256d b_im = _mm256_permute_pd(b, 0xF);
    const __m256d a_sw = _mm256_permute_pd(a, 0x5);
    return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

inline __m256d load2(const Complex *p) {
    return _mm256_loadu_pd(reinterpret_cast<const double *>(p));
}

inline __m128d load1(const Complex *p) {
    return _mm_loadu_pd(reinterpret_cast<const double *>(p));
}

inline Complex hsum(__m256d acc) {
    const __m128d s =
        _mm_add_pd(_mm256_castpd256_pd128(acc), _mm256_extractf128_pd(acc, 1));
    alignas(16) double out[2];
    _mm_store_pd(out, s);
    return {out[0], out[1]};
}

void dense_matvec(const Complex *m, std::size_t n, const Complex *x,
                  Complex *y) {
    for (std::size_t r = 0; r < n; ++r) {
        const Complex *row = m + r * n;
        __m256d acc0 = _mm256_setzero_pd();
        __m256d acc1 = _mm256_setzero_pd();
        std::size_t c = 0;
        for (; c + 4 <= n; c += 4) {
            acc0 = _mm256_add_pd(acc0, cmul(load2(row + c), load2(x + c)));
            acc1 = _mm256_add_pd(acc1,
                                 cmul(load2(row + c + 2), load2(x + c + 2)));
        }
        for (; c + 2 <= n; c += 2) {
            acc0 = _mm256_add_pd(acc0, cmul(load2(row + c), load2(x + c)));
        }
        Complex sum = hsum(_mm256_add_pd(acc0, acc1));
        if (c < n) {
            const Complex a = row[c];
            const Complex b = x[c];
            sum += Complex{a.real() * b.real() - a.imag() * b.imag(),
                           a.real() * b.imag() + a.imag() * b.real()};
        }
        y[r] = sum;
    }
}

// Triplets are 24 bytes with the value at offset 8, so two values are
// gathered with a pair of 128-bit loads.
inline __m256d values2(const Triplet *e) {
    return _mm256_set_m128d(load1(&e[1].value), load1(&e[0].value));
}

inline __m256d gather2(const Complex *x, const Triplet *e) {
    return _mm256_set_m128d(load1(x + e[1].col), load1(x + e[0].col));
}

void coo_matvec(const Triplet *entries, std::size_t nnz, const Complex *x,
                Complex *y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = {};
    }
    std::size_t e = 0;
    while (e < nnz) {
        const std::uint32_t row = entries[e].row;
        std::size_t end = e;
        while (end < nnz && entries[end].row == row) {
            ++end;
        }
        __m256d acc = _mm256_setzero_pd();
        for (; e + 2 <= end; e += 2) {
            acc = _mm256_add_pd(
                acc, cmul(values2(entries + e), gather2(x, entries + e)));
        }
        Complex sum = hsum(acc);
        if (e < end) {
            const Complex a = entries[e].value;
            const Complex b = x[entries[e].col];
            sum += Complex{a.real() * b.real() - a.imag() * b.imag(),
                           a.real() * b.imag() + a.imag() * b.real()};
            ++e;
        }
        y[row] = sum;
    }
}

void abs2(const Complex *x, double *out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v0 = load2(x + i);
        const __m256d v1 = load2(x + i + 2);
        // hadd yields (p0, p2, p1, p3)
        const __m256d h =
            _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
        _mm256_storeu_pd(out + i,
                         _mm256_permute4x64_pd(h, _MM_SHUFFLE(3, 1, 2, 0)));
    }
    for (; i < n; ++i) {
        out[i] = x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    }
}

Complex dot(const Complex *a, const Complex *b, std::size_t n) {
    const __m256d conj_mask = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_add_pd(
            acc0, cmul(_mm256_xor_pd(load2(a + i), conj_mask), load2(b + i)));
        acc1 = _mm256_add_pd(acc1,
                             cmul(_mm256_xor_pd(load2(a + i + 2), conj_mask),
                                  load2(b + i + 2)));
    }
    for (; i + 2 <= n; i += 2) {
        acc0 = _mm256_add_pd(
            acc0, cmul(_mm256_xor_pd(load2(a + i), conj_mask), load2(b + i)));
    }
    Complex sum = hsum(_mm256_add_pd(acc0, acc1));
    if (i < n) {
        sum += Complex{a[i].real() * b[i].real() + a[i].imag() * b[i].imag(),
                       a[i].real() * b[i].imag() - a[i].imag() * b[i].real()};
    }
    return sum;
}

} // namespace

namespace detail {
const KernelTable avx2_table{Isa::Avx2, "avx2", &dense_matvec,
                             &coo_matvec, &abs2,  &dot};
} // namespace detail

} // namespace qudit::simd
