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
#include "qudit/sparsela.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "qudit/simd/kernels.hpp"

namespace qudit {
namespace {

bool coord_less(const Triplet &a, const Triplet &b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
}

} // namespace

SparseOperator::SparseOperator(std::size_t dim, std::vector<Triplet> entries,
                               double prune)
    : dim_(dim) {
    if (dim > kMaxOperatorDim) {
        throw DomainError("operator dimension " + std::to_string(dim) +
                          " exceeds the 32-bit index range");
    }
    for (const Triplet &t : entries) {
        if (t.row >= dim || t.col >= dim) {
            throw DomainError("entry (" + std::to_string(t.row) + ", " +
                              std::to_string(t.col) +
                              ") outside operator of dimension " +
                              std::to_string(dim));
        }
    }
    if (!std::is_sorted(entries.begin(), entries.end(), coord_less)) {
        std::stable_sort(entries.begin(), entries.end(), coord_less);
    }
    entries_.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size();) {
        Triplet merged = entries[i];
        std::size_t j = i + 1;
        for (; j < entries.size() && entries[j].row == merged.row &&
               entries[j].col == merged.col;
             ++j) {
            merged.value += entries[j].value;
        }
        if (std::abs(merged.value) >= prune) {
            entries_.push_back(merged);
        }
        i = j;
    }
}

SparseOperator SparseOperator::identity(std::size_t dim) {
    std::vector<Triplet> entries(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const auto k = static_cast<std::uint32_t>(i);
        entries[i] = {k, k, 1.0};
    }
    return {dim, std::move(entries)};
}

Complex SparseOperator::at(std::size_t row, std::size_t col) const {
    const Triplet key{static_cast<std::uint32_t>(row),
                      static_cast<std::uint32_t>(col), {}};
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                               coord_less);
    if (it != entries_.end() && it->row == row && it->col == col) {
        return it->value;
    }
    return {};
}

SparseOperator SparseOperator::adjoint() const {
    std::vector<Triplet> out;
    out.reserve(entries_.size());
    for (const Triplet &t : entries_) {
        out.push_back({t.col, t.row, std::conj(t.value)});
    }
    return {dim_, std::move(out)};
}

SparseOperator SparseOperator::scaled(Complex factor) const {
    std::vector<Triplet> out(entries_);
    for (Triplet &t : out) {
        t.value *= factor;
    }
    return {dim_, std::move(out)};
}

DenseOperator::DenseOperator(std::size_t dim) : dim_(dim), data_(dim * dim) {}

DenseOperator::DenseOperator(std::size_t dim, std::vector<Complex> data)
    : dim_(dim), data_(std::move(data)) {
    if (data_.size() != dim * dim) {
        throw DomainError("dense operator of dimension " +
                          std::to_string(dim) + " needs " +
                          std::to_string(dim * dim) + " values, got " +
                          std::to_string(data_.size()));
    }
}

DenseOperator DenseOperator::identity(std::size_t dim) {
    DenseOperator m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

std::size_t checked_dim_product(std::size_t a, std::size_t b) {
    if (a != 0 && b > kMaxOperatorDim / a) {
        throw DomainError("operator dimension " + std::to_string(a) + " x " +
                          std::to_string(b) +
                          " exceeds the 32-bit index range");
    }
    return a * b;
}

SparseOperator kron(const SparseOperator &a, const SparseOperator &b) {
    const std::size_t dim = checked_dim_product(a.dim(), b.dim());
    const auto bd = static_cast<std::uint32_t>(b.dim());
    const auto ea = a.entries();
    const auto eb = b.entries();

    // Walking row-runs of a, then row-runs of b, emits row-major order.
    std::vector<Triplet> out;
    out.reserve(ea.size() * eb.size());
    for (std::size_t ia = 0; ia < ea.size();) {
        std::size_t ja = ia;
        while (ja < ea.size() && ea[ja].row == ea[ia].row) {
            ++ja;
        }
        for (std::size_t ib = 0; ib < eb.size();) {
            std::size_t jb = ib;
            while (jb < eb.size() && eb[jb].row == eb[ib].row) {
                ++jb;
            }
            for (std::size_t p = ia; p < ja; ++p) {
                for (std::size_t q = ib; q < jb; ++q) {
                    out.push_back({ea[p].row * bd + eb[q].row,
                                   ea[p].col * bd + eb[q].col,
                                   ea[p].value * eb[q].value});
                }
            }
            ib = jb;
        }
        ia = ja;
    }
    return {dim, std::move(out)};
}

DenseOperator kron(const DenseOperator &a, const DenseOperator &b) {
    const std::size_t dim = checked_dim_product(a.dim(), b.dim());
    DenseOperator out(dim);
    for (std::size_t ra = 0; ra < a.dim(); ++ra) {
        for (std::size_t ca = 0; ca < a.dim(); ++ca) {
            const Complex va = a(ra, ca);
            if (va == Complex{}) {
                continue;
            }
            for (std::size_t rb = 0; rb < b.dim(); ++rb) {
                for (std::size_t cb = 0; cb < b.dim(); ++cb) {
                    out(ra * b.dim() + rb, ca * b.dim() + cb) = va * b(rb, cb);
                }
            }
        }
    }
    return out;
}

std::vector<Complex> matvec(const SparseOperator &op,
                            std::span<const Complex> v) {
    if (op.dim() != v.size()) {
        throw DomainError("matvec: operator dimension " +
                          std::to_string(op.dim()) + " vs vector length " +
                          std::to_string(v.size()));
    }
    std::vector<Complex> out(v.size());
    simd::kernels().coo_matvec(op.entries().data(), op.nnz(), v.data(),
                               out.data(), out.size());
    return out;
}

std::vector<Complex> matvec(const DenseOperator &op,
                            std::span<const Complex> v) {
    if (op.dim() != v.size()) {
        throw DomainError("matvec: operator dimension " +
                          std::to_string(op.dim()) + " vs vector length " +
                          std::to_string(v.size()));
    }
    std::vector<Complex> out(v.size());
    simd::kernels().dense_matvec(op.data().data(), op.dim(), v.data(),
                                 out.data());
    return out;
}

DenseOperator to_dense(const SparseOperator &op) {
    DenseOperator m(op.dim());
    for (const Triplet &t : op.entries()) {
        m(t.row, t.col) = t.value;
    }
    return m;
}

SparseOperator from_dense(const DenseOperator &m, double prune) {
    std::vector<Triplet> entries;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            if (std::abs(m(r, c)) >= prune) {
                entries.push_back({static_cast<std::uint32_t>(r),
                                   static_cast<std::uint32_t>(c), m(r, c)});
            }
        }
    }
    return {m.dim(), std::move(entries), prune};
}

double unitarity_deviation(const SparseOperator &op) {
    // (U^dagger U)_{ij} = sum_r conj(U_ri) U_rj, accumulated row by row.
    std::unordered_map<std::uint64_t, Complex> gram;
    const auto e = op.entries();
    for (std::size_t i = 0; i < e.size();) {
        std::size_t j = i;
        while (j < e.size() && e[j].row == e[i].row) {
            ++j;
        }
        for (std::size_t p = i; p < j; ++p) {
            for (std::size_t q = i; q < j; ++q) {
                const std::uint64_t key =
                    (std::uint64_t{e[p].col} << 32) | e[q].col;
                gram[key] += std::conj(e[p].value) * e[q].value;
            }
        }
        i = j;
    }
    double worst = 0.0;
    for (const auto &[key, value] : gram) {
        const bool diagonal = (key >> 32) == (key & 0xffffffffULL);
        worst = std::max(worst, std::abs(value - (diagonal ? 1.0 : 0.0)));
    }
    for (std::size_t i = 0; i < op.dim(); ++i) {
        const std::uint64_t key = (std::uint64_t{i} << 32) | i;
        if (!gram.contains(key)) {
            worst = std::max(worst, 1.0);
        }
    }
    return worst;
}

bool check_unitary(const SparseOperator &op, double tol) {
    return unitarity_deviation(op) <= tol;
}

DenseOperator matmul(const DenseOperator &a, const DenseOperator &b) {
    if (a.dim() != b.dim()) {
        throw DomainError("matmul: dimension mismatch");
    }
    const std::size_t n = a.dim();
    DenseOperator out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

DenseOperator adjoint(const DenseOperator &a) {
    DenseOperator out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

DenseOperator scaled(const DenseOperator &a, Complex factor) {
    std::vector<Complex> data(a.data().begin(), a.data().end());
    for (Complex &v : data) {
        v *= factor;
    }
    return {a.dim(), std::move(data)};
}

DenseOperator add(const DenseOperator &a, const DenseOperator &b) {
    if (a.dim() != b.dim()) {
        throw DomainError("add: dimension mismatch");
    }
    std::vector<Complex> data(a.data().begin(), a.data().end());
    for (std::size_t i = 0; i < data.size(); ++i) {
        data[i] += b.data()[i];
    }
    return {a.dim(), std::move(data)};
}

DenseOperator power(const DenseOperator &a, unsigned exponent) {
    DenseOperator out = DenseOperator::identity(a.dim());
    for (unsigned i = 0; i < exponent; ++i) {
        out = matmul(out, a);
    }
    return out;
}

DenseOperator expm(const DenseOperator &a) {
    double norm1 = 0.0;
    for (std::size_t c = 0; c < a.dim(); ++c) {
        double col = 0.0;
        for (std::size_t r = 0; r < a.dim(); ++r) {
            col += std::abs(a(r, c));
        }
        norm1 = std::max(norm1, col);
    }
    int squarings = 0;
    if (norm1 > 0.25) {
        squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.25)));
    }
    const DenseOperator x = scaled(a, std::ldexp(1.0, -squarings));

    DenseOperator result = DenseOperator::identity(a.dim());
    DenseOperator term = DenseOperator::identity(a.dim());
    for (int k = 1; k <= 30; ++k) {
        term = scaled(matmul(term, x), 1.0 / k);
        result = add(result, term);
        double largest = 0.0;
        for (const Complex &v : term.data()) {
            largest = std::max(largest, std::abs(v));
        }
        if (largest < 1e-18) {
            break;
        }
    }
    for (int s = 0; s < squarings; ++s) {
        result = matmul(result, result);
    }
    return result;
}

double max_abs_diff(const DenseOperator &a, const DenseOperator &b) {
    if (a.dim() != b.dim()) {
        throw DomainError("max_abs_diff: dimension mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    }
    return worst;
}

} // namespace qudit
