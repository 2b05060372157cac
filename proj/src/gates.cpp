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
#include "qudit/gates.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qudit::gates {
namespace {

constexpr Complex kI{0.0, 1.0};

std::uint32_t u32(std::size_t v) { return static_cast<std::uint32_t>(v); }

void require_dim(std::size_t d) {
    if (d < 2) {
        throw DomainError("gate dimension must be >= 2, got " +
                          std::to_string(d));
    }
    if (d > kMaxOperatorDim) {
        throw DomainError("gate dimension exceeds the 32-bit index range");
    }
}

Complex root_of_unity(std::size_t power, std::size_t d) {
    return std::polar(1.0, 2.0 * kPi * static_cast<double>(power % d) /
                               static_cast<double>(d));
}

void require_wire_pair(const Register &reg, std::size_t a, std::size_t b) {
    if (a >= reg.wires() || b >= reg.wires()) {
        throw DomainError("wire pair (" + std::to_string(a) + ", " +
                          std::to_string(b) + ") out of range for " +
                          std::to_string(reg.wires()) + "-wire register");
    }
    if (a == b) {
        throw DomainError("control and target must differ (both " +
                          std::to_string(a) + ")");
    }
}

// Column-wise view of a local operator: cols[c] lists (row, value).
using ColumnList = std::vector<std::vector<std::pair<std::size_t, Complex>>>;

ColumnList by_column(const SparseOperator &local) {
    ColumnList cols(local.dim());
    for (const Triplet &t : local.entries()) {
        cols[t.col].emplace_back(t.row, t.value);
    }
    return cols;
}

// Embeds a family of target-wire operators selected by the control digit:
// column |.., m_c, .., l_t, ..> maps through locals[m] column l.
SparseOperator controlled_family(const Register &reg, std::size_t control,
                                 std::size_t target,
                                 const std::vector<SparseOperator> &locals) {
    std::vector<ColumnList> cols;
    cols.reserve(locals.size());
    for (const auto &op : locals) {
        cols.push_back(by_column(op));
    }
    const std::size_t n = reg.total_size();
    (void)checked_dim_product(n, 1);
    const std::size_t stride_t = reg.stride(target);
    std::vector<Triplet> entries;
    entries.reserve(n * 2);
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t m = reg.digit(col, control);
        const std::size_t l = reg.digit(col, target);
        const std::size_t base = col - l * stride_t;
        for (const auto &[r, v] : cols[m][l]) {
            entries.push_back({u32(base + r * stride_t), u32(col), v});
        }
    }
    return {n, std::move(entries)};
}

} // namespace

void validate(const Generator &gen, std::size_t d) {
    require_dim(d);
    if (gen.axis == Axis::Z) {
        if (gen.j < 1 || gen.j > d - 1) {
            throw DomainError("z generator index j=" + std::to_string(gen.j) +
                              " must lie in [1, " + std::to_string(d - 1) +
                              "]");
        }
        return;
    }
    if (!(gen.j < gen.k && gen.k < d)) {
        throw DomainError("generator levels (j=" + std::to_string(gen.j) +
                          ", k=" + std::to_string(gen.k) +
                          ") must satisfy 0 <= j < k < " + std::to_string(d));
    }
}

std::string to_string(Axis axis) {
    switch (axis) {
    case Axis::X:
        return "x";
    case Axis::Y:
        return "y";
    case Axis::Z:
        return "z";
    }
    return "?";
}

std::string to_string(const Generator &gen) {
    std::ostringstream os;
    os << to_string(gen.axis) << '^' << gen.j;
    if (gen.axis != Axis::Z) {
        os << ',' << gen.k;
    }
    return os.str();
}

std::vector<double> z_diagonal(std::size_t j, std::size_t d) {
    validate(Generator::z(j), d);
    const double scale =
        std::sqrt(2.0 / (static_cast<double>(j) * static_cast<double>(j + 1)));
    std::vector<double> diag(d, 0.0);
    for (std::size_t l = 0; l < j; ++l) {
        diag[l] = scale;
    }
    diag[j] = -static_cast<double>(j) * scale;
    return diag;
}

SparseOperator build_not(std::size_t d, std::size_t shift) {
    require_dim(d);
    if (shift >= d) {
        throw DomainError("shift " + std::to_string(shift) +
                          " out of range for dimension " + std::to_string(d));
    }
    std::vector<Triplet> entries;
    entries.reserve(d);
    for (std::size_t x = 0; x < d; ++x) {
        entries.push_back({u32((x + shift) % d), u32(x), 1.0});
    }
    return {d, std::move(entries)};
}

SparseOperator build_phase(std::size_t d) {
    require_dim(d);
    std::vector<Triplet> entries;
    entries.reserve(d);
    for (std::size_t k = 0; k < d; ++k) {
        entries.push_back({u32(k), u32(k), root_of_unity(k, d)});
    }
    return {d, std::move(entries)};
}

DenseOperator build_fourier(std::size_t d) {
    require_dim(d);
    DenseOperator h(d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            h(r, c) = root_of_unity(r * c, d) * norm;
        }
    }
    return h;
}

SparseOperator build_fourier_sparse(std::size_t d) {
    return from_dense(build_fourier(d));
}

SparseOperator build_gellmann(const Generator &gen, std::size_t d) {
    validate(gen, d);
    std::vector<Triplet> entries;
    switch (gen.axis) {
    case Axis::X:
        entries = {{u32(gen.j), u32(gen.k), 1.0}, {u32(gen.k), u32(gen.j), 1.0}};
        break;
    case Axis::Y:
        entries = {{u32(gen.j), u32(gen.k), -kI}, {u32(gen.k), u32(gen.j), kI}};
        break;
    case Axis::Z: {
        const auto diag = z_diagonal(gen.j, d);
        for (std::size_t l = 0; l <= gen.j; ++l) {
            entries.push_back({u32(l), u32(l), diag[l]});
        }
        break;
    }
    }
    return {d, std::move(entries)};
}

SparseOperator build_rotation(const Generator &gen, double theta,
                              std::size_t d) {
    validate(gen, d);
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    std::vector<Triplet> entries;
    entries.reserve(d + 2);
    if (gen.axis == Axis::Z) {
        const auto diag = z_diagonal(gen.j, d);
        for (std::size_t l = 0; l < d; ++l) {
            entries.push_back(
                {u32(l), u32(l), std::polar(1.0, -0.5 * theta * diag[l])});
        }
        return {d, std::move(entries)};
    }
    for (std::size_t l = 0; l < d; ++l) {
        const bool active = l == gen.j || l == gen.k;
        entries.push_back({u32(l), u32(l), active ? Complex{c} : Complex{1.0}});
    }
    if (gen.axis == Axis::X) {
        entries.push_back({u32(gen.j), u32(gen.k), Complex{0.0, -s}});
        entries.push_back({u32(gen.k), u32(gen.j), Complex{0.0, -s}});
    } else {
        entries.push_back({u32(gen.j), u32(gen.k), Complex{-s}});
        entries.push_back({u32(gen.k), u32(gen.j), Complex{s}});
    }
    return {d, std::move(entries)};
}

SparseOperator build_cnot(const Register &reg, std::size_t control,
                          std::size_t target, std::size_t shift) {
    require_wire_pair(reg, control, target);
    const std::size_t dt = reg.dims()[target];
    if (shift >= dt) {
        throw DomainError("shift " + std::to_string(shift) +
                          " out of range for target dimension " +
                          std::to_string(dt));
    }
    const std::size_t n = checked_dim_product(reg.total_size(), 1);
    const std::size_t stride_t = reg.stride(target);
    std::vector<Triplet> entries;
    entries.reserve(n);
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t kc = reg.digit(col, control);
        const std::size_t kt = reg.digit(col, target);
        const std::size_t moved = (kt + (shift * kc) % dt) % dt;
        entries.push_back({u32(col - kt * stride_t + moved * stride_t),
                           u32(col), 1.0});
    }
    return {n, std::move(entries)};
}

SparseOperator build_swap(const Register &reg, std::size_t a, std::size_t b) {
    require_wire_pair(reg, a, b);
    if (reg.dims()[a] != reg.dims()[b]) {
        throw DomainError("SWAP needs equal wire dimensions, got " +
                          std::to_string(reg.dims()[a]) + " and " +
                          std::to_string(reg.dims()[b]));
    }
    const std::size_t n = checked_dim_product(reg.total_size(), 1);
    const std::size_t sa = reg.stride(a);
    const std::size_t sb = reg.stride(b);
    std::vector<Triplet> entries;
    entries.reserve(n);
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t ka = reg.digit(col, a);
        const std::size_t kb = reg.digit(col, b);
        const std::size_t row = col - ka * sa - kb * sb + kb * sa + ka * sb;
        entries.push_back({u32(row), u32(col), 1.0});
    }
    return {n, std::move(entries)};
}

SparseOperator build_controlled_rotation(const Register &reg,
                                         std::size_t control,
                                         std::size_t target,
                                         const Generator &gen, double theta) {
    require_wire_pair(reg, control, target);
    const std::size_t dt = reg.dims()[target];
    validate(gen, dt);
    std::vector<SparseOperator> locals;
    for (std::size_t m = 0; m < reg.dims()[control]; ++m) {
        locals.push_back(
            build_rotation(gen, static_cast<double>(m) * theta, dt));
    }
    return controlled_family(reg, control, target, locals);
}

SparseOperator build_mcx(const Register &reg,
                         std::span<const std::size_t> controls,
                         std::size_t target, std::size_t shift) {
    if (controls.empty()) {
        throw DomainError("MCX needs at least one control");
    }
    if (target >= reg.wires()) {
        throw DomainError("target wire " + std::to_string(target) +
                          " out of range");
    }
    std::vector<std::size_t> seen(controls.begin(), controls.end());
    seen.push_back(target);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        throw DomainError("MCX wires must be distinct");
    }
    if (seen.back() >= reg.wires()) {
        throw DomainError("MCX control wire out of range");
    }
    const std::size_t dt = reg.dims()[target];
    if (shift >= dt) {
        throw DomainError("shift " + std::to_string(shift) +
                          " out of range for target dimension " +
                          std::to_string(dt));
    }
    const std::size_t n = checked_dim_product(reg.total_size(), 1);
    const std::size_t stride_t = reg.stride(target);
    std::vector<Triplet> entries;
    entries.reserve(n);
    for (std::size_t col = 0; col < n; ++col) {
        const bool fire =
            std::all_of(controls.begin(), controls.end(), [&](std::size_t c) {
                return reg.digit(col, c) == reg.dims()[c] - 1;
            });
        std::size_t row = col;
        if (fire) {
            const std::size_t kt = reg.digit(col, target);
            row = col - kt * stride_t + ((kt + shift) % dt) * stride_t;
        }
        entries.push_back({u32(row), u32(col), 1.0});
    }
    return {n, std::move(entries)};
}

SparseOperator build_custom(const DenseOperator &matrix, double tol) {
    if (matrix.dim() == 0) {
        throw DomainError("custom gate matrix is empty");
    }
    SparseOperator op = from_dense(matrix);
    const double deviation = unitarity_deviation(op);
    if (!(deviation <= tol)) {
        std::ostringstream os;
        os << "custom gate is not unitary: max |U^dagger U - I| = "
           << deviation << " exceeds tolerance " << tol;
        throw ValidationError(os.str(), deviation);
    }
    return op;
}

SparseOperator rotation_generator(const Generator &gen, std::size_t d) {
    return build_gellmann(gen, d).scaled(Complex{0.0, -0.5});
}

SparseOperator controlled_rotation_generator(const Register &reg,
                                             std::size_t control,
                                             std::size_t target,
                                             const Generator &gen) {
    require_wire_pair(reg, control, target);
    const std::size_t dt = reg.dims()[target];
    const SparseOperator s = build_gellmann(gen, dt);
    std::vector<SparseOperator> locals;
    for (std::size_t m = 0; m < reg.dims()[control]; ++m) {
        locals.push_back(s.scaled(Complex{0.0, -0.5 * static_cast<double>(m)}));
    }
    return controlled_family(reg, control, target, locals);
}

} // namespace qudit::gates
