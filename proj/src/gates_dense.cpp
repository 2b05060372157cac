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

// Reference constructions. These deliberately take a different route from
// the sparse builders: cyclic-shift powers, matrix exponentials, and sums of
// per-wire Kronecker products over control projectors.

#include <cmath>

#include "qudit/gates.hpp"

namespace qudit::gates::dense {
namespace {

constexpr Complex kI{0.0, 1.0};

DenseOperator projector(std::size_t d, std::size_t row, std::size_t col) {
    DenseOperator p(d);
    p(row, col) = 1.0;
    return p;
}

// factors[w] for every wire, combined left to right.
DenseOperator kron_chain(const std::vector<DenseOperator> &factors) {
    DenseOperator out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) {
        out = kron(out, factors[i]);
    }
    return out;
}

std::vector<DenseOperator> identities(const Register &reg) {
    std::vector<DenseOperator> f;
    for (std::size_t d : reg.dims()) {
        f.push_back(DenseOperator::identity(d));
    }
    return f;
}

void require_pair(const Register &reg, std::size_t a, std::size_t b) {
    if (a >= reg.wires() || b >= reg.wires() || a == b) {
        throw DomainError("invalid wire pair (" + std::to_string(a) + ", " +
                          std::to_string(b) + ")");
    }
}

} // namespace

DenseOperator not_gate(std::size_t d, std::size_t shift) {
    if (d < 2 || shift >= d) {
        throw DomainError("invalid NOT gate parameters");
    }
    DenseOperator step(d);
    for (std::size_t c = 0; c < d; ++c) {
        step((c + 1) % d, c) = 1.0;
    }
    return power(step, static_cast<unsigned>(shift));
}

DenseOperator phase(std::size_t d) {
    if (d < 2) {
        throw DomainError("invalid phase gate dimension");
    }
    const Complex omega = std::exp(2.0 * kPi * kI / static_cast<double>(d));
    DenseOperator p(d);
    Complex w = 1.0;
    for (std::size_t k = 0; k < d; ++k) {
        p(k, k) = w;
        w *= omega;
    }
    return p;
}

DenseOperator fourier(std::size_t d) {
    if (d < 2) {
        throw DomainError("invalid Fourier gate dimension");
    }
    DenseOperator h(d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            h(r, c) = std::exp(2.0 * kPi * kI * static_cast<double>(r * c) /
                               static_cast<double>(d)) /
                      std::sqrt(static_cast<double>(d));
        }
    }
    return h;
}

DenseOperator gellmann(const Generator &gen, std::size_t d) {
    validate(gen, d);
    DenseOperator s(d);
    switch (gen.axis) {
    case Axis::X:
        s(gen.j, gen.k) = 1.0;
        s(gen.k, gen.j) = 1.0;
        break;
    case Axis::Y:
        s(gen.j, gen.k) = -kI;
        s(gen.k, gen.j) = kI;
        break;
    case Axis::Z: {
        const double j = static_cast<double>(gen.j);
        const double scale = std::sqrt(2.0 / (j * (j + 1.0)));
        for (std::size_t l = 0; l < gen.j; ++l) {
            s(l, l) = scale;
        }
        s(gen.j, gen.j) = -j * scale;
        break;
    }
    }
    return s;
}

DenseOperator rotation(const Generator &gen, double theta, std::size_t d) {
    return expm(scaled(gellmann(gen, d), -0.5 * kI * theta));
}

DenseOperator cnot(const Register &reg, std::size_t control,
                   std::size_t target, std::size_t shift) {
    require_pair(reg, control, target);
    const std::size_t dc = reg.dims()[control];
    const std::size_t dt = reg.dims()[target];
    DenseOperator total(reg.total_size());
    for (std::size_t m = 0; m < dc; ++m) {
        auto factors = identities(reg);
        factors[control] = projector(dc, m, m);
        factors[target] = not_gate(dt, (shift * m) % dt);
        total = add(total, kron_chain(factors));
    }
    return total;
}

DenseOperator swap(const Register &reg, std::size_t a, std::size_t b) {
    require_pair(reg, a, b);
    const std::size_t d = reg.dims()[a];
    if (reg.dims()[b] != d) {
        throw DomainError("SWAP needs equal wire dimensions");
    }
    DenseOperator total(reg.total_size());
    for (std::size_t p = 0; p < d; ++p) {
        for (std::size_t q = 0; q < d; ++q) {
            auto factors = identities(reg);
            factors[a] = projector(d, p, q);
            factors[b] = projector(d, q, p);
            total = add(total, kron_chain(factors));
        }
    }
    return total;
}

DenseOperator controlled_rotation(const Register &reg, std::size_t control,
                                  std::size_t target, const Generator &gen,
                                  double theta) {
    require_pair(reg, control, target);
    const std::size_t dc = reg.dims()[control];
    DenseOperator total(reg.total_size());
    for (std::size_t m = 0; m < dc; ++m) {
        auto factors = identities(reg);
        factors[control] = projector(dc, m, m);
        factors[target] = rotation(gen, static_cast<double>(m) * theta,
                                   reg.dims()[target]);
        total = add(total, kron_chain(factors));
    }
    return total;
}

DenseOperator mcx(const Register &reg, std::span<const std::size_t> controls,
                  std::size_t target, std::size_t shift) {
    if (controls.empty() || target >= reg.wires()) {
        throw DomainError("invalid MCX wiring");
    }
    auto factors = identities(reg);
    for (std::size_t c : controls) {
        if (c >= reg.wires() || c == target) {
            throw DomainError("invalid MCX control wire");
        }
        const std::size_t top = reg.dims()[c] - 1;
        factors[c] = projector(reg.dims()[c], top, top);
    }
    const std::size_t dt = reg.dims()[target];
    factors[target] = add(not_gate(dt, shift),
                          scaled(DenseOperator::identity(dt), -1.0));
    return add(DenseOperator::identity(reg.total_size()), kron_chain(factors));
}

} // namespace qudit::gates::dense
