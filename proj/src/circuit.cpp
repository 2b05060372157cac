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
#include "qudit/circuit.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <tuple>

namespace qudit {
namespace {

void require_distinct(std::span<const std::size_t> wires, const Register &reg) {
    std::vector<std::size_t> sorted(wires.begin(), wires.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw DomainError("duplicate wire in gate wire list");
    }
    if (!sorted.empty() && sorted.back() >= reg.wires()) {
        throw DomainError("wire " + std::to_string(sorted.back()) +
                          " out of range for " + std::to_string(reg.wires()) +
                          "-wire register");
    }
}

void require_count(const GateSpec &op, std::size_t count) {
    if (op.wires.size() != count) {
        throw DomainError(to_string(op.kind) + " expects " +
                          std::to_string(count) + " wire(s), got " +
                          std::to_string(op.wires.size()));
    }
}

// off[l] = place-value offset in the full register of local index l over
// `wires` (listed order, first wire most significant).
std::vector<std::size_t> local_offsets(std::span<const std::size_t> wires,
                                       const Register &reg) {
    std::size_t local_dim = 1;
    for (std::size_t w : wires) {
        local_dim *= reg.dims()[w];
    }
    std::vector<std::size_t> off(local_dim, 0);
    for (std::size_t l = 0; l < local_dim; ++l) {
        std::size_t rest = l;
        std::size_t total = 0;
        for (std::size_t i = wires.size(); i-- > 0;) {
            const std::size_t d = reg.dims()[wires[i]];
            total += (rest % d) * reg.stride(wires[i]);
            rest /= d;
        }
        off[l] = total;
    }
    return off;
}

std::size_t local_index(std::size_t full, std::span<const std::size_t> wires,
                        const Register &reg) {
    std::size_t l = 0;
    for (std::size_t w : wires) {
        l = l * reg.dims()[w] + reg.digit(full, w);
    }
    return l;
}

std::size_t local_dim(std::span<const std::size_t> wires, const Register &reg) {
    std::size_t d = 1;
    for (std::size_t w : wires) {
        d *= reg.dims()[w];
    }
    return d;
}

DenseOperator embed_dense(const GateSpec &op, double theta,
                          const Register &reg) {
    namespace gd = gates::dense;
    switch (op.kind) {
    case GateKind::Not:
        return embed_single(gd::not_gate(reg.dims()[op.wires[0]], op.shift),
                            op.wires[0], reg);
    case GateKind::Phase:
        return embed_single(gd::phase(reg.dims()[op.wires[0]]), op.wires[0],
                            reg);
    case GateKind::Fourier:
        return embed_single(gd::fourier(reg.dims()[op.wires[0]]), op.wires[0],
                            reg);
    case GateKind::Rotation:
        return embed_single(
            gd::rotation(op.gen, theta, reg.dims()[op.wires[0]]), op.wires[0],
            reg);
    case GateKind::CNOT:
        return gd::cnot(reg, op.wires[0], op.wires[1], op.shift);
    case GateKind::SWAP:
        return gd::swap(reg, op.wires[0], op.wires[1]);
    case GateKind::ControlledRotation:
        return gd::controlled_rotation(reg, op.wires[0], op.wires[1], op.gen,
                                       theta);
    case GateKind::MCX: {
        std::span<const std::size_t> all(op.wires);
        return gd::mcx(reg, all.first(all.size() - 1), all.back(), op.shift);
    }
    case GateKind::Custom:
        return embed_custom(*op.matrix, op.wires, reg);
    }
    throw DomainError("unknown gate kind");
}

using CacheKey = std::tuple<int, std::vector<std::size_t>, gates::Generator,
                            std::size_t, std::uint64_t, const void *>;

CacheKey cache_key(const GateSpec &op, double theta) {
    const bool uses_angle = op.is_parametric();
    return {static_cast<int>(op.kind), op.wires, op.gen, op.shift,
            uses_angle ? std::bit_cast<std::uint64_t>(theta) : 0,
            op.matrix.get()};
}

} // namespace

std::string to_string(GateKind kind) {
    switch (kind) {
    case GateKind::Not:
        return "X";
    case GateKind::Phase:
        return "P";
    case GateKind::Fourier:
        return "H";
    case GateKind::Rotation:
        return "R";
    case GateKind::CNOT:
        return "CNOT";
    case GateKind::SWAP:
        return "SWAP";
    case GateKind::ControlledRotation:
        return "CR";
    case GateKind::MCX:
        return "MCX";
    case GateKind::Custom:
        return "U";
    }
    return "?";
}

std::string to_string(Backend backend) {
    return backend == Backend::Dense ? "dense" : "sparse";
}

Circuit::Circuit(Register reg) : reg_(std::move(reg)) {}

std::size_t Circuit::append(GateSpec op) {
    require_distinct(op.wires, reg_);
    switch (op.kind) {
    case GateKind::Not:
        require_count(op, 1);
        if (op.shift >= reg_.dims()[op.wires[0]]) {
            throw DomainError("X shift out of range for wire dimension");
        }
        break;
    case GateKind::Phase:
    case GateKind::Fourier:
        require_count(op, 1);
        break;
    case GateKind::Rotation:
        require_count(op, 1);
        gates::validate(op.gen, reg_.dims()[op.wires[0]]);
        break;
    case GateKind::CNOT:
        require_count(op, 2);
        if (op.shift >= reg_.dims()[op.wires[1]]) {
            throw DomainError("CNOT shift out of range for target dimension");
        }
        break;
    case GateKind::SWAP:
        require_count(op, 2);
        if (reg_.dims()[op.wires[0]] != reg_.dims()[op.wires[1]]) {
            throw DomainError("SWAP needs equal wire dimensions");
        }
        break;
    case GateKind::ControlledRotation:
        require_count(op, 2);
        gates::validate(op.gen, reg_.dims()[op.wires[1]]);
        break;
    case GateKind::MCX:
        if (op.wires.size() < 2) {
            throw DomainError("MCX needs at least one control and a target");
        }
        if (op.shift >= reg_.dims()[op.wires.back()]) {
            throw DomainError("MCX shift out of range for target dimension");
        }
        break;
    case GateKind::Custom:
        if (op.wires.empty() || !op.matrix) {
            throw DomainError("custom gate needs wires and a matrix");
        }
        if (op.matrix->dim() != local_dim(op.wires, reg_)) {
            throw DomainError("custom matrix dimension " +
                              std::to_string(op.matrix->dim()) +
                              " does not match its wires (" +
                              std::to_string(local_dim(op.wires, reg_)) + ")");
        }
        break;
    }
    if (op.param) {
        if (!op.is_parametric()) {
            throw DomainError(to_string(op.kind) + " takes no angle parameter");
        }
        op.param = param_owner_.size();
        param_owner_.push_back(ops_.size());
    }
    ops_.push_back(std::move(op));
    return ops_.size() - 1;
}

Circuit &Circuit::h(std::initializer_list<std::size_t> wires) {
    return h(std::span<const std::size_t>(wires.begin(), wires.size()));
}

Circuit &Circuit::h(std::span<const std::size_t> wires) {
    for (std::size_t w : wires) {
        append({.kind = GateKind::Fourier, .wires = {w}});
    }
    return *this;
}

Circuit &Circuit::x(std::size_t wire, std::size_t shift) {
    append({.kind = GateKind::Not, .wires = {wire}, .shift = shift});
    return *this;
}

Circuit &Circuit::phase(std::size_t wire) {
    append({.kind = GateKind::Phase, .wires = {wire}});
    return *this;
}

Circuit &Circuit::rotation(const gates::Generator &gen, double theta,
                           std::size_t wire) {
    append({.kind = GateKind::Rotation,
            .wires = {wire},
            .gen = gen,
            .theta = theta});
    return *this;
}

std::size_t Circuit::rotation_param(const gates::Generator &gen,
                                    std::size_t wire) {
    const std::size_t pos = append(
        {.kind = GateKind::Rotation, .wires = {wire}, .gen = gen, .param = 0});
    return *ops_[pos].param;
}

Circuit &Circuit::cnot(std::size_t control, std::size_t target,
                       std::size_t shift) {
    append({.kind = GateKind::CNOT, .wires = {control, target}, .shift = shift});
    return *this;
}

Circuit &Circuit::swap(std::size_t a, std::size_t b) {
    append({.kind = GateKind::SWAP, .wires = {a, b}});
    return *this;
}

Circuit &Circuit::crot(std::size_t control, std::size_t target,
                       const gates::Generator &gen, double theta) {
    append({.kind = GateKind::ControlledRotation,
            .wires = {control, target},
            .gen = gen,
            .theta = theta});
    return *this;
}

std::size_t Circuit::crot_param(std::size_t control, std::size_t target,
                                const gates::Generator &gen) {
    const std::size_t pos = append({.kind = GateKind::ControlledRotation,
                                    .wires = {control, target},
                                    .gen = gen,
                                    .param = 0});
    return *ops_[pos].param;
}

Circuit &Circuit::mcx(std::span<const std::size_t> controls,
                      std::size_t target, std::size_t shift) {
    std::vector<std::size_t> wires(controls.begin(), controls.end());
    wires.push_back(target);
    append({.kind = GateKind::MCX, .wires = std::move(wires), .shift = shift});
    return *this;
}

Circuit &Circuit::unitary(DenseOperator matrix, std::vector<std::size_t> wires,
                          double tol, std::string label) {
    (void)gates::build_custom(matrix, tol);
    append({.kind = GateKind::Custom,
            .wires = std::move(wires),
            .matrix = std::make_shared<const DenseOperator>(std::move(matrix)),
            .label = std::move(label)});
    return *this;
}

std::vector<Complex> EmbeddedOp::apply(std::span<const Complex> v) const {
    return std::visit([&](const auto &m) { return matvec(m, v); }, *op);
}

std::size_t EmbeddedOp::stored_elements() const {
    return std::visit(
        [](const auto &m) -> std::size_t {
            if constexpr (std::is_same_v<std::decay_t<decltype(m)>,
                                         SparseOperator>) {
                return m.nnz();
            } else {
                return m.data().size();
            }
        },
        *op);
}

std::size_t EmbeddedOp::bytes() const {
    return std::visit([](const auto &m) { return m.bytes(); }, *op);
}

SparseOperator embed_single(const SparseOperator &gate, std::size_t wire,
                            const Register &reg) {
    if (gate.dim() != reg.dim(wire)) {
        throw DomainError("gate dimension " + std::to_string(gate.dim()) +
                          " does not match wire " + std::to_string(wire) +
                          " dimension " + std::to_string(reg.dim(wire)));
    }
    const std::size_t right = reg.stride(wire);
    const std::size_t left = reg.total_size() / (right * gate.dim());
    SparseOperator out = gate;
    if (right > 1) {
        out = kron(out, SparseOperator::identity(right));
    }
    if (left > 1) {
        out = kron(SparseOperator::identity(left), out);
    }
    return out;
}

DenseOperator embed_single(const DenseOperator &gate, std::size_t wire,
                           const Register &reg) {
    if (gate.dim() != reg.dim(wire)) {
        throw DomainError("gate dimension does not match wire dimension");
    }
    const std::size_t right = reg.stride(wire);
    const std::size_t left = reg.total_size() / (right * gate.dim());
    return kron(DenseOperator::identity(left),
                kron(gate, DenseOperator::identity(right)));
}

SparseOperator embed_custom(const SparseOperator &gate,
                            std::span<const std::size_t> wires,
                            const Register &reg) {
    require_distinct(wires, reg);
    if (wires.empty() || gate.dim() != local_dim(wires, reg)) {
        throw DomainError("custom gate dimension does not match its wires");
    }
    const auto off = local_offsets(wires, reg);
    std::vector<std::vector<std::pair<std::size_t, Complex>>> cols(gate.dim());
    for (const Triplet &t : gate.entries()) {
        cols[t.col].emplace_back(t.row, t.value);
    }
    const std::size_t n = checked_dim_product(reg.total_size(), 1);
    std::vector<Triplet> entries;
    entries.reserve(gate.nnz() * (n / gate.dim()));
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t lc = local_index(col, wires, reg);
        const std::size_t base = col - off[lc];
        for (const auto &[lr, v] : cols[lc]) {
            entries.push_back({static_cast<std::uint32_t>(base + off[lr]),
                               static_cast<std::uint32_t>(col), v});
        }
    }
    return {n, std::move(entries)};
}

DenseOperator embed_custom(const DenseOperator &gate,
                           std::span<const std::size_t> wires,
                           const Register &reg) {
    require_distinct(wires, reg);
    if (wires.empty() || gate.dim() != local_dim(wires, reg)) {
        throw DomainError("custom gate dimension does not match its wires");
    }
    const auto off = local_offsets(wires, reg);
    const std::size_t n = reg.total_size();
    DenseOperator out(n);
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t lr = local_index(r, wires, reg);
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t lc = local_index(c, wires, reg);
            if (r - off[lr] == c - off[lc]) {
                out(r, c) = gate(lr, lc);
            }
        }
    }
    return out;
}

SparseOperator embed_multi(const GateSpec &op, double theta,
                           const Register &reg) {
    switch (op.kind) {
    case GateKind::Not:
        return embed_single(gates::build_not(reg.dim(op.wires[0]), op.shift),
                            op.wires[0], reg);
    case GateKind::Phase:
        return embed_single(gates::build_phase(reg.dim(op.wires[0])),
                            op.wires[0], reg);
    case GateKind::Fourier:
        return embed_single(gates::build_fourier_sparse(reg.dim(op.wires[0])),
                            op.wires[0], reg);
    case GateKind::Rotation:
        return embed_single(
            gates::build_rotation(op.gen, theta, reg.dim(op.wires[0])),
            op.wires[0], reg);
    case GateKind::CNOT:
        return gates::build_cnot(reg, op.wires[0], op.wires[1], op.shift);
    case GateKind::SWAP:
        return gates::build_swap(reg, op.wires[0], op.wires[1]);
    case GateKind::ControlledRotation:
        return gates::build_controlled_rotation(reg, op.wires[0], op.wires[1],
                                                op.gen, theta);
    case GateKind::MCX: {
        std::span<const std::size_t> all(op.wires);
        return gates::build_mcx(reg, all.first(all.size() - 1), all.back(),
                                op.shift);
    }
    case GateKind::Custom:
        if (!op.matrix) {
            throw DomainError("custom gate without a matrix");
        }
        return embed_custom(from_dense(*op.matrix), op.wires, reg);
    }
    throw DomainError("unknown gate kind");
}

double resolve_angle(const GateSpec &op, std::span<const double> params) {
    if (!op.param) {
        return op.theta;
    }
    if (*op.param >= params.size()) {
        throw DomainError("parameter slot " + std::to_string(*op.param) +
                          " missing from parameter vector of length " +
                          std::to_string(params.size()));
    }
    return params[*op.param];
}

std::vector<EmbeddedOp> compile(const Circuit &circuit,
                                std::span<const double> params,
                                Backend backend) {
    if (params.size() != circuit.num_params()) {
        throw DomainError("circuit has " +
                          std::to_string(circuit.num_params()) +
                          " parameters, got " + std::to_string(params.size()));
    }
    using Payload = std::variant<SparseOperator, DenseOperator>;
    std::map<CacheKey, std::shared_ptr<const Payload>> cache;
    std::vector<EmbeddedOp> out;
    out.reserve(circuit.ops().size());
    for (std::size_t i = 0; i < circuit.ops().size(); ++i) {
        const GateSpec &op = circuit.ops()[i];
        const double theta = resolve_angle(op, params);
        auto key = cache_key(op, theta);
        auto it = cache.find(key);
        if (it == cache.end()) {
            auto payload =
                backend == Backend::Sparse
                    ? std::make_shared<const Payload>(
                          embed_multi(op, theta, circuit.reg()))
                    : std::make_shared<const Payload>(
                          embed_dense(op, theta, circuit.reg()));
            it = cache.emplace(std::move(key), std::move(payload)).first;
        }
        out.push_back({it->second, i});
    }
    return out;
}

StateVector apply(std::span<const EmbeddedOp> ops, const StateVector &input) {
    std::vector<Complex> v(input.amplitudes().begin(),
                           input.amplitudes().end());
    for (const EmbeddedOp &op : ops) {
        v = op.apply(v);
    }
    return {input.reg(), std::move(v)};
}

StateVector apply(const Circuit &circuit, const StateVector &input,
                  std::span<const double> params, Backend backend) {
    if (!(input.reg() == circuit.reg())) {
        throw DomainError("input state register does not match the circuit");
    }
    const auto ops = compile(circuit, params, backend);
    return qudit::apply(std::span<const EmbeddedOp>(ops), input);
}

} // namespace qudit
