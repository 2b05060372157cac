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
#include "qudit/algorithms.hpp"

#include <cctype>
#include <cmath>
#include <numeric>

#include "qudit/gradients.hpp"

namespace qudit::algorithms {
namespace {

std::vector<std::size_t> iota(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return v;
}

std::size_t checked_power(std::size_t d, std::size_t n) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total = checked_dim_product(total, d);
    }
    return total;
}

} // namespace

Circuit build_deutsch_jozsa(std::size_t d, std::size_t n_wires,
                            const DjOracle &oracle) {
    if (n_wires < 2) {
        throw DomainError("Deutsch-Jozsa needs at least two wires");
    }
    const std::size_t last = n_wires - 1;
    Circuit c(Register::uniform(d, n_wires));
    c.x(last, d - 1);
    c.h(iota(n_wires));

    GateSpec op{.label = std::string(kOracleLabel)};
    if (oracle.mode == DjMode::Constant) {
        op.kind = GateKind::Not;
        op.wires = {last};
    } else {
        const std::size_t control = oracle.control.value_or(n_wires - 2);
        if (control >= last) {
            throw DomainError("balanced oracle control must be a register wire "
                              "before the last");
        }
        op.kind = GateKind::CNOT;
        op.wires = {control, last};
    }
    c.append(std::move(op));
    c.h(iota(n_wires - 1));
    return c;
}

DjResult run_deutsch_jozsa(std::size_t d, std::size_t n_wires,
                           const DjOracle &oracle, std::uint64_t shots,
                           std::uint64_t seed) {
    const Circuit c = build_deutsch_jozsa(d, n_wires, oracle);
    const StateVector out = apply(c, StateVector::basis(c.reg(), 0));
    const auto wires = iota(n_wires - 1);
    DjResult r;
    r.measurement = measure(out, wires, shots, seed);
    r.p_zero = r.measurement.probabilities.front();
    r.constant = r.p_zero > 1.0 - 1e-9;
    return r;
}

std::size_t grover_iterations(std::size_t d, std::size_t n_wires) {
    const double n = static_cast<double>(checked_power(d, n_wires));
    const double k = std::round(kPi / (4.0 * std::asin(1.0 / std::sqrt(n))) - 0.5);
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::max(k, 0.0)));
}

Circuit build_grover(std::size_t d, std::size_t n_wires,
                     std::string_view marked, std::size_t iterations) {
    const Register reg = Register::uniform(d, n_wires);
    const std::size_t w = encode_index(parse_label(marked, reg), reg);
    const std::size_t n = reg.total_size();

    DenseOperator oracle = DenseOperator::identity(n);
    oracle(w, w) = -1.0;
    DenseOperator diffusion(n);
    const double s2 = 1.0 / static_cast<double>(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            diffusion(r, c) = 2.0 * s2 - (r == c ? 1.0 : 0.0);
        }
    }
    (void)gates::build_custom(oracle);
    (void)gates::build_custom(diffusion);
    const auto oracle_ptr = std::make_shared<const DenseOperator>(std::move(oracle));
    const auto diffusion_ptr =
        std::make_shared<const DenseOperator>(std::move(diffusion));

    const auto all = iota(n_wires);
    Circuit c(reg);
    c.h(all);
    for (std::size_t k = 0; k < iterations; ++k) {
        c.append({.kind = GateKind::Custom,
                  .wires = all,
                  .matrix = oracle_ptr,
                  .label = std::string(kOracleLabel)});
        c.append({.kind = GateKind::Custom,
                  .wires = all,
                  .matrix = diffusion_ptr,
                  .label = "diffusion"});
    }
    return c;
}

GroverResult run_grover(std::size_t d, std::size_t n_wires,
                        std::string_view marked,
                        std::optional<std::size_t> iterations,
                        std::uint64_t shots, std::uint64_t seed) {
    GroverResult r;
    r.iterations = iterations.value_or(grover_iterations(d, n_wires));
    const Circuit c = build_grover(d, n_wires, marked, r.iterations);
    const StateVector out = apply(c, StateVector::basis(c.reg(), 0));
    r.measurement = measure(out, iota(n_wires), shots, seed);
    const std::size_t w = encode_index(parse_label(marked, c.reg()), c.reg());
    r.p_marked = r.measurement.probabilities[w];
    return r;
}

std::string to_string(LayerVariant v) {
    switch (v) {
    case LayerVariant::R1:
        return "R1";
    case LayerVariant::R2:
        return "R2";
    case LayerVariant::R3:
        return "R3";
    }
    return "?";
}

LayerVariant parse_layer_variant(std::string_view text) {
    std::string upper(text);
    for (char &ch : upper) {
        ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    }
    if (upper == "R1") {
        return LayerVariant::R1;
    }
    if (upper == "R2") {
        return LayerVariant::R2;
    }
    if (upper == "R3") {
        return LayerVariant::R3;
    }
    throw DomainError("unknown layer variant '" + std::string(text) + "'");
}

std::vector<GateSpec> build_vqa_layer(LayerVariant variant, std::size_t d,
                                      std::size_t wires) {
    if (d < 2) {
        throw DomainError("layer needs d >= 2");
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> zs;
    switch (variant) {
    case LayerVariant::R1:
        pairs = {{0, 1}};
        zs = {1};
        break;
    case LayerVariant::R2:
        for (std::size_t k = 1; k < d; ++k) {
            pairs.emplace_back(0, k);
        }
        break;
    case LayerVariant::R3:
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = j + 1; k < d; ++k) {
                pairs.emplace_back(j, k);
            }
        }
        break;
    }
    if (variant != LayerVariant::R1) {
        for (std::size_t j = 1; j < d; ++j) {
            zs.push_back(j);
        }
    }

    std::vector<GateSpec> ops;
    for (std::size_t w = 0; w < wires; ++w) {
        auto add = [&](const gates::Generator &gen) {
            ops.push_back({.kind = GateKind::Rotation,
                           .wires = {w},
                           .gen = gen,
                           .param = 0});
        };
        for (const auto &[j, k] : pairs) {
            add(gates::Generator::x(j, k));
        }
        for (const auto &[j, k] : pairs) {
            add(gates::Generator::y(j, k));
        }
        for (std::size_t j : zs) {
            add(gates::Generator::z(j));
        }
    }
    return ops;
}

Circuit build_vqa_circuit(std::size_t d, std::size_t wires,
                          LayerVariant variant) {
    Circuit c(Register::uniform(d, wires));
    c.h(iota(wires));
    for (auto &op : build_vqa_layer(variant, d, wires)) {
        c.append(std::move(op));
    }
    for (std::size_t i = 1; i < wires; ++i) {
        c.cnot(0, i);
    }
    for (auto &op : build_vqa_layer(variant, d, wires)) {
        c.append(std::move(op));
    }
    return c;
}

VqaResult run_vqa_demo(std::size_t d, std::size_t wires, LayerVariant variant,
                       std::size_t steps, double lr, std::uint64_t seed,
                       std::string_view target) {
    const Circuit c = build_vqa_circuit(d, wires, variant);
    const StateVector input = StateVector::basis(c.reg(), 0);
    const LossSpec loss = LossSpec::overlap(parse_state(target, c.reg()));
    TrainResult t = train(c, input, loss, Adam{.lr = lr, .steps = steps},
                          ParamInit{.seed = seed});
    VqaResult r;
    r.fidelity = 1.0 - forward_loss(c, input, t.params, loss);
    r.trace = std::move(t.trace);
    r.params = std::move(t.params);
    return r;
}

} // namespace qudit::algorithms
