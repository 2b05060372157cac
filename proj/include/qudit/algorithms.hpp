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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qudit/circuit.hpp"
#include "qudit/measurement.hpp"

namespace qudit::algorithms {

// Deutsch-Jozsa

enum class DjMode { Constant, Balanced };

/// Constant: X on the last wire. Balanced: CNOT from `control` (default the
/// second-to-last wire) into the last wire.
struct DjOracle {
    DjMode mode = DjMode::Constant;
    std::optional<std::size_t> control;
};

/// Label carried by the oracle op so it can be found in the circuit.
inline constexpr std::string_view kOracleLabel = "oracle";

/// Last wire prepared in |d-1>, Fourier on all wires, oracle, Fourier on
/// the first n-1 wires.
[[nodiscard]] Circuit build_deutsch_jozsa(std::size_t d, std::size_t n_wires,
                                          const DjOracle &oracle);

struct DjResult {
    bool constant = false;
    double p_zero = 0.0;
    MeasurementResult measurement;
};

/// Measures the first n-1 wires; constant iff p(all zeros) > 1 - 1e-9.
[[nodiscard]] DjResult run_deutsch_jozsa(std::size_t d, std::size_t n_wires,
                                         const DjOracle &oracle,
                                         std::uint64_t shots,
                                         std::uint64_t seed);

// Grover

/// round(pi / (4 asin(1/sqrt(N))) - 1/2) with N = d^n, at least 1.
[[nodiscard]] std::size_t grover_iterations(std::size_t d, std::size_t n_wires);

/// Fourier on every wire, then `iterations` rounds of the phase oracle
/// I - 2|w><w| followed by the diffusion 2|s><s| - I, both as custom gates.
[[nodiscard]] Circuit build_grover(std::size_t d, std::size_t n_wires,
                                   std::string_view marked,
                                   std::size_t iterations);

struct GroverResult {
    std::size_t iterations = 0;
    double p_marked = 0.0;
    MeasurementResult measurement;
};

/// `iterations` unset means grover_iterations(d, n_wires). Zero is allowed.
[[nodiscard]] GroverResult run_grover(std::size_t d, std::size_t n_wires,
                                      std::string_view marked,
                                      std::optional<std::size_t> iterations,
                                      std::uint64_t shots, std::uint64_t seed);

// Variational circuit

enum class LayerVariant { R1, R2, R3 };

[[nodiscard]] std::string to_string(LayerVariant v);
/// "R1" / "r1" etc. Throws DomainError otherwise.
[[nodiscard]] LayerVariant parse_layer_variant(std::string_view text);

/**
 * @brief Parameterized rotations of one layer, wire by wire.
 *
 * Per wire, X generators come first, then Y, then Z; pairs ascend
 * lexicographically.
 *  - R1: x(0,1), y(0,1), z(1)
 *  - R2: x(0,k), y(0,k) for k = 1..d-1, z(j) for j = 1..d-1
 *  - R3: x(j,k), y(j,k) for all j < k, z(j) for j = 1..d-1
 * Each returned spec has `param` set so Circuit::append gives it a fresh slot.
 */
[[nodiscard]] std::vector<GateSpec> build_vqa_layer(LayerVariant variant,
                                                    std::size_t d,
                                                    std::size_t wires);

/// Fourier on all wires, layer, CNOT(0 -> i) for i >= 1, layer.
[[nodiscard]] Circuit build_vqa_circuit(std::size_t d, std::size_t wires,
                                        LayerVariant variant);

struct VqaResult {
    std::vector<double> trace;
    std::vector<double> params;
    double fidelity = 0.0;
};

/// Adam on the overlap loss against basis state `target`, starting from
/// |0...0> with parameters drawn uniformly on [0, 2pi) from `seed`.
[[nodiscard]] VqaResult run_vqa_demo(std::size_t d, std::size_t wires,
                                     LayerVariant variant, std::size_t steps,
                                     double lr, std::uint64_t seed,
                                     std::string_view target);

} // namespace qudit::algorithms
