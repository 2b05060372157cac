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

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include "qudit/circuit.hpp"

namespace qudit {

struct MeasureSpec {
    std::vector<std::size_t> wires;
    std::uint64_t shots = 1000;
    std::uint64_t seed = 0;
};

struct CircuitFile {
    Circuit circuit;
    StateVector initial;
    /// Defaults to every wire when the file has no "measure" block.
    MeasureSpec measure;
};

/**
 * @brief Parses a circuit document.
 *
 *   {"dims": [2,3,4],
 *    "ops": [{"gate": "H", "wires": [0,1,2]},
 *            {"gate": "RX", "wires": [0], "j": 0, "k": 1, "theta": 1.57},
 *            {"gate": "CNOT", "wires": [0,2]}],
 *    "initial_state": "0-1-3",
 *    "measure": {"wires": [0,1], "shots": 1000, "seed": 42}}
 *
 * Gates: H, X (optional "shift"), P, RX/RY ("j", "k", "theta"), RZ ("j",
 * "theta"), CNOT (optional "shift"), SWAP, CRX/CRY/CRZ, MCX (controls then
 * target, optional "shift"), U ("matrix" of [re, im] pairs). Single-wire
 * gates are applied to each listed wire.
 *
 * Throws SchemaError naming the op index for unknown gates, missing or
 * mistyped fields, and wire or dimension errors.
 */
[[nodiscard]] CircuitFile parse_circuit_json(std::string_view text);

/// Throws IoError when the file cannot be read.
[[nodiscard]] CircuitFile load_circuit_file(const std::filesystem::path &path);

} // namespace qudit
