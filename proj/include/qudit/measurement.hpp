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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qudit/register.hpp"

namespace qudit {

/**
 * @brief Exact outcome distribution over a subset of wires.
 *
 * Outcomes are ordered lexicographically over the listed wires (first listed
 * wire most significant). Labels use the basis-label grammar, e.g. "2-0".
 */
struct ProbabilityTable {
    std::vector<std::size_t> wires;
    std::vector<std::size_t> dims;
    std::vector<std::string> labels;
    std::vector<double> probs;

    /// Probability of the outcome with this label.
    [[nodiscard]] double at(std::string_view label) const;
};

[[nodiscard]] ProbabilityTable probabilities(const StateVector &state,
                                             std::span<const std::size_t> wires);

/**
 * @brief Multinomial draw by inverse CDF.
 *
 * Each shot takes one mt19937_64 output, keeps its top 53 bits as a uniform
 * u in [0, 1), and picks the first outcome whose running sum exceeds
 * u * sum(probs). Weights need not be normalized.
 */
[[nodiscard]] std::vector<std::uint64_t> sample(std::span<const double> probs,
                                                std::uint64_t shots,
                                                std::uint64_t seed);

struct MeasurementResult {
    std::vector<std::string> labels;
    std::vector<double> probabilities;
    std::vector<std::uint64_t> histogram;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
};

[[nodiscard]] MeasurementResult measure(const StateVector &state,
                                        std::span<const std::size_t> wires,
                                        std::uint64_t shots,
                                        std::uint64_t seed);

/// {"probabilities": {...}, "histogram": {...}, "shots": N, "seed": S}
[[nodiscard]] std::string to_json(const MeasurementResult &result,
                                  int indent = 2);

} // namespace qudit
