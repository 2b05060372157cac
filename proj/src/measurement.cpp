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
#include "qudit/measurement.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "qudit/random.hpp"
#include "qudit/simd/kernels.hpp"

namespace qudit {

double ProbabilityTable::at(std::string_view label) const {
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
        throw DomainError("no outcome labelled '" + std::string(label) + "'");
    }
    return probs[static_cast<std::size_t>(it - labels.begin())];
}

ProbabilityTable probabilities(const StateVector &state,
                               std::span<const std::size_t> wires) {
    const Register &reg = state.reg();
    if (wires.empty()) {
        throw DomainError("measurement needs at least one wire");
    }
    std::vector<std::size_t> sorted(wires.begin(), wires.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
        sorted.back() >= reg.wires()) {
        throw DomainError("measured wires must be distinct and in range");
    }

    ProbabilityTable table;
    table.wires.assign(wires.begin(), wires.end());
    std::size_t outcomes = 1;
    for (std::size_t w : wires) {
        table.dims.push_back(reg.dim(w));
        outcomes *= reg.dim(w);
    }

    std::vector<double> mag(state.size());
    simd::kernels().abs2(state.amplitudes().data(), mag.data(), mag.size());
    table.probs.assign(outcomes, 0.0);
    for (std::size_t j = 0; j < mag.size(); ++j) {
        std::size_t local = 0;
        for (std::size_t w : wires) {
            local = local * reg.dims()[w] + reg.digit(j, w);
        }
        table.probs[local] += mag[j];
    }

    Register sub(table.dims);
    table.labels.reserve(outcomes);
    for (std::size_t o = 0; o < outcomes; ++o) {
        table.labels.push_back(format_label(decode_index(o, sub)));
    }
    return table;
}

std::vector<std::uint64_t> sample(std::span<const double> probs,
                                  std::uint64_t shots, std::uint64_t seed) {
    std::vector<std::uint64_t> counts(probs.size(), 0);
    if (shots == 0) {
        return counts;
    }
    std::vector<double> cdf(probs.size());
    double total = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (!(probs[i] >= 0.0) || !std::isfinite(probs[i])) {
            throw DomainError("probabilities must be finite and non-negative");
        }
        total += probs[i];
        cdf[i] = total;
        if (probs[i] > 0.0) {
            last_positive = i;
        }
    }
    if (!(total > 0.0)) {
        throw DomainError("cannot sample from an all-zero distribution");
    }
    Rng rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = unit_uniform(rng) * total;
        auto idx = static_cast<std::size_t>(
            std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        ++counts[std::min(idx, last_positive)];
    }
    return counts;
}

MeasurementResult measure(const StateVector &state,
                          std::span<const std::size_t> wires,
                          std::uint64_t shots, std::uint64_t seed) {
    ProbabilityTable table = probabilities(state, wires);
    MeasurementResult result;
    result.histogram = sample(table.probs, shots, seed);
    result.labels = std::move(table.labels);
    result.probabilities = std::move(table.probs);
    result.shots = shots;
    result.seed = seed;
    return result;
}

std::string to_json(const MeasurementResult &result, int indent) {
    nlohmann::ordered_json probs = nlohmann::ordered_json::object();
    nlohmann::ordered_json hist = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < result.labels.size(); ++i) {
        probs[result.labels[i]] = result.probabilities[i];
        hist[result.labels[i]] = result.histogram[i];
    }
    nlohmann::ordered_json doc;
    doc["probabilities"] = std::move(probs);
    doc["histogram"] = std::move(hist);
    doc["shots"] = result.shots;
    doc["seed"] = result.seed;
    return doc.dump(indent);
}

} // namespace qudit
