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
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "qudit/circuit.hpp"

namespace qudit {

enum class LossKind {
    /// 1 - |<target|psi>|^2
    Overlap,
    /// sum_i |target_i - psi_i|
    AbsSum,
    /// User callable; differentiated by finite differences only.
    Custom,
};

struct LossSpec {
    LossKind kind = LossKind::Overlap;
    StateVector target;
    std::function<double(const StateVector &)> custom;

    static LossSpec overlap(StateVector target);
    static LossSpec abs_sum(StateVector target);
    static LossSpec callable(StateVector target,
                             std::function<double(const StateVector &)> fn);
};

[[nodiscard]] double evaluate_loss(const LossSpec &loss,
                                   const StateVector &output);

enum class GradientMethod { Adjoint, FiniteDifference };

struct GradientResult {
    double loss = 0.0;
    std::vector<double> grad;
    /// FiniteDifference when the loss kind has no adjoint seed.
    GradientMethod method = GradientMethod::Adjoint;
};

/**
 * @brief Loss and d(loss)/d(param) for every parameter slot.
 *
 * Runs one forward pass, then walks the ops backwards carrying the state and
 * the co-state lambda = dL/d(psi*). A parametric op with derivative
 * generator G contributes 2 Re <lambda|G psi> at its position.
 */
[[nodiscard]] GradientResult gradient(const Circuit &circuit,
                                      const StateVector &input,
                                      std::span<const double> params,
                                      const LossSpec &loss);

/// Central differences, two full forward passes per parameter.
[[nodiscard]] std::vector<double> finite_diff(const Circuit &circuit,
                                              const StateVector &input,
                                              std::span<const double> params,
                                              const LossSpec &loss,
                                              double step = 1e-5);

/// Loss of a plain forward pass.
[[nodiscard]] double forward_loss(const Circuit &circuit,
                                  const StateVector &input,
                                  std::span<const double> params,
                                  const LossSpec &loss);

struct GradientDescent {
    double lr = 0.1;
    std::size_t steps = 100;
};

struct Adam {
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    std::size_t steps = 100;
};

using Optimizer = std::variant<GradientDescent, Adam>;

/// Explicit starting values, or uniform on [0, 2pi) from `seed`.
struct ParamInit {
    std::optional<std::vector<double>> values;
    std::uint64_t seed = 0;
};

[[nodiscard]] std::vector<double> init_params(std::size_t count,
                                              std::uint64_t seed);

struct TrainResult {
    std::vector<double> params;
    /// trace[s] is the loss at the parameters entering step s.
    std::vector<double> trace;
};

/// Throws NonFiniteLoss with the step index on NaN or inf.
[[nodiscard]] TrainResult train(const Circuit &circuit,
                                const StateVector &input, const LossSpec &loss,
                                const Optimizer &optimizer,
                                const ParamInit &init = {});

} // namespace qudit
