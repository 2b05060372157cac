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
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qudit/gates.hpp"
#include "qudit/register.hpp"
#include "qudit/sparsela.hpp"

namespace qudit {

enum class GateKind {
    Not,
    Phase,
    Fourier,
    Rotation,
    CNOT,
    SWAP,
    ControlledRotation,
    MCX,
    Custom,
};

[[nodiscard]] std::string to_string(GateKind kind);

enum class Backend { Dense, Sparse };

[[nodiscard]] std::string to_string(Backend backend);

/**
 * @brief One gate application in a circuit.
 *
 * Wire conventions by kind:
 *  - single-wire gates: {wire}
 *  - CNOT, SWAP, ControlledRotation: {control, target}
 *  - MCX: {controls..., target}
 *  - Custom: the wires the matrix acts on, most significant first
 */
struct GateSpec {
    GateKind kind = GateKind::Not;
    std::vector<std::size_t> wires;
    gates::Generator gen{};
    std::size_t shift = 1;
    double theta = 0.0;
    /// When set, theta is read from this slot of the parameter vector.
    std::optional<std::size_t> param;
    std::shared_ptr<const DenseOperator> matrix;
    /// Free-form tag (e.g. "oracle") for structural inspection.
    std::string label;

    [[nodiscard]] bool is_parametric() const noexcept {
        return kind == GateKind::Rotation ||
               kind == GateKind::ControlledRotation;
    }
};

/**
 * @brief Ordered list of gate applications over a fixed register.
 *
 * Every parameter slot is owned by exactly one op. Builder methods that take
 * a wire list add one op per wire.
 */
class Circuit {
  public:
    explicit Circuit(Register reg);

    [[nodiscard]] const Register &reg() const noexcept { return reg_; }
    [[nodiscard]] std::span<const GateSpec> ops() const noexcept {
        return ops_;
    }
    [[nodiscard]] std::size_t num_params() const noexcept {
        return param_owner_.size();
    }
    /// Op position that reads parameter `slot`.
    [[nodiscard]] std::size_t param_owner(std::size_t slot) const {
        return param_owner_.at(slot);
    }

    /// Validates and appends `op`. A parametric op with `param` set to any
    /// value receives the next free slot. Returns the op position.
    std::size_t append(GateSpec op);

    Circuit &h(std::initializer_list<std::size_t> wires);
    Circuit &h(std::span<const std::size_t> wires);
    Circuit &x(std::size_t wire, std::size_t shift = 1);
    Circuit &phase(std::size_t wire);
    Circuit &rotation(const gates::Generator &gen, double theta,
                      std::size_t wire);
    /// Parameterized rotation; returns the new parameter slot.
    std::size_t rotation_param(const gates::Generator &gen, std::size_t wire);
    Circuit &cnot(std::size_t control, std::size_t target,
                  std::size_t shift = 1);
    Circuit &swap(std::size_t a, std::size_t b);
    Circuit &crot(std::size_t control, std::size_t target,
                  const gates::Generator &gen, double theta);
    std::size_t crot_param(std::size_t control, std::size_t target,
                           const gates::Generator &gen);
    Circuit &mcx(std::span<const std::size_t> controls, std::size_t target,
                 std::size_t shift = 1);
    /// Custom gate; validated for unitarity at `tol`.
    Circuit &unitary(DenseOperator matrix, std::vector<std::size_t> wires,
                     double tol = 1e-8, std::string label = {});

  private:
    Register reg_;
    std::vector<GateSpec> ops_;
    std::vector<std::size_t> param_owner_;
};

/// A gate lifted to the full register, in either storage format.
struct EmbeddedOp {
    std::shared_ptr<const std::variant<SparseOperator, DenseOperator>> op;
    std::size_t source = 0;

    [[nodiscard]] std::vector<Complex> apply(std::span<const Complex> v) const;
    [[nodiscard]] std::size_t stored_elements() const;
    [[nodiscard]] std::size_t bytes() const;
};

/// I_left (x) gate (x) I_right.
[[nodiscard]] SparseOperator embed_single(const SparseOperator &gate,
                                          std::size_t wire,
                                          const Register &reg);
[[nodiscard]] DenseOperator embed_single(const DenseOperator &gate,
                                         std::size_t wire,
                                         const Register &reg);

/// Lifts a gate acting on `wires` (matrix rows/cols follow the listed wire
/// order) by permuting composite-index digits.
[[nodiscard]] SparseOperator embed_custom(const SparseOperator &gate,
                                          std::span<const std::size_t> wires,
                                          const Register &reg);
[[nodiscard]] DenseOperator embed_custom(const DenseOperator &gate,
                                         std::span<const std::size_t> wires,
                                         const Register &reg);

/// Full-register sparse operator for any op with its angle resolved.
[[nodiscard]] SparseOperator embed_multi(const GateSpec &op, double theta,
                                         const Register &reg);

/// Angle used by `op` given the parameter vector.
[[nodiscard]] double resolve_angle(const GateSpec &op,
                                   std::span<const double> params);

/// Builds every embedded operator. Identical (op, angle) pairs share storage.
[[nodiscard]] std::vector<EmbeddedOp> compile(const Circuit &circuit,
                                              std::span<const double> params,
                                              Backend backend = Backend::Sparse);

/// Applies ops in order (op 0 first).
[[nodiscard]] StateVector apply(std::span<const EmbeddedOp> ops,
                                const StateVector &input);
[[nodiscard]] StateVector apply(const Circuit &circuit,
                                const StateVector &input,
                                std::span<const double> params = {},
                                Backend backend = Backend::Sparse);

} // namespace qudit
