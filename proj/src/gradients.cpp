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
#include "qudit/gradients.hpp"

#include <cmath>
#include <map>

#include "qudit/random.hpp"
#include "qudit/simd/kernels.hpp"

namespace qudit {
namespace {

void require_target(const LossSpec &loss, const Register &reg) {
    if (!(loss.target.reg() == reg)) {
        throw DomainError("loss target register does not match the circuit");
    }
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
    return simd::kernels().dot(a.data(), b.data(), a.size());
}

// dL/d(psi*) for the differentiable loss kinds.
std::vector<Complex> costate(const LossSpec &loss, const StateVector &psi) {
    const auto t = loss.target.amplitudes();
    const auto p = psi.amplitudes();
    std::vector<Complex> lambda(p.size());
    if (loss.kind == LossKind::Overlap) {
        const Complex ov = inner(t, p);
        for (std::size_t i = 0; i < p.size(); ++i) {
            lambda[i] = -ov * t[i];
        }
    } else {
        for (std::size_t i = 0; i < p.size(); ++i) {
            const Complex diff = p[i] - t[i];
            const double mag = std::abs(diff);
            lambda[i] = mag > 0.0 ? diff / (2.0 * mag) : Complex{};
        }
    }
    return lambda;
}

SparseOperator derivative_generator(const GateSpec &op, const Register &reg) {
    if (op.kind == GateKind::Rotation) {
        const std::size_t w = op.wires[0];
        return embed_single(gates::rotation_generator(op.gen, reg.dim(w)), w,
                            reg);
    }
    return gates::controlled_rotation_generator(reg, op.wires[0], op.wires[1],
                                                op.gen);
}

} // namespace

LossSpec LossSpec::overlap(StateVector target) {
    return {LossKind::Overlap, std::move(target), {}};
}

LossSpec LossSpec::abs_sum(StateVector target) {
    return {LossKind::AbsSum, std::move(target), {}};
}

LossSpec LossSpec::callable(StateVector target,
                            std::function<double(const StateVector &)> fn) {
    return {LossKind::Custom, std::move(target), std::move(fn)};
}

double evaluate_loss(const LossSpec &loss, const StateVector &output) {
    require_target(loss, output.reg());
    const auto t = loss.target.amplitudes();
    const auto p = output.amplitudes();
    switch (loss.kind) {
    case LossKind::Overlap:
        return 1.0 - std::norm(inner(t, p));
    case LossKind::AbsSum: {
        double total = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            total += std::abs(t[i] - p[i]);
        }
        return total;
    }
    case LossKind::Custom:
        if (!loss.custom) {
            throw DomainError("custom loss without a callable");
        }
        return loss.custom(output);
    }
    throw DomainError("unknown loss kind");
}

double forward_loss(const Circuit &circuit, const StateVector &input,
                    std::span<const double> params, const LossSpec &loss) {
    return evaluate_loss(loss, apply(circuit, input, params));
}

std::vector<double> finite_diff(const Circuit &circuit,
                                const StateVector &input,
                                std::span<const double> params,
                                const LossSpec &loss, double step) {
    if (!(step > 0.0)) {
        throw DomainError("finite-difference step must be positive");
    }
    std::vector<double> shifted(params.begin(), params.end());
    std::vector<double> grad(params.size());
    for (std::size_t i = 0; i < params.size(); ++i) {
        shifted[i] = params[i] + step;
        const double up = forward_loss(circuit, input, shifted, loss);
        shifted[i] = params[i] - step;
        const double down = forward_loss(circuit, input, shifted, loss);
        shifted[i] = params[i];
        grad[i] = (up - down) / (2.0 * step);
    }
    return grad;
}

GradientResult gradient(const Circuit &circuit, const StateVector &input,
                        std::span<const double> params, const LossSpec &loss) {
    require_target(loss, circuit.reg());
    if (!(input.reg() == circuit.reg())) {
        throw DomainError("input state register does not match the circuit");
    }
    const auto ops = compile(circuit, params, Backend::Sparse);
    const StateVector out = qudit::apply(std::span<const EmbeddedOp>(ops), input);

    GradientResult result;
    result.loss = evaluate_loss(loss, out);
    if (loss.kind == LossKind::Custom) {
        result.grad = finite_diff(circuit, input, params, loss);
        result.method = GradientMethod::FiniteDifference;
        return result;
    }

    result.grad.assign(params.size(), 0.0);
    std::vector<Complex> psi(out.amplitudes().begin(), out.amplitudes().end());
    std::vector<Complex> lambda = costate(loss, out);
    std::map<const void *, SparseOperator> adjoints;

    for (std::size_t l = ops.size(); l-- > 0;) {
        const GateSpec &spec = circuit.ops()[ops[l].source];
        if (spec.param) {
            const auto g_psi =
                matvec(derivative_generator(spec, circuit.reg()), psi);
            result.grad[*spec.param] += 2.0 * inner(lambda, g_psi).real();
        }
        auto it = adjoints.find(ops[l].op.get());
        if (it == adjoints.end()) {
            it = adjoints
                     .emplace(ops[l].op.get(),
                              std::get<SparseOperator>(*ops[l].op).adjoint())
                     .first;
        }
        psi = matvec(it->second, psi);
        lambda = matvec(it->second, lambda);
    }
    return result;
}

std::vector<double> init_params(std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> values(count);
    for (double &v : values) {
        v = 2.0 * kPi * unit_uniform(rng);
    }
    return values;
}

TrainResult train(const Circuit &circuit, const StateVector &input,
                  const LossSpec &loss, const Optimizer &optimizer,
                  const ParamInit &init) {
    const std::size_t steps =
        std::visit([](const auto &o) { return o.steps; }, optimizer);
    if (steps < 1) {
        throw DomainError("training needs at least one step");
    }
    TrainResult result;
    result.params = init.values ? *init.values
                                : init_params(circuit.num_params(), init.seed);
    if (result.params.size() != circuit.num_params()) {
        throw DomainError("initial parameter count does not match the circuit");
    }
    const std::size_t n = result.params.size();
    std::vector<double> m(n, 0.0);
    std::vector<double> v(n, 0.0);
    result.trace.reserve(steps);

    for (std::size_t s = 0; s < steps; ++s) {
        const GradientResult g = gradient(circuit, input, result.params, loss);
        if (!std::isfinite(g.loss)) {
            throw NonFiniteLoss(s);
        }
        result.trace.push_back(g.loss);
        if (const auto *gd = std::get_if<GradientDescent>(&optimizer)) {
            for (std::size_t i = 0; i < n; ++i) {
                result.params[i] -= gd->lr * g.grad[i];
            }
        } else {
            const auto &adam = std::get<Adam>(optimizer);
            const double t = static_cast<double>(s + 1);
            const double c1 = 1.0 - std::pow(adam.beta1, t);
            const double c2 = 1.0 - std::pow(adam.beta2, t);
            for (std::size_t i = 0; i < n; ++i) {
                m[i] = adam.beta1 * m[i] + (1.0 - adam.beta1) * g.grad[i];
                v[i] = adam.beta2 * v[i] +
                       (1.0 - adam.beta2) * g.grad[i] * g.grad[i];
                result.params[i] -=
                    adam.lr * (m[i] / c1) / (std::sqrt(v[i] / c2) + adam.eps);
            }
        }
    }
    return result;
}

} // namespace qudit
