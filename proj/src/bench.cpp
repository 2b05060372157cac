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
#include "qudit/bench.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <new>
#include <sstream>

#include <json.hpp>

#include "qudit/algorithms.hpp"
#include "qudit/gradients.hpp"

namespace qudit::bench {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

std::pair<double, double> mean_std(const std::vector<double> &xs) {
    double mean = 0.0;
    for (double x : xs) {
        mean += x;
    }
    mean /= static_cast<double>(xs.size());
    if (xs.size() < 2) {
        return {mean, 0.0};
    }
    double ss = 0.0;
    for (double x : xs) {
        ss += (x - mean) * (x - mean);
    }
    return {mean, std::sqrt(ss / static_cast<double>(xs.size() - 1))};
}

// Saturating multiply for size estimates that may exceed size_t.
std::size_t sat_mul(std::size_t a, std::size_t b) {
    std::size_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        return SIZE_MAX;
    }
    return out;
}

std::size_t sat_add(std::size_t a, std::size_t b) {
    std::size_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        return SIZE_MAX;
    }
    return out;
}

std::size_t dense_elements(const Register &reg) {
    return sat_mul(reg.total_size(), reg.total_size());
}

} // namespace

std::optional<std::size_t> closed_form_nnz(const GateSpec &op,
                                           const Register &reg) {
    const std::size_t n = reg.total_size();
    switch (op.kind) {
    case GateKind::Not:
    case GateKind::Phase:
    case GateKind::CNOT:
    case GateKind::SWAP:
    case GateKind::MCX:
        return n;
    case GateKind::Fourier:
        return n * reg.dim(op.wires[0]);
    case GateKind::Rotation: {
        const std::size_t d = reg.dim(op.wires[0]);
        const std::size_t local = op.gen.axis == gates::Axis::Z ? d : d + 2;
        return local * (n / d);
    }
    case GateKind::ControlledRotation: {
        const std::size_t dc = reg.dim(op.wires[0]);
        const std::size_t dt = reg.dim(op.wires[1]);
        const std::size_t active = op.gen.axis == gates::Axis::Z ? dt : dt + 2;
        return (dt + (dc - 1) * active) * (n / (dc * dt));
    }
    case GateKind::Custom:
        return std::nullopt;
    }
    return std::nullopt;
}

Footprint estimate_footprint(const Circuit &circuit, Backend backend) {
    Footprint f;
    const Register &reg = circuit.reg();
    for (const GateSpec &op : circuit.ops()) {
        std::size_t elements = 0;
        if (backend == Backend::Dense) {
            elements = dense_elements(reg);
        } else {
            elements = closed_form_nnz(op, reg).value_or(dense_elements(reg));
        }
        f.elements = sat_add(f.elements, elements);
    }
    const std::size_t per = backend == Backend::Dense ? sizeof(Complex)
                                                      : sizeof(Triplet);
    f.bytes = sat_mul(f.elements, per);
    return f;
}

std::vector<BenchRecord> run_bench(const BenchConfig &config) {
    if (config.trials < 1) {
        throw DomainError("bench needs at least one trial");
    }
    if (config.dim_min < 2 || config.dim_min > config.dim_max ||
        config.wires_min < 1 || config.wires_min > config.wires_max) {
        throw DomainError("invalid bench sweep ranges");
    }
    std::vector<BenchRecord> records;
    for (Backend backend : config.backends) {
        for (std::size_t n = config.wires_min; n <= config.wires_max; ++n) {
            for (std::size_t d = config.dim_min; d <= config.dim_max; ++d) {
                const Circuit c = algorithms::build_vqa_circuit(
                    d, n, algorithms::LayerVariant::R3);
                const auto params = init_params(c.num_params(), config.seed);
                const Footprint est = estimate_footprint(c, backend);

                BenchRecord init{.backend = backend,
                                 .n_qudits = n,
                                 .dim = d,
                                 .phase = "init",
                                 .trials = config.trials,
                                 .nnz_total = est.elements,
                                 .bytes_estimate = est.bytes};
                BenchRecord run = init;
                run.phase = "run";

                if (est.bytes <= config.mem_budget_bytes) {
                    try {
                        const StateVector input = StateVector::basis(c.reg(), 0);
                        // Warm-up, untimed.
                        std::vector<EmbeddedOp> ops = compile(c, params, backend);
                        (void)qudit::apply(std::span<const EmbeddedOp>(ops), input);
                        std::size_t nnz = 0;
                        std::size_t bytes = 0;
                        for (const EmbeddedOp &op : ops) {
                            nnz += op.stored_elements();
                            bytes += op.bytes();
                            if (backend == Backend::Sparse) {
                                const auto expected = closed_form_nnz(
                                    c.ops()[op.source], c.reg());
                                if (expected && *expected != op.stored_elements()) {
                                    throw Error(
                                        "nnz mismatch for " +
                                        to_string(c.ops()[op.source].kind) +
                                        ": expected " + std::to_string(*expected) +
                                        ", built " +
                                        std::to_string(op.stored_elements()));
                                }
                            }
                        }
                        std::vector<double> t_init;
                        std::vector<double> t_run;
                        for (std::size_t t = 0; t < config.trials; ++t) {
                            const auto t0 = Clock::now();
                            ops = compile(c, params, backend);
                            const auto t1 = Clock::now();
                            const StateVector out = qudit::apply(
                                std::span<const EmbeddedOp>(ops), input);
                            const auto t2 = Clock::now();
                            (void)out;
                            t_init.push_back(elapsed_ms(t0, t1));
                            t_run.push_back(elapsed_ms(t1, t2));
                        }
                        std::tie(init.mean_ms, init.std_ms) = mean_std(t_init);
                        std::tie(run.mean_ms, run.std_ms) = mean_std(t_run);
                        init.nnz_total = run.nnz_total = nnz;
                        init.bytes_estimate = run.bytes_estimate = bytes;
                    } catch (const std::bad_alloc &) {
                        init.mean_ms.reset();
                        init.std_ms.reset();
                        run.mean_ms.reset();
                        run.std_ms.reset();
                    }
                }
                records.push_back(std::move(init));
                records.push_back(std::move(run));
            }
        }
    }
    return records;
}

void write_csv(std::ostream &out, const std::vector<BenchRecord> &records) {
    out << kCsvHeader << '\n';
    for (const BenchRecord &r : records) {
        out << to_string(r.backend) << ',' << r.n_qudits << ',' << r.dim << ','
            << r.phase << ',' << r.trials << ',';
        if (r.mean_ms) {
            std::ostringstream cell;
            cell << std::fixed << std::setprecision(6) << *r.mean_ms << ','
                 << *r.std_ms;
            out << cell.str();
        } else {
            out << "skipped,skipped";
        }
        out << ',' << r.nnz_total << ',' << r.bytes_estimate << '\n';
    }
}

std::string to_json(const std::vector<BenchRecord> &records, int indent) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const BenchRecord &r : records) {
        nlohmann::ordered_json row;
        row["backend"] = to_string(r.backend);
        row["n_qudits"] = r.n_qudits;
        row["dim"] = r.dim;
        row["phase"] = r.phase;
        row["trials"] = r.trials;
        row["mean_ms"] = r.mean_ms ? nlohmann::ordered_json(*r.mean_ms)
                                   : nlohmann::ordered_json("skipped");
        row["std_ms"] = r.std_ms ? nlohmann::ordered_json(*r.std_ms)
                                 : nlohmann::ordered_json("skipped");
        row["nnz_total"] = r.nnz_total;
        row["bytes_estimate"] = r.bytes_estimate;
        doc.push_back(std::move(row));
    }
    return doc.dump(indent);
}

} // namespace qudit::bench
