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

// quditsim command-line driver: run circuit files, algorithm demos and the
// init/run benchmark sweep.
//
// Exit codes: 0 success, 1 I/O failure, 2 validation or usage error.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qudit/algorithms.hpp"
#include "qudit/bench.hpp"
#include "qudit/circuit_json.hpp"
#include "qudit/measurement.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qudit;

constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;

struct Range {
    std::size_t lo = 0;
    std::size_t hi = 0;
};

Range parse_range(const std::string &text, const std::string &flag) {
    const auto colon = text.find(':');
    try {
        std::size_t pos = 0;
        Range r;
        if (colon == std::string::npos) {
            r.lo = r.hi = std::stoul(text, &pos);
            if (pos != text.size()) {
                throw std::invalid_argument(text);
            }
            return r;
        }
        const std::string a = text.substr(0, colon);
        const std::string b = text.substr(colon + 1);
        r.lo = std::stoul(a, &pos);
        if (pos != a.size()) {
            throw std::invalid_argument(a);
        }
        r.hi = std::stoul(b, &pos);
        if (pos != b.size()) {
            throw std::invalid_argument(b);
        }
        return r;
    } catch (const std::logic_error &) {
        throw DomainError(flag + " expects LO:HI or a single value, got '" +
                          text + "'");
    }
}

Backend parse_backend(const std::string &name) {
    return name == "dense" ? Backend::Dense : Backend::Sparse;
}

ordered_json measurement_json(const MeasurementResult &m) {
    return ordered_json::parse(to_json(m));
}

struct RunOptions {
    std::string file;
    std::string backend = "sparse";
    std::optional<std::uint64_t> shots;
    std::optional<std::uint64_t> seed;
};

int cmd_run(const RunOptions &o) {
    CircuitFile f = load_circuit_file(o.file);
    const std::uint64_t shots = o.shots.value_or(f.measure.shots);
    const std::uint64_t seed = o.seed.value_or(f.measure.seed);
    const StateVector out =
        apply(f.circuit, f.initial, {}, parse_backend(o.backend));
    std::cout << to_json(measure(out, f.measure.wires, shots, seed)) << '\n';
    return 0;
}

struct DemoOptions {
    std::size_t dim = 3;
    std::size_t wires = 2;
    std::string oracle = "constant";
    std::string marked;
    std::string iterations = "auto";
    std::size_t steps = 300;
    double lr = 0.05;
    std::uint64_t seed = 0;
    std::string target;
    std::string variant = "R3";
    std::uint64_t shots = 1000;
    bool json = false;
};

int cmd_dj(const DemoOptions &o) {
    const algorithms::DjOracle oracle{
        .mode = o.oracle == "balanced" ? algorithms::DjMode::Balanced
                                       : algorithms::DjMode::Constant};
    const auto r =
        algorithms::run_deutsch_jozsa(o.dim, o.wires, oracle, o.shots, o.seed);
    const std::string verdict = r.constant ? "constant" : "balanced";
    if (o.json) {
        ordered_json doc;
        doc["classification"] = verdict;
        doc["p_zero"] = r.p_zero;
        doc["measurement"] = measurement_json(r.measurement);
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << verdict << '\n'
                  << "p(all zeros) = " << std::setprecision(12) << r.p_zero
                  << '\n';
    }
    return 0;
}

int cmd_grover(const DemoOptions &o) {
    std::optional<std::size_t> k;
    if (o.iterations != "auto") {
        std::size_t pos = 0;
        try {
            k = std::stoul(o.iterations, &pos);
        } catch (const std::logic_error &) {
            pos = 0;
        }
        if (pos == 0 || pos != o.iterations.size()) {
            throw DomainError("--iterations expects 'auto' or a count");
        }
    }
    const auto r =
        algorithms::run_grover(o.dim, o.wires, o.marked, k, o.shots, o.seed);
    if (o.json) {
        ordered_json doc;
        doc["iterations"] = r.iterations;
        doc["marked"] = o.marked;
        doc["p_marked"] = r.p_marked;
        doc["measurement"] = measurement_json(r.measurement);
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "k=" << r.iterations << " p(" << o.marked
                  << ")=" << std::setprecision(10) << r.p_marked << '\n';
    }
    return 0;
}

int cmd_vqa(const DemoOptions &o) {
    const auto variant = algorithms::parse_layer_variant(o.variant);
    const auto r = algorithms::run_vqa_demo(o.dim, o.wires, variant, o.steps,
                                            o.lr, o.seed, o.target);
    if (o.json) {
        ordered_json doc;
        doc["variant"] = algorithms::to_string(variant);
        doc["target"] = o.target;
        doc["steps"] = o.steps;
        doc["lr"] = o.lr;
        doc["seed"] = o.seed;
        doc["loss_trace"] = r.trace;
        doc["final_fidelity"] = r.fidelity;
        std::cout << doc.dump(2) << '\n';
    } else {
        for (std::size_t s = 0; s < r.trace.size(); ++s) {
            std::cout << "step " << s << " loss " << std::setprecision(10)
                      << r.trace[s] << '\n';
        }
        std::cout << "final fidelity " << std::setprecision(10) << r.fidelity
                  << '\n';
    }
    return 0;
}

struct BenchOptions {
    std::string dims = "2:8";
    std::string wires = "1:4";
    std::size_t trials = 20;
    std::string backend = "both";
    std::string out;
    std::uint64_t seed = 0;
    std::size_t mem_budget_mb = 512;
    bool json = false;
};

int cmd_bench(const BenchOptions &o) {
    bench::BenchConfig cfg;
    const Range d = parse_range(o.dims, "--dims");
    const Range w = parse_range(o.wires, "--wires");
    cfg.dim_min = d.lo;
    cfg.dim_max = d.hi;
    cfg.wires_min = w.lo;
    cfg.wires_max = w.hi;
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    cfg.mem_budget_bytes = o.mem_budget_mb << 20;
    if (o.backend == "both") {
        cfg.backends = {Backend::Dense, Backend::Sparse};
    } else {
        cfg.backends = {parse_backend(o.backend)};
    }
    const auto records = bench::run_bench(cfg);
    if (!o.out.empty()) {
        std::ofstream file(o.out);
        if (!file) {
            throw IoError("cannot write '" + o.out + "'");
        }
        bench::write_csv(file, records);
        if (!file) {
            throw IoError("failed writing '" + o.out + "'");
        }
    }
    if (o.json) {
        std::cout << bench::to_json(records) << '\n';
    } else if (o.out.empty()) {
        bench::write_csv(std::cout, records);
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"qudit circuit simulator"};
    app.require_subcommand(1);

    RunOptions run_opts;
    auto *run = app.add_subcommand("run", "Execute a circuit JSON file");
    run->add_option("file", run_opts.file, "Circuit JSON")->required();
    run->add_option("--backend", run_opts.backend)
        ->check(CLI::IsMember({"sparse", "dense"}));
    run->add_option("--shots", run_opts.shots, "Override measure.shots");
    run->add_option("--seed", run_opts.seed, "Override measure.seed");

    DemoOptions demo_opts;
    auto *demo = app.add_subcommand("demo", "Algorithm demos");
    demo->require_subcommand(1);
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--dim", demo_opts.dim)->check(CLI::Range(2, 64));
        sub->add_option("--wires", demo_opts.wires)->check(CLI::Range(1, 32));
        sub->add_option("--seed", demo_opts.seed);
        sub->add_flag("--json", demo_opts.json, "Machine-readable output");
    };
    auto *dj = demo->add_subcommand("deutsch-jozsa", "Deutsch-Jozsa");
    add_common(dj);
    dj->add_option("--oracle", demo_opts.oracle)
        ->check(CLI::IsMember({"constant", "balanced"}));
    dj->add_option("--shots", demo_opts.shots);
    auto *grover = demo->add_subcommand("grover", "Grover search");
    add_common(grover);
    grover->add_option("--marked", demo_opts.marked, "Marked label, e.g. 2-2")
        ->required();
    grover->add_option("--iterations", demo_opts.iterations, "auto or a count");
    grover->add_option("--shots", demo_opts.shots);
    auto *vqa = demo->add_subcommand("vqa", "Variational state preparation");
    add_common(vqa);
    vqa->add_option("--steps", demo_opts.steps)->check(CLI::PositiveNumber);
    vqa->add_option("--lr", demo_opts.lr)->check(CLI::NonNegativeNumber);
    vqa->add_option("--target", demo_opts.target, "Target label, e.g. 1-1")
        ->required();
    vqa->add_option("--variant", demo_opts.variant)
        ->check(CLI::IsMember({"R1", "R2", "R3", "r1", "r2", "r3"}));

    BenchOptions bench_opts;
    auto *bench = app.add_subcommand("bench", "Init/run timing sweep");
    bench->add_option("--dims", bench_opts.dims, "LO:HI");
    bench->add_option("--wires", bench_opts.wires, "LO:HI");
    bench->add_option("--trials", bench_opts.trials)->check(CLI::PositiveNumber);
    bench->add_option("--backend", bench_opts.backend)
        ->check(CLI::IsMember({"sparse", "dense", "both"}));
    bench->add_option("--out", bench_opts.out, "CSV path (stdout if omitted)");
    bench->add_option("--seed", bench_opts.seed);
    bench->add_option("--mem-budget-mb", bench_opts.mem_budget_mb,
                      "Skip cells whose operators exceed this");
    bench->add_flag("--json", bench_opts.json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (*run) {
            return cmd_run(run_opts);
        }
        if (*dj) {
            return cmd_dj(demo_opts);
        }
        if (*grover) {
            return cmd_grover(demo_opts);
        }
        if (*vqa) {
            return cmd_vqa(demo_opts);
        }
        if (*bench) {
            return cmd_bench(bench_opts);
        }
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitValidation;
}
