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
#include <catch_amalgamated.hpp>

#include <sstream>

#include "qudit/algorithms.hpp"
#include "qudit/bench.hpp"

using namespace qudit;
using namespace qudit::bench;

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        r *= b;
    }
    return r;
}

} // namespace

TEST_CASE("Closed-form nnz matches built operators", "[bench]") {
    const auto c = algorithms::build_vqa_circuit(3, 2, algorithms::LayerVariant::R3);
    const auto params = std::vector<double>(c.num_params(), 0.37);
    const auto ops = compile(c, params);
    for (const auto &op : ops) {
        const auto expected = closed_form_nnz(c.ops()[op.source], c.reg());
        REQUIRE(expected.has_value());
        CHECK(*expected == op.stored_elements());
        if (c.ops()[op.source].kind == GateKind::CNOT) {
            CHECK(op.stored_elements() == 9);
        }
    }
}

TEST_CASE("Closed-form nnz for controlled rotations", "[bench]") {
    Circuit c(Register({3, 4}));
    c.crot(0, 1, gates::Generator::x(1, 3), 0.4);
    c.crot(1, 0, gates::Generator::z(2), 0.4);
    const auto ops = compile(c, {});
    for (const auto &op : ops) {
        CHECK(closed_form_nnz(c.ops()[op.source], c.reg()) == op.stored_elements());
    }
}

TEST_CASE("Footprint estimates", "[bench]") {
    for (std::size_t d = 2; d <= 5; ++d) {
        for (std::size_t n = 1; n <= 3; ++n) {
            Circuit c(Register::uniform(d, n));
            c.h({0});
            const auto dense = estimate_footprint(c, Backend::Dense);
            CHECK(dense.elements == ipow(d, 2 * n));
            CHECK(dense.bytes == 16 * ipow(d, 2 * n));
            const auto sparse = estimate_footprint(c, Backend::Sparse);
            if (n >= 2) {
                CHECK(sparse.bytes < dense.bytes);
            }
        }
    }
}

TEST_CASE("Bench rows, order and accounting", "[bench]") {
    BenchConfig cfg;
    cfg.dim_min = 2;
    cfg.dim_max = 3;
    cfg.wires_min = 1;
    cfg.wires_max = 2;
    cfg.trials = 3;
    const auto rows = run_bench(cfg);
    REQUIRE(rows.size() == 2 * 2 * 2 * 2);
    std::size_t i = 0;
    for (Backend b : {Backend::Dense, Backend::Sparse}) {
        for (std::size_t n = 1; n <= 2; ++n) {
            for (std::size_t d = 2; d <= 3; ++d) {
                for (const char *phase : {"init", "run"}) {
                    const auto &r = rows[i++];
                    CHECK(r.backend == b);
                    CHECK(r.n_qudits == n);
                    CHECK(r.dim == d);
                    CHECK(r.phase == phase);
                    CHECK(r.trials == 3);
                    REQUIRE(r.mean_ms.has_value());
                    CHECK(*r.std_ms >= 0.0);
                    CHECK(r.nnz_total > 0);
                    const auto c = algorithms::build_vqa_circuit(
                        d, n, algorithms::LayerVariant::R3);
                    if (b == Backend::Dense) {
                        CHECK(r.nnz_total == c.ops().size() * ipow(d, 2 * n));
                        CHECK(r.bytes_estimate == 16 * r.nnz_total);
                    } else {
                        std::size_t expected = 0;
                        for (const auto &op : c.ops()) {
                            expected += *closed_form_nnz(op, c.reg());
                        }
                        CHECK(r.nnz_total == expected);
                        CHECK(r.bytes_estimate == 24 * r.nnz_total);
                    }
                }
            }
        }
    }
}

TEST_CASE("Cells above the memory budget are skipped", "[bench]") {
    BenchConfig cfg;
    cfg.dim_min = 4;
    cfg.dim_max = 4;
    cfg.wires_min = 3;
    cfg.wires_max = 3;
    cfg.trials = 1;
    cfg.backends = {Backend::Dense};
    cfg.mem_budget_bytes = 1 << 20;
    const auto rows = run_bench(cfg);
    REQUIRE(rows.size() == 2);
    CHECK_FALSE(rows[0].mean_ms.has_value());
    CHECK(rows[0].bytes_estimate > cfg.mem_budget_bytes);
    std::ostringstream csv;
    write_csv(csv, rows);
    CHECK(csv.str().find("dense,3,4,init,1,skipped,skipped,") != std::string::npos);
}

TEST_CASE("CSV header and shape", "[bench]") {
    BenchConfig cfg;
    cfg.dim_min = cfg.dim_max = 2;
    cfg.wires_min = cfg.wires_max = 1;
    cfg.trials = 1;
    cfg.backends = {Backend::Sparse};
    std::ostringstream csv;
    write_csv(csv, run_bench(cfg));
    std::istringstream in(csv.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "backend,n_qudits,dim,phase,trials,mean_ms,std_ms,nnz_total,bytes_estimate");
    std::getline(in, line);
    CHECK(line.rfind("sparse,1,2,init,1,", 0) == 0);
    std::getline(in, line);
    CHECK(line.rfind("sparse,1,2,run,1,", 0) == 0);
    CHECK(to_json(run_bench(cfg)).find("\"phase\": \"run\"") != std::string::npos);
}

TEST_CASE("Bench rejects bad configs", "[bench]") {
    BenchConfig cfg;
    cfg.trials = 0;
    CHECK_THROWS_AS(run_bench(cfg), DomainError);
    cfg.trials = 1;
    cfg.dim_min = 1;
    CHECK_THROWS_AS(run_bench(cfg), DomainError);
}
