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
#include <ostream>
#include <string>
#include <vector>

#include "qudit/circuit.hpp"

namespace qudit::bench {

struct BenchConfig {
    std::size_t dim_min = 2;
    std::size_t dim_max = 8;
    std::size_t wires_min = 1;
    std::size_t wires_max = 4;
    std::size_t trials = 20;
    std::vector<Backend> backends{Backend::Dense, Backend::Sparse};
    std::uint64_t seed = 0;
    /// Cells whose estimated operator storage exceeds this are skipped.
    std::size_t mem_budget_bytes = std::size_t{512} << 20;
};

struct BenchRecord {
    Backend backend = Backend::Sparse;
    std::size_t n_qudits = 0;
    std::size_t dim = 0;
    /// "init" (operator construction) or "run" (application to |0...0>).
    std::string phase;
    std::size_t trials = 0;
    /// Unset when the cell was skipped.
    std::optional<double> mean_ms;
    std::optional<double> std_ms;
    std::size_t nnz_total = 0;
    std::size_t bytes_estimate = 0;
};

inline constexpr const char *kCsvHeader =
    "backend,n_qudits,dim,phase,trials,mean_ms,std_ms,nnz_total,bytes_estimate";

/// Stored non-zeros of the sparse embedding of `op` for a generic angle, or
/// nullopt for custom gates.
[[nodiscard]] std::optional<std::size_t> closed_form_nnz(const GateSpec &op,
                                                         const Register &reg);

/// Storage estimate for a compiled circuit without building it.
struct Footprint {
    std::size_t elements = 0;
    std::size_t bytes = 0;
};
[[nodiscard]] Footprint estimate_footprint(const Circuit &circuit,
                                           Backend backend);

/**
 * @brief Times construction and execution of the R3 variational circuit.
 *
 * Rows come out ordered by backend, then wire count, then dimension, then
 * phase. One untimed warm-up precedes the timed trials. Sparse cells check
 * every op's non-zero count against closed_form_nnz and throw on mismatch.
 */
[[nodiscard]] std::vector<BenchRecord> run_bench(const BenchConfig &config);

void write_csv(std::ostream &out, const std::vector<BenchRecord> &records);
[[nodiscard]] std::string to_json(const std::vector<BenchRecord> &records,
                                  int indent = 2);

} // namespace qudit::bench
