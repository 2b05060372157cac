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

#include <algorithm>
#include <cstdlib>

#include "qudit/simd/kernels.hpp"
#include "qudit/sparsela.hpp"
#include "random_circuit.hpp"

using namespace qudit;

namespace {

std::vector<Triplet> random_triplets(Rng &rng, std::size_t n, std::size_t count) {
    std::vector<Triplet> e(count);
    for (auto &t : e) {
        t = {static_cast<std::uint32_t>(testing::pick(rng, 0, n - 1)),
             static_cast<std::uint32_t>(testing::pick(rng, 0, n - 1)),
             {unit_uniform(rng) - 0.5, unit_uniform(rng) - 0.5}};
    }
    std::sort(e.begin(), e.end(), [](const Triplet &a, const Triplet &b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    return e;
}

double max_diff(const std::vector<Complex> &a, const std::vector<Complex> &b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

} // namespace

TEST_CASE("Scalar table is always available", "[simd]") {
    CHECK(simd::isa_supported(simd::Isa::Scalar));
    CHECK(simd::kernels(simd::Isa::Scalar).isa == simd::Isa::Scalar);
}

TEST_CASE("QUDIT_ISA=scalar is honoured by detection", "[simd]") {
    const char *prev = std::getenv("QUDIT_ISA");
    const std::string saved = prev ? prev : "";
    setenv("QUDIT_ISA", "scalar", 1);
    CHECK(simd::detect_isa() == simd::Isa::Scalar);
    if (prev) {
        setenv("QUDIT_ISA", saved.c_str(), 1);
    } else {
        unsetenv("QUDIT_ISA");
    }
}

TEST_CASE("AVX2 kernels match the scalar reference", "[simd]") {
    if (!simd::isa_supported(simd::Isa::Avx2)) {
        SKIP("AVX2 not available on this machine or build");
    }
    const auto &s = simd::kernels(simd::Isa::Scalar);
    const auto &v = simd::kernels(simd::Isa::Avx2);
    Rng rng(99);
    for (std::size_t n = 1; n <= 37; ++n) {
        const auto x = testing::random_vector(rng, n);
        const auto y = testing::random_vector(rng, n);

        const auto m = testing::random_vector(rng, n * n);
        std::vector<Complex> ys(n), yv(n);
        s.dense_matvec(m.data(), n, x.data(), ys.data());
        v.dense_matvec(m.data(), n, x.data(), yv.data());
        REQUIRE(max_diff(ys, yv) <= 1e-13);

        const auto e = random_triplets(rng, n, 3 * n);
        s.coo_matvec(e.data(), e.size(), x.data(), ys.data(), n);
        v.coo_matvec(e.data(), e.size(), x.data(), yv.data(), n);
        REQUIRE(max_diff(ys, yv) <= 1e-13);

        std::vector<double> as(n), av(n);
        s.abs2(x.data(), as.data(), n);
        v.abs2(x.data(), av.data(), n);
        for (std::size_t i = 0; i < n; ++i) {
            REQUIRE(std::abs(as[i] - av[i]) <= 1e-15);
        }

        REQUIRE(std::abs(s.dot(x.data(), y.data(), n) -
                         v.dot(x.data(), y.data(), n)) <= 1e-13);
    }
}

TEST_CASE("dot conjugates its first argument", "[simd]") {
    const std::vector<Complex> a{{0.0, 1.0}, {2.0, 0.0}, {1.0, 1.0},
                                 {0.0, -1.0}, {3.0, 0.5}};
    const std::vector<Complex> b{{0.0, 1.0}, {1.0, 0.0}, {1.0, -1.0},
                                 {2.0, 0.0}, {1.0, 0.0}};
    Complex expected{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        expected += std::conj(a[i]) * b[i];
    }
    for (auto isa : {simd::Isa::Scalar, simd::Isa::Avx2}) {
        if (!simd::isa_supported(isa)) {
            continue;
        }
        const auto got = simd::kernels(isa).dot(a.data(), b.data(), a.size());
        CHECK(std::abs(got - expected) <= 1e-15);
    }
}

TEST_CASE("Empty coo input zeroes the output", "[simd]") {
    std::vector<Complex> y(4, Complex{7.0, 7.0});
    const std::vector<Complex> x(4, Complex{1.0, 0.0});
    for (auto isa : {simd::Isa::Scalar, simd::Isa::Avx2}) {
        if (!simd::isa_supported(isa)) {
            continue;
        }
        simd::kernels(isa).coo_matvec(nullptr, 0, x.data(), y.data(), 4);
        for (auto yi : y) {
            CHECK(yi == Complex{});
        }
    }
}

TEST_CASE("Switching the active table keeps results", "[simd]") {
    Rng rng(4);
    const auto m = testing::random_unitary(rng, 9);
    const auto x = testing::random_vector(rng, 9);
    const auto before = simd::kernels().isa;
    simd::set_active_isa(simd::Isa::Scalar);
    const auto ys = matvec(from_dense(m), x);
    if (simd::isa_supported(simd::Isa::Avx2)) {
        simd::set_active_isa(simd::Isa::Avx2);
        const auto yv = matvec(from_dense(m), x);
        CHECK(max_diff(ys, yv) <= 1e-13);
    }
    simd::set_active_isa(before);
}
