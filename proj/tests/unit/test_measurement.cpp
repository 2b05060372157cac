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

#include <cmath>
#include <numeric>

#include "qudit/circuit.hpp"
#include "qudit/measurement.hpp"
#include "random_circuit.hpp"

using namespace qudit;
using Catch::Matchers::WithinAbs;

TEST_CASE("Basis state gives a deterministic marginal", "[measurement]") {
    const auto s = parse_state("0-1-3", Register({2, 3, 4}));
    const std::vector<std::size_t> wires{0, 1};
    const auto t = probabilities(s, wires);
    REQUIRE(t.probs.size() == 6);
    CHECK(t.labels.front() == "0-0");
    CHECK(t.labels.back() == "1-2");
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(t.probs[i] == (t.labels[i] == "0-1" ? 1.0 : 0.0));
    }
    CHECK(t.at("0-1") == 1.0);
    CHECK_THROWS_AS(t.at("0-7"), DomainError);
}

TEST_CASE("Bell state marginal", "[measurement]") {
    const double s = 1.0 / std::sqrt(2.0);
    const StateVector bell(Register::uniform(2, 2), {s, 0.0, 0.0, s});
    const std::vector<std::size_t> w0{0};
    const auto t = probabilities(bell, w0);
    CHECK_THAT(t.probs[0], WithinAbs(0.5, 1e-15));
    CHECK_THAT(t.probs[1], WithinAbs(0.5, 1e-15));
}

TEST_CASE("Fourier on two qutrits is uniform over nine outcomes", "[measurement]") {
    Circuit c(Register::uniform(3, 2));
    c.h({0, 1});
    const auto out = apply(c, StateVector::basis(c.reg(), 0));
    const std::vector<std::size_t> both{0, 1};
    for (double p : probabilities(out, both).probs) {
        CHECK_THAT(p, WithinAbs(1.0 / 9.0, 1e-15));
    }
}

TEST_CASE("Outcome order follows the listed wires", "[measurement]") {
    const auto s = parse_state("0-1-3", Register({2, 3, 4}));
    const std::vector<std::size_t> wires{2, 0};
    const auto t = probabilities(s, wires);
    REQUIRE(t.probs.size() == 8);
    CHECK(t.at("3-0") == 1.0);
}

TEST_CASE("Invalid wire lists", "[measurement]") {
    const auto s = StateVector::basis(Register({2, 3}), 0);
    CHECK_THROWS_AS(probabilities(s, std::vector<std::size_t>{}), DomainError);
    CHECK_THROWS_AS(probabilities(s, std::vector<std::size_t>{0, 0}), DomainError);
    CHECK_THROWS_AS(probabilities(s, std::vector<std::size_t>{2}), DomainError);
}

TEST_CASE("Marginal consistency", "[measurement]") {
    Rng rng(41);
    for (int i = 0; i < 30; ++i) {
        const Register reg({2, 3, 4});
        const auto s = testing::random_state(rng, reg);
        const std::vector<std::size_t> ab{1, 2, 0};
        const std::vector<std::size_t> a{1};
        const auto joint = probabilities(s, ab);
        const auto direct = probabilities(s, a);
        std::vector<double> marg(3, 0.0);
        for (std::size_t o = 0; o < joint.probs.size(); ++o) {
            marg[o / 8] += joint.probs[o];
        }
        for (std::size_t k = 0; k < 3; ++k) {
            REQUIRE(std::abs(marg[k] - direct.probs[k]) <= 1e-12);
        }
    }
}

TEST_CASE("Full measurement sums to one on random circuits", "[measurement]") {
    Rng rng(42);
    for (int i = 0; i < 100; ++i) {
        const auto c = testing::random_circuit(rng, {});
        const auto out = apply(c, StateVector::basis(c.reg(), 0));
        std::vector<std::size_t> all(c.reg().wires());
        std::iota(all.begin(), all.end(), std::size_t{0});
        const auto t = probabilities(out, all);
        double total = 0.0;
        for (double p : t.probs) {
            REQUIRE(p >= 0.0);
            total += p;
        }
        REQUIRE(std::abs(total - 1.0) <= 1e-10);
    }
}

TEST_CASE("Sampling a deterministic distribution", "[measurement]") {
    const std::vector<double> p{0.0, 0.0, 1.0, 0.0};
    const auto h = sample(p, 777, 3);
    CHECK(h == std::vector<std::uint64_t>{0, 0, 777, 0});
}

TEST_CASE("Uniform sampling stays within five sigma", "[measurement]") {
    const std::vector<double> p(9, 1.0 / 9.0);
    const auto h = sample(p, 9000, 2024);
    const double sigma = std::sqrt(9000.0 * (1.0 / 9.0) * (8.0 / 9.0));
    std::uint64_t total = 0;
    for (auto c : h) {
        CHECK(std::abs(static_cast<double>(c) - 1000.0) <= 5.0 * sigma);
        total += c;
    }
    CHECK(total == 9000);
}

TEST_CASE("Zero shots", "[measurement]") {
    const std::vector<double> p{0.5, 0.5};
    CHECK(sample(p, 0, 1) == std::vector<std::uint64_t>{0, 0});
}

TEST_CASE("Sampling is a pure function of its inputs", "[measurement]") {
    const std::vector<double> p{0.1, 0.2, 0.3, 0.4};
    CHECK(sample(p, 5000, 8) == sample(p, 5000, 8));
    CHECK(sample(p, 5000, 8) != sample(p, 5000, 9));
    CHECK_THROWS_AS(sample(std::vector<double>{0.5, -0.1}, 10, 1), DomainError);
    CHECK_THROWS_AS(sample(std::vector<double>{0.0, 0.0}, 10, 1), DomainError);
}

TEST_CASE("First draws of the pinned generator", "[measurement]") {
    // mt19937_64 with seed 5489 starts 14514284786278117030; its top 53 bits
    // scaled by 2^-53 give 0.7868209548678020.
    Rng rng(5489);
    CHECK_THAT(unit_uniform(rng), WithinAbs(14514284786278117030.0 / 18446744073709551616.0,
                                            1e-15));
    // u = 0.7868... lands in the last bin of {0.25, 0.25, 0.25, 0.25}.
    const std::vector<double> p(4, 0.25);
    CHECK(sample(p, 1, 5489) == std::vector<std::uint64_t>{0, 0, 0, 1});
}

TEST_CASE("measure and JSON layout", "[measurement]") {
    const auto s = parse_state("1-2", Register({2, 3}));
    const std::vector<std::size_t> wires{0, 1};
    const auto m = measure(s, wires, 10, 42);
    CHECK(m.shots == 10);
    CHECK(m.seed == 42);
    CHECK(std::accumulate(m.histogram.begin(), m.histogram.end(), std::uint64_t{0}) ==
          10);
    const std::string j = to_json(m, -1);
    CHECK(j.rfind("{\"probabilities\":{\"0-0\":0.0,", 0) == 0);
    CHECK(j.find("\"histogram\":{\"0-0\":0,") != std::string::npos);
    CHECK(j.find("\"1-2\":10}") != std::string::npos);
    CHECK(j.find("\"shots\":10,\"seed\":42}") != std::string::npos);
    CHECK(j == to_json(measure(s, wires, 10, 42), -1));
}
