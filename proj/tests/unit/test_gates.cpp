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

#include "qudit/gates.hpp"
#include "random_circuit.hpp"

using namespace qudit;
using namespace qudit::gates;
using Catch::Matchers::WithinAbs;

namespace {

constexpr Complex kI{0.0, 1.0};

std::vector<Generator> all_generators(std::size_t d) {
    std::vector<Generator> out;
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = j + 1; k < d; ++k) {
            out.push_back(Generator::x(j, k));
            out.push_back(Generator::y(j, k));
        }
    }
    for (std::size_t j = 1; j < d; ++j) {
        out.push_back(Generator::z(j));
    }
    return out;
}

DenseOperator from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    DenseOperator m(rows.size());
    std::size_t r = 0;
    for (const auto &row : rows) {
        std::size_t c = 0;
        for (const auto &v : row) {
            m(r, c++) = v;
        }
        ++r;
    }
    return m;
}

bool is_identity(const SparseOperator &op) {
    return max_abs_diff(to_dense(op), DenseOperator::identity(op.dim())) == 0.0;
}

} // namespace

TEST_CASE("NOT gate", "[gates]") {
    CHECK(max_abs_diff(to_dense(build_not(2)), from_rows({{0, 1}, {1, 0}})) == 0.0);
    const auto x3 = build_not(3);
    CHECK(x3.at(0, 2) == Complex{1.0, 0.0});
    CHECK(x3.nnz() == 3);
    const auto x42 = to_dense(build_not(4, 2));
    CHECK(max_abs_diff(matmul(x42, x42), DenseOperator::identity(4)) == 0.0);
    CHECK_THROWS_AS(build_not(3, 3), DomainError);
    CHECK_THROWS_AS(build_not(1), DomainError);
}

TEST_CASE("Phase gate", "[gates]") {
    CHECK(max_abs_diff(to_dense(build_phase(2)), from_rows({{1, 0}, {0, -1}})) <=
          1e-15);
    CHECK(std::abs(build_phase(3).at(1, 1) - std::exp(2.0 * kPi * kI / 3.0)) <=
          1e-15);
    const auto p5 = to_dense(build_phase(5));
    CHECK(max_abs_diff(power(p5, 5), DenseOperator::identity(5)) <= 1e-10);
    CHECK(build_phase(6).nnz() == 6);
}

TEST_CASE("Fourier gate", "[gates]") {
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(max_abs_diff(build_fourier(2), from_rows({{s, s}, {s, -s}})) <= 1e-15);
    const auto h3 = build_fourier_sparse(3);
    const std::vector<Complex> e0{1.0, 0.0, 0.0};
    for (auto a : matvec(h3, e0)) {
        CHECK(std::abs(a - 1.0 / std::sqrt(3.0)) <= 1e-15);
    }
    CHECK(max_abs_diff(power(build_fourier(4), 4), DenseOperator::identity(4)) <=
          1e-10);
    CHECK(check_unitary(build_fourier_sparse(6), 1e-10));
}

TEST_CASE("Gell-Mann generators at d=2 are the Pauli matrices", "[gates]") {
    CHECK(max_abs_diff(to_dense(build_gellmann(Generator::x(0, 1), 2)),
                       from_rows({{0, 1}, {1, 0}})) == 0.0);
    CHECK(max_abs_diff(to_dense(build_gellmann(Generator::y(0, 1), 2)),
                       from_rows({{0, -kI}, {kI, 0}})) == 0.0);
    CHECK(max_abs_diff(to_dense(build_gellmann(Generator::z(1), 2)),
                       from_rows({{1, 0}, {0, -1}})) <= 1e-15);
}

TEST_CASE("Gell-Mann generators are Hermitian and traceless", "[gates]") {
    for (std::size_t d = 2; d <= 6; ++d) {
        for (const auto &g : all_generators(d)) {
            const auto s = to_dense(build_gellmann(g, d));
            CHECK(max_abs_diff(s, adjoint(s)) == 0.0);
            Complex tr{};
            for (std::size_t i = 0; i < d; ++i) {
                tr += s(i, i);
            }
            CHECK(std::abs(tr) <= 1e-14);
            // Normalized as Tr(S^2) = 2.
            Complex tr2{};
            const auto s2 = matmul(s, s);
            for (std::size_t i = 0; i < d; ++i) {
                tr2 += s2(i, i);
            }
            CHECK(std::abs(tr2 - 2.0) <= 1e-13);
        }
    }
}

TEST_CASE("Generator validation", "[gates]") {
    CHECK_THROWS_AS(build_gellmann(Generator::x(1, 1), 3), DomainError);
    CHECK_THROWS_AS(build_gellmann(Generator::x(2, 1), 3), DomainError);
    CHECK_THROWS_AS(build_gellmann(Generator::y(0, 3), 3), DomainError);
    CHECK_THROWS_AS(build_gellmann(Generator::z(0), 3), DomainError);
    CHECK_THROWS_AS(build_gellmann(Generator::z(3), 3), DomainError);
    CHECK_NOTHROW(build_gellmann(Generator::z(2), 3));
}

TEST_CASE("Rotation examples", "[gates]") {
    CHECK(max_abs_diff(to_dense(build_rotation(Generator::x(0, 1), kPi, 2)),
                       from_rows({{0, -kI}, {-kI, 0}})) <= 1e-15);
    const double t = 0.9;
    const double c = std::cos(t / 2);
    const double s = std::sin(t / 2);
    CHECK(max_abs_diff(to_dense(build_rotation(Generator::x(0, 1), t, 3)),
                       from_rows({{c, -kI * s, 0}, {-kI * s, c, 0}, {0, 0, 1}})) <=
          1e-15);
    for (std::size_t d = 2; d <= 5; ++d) {
        for (const auto &g : all_generators(d)) {
            CHECK(is_identity(build_rotation(g, 0.0, d)));
        }
    }
}

TEST_CASE("Rotation sparse entries follow the closed form", "[gates]") {
    const double t = 1.234;
    const auto ry = build_rotation(Generator::y(1, 3), t, 5);
    CHECK(ry.at(1, 3) == Complex{-std::sin(t / 2), 0.0});
    CHECK(ry.at(3, 1) == Complex{std::sin(t / 2), 0.0});
    CHECK(ry.at(1, 1) == Complex{std::cos(t / 2), 0.0});
    CHECK(ry.at(4, 4) == Complex{1.0, 0.0});
    const auto rz = build_rotation(Generator::z(2), t, 4);
    const auto diag = z_diagonal(2, 4);
    for (std::size_t m = 0; m < 4; ++m) {
        CHECK(std::abs(rz.at(m, m) - std::exp(-kI * t * diag[m] / 2.0)) <= 1e-15);
    }
    CHECK(rz.at(3, 3) == Complex{1.0, 0.0});
}

TEST_CASE("Rotations compose additively", "[gates]") {
    Rng rng(17);
    for (std::size_t d = 2; d <= 5; ++d) {
        for (const auto &g : all_generators(d)) {
            const double a = testing::angle(rng);
            const double b = testing::angle(rng);
            const auto prod = matmul(to_dense(build_rotation(g, a, d)),
                                     to_dense(build_rotation(g, b, d)));
            CHECK(max_abs_diff(prod, to_dense(build_rotation(g, a + b, d))) <=
                  1e-10);
        }
    }
}

TEST_CASE("CNOT", "[gates]") {
    const auto cx = build_cnot(Register::uniform(2, 2), 0, 1);
    CHECK(max_abs_diff(to_dense(cx), from_rows({{1, 0, 0, 0},
                                                {0, 1, 0, 0},
                                                {0, 0, 0, 1},
                                                {0, 0, 1, 0}})) == 0.0);
    const Register r3 = Register::uniform(3, 2);
    const auto c3 = build_cnot(r3, 0, 1);
    const std::vector<std::size_t> in{2, 1};
    const std::vector<std::size_t> out{2, 0};
    CHECK(c3.at(encode_index(out, r3), encode_index(in, r3)) == Complex{1.0, 0.0});
    CHECK(max_abs_diff(power(to_dense(c3), 3), DenseOperator::identity(9)) == 0.0);
    CHECK_THROWS_AS(build_cnot(r3, 1, 1), DomainError);
    CHECK_THROWS_AS(build_cnot(r3, 0, 2), DomainError);
}

TEST_CASE("CNOT handles both wire orders and mixed dimensions", "[gates]") {
    const Register reg({2, 3, 4});
    for (std::size_t c = 0; c < 3; ++c) {
        for (std::size_t t = 0; t < 3; ++t) {
            if (c == t) {
                continue;
            }
            const auto op = build_cnot(reg, c, t);
            REQUIRE(op.nnz() == reg.total_size());
            for (std::size_t j = 0; j < reg.total_size(); ++j) {
                auto digits = decode_index(j, reg);
                digits[t] = (digits[t] + digits[c]) % reg.dim(t);
                CHECK(op.at(encode_index(digits, reg), j) == Complex{1.0, 0.0});
            }
        }
    }
}

TEST_CASE("SWAP", "[gates]") {
    const Register r3 = Register::uniform(3, 2);
    const auto sw = build_swap(r3, 0, 1);
    const std::vector<std::size_t> a{0, 2};
    const std::vector<std::size_t> b{2, 0};
    CHECK(sw.at(encode_index(b, r3), encode_index(a, r3)) == Complex{1.0, 0.0});
    const auto s4 = to_dense(build_swap(Register::uniform(4, 2), 0, 1));
    CHECK(max_abs_diff(matmul(s4, s4), DenseOperator::identity(16)) == 0.0);

    const Register r = Register::uniform(3, 3);
    const auto s02 = build_swap(r, 0, 2);
    for (std::size_t j = 0; j < r.total_size(); ++j) {
        auto digits = decode_index(j, r);
        std::swap(digits[0], digits[2]);
        CHECK(s02.at(encode_index(digits, r), j) == Complex{1.0, 0.0});
    }
    CHECK_THROWS_AS(build_swap(Register({2, 3}), 0, 1), DomainError);
}

TEST_CASE("Controlled rotation", "[gates]") {
    const Register r2 = Register::uniform(2, 2);
    const auto crx = to_dense(build_controlled_rotation(r2, 0, 1, Generator::x(0, 1), kPi));
    const auto cx = to_dense(build_cnot(r2, 0, 1));
    // Control 0 block is identity; control 1 block is -i times the flip.
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            const Complex expected = r < 2 ? cx(r, c) : -kI * cx(r, c);
            CHECK(std::abs(crx(r, c) - expected) <= 1e-15);
        }
    }

    const Register r3 = Register::uniform(3, 2);
    const auto crz = build_controlled_rotation(r3, 0, 1, Generator::z(1), 0.4);
    CHECK(max_abs_diff(to_dense(crz),
                       dense::controlled_rotation(r3, 0, 1, Generator::z(1), 0.4)) <=
          1e-12);
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
            CHECK(crz.at(a, b) == (a == b ? Complex{1.0, 0.0} : Complex{}));
        }
    }
}

TEST_CASE("MCX", "[gates]") {
    const Register q3 = Register::uniform(2, 3);
    const std::vector<std::size_t> two{0, 1};
    const auto toffoli = build_mcx(q3, two, 2);
    for (std::size_t j = 0; j < 8; ++j) {
        const std::size_t expected = j >= 6 ? (j ^ 1) : j;
        CHECK(toffoli.at(expected, j) == Complex{1.0, 0.0});
    }

    const Register r3 = Register::uniform(3, 2);
    const std::vector<std::size_t> one{0};
    const auto m = build_mcx(r3, one, 1);
    // Cases form: |x>|y> -> |x>|y + 1 mod 3> only when x = 2.
    DenseOperator cases(9);
    for (std::size_t x = 0; x < 3; ++x) {
        for (std::size_t y = 0; y < 3; ++y) {
            const std::size_t y2 = x == 2 ? (y + 1) % 3 : y;
            cases(3 * x + y2, 3 * x + y) = 1.0;
        }
    }
    CHECK(max_abs_diff(to_dense(m), cases) == 0.0);

    const std::vector<std::size_t> bad{1};
    CHECK_THROWS_AS(build_mcx(r3, bad, 1), DomainError);
    const std::vector<std::size_t> none;
    CHECK_THROWS_AS(build_mcx(r3, none, 1), DomainError);
}

TEST_CASE("Custom gates", "[gates]") {
    CHECK(is_identity(build_custom(DenseOperator::identity(3))));
    const Register r = Register::uniform(3, 2);
    DenseOperator oracle = DenseOperator::identity(9);
    oracle(8, 8) = -1.0;
    const auto u = build_custom(oracle);
    CHECK(check_unitary(u, 1e-10));
    CHECK(u.nnz() == 9);
    CHECK(u.at(8, 8) == Complex{-1.0, 0.0});
    (void)r;

    DenseOperator d12(2);
    d12(0, 0) = 1.0;
    d12(1, 1) = 2.0;
    try {
        (void)build_custom(d12);
        FAIL("expected ValidationError");
    } catch (const ValidationError &e) {
        CHECK_THAT(e.deviation(), WithinAbs(3.0, 1e-15));
    }
}

TEST_CASE("Sparse builders equal dense references for d in 2..6", "[gates]") {
    Rng rng(12345);
    double worst = 0.0;
    for (std::size_t d = 2; d <= 6; ++d) {
        for (std::size_t s = 0; s < d; ++s) {
            worst = std::max(worst, max_abs_diff(to_dense(build_not(d, s)),
                                                 dense::not_gate(d, s)));
        }
        worst = std::max(worst, max_abs_diff(to_dense(build_phase(d)), dense::phase(d)));
        worst = std::max(worst, max_abs_diff(build_fourier(d), dense::fourier(d)));
        worst = std::max(worst, max_abs_diff(to_dense(build_fourier_sparse(d)),
                                             dense::fourier(d)));
        const Register reg = Register::uniform(d, 2);
        worst = std::max(worst, max_abs_diff(to_dense(build_cnot(reg, 0, 1)),
                                             dense::cnot(reg, 0, 1)));
        worst = std::max(worst, max_abs_diff(to_dense(build_cnot(reg, 1, 0, d - 1)),
                                             dense::cnot(reg, 1, 0, d - 1)));
        worst = std::max(worst, max_abs_diff(to_dense(build_swap(reg, 0, 1)),
                                             dense::swap(reg, 0, 1)));
        const std::vector<std::size_t> ctl{1};
        worst = std::max(worst, max_abs_diff(to_dense(build_mcx(reg, ctl, 0)),
                                             dense::mcx(reg, ctl, 0)));
        for (const auto &g : all_generators(d)) {
            worst = std::max(worst, max_abs_diff(to_dense(build_gellmann(g, d)),
                                                 dense::gellmann(g, d)));
            for (int i = 0; i < 10; ++i) {
                const double t = testing::angle(rng);
                const auto r = build_rotation(g, t, d);
                worst = std::max(worst, max_abs_diff(to_dense(r),
                                                     dense::rotation(g, t, d)));
                REQUIRE(check_unitary(r, 1e-10));
                if (i < 2) {
                    const auto cr = build_controlled_rotation(reg, 1, 0, g, t);
                    worst = std::max(
                        worst, max_abs_diff(to_dense(cr),
                                            dense::controlled_rotation(reg, 1, 0, g, t)));
                    REQUIRE(check_unitary(cr, 1e-10));
                }
            }
        }
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("Closed-form nnz counts", "[gates]") {
    Rng rng(8);
    for (std::size_t d = 2; d <= 6; ++d) {
        CHECK(build_not(d).nnz() == d);
        CHECK(build_phase(d).nnz() == d);
        const Register reg = Register::uniform(d, 2);
        CHECK(build_cnot(reg, 0, 1).nnz() == d * d);
        CHECK(build_swap(reg, 0, 1).nnz() == d * d);
        const std::vector<std::size_t> ctl{0};
        CHECK(build_mcx(reg, ctl, 1).nnz() == d * d);
        const double t = 0.3 + unit_uniform(rng);
        for (const auto &g : all_generators(d)) {
            const bool z = g.axis == Axis::Z;
            CHECK(build_rotation(g, t, d).nnz() == (z ? d : d + 2));
            if (!z) {
                CHECK(build_controlled_rotation(reg, 0, 1, g, t).nnz() ==
                      d * (d + 2) - 2);
            }
        }
    }
}

TEST_CASE("Derivative generators give dU/dtheta", "[gates]") {
    Rng rng(77);
    const double h = 1e-6;
    for (std::size_t d = 2; d <= 4; ++d) {
        for (const auto &g : all_generators(d)) {
            const double t = testing::angle(rng);
            const auto gu = matmul(to_dense(rotation_generator(g, d)),
                                   to_dense(build_rotation(g, t, d)));
            const auto fd = scaled(add(to_dense(build_rotation(g, t + h, d)),
                                       scaled(to_dense(build_rotation(g, t - h, d)), -1.0)),
                                   1.0 / (2.0 * h));
            CHECK(max_abs_diff(gu, fd) <= 1e-8);

            const Register reg = Register::uniform(d, 2);
            const auto cgu = matmul(to_dense(controlled_rotation_generator(reg, 0, 1, g)),
                                    to_dense(build_controlled_rotation(reg, 0, 1, g, t)));
            const auto cfd = scaled(
                add(to_dense(build_controlled_rotation(reg, 0, 1, g, t + h)),
                    scaled(to_dense(build_controlled_rotation(reg, 0, 1, g, t - h)), -1.0)),
                1.0 / (2.0 * h));
            CHECK(max_abs_diff(cgu, cfd) <= 1e-8);
        }
    }
}

TEST_CASE("Qubit reductions", "[gates]") {
    const double t = 0.77;
    const double c = std::cos(t / 2);
    const double s = std::sin(t / 2);
    CHECK(max_abs_diff(to_dense(build_rotation(Generator::y(0, 1), t, 2)),
                       from_rows({{c, -s}, {s, c}})) <= 1e-15);
    CHECK(max_abs_diff(to_dense(build_rotation(Generator::z(1), t, 2)),
                       from_rows({{std::exp(-kI * t / 2.0), 0},
                                  {0, std::exp(kI * t / 2.0)}})) <= 1e-15);
    // X = i R_x(pi) at d = 2.
    CHECK(max_abs_diff(scaled(to_dense(build_rotation(Generator::x(0, 1), kPi, 2)), kI),
                       to_dense(build_not(2))) <= 1e-15);
}
