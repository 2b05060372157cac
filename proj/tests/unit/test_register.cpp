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
#include <limits>

#include "qudit/register.hpp"

using namespace qudit;
using Catch::Matchers::WithinAbs;

TEST_CASE("Register strides and total size", "[register]") {
    const Register reg({2, 3, 4});
    CHECK(reg.wires() == 3);
    CHECK(reg.total_size() == 24);
    CHECK(reg.stride(0) == 12);
    CHECK(reg.stride(1) == 4);
    CHECK(reg.stride(2) == 1);
    CHECK_FALSE(reg.is_uniform());
    CHECK(Register::uniform(3, 2).is_uniform());
}

TEST_CASE("Register rejects bad dimensions", "[register]") {
    CHECK_THROWS_AS(Register({2, 1}), DomainError);
    CHECK_THROWS_AS(Register({0}), DomainError);
    const std::size_t big = std::size_t{1} << 33;
    CHECK_THROWS_AS(Register({big, big, big}), DomainError);
}

TEST_CASE("encode_index examples", "[register]") {
    const std::vector<std::size_t> a{2, 2};
    CHECK(encode_index(a, Register({3, 3})) == 8);
    const std::vector<std::size_t> b{0, 1, 3};
    CHECK(encode_index(b, Register({2, 3, 4})) == 7);
    const std::vector<std::size_t> c{0};
    CHECK(encode_index(c, Register({5})) == 0);
}

TEST_CASE("encode_index rejects out-of-range digits", "[register]") {
    const std::vector<std::size_t> bad{0, 3, 0};
    CHECK_THROWS_AS(encode_index(bad, Register({2, 3, 4})), DomainError);
    const std::vector<std::size_t> short_list{0, 1};
    CHECK_THROWS_AS(encode_index(short_list, Register({2, 3, 4})), DomainError);
}

TEST_CASE("decode_index examples", "[register]") {
    CHECK(decode_index(8, Register({3, 3})) == std::vector<std::size_t>{2, 2});
    CHECK(decode_index(7, Register({2, 3, 4})) ==
          std::vector<std::size_t>{0, 1, 3});
    CHECK(decode_index(0, Register({2, 2})) == std::vector<std::size_t>{0, 0});
    CHECK_THROWS_AS(decode_index(24, Register({2, 3, 4})), DomainError);
}

TEST_CASE("Mixed-radix order matches lexicographic enumeration", "[register]") {
    // Odometer over dims [2,3,4], last wire fastest.
    const Register reg({2, 3, 4});
    std::size_t expected = 0;
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
            for (std::size_t c = 0; c < 4; ++c) {
                const std::vector<std::size_t> digits{a, b, c};
                CHECK(encode_index(digits, reg) == expected);
                ++expected;
            }
        }
    }
}

TEST_CASE("encode/decode round trip on every small register", "[register]") {
    const std::vector<std::vector<std::size_t>> shapes{
        {2}, {7}, {2, 2}, {3, 5}, {2, 3, 4}, {4, 2, 3}, {5, 5, 5, 5},
        {2, 3, 2, 3, 2, 3}, {10, 10, 10, 10}, {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}};
    for (const auto &dims : shapes) {
        const Register reg(dims);
        if (reg.total_size() > 10000) {
            continue;
        }
        for (std::size_t j = 0; j < reg.total_size(); ++j) {
            REQUIRE(encode_index(decode_index(j, reg), reg) == j);
        }
    }
}

TEST_CASE("Uniform encode equals sum of j_k d^(N-1-k)", "[register]") {
    for (std::size_t d = 2; d <= 5; ++d) {
        for (std::size_t n = 1; n <= 4; ++n) {
            const Register reg = Register::uniform(d, n);
            for (std::size_t j = 0; j < reg.total_size(); ++j) {
                const auto digits = decode_index(j, reg);
                std::size_t formula = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    std::size_t place = 1;
                    for (std::size_t e = 0; e < n - 1 - k; ++e) {
                        place *= d;
                    }
                    formula += digits[k] * place;
                }
                REQUIRE(encode_index(digits, reg) == formula);
            }
        }
    }
}

TEST_CASE("parse_state examples", "[register]") {
    const auto s = parse_state("0-1-3", Register({2, 3, 4}));
    CHECK(s[7] == Complex{1.0, 0.0});
    CHECK_THAT(s.norm(), WithinAbs(1.0, 1e-15));
    CHECK(parse_state("0-0", Register({5, 5}))[0] == Complex{1.0, 0.0});
    const auto t = parse_state("2-2", Register({3, 3}));
    CHECK(t[8] == Complex{1.0, 0.0});
    std::size_t ones = 0;
    for (auto a : t.amplitudes()) {
        ones += (a == Complex{1.0, 0.0}) ? 1 : 0;
        CHECK((a == Complex{} || a == Complex{1.0, 0.0}));
    }
    CHECK(ones == 1);
}

TEST_CASE("parse_label error kinds are distinct", "[register]") {
    const Register reg({2, 3, 4});
    auto kind_of = [&](std::string_view label) {
        try {
            (void)parse_label(label, reg);
        } catch (const ParseError &e) {
            return e.kind();
        }
        FAIL("no ParseError for '" << label << "'");
        return ParseError::Kind::TokenCount;
    };
    CHECK(kind_of("0-1") == ParseError::Kind::TokenCount);
    CHECK(kind_of("0-1-3-0") == ParseError::Kind::TokenCount);
    CHECK(kind_of("") == ParseError::Kind::TokenCount);
    CHECK(kind_of("0-a-3") == ParseError::Kind::NonNumeric);
    CHECK(kind_of("0- 1-3") == ParseError::Kind::NonNumeric);
    CHECK(kind_of("0--3") == ParseError::Kind::NonNumeric);
    CHECK(kind_of("0-3-3") == ParseError::Kind::OutOfRange);
    CHECK(kind_of("2-0-0") == ParseError::Kind::OutOfRange);
}

TEST_CASE("format_label inverts parse_label", "[register]") {
    const Register reg({2, 3, 4});
    for (std::size_t j = 0; j < reg.total_size(); ++j) {
        const auto digits = decode_index(j, reg);
        CHECK(parse_label(format_label(digits), reg) == digits);
    }
    const std::vector<std::size_t> d{0, 1, 3};
    CHECK(format_label(d) == "0-1-3");
}

TEST_CASE("StateVector length must match the register", "[register]") {
    CHECK_THROWS_AS(StateVector(Register({2, 2}), std::vector<Complex>(3)),
                    DomainError);
    CHECK_THROWS_AS(StateVector::basis(Register({2, 2}), 4), DomainError);
}
