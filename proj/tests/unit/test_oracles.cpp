// Copyright 2026 The bpqm-lab Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "bpqm/codes.hpp"
#include "bpqm/gf2.hpp"
#include "bpqm/oracles.hpp"
#include "reference.hpp"

using namespace bpqm;
using namespace bpqm::oracles;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

std::vector<double> uniform(std::size_t n, double t) { return std::vector<double>(n, t); }

} // namespace

TEST_CASE("gram_matrix: unit diagonal and product overlaps", "[oracles]") {
    const auto code = codes::builtin_code("code5");
    const auto theta = uniform(5, 0.3);
    const auto G = gram_matrix(code, theta);
    REQUIRE(G.rows() == 8);
    const auto words = codes::codewords(code);
    for (Eigen::Index a = 0; a < 8; ++a) {
        for (Eigen::Index b = 0; b < 8; ++b) {
            double want = 1.0;
            for (std::size_t i = 0; i < 5; ++i) {
                if (words[static_cast<std::size_t>(a)][i] != words[static_cast<std::size_t>(b)][i]) {
                    want *= std::cos(0.3);
                }
            }
            CHECK_THAT(G(a, b), WithinAbs(want, 1e-15));
        }
    }
}

TEST_CASE("principal_sqrt squares back", "[oracles]") {
    const auto code = codes::builtin_code("code8");
    const auto G = gram_matrix(code, uniform(8, 0.4));
    const auto s = principal_sqrt(G);
    CHECK((s.root * s.root - G).norm() < 1e-10);
    CHECK(s.condition >= 1.0);
}

TEST_CASE("pgm_block_success: closed forms and the Walsh-Hadamard route", "[oracles]") {
    const auto rep1 = codes::builtin_code("rep1");
    for (double t : {0.2, 0.9}) {
        CHECK_THAT(pgm_block_success(rep1, uniform(1, t)), WithinAbs((1 + std::sin(t)) / 2, 1e-12));
    }
    for (const auto *name : {"code5", "code6", "code8", "rep4"}) {
        const auto code = codes::builtin_code(name);
        CHECK_THAT(pgm_block_success(code, uniform(code.n(), kPi / 2)), WithinAbs(1.0, 1e-12));
        std::mt19937_64 rng(31);
        std::uniform_real_distribution<double> u(0.05, 1.5);
        std::vector<double> theta(code.n());
        for (auto &t : theta) {
            t = u(rng);
        }
        CHECK_THAT(pgm_block_success(code, theta), WithinAbs(testing::wh_pgm(code, theta), 1e-10));
    }
    CHECK_THAT(pgm_block_success(codes::builtin_code("code5"), uniform(5, 0.2 * kPi)),
               WithinAbs(0.7026008686815913, 1e-12));
}

TEST_CASE("helstrom_bit_success: closed forms and independent routes", "[oracles]") {
    const auto rep1 = codes::builtin_code("rep1");
    CHECK_THAT(helstrom_bit_success(rep1, uniform(1, 0.6), 0),
               WithinAbs((1 + std::sin(0.6)) / 2, 1e-12));
    const auto code8 = codes::builtin_code("code8");
    for (std::size_t r = 0; r < 8; ++r) {
        CHECK_THAT(helstrom_bit_success(code8, uniform(8, kPi / 2), r), WithinAbs(1.0, 1e-12));
    }
    for (const auto *name : {"code5", "code6", "code8"}) {
        const auto code = codes::builtin_code(name);
        for (double t : {0.1, 0.25, 0.4}) {
            const auto theta = uniform(code.n(), t * kPi);
            for (std::size_t r = 0; r < code.n(); ++r) {
                const double got = helstrom_bit_success(code, theta, r);
                CHECK_THAT(got, WithinAbs(testing::wh_helstrom(code, theta, r), 1e-10));
                CHECK_THAT(got, WithinAbs(testing::dense_helstrom(code, theta, r), 1e-10));
            }
        }
    }
}

TEST_CASE("oracles do not depend on how the code is presented", "[oracles]") {
    // Same code as code5, with the parity checks combined differently.
    const auto code5 = codes::builtin_code("code5");
    const auto alt = codes::BinaryLinearCode::from_parity_check(
        Gf2Matrix::from_rows({{0, 1, 1, 1, 1}, {1, 0, 1, 0, 1}}));
    REQUIRE(codes::codewords(alt).size() == 8);
    for (const auto &x : codes::codewords(alt)) {
        REQUIRE(code5.contains(x));
    }
    const auto theta = std::vector<double>{0.3, 0.5, 0.7, 0.9, 1.1};
    CHECK_THAT(pgm_block_success(alt, theta), WithinAbs(pgm_block_success(code5, theta), 1e-12));
    for (std::size_t r = 0; r < 5; ++r) {
        CHECK_THAT(helstrom_bit_success(alt, theta, r),
                   WithinAbs(helstrom_bit_success(code5, theta, r), 1e-12));
    }
}

TEST_CASE("oracles: dimension guard", "[oracles]") {
    const auto wide = codes::BinaryLinearCode::from_parity_check(
        Gf2Matrix::from_rows({Bits(kMaxGramDimension + 2, 1)}));
    CHECK_THROWS_AS(pgm_block_success(wide, uniform(wide.n(), 0.3)), GuardError);
    CHECK_THROWS_AS(helstrom_bit_success(wide, uniform(wide.n(), 0.3), 0), GuardError);
    const auto long_code = codes::builtin_code("rep21");
    CHECK_THROWS_AS(classical_map_success(long_code, uniform(21, 0.3), Target::block()),
                    GuardError);
}

TEST_CASE("classical_bsc_param", "[oracles]") {
    CHECK_THAT(classical_bsc_param(kPi / 2), WithinAbs(0.0, 1e-15));
    CHECK_THAT(classical_bsc_param(1e-9), WithinAbs(0.5, 1e-8));
    CHECK_THAT(classical_bsc_param(0.2 * kPi), WithinAbs((1 - std::sin(0.2 * kPi)) / 2, 1e-15));
}

TEST_CASE("classical_map_success: closed forms", "[oracles]") {
    const auto rep2 = codes::builtin_code("rep2");
    for (double t : {0.15, 0.6, 1.2}) {
        const double p = classical_bsc_param(t);
        CHECK_THAT(classical_map_success(rep2, uniform(2, t), Target::block()),
                   WithinAbs(1 - p * p - p * (1 - p), 1e-12));
    }
    for (const auto *name : {"code5", "code8"}) {
        const auto code = codes::builtin_code(name);
        CHECK_THAT(classical_map_success(code, uniform(code.n(), kPi / 2), Target::block()),
                   WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("classical_map_success matches exhaustive enumeration", "[oracles]") {
    for (const auto *name : {"code5", "code6", "code8"}) {
        const auto code = codes::builtin_code(name);
        for (double t : {0.1, 0.2, 0.3}) {
            const auto theta = uniform(code.n(), t * kPi);
            CHECK_THAT(classical_map_success(code, theta, Target::block()),
                       WithinAbs(testing::brute_classical(code, theta, -1), 1e-12));
            for (std::size_t r : {std::size_t{0}, code.n() - 1}) {
                CHECK_THAT(classical_map_success(code, theta, Target::bit_at(r)),
                           WithinAbs(testing::brute_classical(code, theta, static_cast<int>(r)),
                                     1e-12));
            }
        }
    }
    const auto code8 = codes::builtin_code("code8");
    CHECK_THAT(classical_map_success(code8, uniform(8, 0.2 * kPi), Target::block()),
               WithinAbs(0.5599735582574412, 1e-12));
    CHECK_THAT(classical_map_success(code8, uniform(8, 0.2 * kPi), Target::bit_at(0)),
               WithinAbs(0.8161868758494747, 1e-12));
}

TEST_CASE("quantum optimum dominates the classical baselines", "[oracles]") {
    for (const auto *name : {"code5", "code6", "code8"}) {
        const auto code = codes::builtin_code(name);
        for (double t : {0.05, 0.15, 0.25, 0.35, 0.45}) {
            const auto theta = uniform(code.n(), t * kPi);
            CHECK(pgm_block_success(code, theta) >=
                  classical_map_success(code, theta, Target::block()) - 1e-12);
            for (std::size_t r = 0; r < code.n(); ++r) {
                CHECK(helstrom_bit_success(code, theta, r) >=
                      classical_map_success(code, theta, Target::bit_at(r)) - 1e-12);
            }
        }
    }
}

TEST_CASE("bit and block MAP decisions", "[oracles]") {
    const auto code = codes::builtin_code("code5");
    const std::vector<double> p(5, 0.1);
    CHECK(block_map_decision(code, p, Bits{0, 0, 0, 1, 1}) == Bits{1, 0, 0, 1, 1});
    CHECK(bit_map_decision(code, p, Bits{0, 0, 0, 1, 1}, 0) == 1);
    // Bit-MAP for y = 00011 switches to 0 once the crossover is large enough.
    const std::vector<double> high(5, 0.3);
    CHECK(bit_map_decision(code, high, Bits{0, 0, 0, 1, 1}, 0) == 0);
    CHECK(block_map_decision(code, high, Bits{0, 0, 0, 1, 1}) == Bits{1, 0, 0, 1, 1});
}

TEST_CASE("capacities", "[oracles]") {
    const auto half = capacities(kPi / 2);
    CHECK_THAT(half.holevo, WithinAbs(1.0, 1e-12));
    CHECK_THAT(half.measured, WithinAbs(1.0, 1e-12));
    // Near zero the Holevo gain over measure-first grows like log(1/theta).
    const auto small = capacities(0.01);
    const auto tiny = capacities(0.001);
    CHECK(small.holevo / small.measured > 5.0);
    CHECK(tiny.holevo / tiny.measured > small.holevo / small.measured + 1.0);
    const double t = 0.2 * kPi;
    const auto c = capacities(t);
    CHECK_THAT(c.holevo, WithinRel(binary_entropy((1 + std::cos(t)) / 2), 1e-14));
    CHECK_THAT(c.measured, WithinRel(1 - binary_entropy(classical_bsc_param(t)), 1e-14));
    for (double x : {0.1, 0.5, 1.0, 1.5}) {
        const auto v = capacities(x);
        CHECK(v.holevo >= v.measured);
    }
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK_THAT(binary_entropy(0.5), WithinAbs(1.0, 1e-15));
}
