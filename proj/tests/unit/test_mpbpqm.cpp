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

#include "bpqm/angles.hpp"
#include "bpqm/codes.hpp"
#include "bpqm/mpbpqm.hpp"
#include "bpqm/mpg.hpp"
#include "bpqm/qsim.hpp"

using namespace bpqm;
using namespace bpqm::mp;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<double> uniform(std::size_t n, double t) { return std::vector<double>(n, t); }

/// Distance between two unitaries, allowing an overall sign.
double sign_free_distance(const Eigen::Matrix4d &a, const Eigen::Matrix4d &b) {
    return std::min((a - b).norm(), (a + b).norm());
}

double spectral_norm(const Eigen::Matrix4d &m) {
    return Eigen::JacobiSVD<Eigen::Matrix4d>(m).singularValues()[0];
}

void check_message(const CompactMessage &m) {
    double total = 0.0;
    for (const auto &e : m) {
        total += e.p;
        CHECK_THAT(e.rho.trace(), WithinAbs(1.0, 1e-9));
        CHECK(Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(e.rho).eigenvalues().minCoeff() >
              -1e-10);
    }
    CHECK_THAT(total, WithinAbs(1.0, 1e-9));
}

} // namespace

TEST_CASE("QuantGrid: grid points, spacing and rounding", "[mp]") {
    const QuantGrid g1(1);
    CHECK_THAT(g1.value(0), WithinAbs(-1.0 / 3, 1e-15));
    CHECK_THAT(g1.value(1), WithinAbs(1.0 / 3, 1e-15));
    CHECK_THAT(g1.quantize(0.9), WithinAbs(1.0 / 3, 1e-15));
    CHECK_THAT(g1.quantize(0.0), WithinAbs(-1.0 / 3, 1e-15));
    CHECK_THAT(g1.quantize(-1.0), WithinAbs(-1.0 / 3, 1e-15));
    for (int B : {2, 5, 10, 30}) {
        const QuantGrid g(B);
        CHECK(g.delta() == 2.0 / (std::ldexp(1.0, B) + 1.0));
        CHECK(g.value(0) > -1.0);
        CHECK(g.value(g.size() - 1) < 1.0);
        std::mt19937_64 rng(static_cast<std::uint64_t>(B));
        // Inside the hull padded by half a step the error is at most delta/2.
        // Past that the end points are a full step from +-1.
        std::uniform_real_distribution<double> u(-1.0 + g.delta() / 2, 1.0 - g.delta() / 2);
        for (int t = 0; t < 1000; ++t) {
            const double c = u(rng);
            CHECK(std::abs(g.quantize(c) - c) <= g.delta() / 2 * (1 + 1e-9));
        }
        CHECK_THAT(std::abs(g.quantize(1.0) - 1.0), WithinAbs(g.delta(), 1e-12));
        CHECK_THAT(std::abs(g.quantize(-1.0) + 1.0), WithinAbs(g.delta(), 1e-12));
        for (double j : {0.0, 1.0}) {
            const double mid = g.value(j) + g.delta() / 2;
            CHECK(g.quantize(mid) == g.value(j));
        }
    }
    CHECK_THROWS_AS(QuantGrid(0), InvalidInput);
    CHECK_THROWS_AS(QuantGrid(kMaxRegisterBits + 1), InvalidInput);
}

TEST_CASE("quantize_rotation", "[mp]") {
    CHECK(quantize_rotation(0.0, 4) == 0.0);
    CHECK_THAT(quantize_rotation(2 * kPi, 4), WithinAbs(2 * kPi, 1e-15));
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> u(0.0, 2 * kPi);
    for (int B : {1, 3, 8, 20}) {
        const double bound = kPi / (std::ldexp(1.0, B) - 1.0);
        for (int t = 0; t < 1000; ++t) {
            const double phi = u(rng);
            CHECK(std::abs(quantize_rotation(phi, B) - phi) <= bound * (1 + 1e-12));
        }
    }
}

TEST_CASE("rotation_angles rebuild U_ostar up to a global sign", "[mp]") {
    std::mt19937_64 rng(59);
    std::uniform_real_distribution<double> u(-0.999, 0.999);
    for (int t = 0; t < 1000; ++t) {
        const double c1 = u(rng);
        const double c2 = u(rng);
        const auto [alpha, beta] = rotation_angles(c1, c2);
        CHECK(alpha >= 0.0);
        CHECK(alpha <= 2 * kPi);
        CHECK(beta >= 0.0);
        CHECK(beta <= 2 * kPi);
        const Eigen::Matrix4d want = qsim::u_ostar(std::acos(c1), std::acos(c2));
        CHECK(sign_free_distance(u_from_rotations(alpha, beta), want) < 1e-12);
        // Rounding both angles moves the gate by at most pi 2^(1-B).
        for (int B : {4, 8, 12}) {
            const Eigen::Matrix4d q =
                u_from_rotations(quantize_rotation(alpha, B), quantize_rotation(beta, B));
            CHECK(spectral_norm(q - u_from_rotations(alpha, beta)) <=
                  kPi * std::ldexp(1.0, 1 - B) + 1e-12);
        }
    }
    const auto [a, b] = rotation_angles(0.3, 0.3);
    CHECK(std::isfinite(a));
    CHECK(std::isfinite(b));
}

TEST_CASE("mp_equality and mp_check on single-entry messages", "[mp]") {
    const auto q = Quantizer::with_bits(8);
    const auto m1 = leaf_message(0, 0.7, q);
    const auto m2 = leaf_message(0, 1.1, q);
    const auto eq = mp_equality(m1, m2, q);
    REQUIRE(eq.size() == 1);
    CHECK_THAT(eq[0].c, WithinAbs(q.cosine(m1[0].c * m2[0].c), 1e-15));
    CHECK_THAT(eq[0].p, WithinAbs(1.0, 1e-15));
    check_message(eq);

    const auto ex = Quantizer::exact();
    const auto ck = mp_check(leaf_message(1, 0.7, ex), leaf_message(0, 1.1, ex), ex);
    REQUIRE(ck.size() == 2);
    for (int l : {0, 1}) {
        CHECK_THAT(ck[static_cast<std::size_t>(l)].p,
                   WithinAbs(mpg::prob_boxstar(0.7, 1.1, l), 1e-12));
        CHECK_THAT(ck[static_cast<std::size_t>(l)].c,
                   WithinAbs(std::cos(mpg::angle_boxstar(0.7, 1.1, l)), 1e-12));
    }
    check_message(ck);
    // Equal inputs: the l = 1 branch sits at cosine zero.
    const auto same = mp_check(leaf_message(0, 0.9, q), leaf_message(0, 0.9, q), q);
    CHECK_THAT(same[1].c, WithinAbs(q.cosine(0.0), 1e-15));
}

TEST_CASE("mp_equality without quantization is the equality contraction", "[mp]") {
    const auto ex = Quantizer::exact();
    for (int x : {0, 1}) {
        const auto out = mp_equality(leaf_message(x, 0.5, ex), leaf_message(x, 1.2, ex), ex);
        const auto want = leaf_message(x, mpg::angle_ostar(0.5, 1.2), ex);
        CHECK((out[0].rho - want[0].rho).norm() < 1e-12);
    }
}

TEST_CASE("code5 node outputs at 0.2 pi with B=8 keep product probabilities", "[mp]") {
    const auto q = Quantizer::with_bits(8);
    const double t = 0.2 * kPi;
    const auto a = mp_check(leaf_message(0, t, q), leaf_message(0, t, q), q);
    const auto b = mp_check(leaf_message(0, t, q), leaf_message(1, t, q), q);
    const auto e = mp_equality(a, b, q);
    REQUIRE(e.size() == 4);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK_THAT(e[2 * i + j].p, WithinAbs(a[i].p * b[j].p, 1e-15));
        }
    }
    check_message(e);
}

TEST_CASE("message passing stays normalized through every tree code", "[mp]") {
    for (const auto *name : {"code5", "rep4", "code17"}) {
        const auto code = codes::builtin_code(name);
        const auto g = mpg::build_mpg(code, 0);
        for (int B : {3, 6}) {
            const auto root = run_message_passing(g, uniform(code.n(), 0.3 * kPi),
                                                  code.encode_index(1), Quantizer::with_bits(B));
            CHECK(root.size() == (std::size_t{1} << (code.k() - 1)));
            check_message(root);
        }
    }
}

TEST_CASE("mp_bit_success without quantization equals the exact simulator", "[mp]") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> u(0.1, kPi - 0.1);
    for (const auto *name : {"code5", "rep4", "rep3"}) {
        const auto code = codes::builtin_code(name);
        std::vector<double> theta(code.n());
        for (auto &t : theta) {
            t = u(rng);
        }
        for (const auto &x : codes::codewords(code)) {
            for (std::size_t r = 0; r < code.n(); ++r) {
                const double want = qsim::bpqm_bit_success_conditional(code, theta, x, r);
                CHECK_THAT(mp_bit_success(code, theta, x, r, std::nullopt), WithinAbs(want, 1e-8));
                CHECK_THAT(mp_bit_success(code, theta, x, r, 48), WithinAbs(want, 1e-8));
            }
        }
    }
    const auto code17 = codes::builtin_code("code17");
    const auto th17 = uniform(17, 0.2 * kPi);
    const auto x17 = code17.encode_index(1234);
    CHECK_THAT(mp_bit_success(code17, th17, x17, 0, std::nullopt),
               WithinAbs(qsim::bpqm_bit_success_conditional(code17, th17, x17, 0), 1e-8));
}

TEST_CASE("mp_bit_success: single channel and orthogonal outputs", "[mp]") {
    const auto rep1 = codes::builtin_code("rep1");
    for (int B : {2, 6, 20}) {
        CHECK_THAT(mp_bit_success(rep1, uniform(1, 0.8), Bits{1}, 0, B),
                   WithinAbs((1 + std::sin(0.8)) / 2, 1e-12));
    }
    CHECK_THROWS_AS(mp_bit_success(codes::builtin_code("code5"), uniform(5, 0.3), Bits{1, 0, 0, 0, 0},
                                   0, 4),
                    InvalidInput);
}

TEST_CASE("epsilon shrinks with the register size on code5", "[mp]") {
    const auto code = codes::builtin_code("code5");
    const auto theta = uniform(5, 0.2 * kPi);
    const Bits zero(5, 0);
    const double exact = mp_bit_success(code, theta, zero, 0, std::nullopt);
    double previous = 1.0;
    for (int B : {2, 4, 6, 8, 10, 12, 14, 16}) {
        const double eps = std::abs(exact - mp_bit_success(code, theta, zero, 0, B));
        CHECK(eps <= quantization_gap_bound(5, B));
        CHECK(eps <= 1.1 * previous + 1e-12);
        previous = eps;
        // Averaged cosine error stays within (2^(n+1) - 3) delta.
        const double delta = QuantGrid(B).delta();
        CHECK(averaged_cosine_error(code, theta, zero, 0, B) <= (std::exp2(6.0) - 3.0) * delta);
    }
    CHECK(previous < 1e-4);
}

TEST_CASE("quantization_gap_bound", "[mp]") {
    for (int B = 1; B < 300; ++B) {
        CHECK(quantization_gap_bound(5, B + 1) < quantization_gap_bound(5, B));
    }
    CHECK(quantization_gap_bound(5, 200) < 1e-3);
    CHECK_THROWS_AS(quantization_gap_bound(0, 4), InvalidInput);
}
