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

#include "bpqm/classical_bp.hpp"
#include "bpqm/codes.hpp"
#include "bpqm/oracles.hpp"
#include "reference.hpp"

using namespace bpqm;
using namespace bpqm::classical;
using Catch::Matchers::WithinAbs;

namespace {

double check_llr(double l1, double l2) {
    return 2.0 * std::atanh(std::tanh(l1 / 2) * std::tanh(l2 / 2));
}

/// Bisection on a decision that flips once on [lo, hi].
template <class F>
double bisect(F &&flipped, double lo, double hi) {
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (flipped(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

TEST_CASE("bp_equality adds log-likelihood ratios", "[classical]") {
    const auto tie = bp_equality({0, 1.5}, {1, 1.5});
    CHECK(tie.b == 0);
    CHECK(tie.c == 0.0);
    const auto sum = bp_equality({0, 2.0}, {0, 3.0});
    CHECK(sum.b == 0);
    CHECK_THAT(sum.c, WithinAbs(5.0, 1e-15));
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    for (int t = 0; t < 10000; ++t) {
        const double a = u(rng);
        const double b = u(rng);
        const auto m = bp_equality(LlrMessage::from_value(a), LlrMessage::from_value(b));
        CHECK_THAT(m.value(), WithinAbs(a + b, 1e-12));
        CHECK(m.c >= 0.0);
    }
}

TEST_CASE("bp_check follows the tanh rule in split form", "[classical]") {
    CHECK(bp_check({1, 3.0}, {0, 0.0}).c == 0.0);
    CHECK(bp_check({1, 3.0}, {1, 2.0}).b == 0);
    CHECK(bp_check({1, 3.0}, {0, 2.0}).b == 1);
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(-15.0, 15.0);
    for (int t = 0; t < 10000; ++t) {
        const double a = u(rng);
        const double b = u(rng);
        const auto m = bp_check(LlrMessage::from_value(a), LlrMessage::from_value(b));
        const double want = check_llr(a, b);
        if (std::abs(want) > 1e-9) {
            CHECK_THAT(m.value(), WithinAbs(want, 1e-12 * std::max(1.0, std::abs(want))));
        }
    }
    // Saturated inputs stay finite.
    const auto big = bp_check({0, 1e6}, {0, 1e6});
    CHECK(std::isfinite(big.c));
    CHECK(big.c > 30.0);
}

TEST_CASE("channel_message", "[classical]") {
    CHECK(channel_message(1, 0.1).b == 1);
    CHECK_THAT(channel_message(0, 0.1).c, WithinAbs(std::log(9.0), 1e-15));
    CHECK_THROWS_AS(channel_message(0, 0.5), InvalidInput);
    CHECK_THROWS_AS(channel_message(0, 0.0), InvalidInput);
}

TEST_CASE("bp_decode_bit equals brute-force bit-MAP on every output", "[classical]") {
    for (const auto *name : {"code5", "rep4", "code17"}) {
        const auto code = codes::builtin_code(name);
        const std::size_t outputs = code.n() <= 6 ? (std::size_t{1} << code.n()) : 40;
        std::mt19937_64 rng(47);
        for (double p : {0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45}) {
            const std::vector<double> pv(code.n(), p);
            for (std::size_t yi = 0; yi < outputs; ++yi) {
                Bits y(code.n());
                for (std::size_t i = 0; i < code.n(); ++i) {
                    y[i] = outputs == (std::size_t{1} << code.n()) ? (yi >> i) & 1U : rng() & 1U;
                }
                for (std::size_t r = 0; r < code.n(); ++r) {
                    CHECK(bp_decode_bit(code, p, y, r) == testing::brute_bit_map(code, pv, y, r));
                }
            }
        }
    }
    CHECK(bp_decode_bit(codes::builtin_code("code5"), 0.3, Bits(5, 0), 0) == 0);
}

TEST_CASE("bit-MAP estimate for y=00011 flips near p=0.228", "[classical]") {
    const auto code = codes::builtin_code("code5");
    const Bits y{0, 0, 0, 1, 1};
    const double by_bp = bisect([&](double p) { return bp_decode_bit(code, p, y, 0) == 0; },
                                0.05, 0.45);
    // The same threshold from the likelihood ratio of X1 being 1 versus 0.
    const double by_ratio = bisect(
        [](double p) {
            const double q = 1 - p;
            return (1 - 2 * p + 2 * p * p) * (1 - 2 * p + 2 * p * p) / (4 * q * q * q * p) < 1.0;
        },
        0.05, 0.45);
    CHECK(std::abs(by_bp - 0.228) < 0.002);
    CHECK_THAT(by_bp, WithinAbs(by_ratio, 1e-9));
}
