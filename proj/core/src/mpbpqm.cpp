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
#include "bpqm/mpbpqm.hpp"

#include <cmath>
#include <numbers>

#include "bpqm/angles.hpp"
#include "bpqm/qsim.hpp"

namespace bpqm::mp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kZeroBranch = 1e-15;
constexpr double kTieSlack = 1e-13;

Eigen::Matrix2d ry(double phi) {
    Eigen::Matrix2d r;
    r << std::cos(phi / 2), -std::sin(phi / 2), std::sin(phi / 2), std::cos(phi / 2);
    return r;
}

double wrap(double phi) {
    phi = std::fmod(phi, kTwoPi);
    return phi < 0.0 ? phi + kTwoPi : phi;
}

Eigen::Matrix4d kron(const Eigen::Matrix2d &a, const Eigen::Matrix2d &b) {
    Eigen::Matrix4d k;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            k.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
    }
    return k;
}

/// CNOT with the first (more significant) qubit as control.
Eigen::Matrix4d cnot12() {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
    return m;
}

/// CNOT with the second qubit as control.
Eigen::Matrix4d cnot21() {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 0) = m(2, 2) = m(1, 3) = m(3, 1) = 1.0;
    return m;
}

} // namespace

QuantGrid::QuantGrid(int bits) : bits_{bits} {
    if (bits < 1 || bits > kMaxRegisterBits) {
        throw InvalidInput("register size must be in 1.." + std::to_string(kMaxRegisterBits));
    }
    size_ = std::ldexp(1.0, bits);
    delta_ = 2.0 / (size_ + 1.0);
}

double QuantGrid::quantize(double c) const {
    const double t = (c + 1.0) / delta_ - 1.0;
    double j = std::clamp(std::floor(t), 0.0, size_ - 1.0);
    // Midpoints within a few ulps count as ties and go down.
    if (j + 1.0 <= size_ - 1.0 && c - value(j) > 0.5 * delta_ + kTieSlack) {
        j += 1.0;
    }
    return value(j);
}

double quantize_rotation(double phi, int bits) {
    if (bits < 1 || bits > kMaxRegisterBits) {
        throw InvalidInput("register size must be in 1.." + std::to_string(kMaxRegisterBits));
    }
    const double K = std::ldexp(1.0, bits) - 1.0;
    const double step = kTwoPi / K;
    double k = std::clamp(std::floor(phi / step), 0.0, K);
    if (k + 1.0 <= K && std::abs((k + 1.0) * step - phi) < std::abs(k * step - phi)) {
        k += 1.0;
    }
    return k * step;
}

std::pair<double, double> rotation_angles(double c1, double c2) {
    const auto u = qsim::u_ostar(std::acos(mpg::clamp_cos(c1)), std::acos(mpg::clamp_cos(c2)));
    const double ap = std::acos(std::clamp(u(0, 0), -1.0, 1.0));
    const double bp = std::acos(std::clamp(u(2, 2), -1.0, 1.0));
    return {wrap(-ap - bp), wrap(-ap + bp)};
}

Eigen::Matrix4d u_from_rotations(double alpha, double beta) {
    const Eigen::Matrix2d I = Eigen::Matrix2d::Identity();
    return cnot12() * kron(I, ry(beta)) * cnot12() * kron(I, ry(alpha)) * cnot21();
}

double Quantizer::cosine(double c) const {
    return grid ? grid->quantize(c) : mpg::clamp_cos(c);
}

double Quantizer::rotation(double phi) const {
    return grid ? quantize_rotation(phi, grid->bits()) : phi;
}

CompactMessage leaf_message(int x, double theta, const Quantizer &q) {
    const auto v = qsim::channel_qubit(x, theta);
    Eigen::Matrix2d rho;
    rho << v[0] * v[0], v[0] * v[1], v[1] * v[0], v[1] * v[1];
    return {{1.0, rho, q.cosine(std::cos(theta))}};
}

CompactMessage mp_equality(const CompactMessage &m1, const CompactMessage &m2,
                           const Quantizer &q) {
    CompactMessage out;
    out.reserve(m1.size() * m2.size());
    for (const auto &a : m1) {
        for (const auto &b : m2) {
            const auto [alpha, beta] = rotation_angles(a.c, b.c);
            const Eigen::Matrix4d u = u_from_rotations(q.rotation(alpha), q.rotation(beta));
            const Eigen::Matrix4d r = u * kron(a.rho, b.rho) * u.transpose();
            Eigen::Matrix2d rho;
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    rho(i, j) = r(2 * i, 2 * j) + r(2 * i + 1, 2 * j + 1);
                }
            }
            out.push_back({a.p * b.p, rho, q.cosine(a.c * b.c)});
        }
    }
    return out;
}

CompactMessage mp_check(const CompactMessage &m1, const CompactMessage &m2,
                        const Quantizer &q) {
    CompactMessage out;
    out.reserve(2 * m1.size() * m2.size());
    const Eigen::Matrix4d cx = cnot12();
    for (int l = 0; l < 2; ++l) {
        for (const auto &a : m1) {
            for (const auto &b : m2) {
                const Eigen::Matrix4d r = cx * kron(a.rho, b.rho) * cx;
                Eigen::Matrix2d sigma;
                for (int i = 0; i < 2; ++i) {
                    for (int j = 0; j < 2; ++j) {
                        sigma(i, j) = r(2 * i + l, 2 * j + l);
                    }
                }
                const double tr = sigma.trace();
                const double c = q.cosine(mpg::cos_boxstar(a.c, b.c, l));
                if (tr < kZeroBranch) {
                    out.push_back({a.p * b.p * std::max(tr, 0.0),
                                   0.5 * Eigen::Matrix2d::Identity(), c});
                } else {
                    out.push_back({a.p * b.p * tr, sigma / tr, c});
                }
            }
        }
    }
    return out;
}

CompactMessage run_message_passing(const mpg::Mpg &g, std::span<const double> theta,
                                   const Bits &x, const Quantizer &q) {
    if (theta.size() != g.num_leaves() || x.size() != g.num_leaves()) {
        throw InvalidInput("message passing: one angle and one bit per code bit required");
    }
    std::vector<CompactMessage> msg(g.nodes().size());
    for (std::size_t i = 0; i < g.nodes().size(); ++i) {
        const auto &nd = g.node(i);
        if (nd.kind == mpg::NodeKind::Channel) {
            msg[i] = leaf_message(x[nd.leaf], theta[nd.leaf], q);
            continue;
        }
        auto &a = msg[static_cast<std::size_t>(nd.first)];
        auto &b = msg[static_cast<std::size_t>(nd.second)];
        msg[i] = nd.kind == mpg::NodeKind::Check ? mp_check(a, b, q) : mp_equality(a, b, q);
        CompactMessage().swap(a);
        CompactMessage().swap(b);
    }
    return std::move(msg.back());
}

double root_success(const CompactMessage &root, int xr) {
    const double s = (xr & 1) ? -1.0 : 1.0;
    double total = 0.0;
    for (const auto &e : root) {
        total += e.p * 0.5 * (e.rho(0, 0) + e.rho(1, 1) + s * (e.rho(0, 1) + e.rho(1, 0)));
    }
    return total;
}

double mp_bit_success(const codes::BinaryLinearCode &code, std::span<const double> theta,
                      const Bits &x, std::size_t r, std::optional<int> bits) {
    if (!code.contains(x)) {
        throw InvalidInput("message passing input is not a codeword");
    }
    const auto q = bits ? Quantizer::with_bits(*bits) : Quantizer::exact();
    const auto g = mpg::build_mpg(code, r);
    return root_success(run_message_passing(g, theta, x, q), x[r]);
}

double averaged_cosine_error(const codes::BinaryLinearCode &code,
                             std::span<const double> theta, const Bits &x, std::size_t r,
                             int bits) {
    const auto g = mpg::build_mpg(code, r);
    const auto exact = mpg::compile_lists(g, theta);
    const auto root = run_message_passing(g, theta, x, Quantizer::with_bits(bits));
    const auto &br = exact.root_lists().branches;
    if (br.size() != root.size()) {
        throw Error("compact message and branch list disagree in length");
    }
    double total = 0.0;
    for (std::size_t j = 0; j < br.size(); ++j) {
        total += br[j].prob * std::abs(std::cos(br[j].angle) - root[j].c);
    }
    return total;
}

double quantization_gap_bound(std::size_t n, int bits) {
    if (n == 0 || bits < 1) {
        throw InvalidInput("bound needs n >= 1 and B >= 1");
    }
    const double pre = std::exp2(9.0 / 4.0) * std::sqrt(std::numbers::pi) / std::sqrt(3.0);
    const double nd = static_cast<double>(n);
    return pre * nd * std::exp2(nd * (1.5 + 0.5 * std::log2(26.0)) - bits / 4.0);
}

} // namespace bpqm::mp
