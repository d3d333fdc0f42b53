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
#include "bpqm/oracles.hpp"

#ifdef BPQM_HAVE_LAPACKE
#include <lapacke.h>
#endif

#include <algorithm>
#include <bit>
#include <limits>
#include <cmath>
#include <numeric>

namespace bpqm::oracles {

namespace {

std::vector<std::uint64_t> packed_codewords(const codes::BinaryLinearCode &code) {
    const auto words = codes::codewords(code);
    std::vector<std::uint64_t> out;
    out.reserve(words.size());
    for (const auto &w : words) {
        out.push_back(codes::pack(w));
    }
    return out;
}

void check_theta(const codes::BinaryLinearCode &code, std::span<const double> theta) {
    if (theta.size() != code.n()) {
        throw InvalidInput("expected one channel angle per code bit");
    }
}

void check_gram_guard(const codes::BinaryLinearCode &code) {
    if (code.k() > kMaxGramDimension) {
        throw GuardError("Gram-matrix oracles limited to k <= " +
                         std::to_string(kMaxGramDimension));
    }
}

struct SymmetricEigen {
    Eigen::VectorXd values;  ///< ascending
    Eigen::MatrixXd vectors; ///< columns, empty when not requested
};

/// Divide and conquer LAPACK driver when available, Eigen otherwise.
SymmetricEigen symmetric_eigen(Eigen::MatrixXd m, bool vectors) {
    SymmetricEigen out;
#ifdef BPQM_HAVE_LAPACKE
    out.values.resize(m.rows());
    const auto n = static_cast<lapack_int>(m.rows());
    const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, vectors ? 'V' : 'N', 'L', n,
                                           m.data(), n, out.values.data());
    if (info != 0) {
        throw Error("symmetric eigen-decomposition failed (dsyevd info " +
                    std::to_string(info) + ")");
    }
    if (vectors) {
        out.vectors = std::move(m);
    }
#else
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        m, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw Error("symmetric eigen-decomposition failed");
    }
    out.values = es.eigenvalues();
    if (vectors) {
        out.vectors = es.eigenvectors();
    }
#endif
    return out;
}

SymmetricEigen gram_eigen(const codes::BinaryLinearCode &code, std::span<const double> theta) {
    check_theta(code, theta);
    check_gram_guard(code);
    return symmetric_eigen(gram_matrix(code, theta), true);
}

Eigen::VectorXd root_eigenvalues(const Eigen::VectorXd &ev) {
    const double top = ev.maxCoeff();
    Eigen::VectorXd out(ev.size());
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        out[i] = ev[i] > kEigenCutoff * top ? std::sqrt(ev[i]) : 0.0;
    }
    return out;
}

/// P(y | c) for every error pattern d = y xor c.
std::vector<double> pattern_likelihoods(std::span<const double> p) {
    const std::size_t n = p.size();
    std::vector<double> t(std::size_t{1} << n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t m = std::uint64_t{1} << i;
        for (std::uint64_t d = 0; d < t.size(); ++d) {
            t[d] *= (d & m) ? p[i] : 1.0 - p[i];
        }
    }
    return t;
}

bool clearly_greater(double a, double b) { return a > b + kTieTolerance * std::max(a, b); }

/// Codeword indices sorted by the string x1 x2 ... xn.
std::vector<std::size_t> lexicographic_order(const std::vector<Bits> &words) {
    std::vector<std::size_t> idx(words.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return words[a] < words[b]; });
    return idx;
}

void check_classical_guard(const codes::BinaryLinearCode &code) {
    if (code.n() > kMaxClassicalLength) {
        throw GuardError("classical baselines limited to n <= " +
                         std::to_string(kMaxClassicalLength));
    }
}

} // namespace

Eigen::MatrixXd gram_matrix(const codes::BinaryLinearCode &code,
                            std::span<const double> theta) {
    check_theta(code, theta);
    check_gram_guard(code);
    const auto words = packed_codewords(code);
    const auto N = static_cast<Eigen::Index>(words.size());
    std::vector<double> cs(theta.size());
    std::transform(theta.begin(), theta.end(), cs.begin(), [](double t) { return std::cos(t); });
    Eigen::MatrixXd G(N, N);
    for (Eigen::Index a = 0; a < N; ++a) {
        for (Eigen::Index b = a; b < N; ++b) {
            std::uint64_t d = words[static_cast<std::size_t>(a)] ^ words[static_cast<std::size_t>(b)];
            double v = 1.0;
            while (d != 0) {
                v *= cs[static_cast<std::size_t>(std::countr_zero(d))];
                d &= d - 1;
            }
            G(a, b) = v;
            G(b, a) = v;
        }
    }
    return G;
}

SquareRoot principal_sqrt(const Eigen::MatrixXd &m) {
    const auto es = symmetric_eigen(m, true);
    const auto &ev = es.values;
    const auto r = root_eigenvalues(ev);
    SquareRoot out;
    out.root = es.vectors * r.asDiagonal() * es.vectors.transpose();
    const double lo = std::max(ev.minCoeff(), 0.0);
    out.condition = lo > 0.0 ? ev.maxCoeff() / lo : std::numeric_limits<double>::infinity();
    return out;
}

double pgm_block_success(const codes::BinaryLinearCode &code, std::span<const double> theta) {
    const auto es = gram_eigen(code, theta);
    const auto r = root_eigenvalues(es.values);
    const Eigen::MatrixXd &V = es.vectors;
    // Diagonal of V diag(r) V^T.
    const Eigen::VectorXd diag = V.cwiseAbs2() * r;
    return diag.squaredNorm() / static_cast<double>(diag.size());
}

double helstrom_bit_success(const codes::BinaryLinearCode &code,
                            std::span<const double> theta, std::size_t r) {
    if (r >= code.n()) {
        throw InvalidInput("bit index out of range");
    }
    const auto es = gram_eigen(code, theta);
    const auto words = codes::codewords(code);
    const double w = 1.0 / static_cast<double>(words.size() / 2);
    Eigen::VectorXd d(static_cast<Eigen::Index>(words.size()));
    std::size_t ones = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
        d[static_cast<Eigen::Index>(i)] = words[i][r] ? -w : w;
        ones += words[i][r];
    }
    if (ones == 0) {
        return 1.0; // the bit is fixed by the code
    }
    // S D S with S = V R V^T is orthogonally similar to R (V^T D V) R.
    const Eigen::MatrixXd &V = es.vectors;
    const Eigen::VectorXd rv = root_eigenvalues(es.values);
    Eigen::MatrixXd M = V.transpose() * (d.asDiagonal() * V);
    M = rv.asDiagonal() * M * rv.asDiagonal();
    return 0.5 + 0.25 * symmetric_eigen(std::move(M), false).values.cwiseAbs().sum();
}

double classical_bsc_param(double theta) { return 0.5 * (1.0 - std::sin(theta)); }

int bit_map_decision(const codes::BinaryLinearCode &code, std::span<const double> p,
                     const Bits &y, std::size_t r) {
    check_classical_guard(code);
    if (p.size() != code.n() || y.size() != code.n() || r >= code.n()) {
        throw InvalidInput("bit_map_decision: size mismatch");
    }
    const auto like = pattern_likelihoods(p);
    const auto yv = codes::pack(y);
    double post[2] = {0.0, 0.0};
    for (const auto &c : codes::codewords(code)) {
        post[c[r]] += like[yv ^ codes::pack(c)];
    }
    return clearly_greater(post[1], post[0]) ? 1 : 0;
}

Bits block_map_decision(const codes::BinaryLinearCode &code, std::span<const double> p,
                        const Bits &y) {
    check_classical_guard(code);
    if (p.size() != code.n() || y.size() != code.n()) {
        throw InvalidInput("block_map_decision: size mismatch");
    }
    const auto like = pattern_likelihoods(p);
    const auto words = codes::codewords(code);
    const auto yv = codes::pack(y);
    std::size_t best = words.size();
    double best_l = -1.0;
    for (auto i : lexicographic_order(words)) {
        const double l = like[yv ^ codes::pack(words[i])];
        if (best == words.size() || clearly_greater(l, best_l)) {
            best = i;
            best_l = l;
        }
    }
    return words[best];
}

double classical_map_success(const codes::BinaryLinearCode &code,
                             std::span<const double> theta, Target target) {
    check_theta(code, theta);
    check_classical_guard(code);
    std::vector<double> p(theta.size());
    std::transform(theta.begin(), theta.end(), p.begin(), classical_bsc_param);
    const auto like = pattern_likelihoods(p);
    const auto words = codes::codewords(code);
    std::vector<std::uint64_t> packed;
    for (const auto &w : words) {
        packed.push_back(codes::pack(w));
    }
    const std::size_t ny = std::size_t{1} << code.n();
    double total = 0.0;
    if (target.bit) {
        const std::size_t r = *target.bit;
        if (r >= code.n()) {
            throw InvalidInput("bit index out of range");
        }
        for (std::uint64_t y = 0; y < ny; ++y) {
            double post[2] = {0.0, 0.0};
            for (const auto c : packed) {
                post[(c >> r) & 1U] += like[y ^ c];
            }
            total += clearly_greater(post[1], post[0]) ? post[1] : post[0];
        }
    } else {
        const auto order = lexicographic_order(words);
        for (std::uint64_t y = 0; y < ny; ++y) {
            double best = -1.0;
            for (auto i : order) {
                const double l = like[y ^ packed[i]];
                if (best < 0.0 || clearly_greater(l, best)) {
                    best = l;
                }
            }
            total += best;
        }
    }
    return total / static_cast<double>(words.size());
}

double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) {
        return 0.0;
    }
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

Capacities capacities(double theta) {
    return {binary_entropy(0.5 * (1.0 + std::cos(theta))),
            1.0 - binary_entropy(classical_bsc_param(theta))};
}

} // namespace bpqm::oracles
