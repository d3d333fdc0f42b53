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
/**
 * @file
 * Optimal quantum decoders and classical baselines, used as ground truth.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "bpqm/codes.hpp"

namespace bpqm::oracles {

/// Largest code dimension handled by the Gram-matrix oracles.
inline constexpr std::size_t kMaxGramDimension = 14;
/// Largest code length for the brute-force classical baselines.
inline constexpr std::size_t kMaxClassicalLength = 20;
/// Eigenvalues below this fraction of the largest one count as zero.
inline constexpr double kEigenCutoff = 1e-12;
/// Relative tolerance under which two likelihoods count as tied.
inline constexpr double kTieTolerance = 1e-10;

/// G[x][y] = prod over differing bits of cos(theta_i), codewords in
/// message order.
Eigen::MatrixXd gram_matrix(const codes::BinaryLinearCode &code,
                            std::span<const double> theta);

struct SquareRoot {
    Eigen::MatrixXd root;
    double condition{0.0}; ///< largest over smallest eigenvalue
};

/// Principal square root of a symmetric positive semidefinite matrix.
SquareRoot principal_sqrt(const Eigen::MatrixXd &m);

/// Success of the pretty good measurement on uniformly chosen codewords.
double pgm_block_success(const codes::BinaryLinearCode &code, std::span<const double> theta);

/// Helstrom success for bit r (0-based) under a uniform codeword prior.
double helstrom_bit_success(const codes::BinaryLinearCode &code,
                            std::span<const double> theta, std::size_t r);

/// BSC crossover of measuring one output in the |+>,|-> basis.
double classical_bsc_param(double theta);

/// Decoding target: one bit (0-based) or the whole codeword.
struct Target {
    std::optional<std::size_t> bit;
    static Target block() { return {}; }
    static Target bit_at(std::size_t r) { return {r}; }
};

/**
 * @brief Exact success of measuring every output and running MAP decoding.
 * Ties go to the lexicographically smaller codeword, or to 0 for bits.
 */
double classical_map_success(const codes::BinaryLinearCode &code,
                             std::span<const double> theta, Target target);

/// Brute-force bit-MAP decision for received word y on BSC(p_i).
int bit_map_decision(const codes::BinaryLinearCode &code, std::span<const double> p,
                     const Bits &y, std::size_t r);

/// Brute-force block-MAP decision for received word y on BSC(p_i).
Bits block_map_decision(const codes::BinaryLinearCode &code, std::span<const double> p,
                        const Bits &y);

double binary_entropy(double p);

struct Capacities {
    double holevo;   ///< h2((1 + cos theta) / 2)
    double measured; ///< 1 - h2(p) of the induced BSC
};

Capacities capacities(double theta);

} // namespace bpqm::oracles
