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
 * Decoding codes with cycles: computation-tree unrolling, approximate
 * cloning of channel outputs and cloning-free subtree decoders.
 */
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bpqm/codes.hpp"
#include "bpqm/qsim.hpp"

namespace bpqm::nontree {

/// Largest unrolled code length.
inline constexpr std::size_t kMaxUnrolledLength = 20;

/**
 * @brief Depth-h computation tree of one bit, viewed as a tree code C'.
 *
 * origin[p] is the original bit behind position p of C'. Each original
 * bit that appears keeps its first occurrence at the position given by its
 * rank among the bits that appear; further occurrences follow in
 * breadth-first order.
 */
struct UnrollMap {
    codes::BinaryLinearCode unrolled;
    std::vector<std::size_t> origin;
    std::vector<std::vector<std::size_t>> clone_groups; ///< positions, first is original
    std::size_t root_position{0};
    std::size_t original_length{0};

    /// (x_origin[0], ..., x_origin[n'-1]).
    [[nodiscard]] Bits lift(const Bits &x) const;
};

/// Unrolls around bit r (0-based) for h check layers.
UnrollMap unroll(const codes::BinaryLinearCode &code, std::size_t r, std::size_t h);

enum class ClonerKind { Enu, Optimal };

/**
 * @brief Cloner choice. The optimal cloner applies U_ostar(a, a)^T once per
 * group, a being the channel angle unless `cloner_angle` is set, and lets the
 * decoder assume `decoder_angle` for every clone.
 */
struct ClonerSpec {
    ClonerKind kind{ClonerKind::Enu};
    double decoder_angle{0.0};
    std::optional<double> cloner_angle;

    static ClonerSpec enu() { return {ClonerKind::Enu, 0.0, std::nullopt}; }
    static ClonerSpec optimal(double theta_prime) {
        return {ClonerKind::Optimal, theta_prime, std::nullopt};
    }
};

/// Clone angle of the generalized ENU cloner for m copies.
double enu_angle(double theta, std::size_t copies);

/**
 * @brief Gate list copying each channel output onto scratch wires, plus the
 * wire and channel angle assumed for every position of C'.
 */
struct ClonePlan {
    qsim::Circuit cloner;
    std::vector<std::size_t> wire;         ///< per position of C'
    std::vector<double> decoder_theta;     ///< per position of C'
};

/// Scratch wires start at `scratch_base`.
ClonePlan plan_cloning(const UnrollMap &map, double theta, const ClonerSpec &spec,
                       std::size_t scratch_base);

/// Number of scratch wires needed by plan_cloning.
std::size_t scratch_count(const UnrollMap &map);

/// Bit success averaged over the codewords of the original code.
double nontree_bit_success(const codes::BinaryLinearCode &code, double theta, std::size_t r,
                           std::size_t h, const ClonerSpec &spec);

/// Sequential block success with cloning rewound after every bit, averaged
/// over codewords. Empty order means the code's information set.
double nontree_block_success(const codes::BinaryLinearCode &code, double theta,
                             std::size_t h, const ClonerSpec &spec,
                             std::span<const std::size_t> order = {});

struct SweepPoint {
    double theta_prime;
    double success;
};

/// Optimal-cloner success as a function of the decoder angle.
std::vector<SweepPoint> optimal_cloner_sweep(const codes::BinaryLinearCode &code,
                                             std::size_t r, std::size_t h, double theta,
                                             std::span<const double> theta_primes);

/**
 * @brief Cloning-free decoder: BPQM on a spanning tree given by a subset of
 * variables and (possibly shortened) checks. Indices are 0-based.
 */
struct SubtreeStrategy {
    std::string name;
    std::vector<std::size_t> variables;
    std::vector<std::vector<std::size_t>> checks;
};

/// The three spanning-tree strategies for the 8-bit code.
std::vector<SubtreeStrategy> code8_strategies();

/**
 * @brief Success of decoding bit r with a subtree decoder, averaged over the
 * codewords of `code` accepted by `keep` (all when empty).
 */
double subtree_bit_success(const codes::BinaryLinearCode &code,
                           const SubtreeStrategy &strategy, double theta, std::size_t r,
                           const std::function<bool(const Bits &)> &keep = {});

} // namespace bpqm::nontree
