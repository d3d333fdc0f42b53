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
 * Message-passing BPQM with quantized angle registers, simulated in the
 * compact (probability, density matrix, cosine) representation.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "bpqm/codes.hpp"
#include "bpqm/mpg.hpp"

namespace bpqm::mp {

/// Largest supported register size; beyond ~52 the grid is below double
/// resolution anyway.
inline constexpr int kMaxRegisterBits = 52;

/**
 * @brief Cosine grid {-1 + 2(1+j)/(2^B+1) : j = 0..2^B-1}.
 */
class QuantGrid {
  public:
    explicit QuantGrid(int bits);

    [[nodiscard]] int bits() const { return bits_; }
    [[nodiscard]] double delta() const { return delta_; }
    [[nodiscard]] double size() const { return size_; }
    [[nodiscard]] double value(double j) const { return -1.0 + delta_ * (1.0 + j); }

    /// Nearest grid point; ties go toward -1.
    [[nodiscard]] double quantize(double c) const;

  private:
    int bits_;
    double size_;
    double delta_;
};

/// Nearest point of {2 pi k / (2^B - 1)}; ties go toward 0.
double quantize_rotation(double phi, int bits);

/**
 * @brief R_y angles (alpha, beta) in [0, 2 pi) of the two-CNOT circuit for
 * the equality unitary with cosines c1, c2.
 */
std::pair<double, double> rotation_angles(double c1, double c2);

/**
 * @brief Equality unitary rebuilt from its gate decomposition: CNOT with
 * the second qubit as control, R_y(alpha) on the second qubit, CNOT, R_y(beta),
 * CNOT. Equals u_ostar up to a global sign.
 */
Eigen::Matrix4d u_from_rotations(double alpha, double beta);

/**
 * @brief Rounding policy: exact when no register size is set.
 */
struct Quantizer {
    std::optional<QuantGrid> grid;

    static Quantizer exact() { return {}; }
    static Quantizer with_bits(int bits) { return {QuantGrid(bits)}; }

    [[nodiscard]] double cosine(double c) const;
    [[nodiscard]] double rotation(double phi) const;
};

struct CompactEntry {
    double p;
    Eigen::Matrix2d rho;
    double c;
};

using CompactMessage = std::vector<CompactEntry>;

CompactMessage leaf_message(int x, double theta, const Quantizer &q);
CompactMessage mp_equality(const CompactMessage &m1, const CompactMessage &m2,
                           const Quantizer &q);
CompactMessage mp_check(const CompactMessage &m1, const CompactMessage &m2,
                        const Quantizer &q);

/// Runs the message passing for codeword x and returns the root message.
CompactMessage run_message_passing(const mpg::Mpg &g, std::span<const double> theta,
                                   const Bits &x, const Quantizer &q);

/// Probability that the root measurement returns x_r.
double root_success(const CompactMessage &root, int xr);

/// Success of decoding X_r for codeword x; bits = nullopt disables rounding.
double mp_bit_success(const codes::BinaryLinearCode &code, std::span<const double> theta,
                      const Bits &x, std::size_t r, std::optional<int> bits);

/// sum_j p_j |cos theta_j - c_j| between exact root branches and the
/// quantized root message.
double averaged_cosine_error(const codes::BinaryLinearCode &code,
                             std::span<const double> theta, const Bits &x, std::size_t r,
                             int bits);

/// Closed-form bound on the block-success gap for length n and register B.
double quantization_gap_bound(std::size_t n, int bits);

} // namespace bpqm::mp
