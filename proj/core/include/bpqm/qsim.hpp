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
 * Exact statevector simulation of the BPQM decoding circuits.
 */
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "bpqm/codes.hpp"
#include "bpqm/common.hpp"
#include "bpqm/mpg.hpp"

namespace bpqm::qsim {

using Complex = std::complex<double>;

/// Largest register simulated.
inline constexpr std::size_t kMaxQubits = 22;

/**
 * @brief Amplitude vector over m qubits; qubit 0 is the least significant
 * bit of the basis index.
 */
class PureState {
  public:
    PureState() = default;
    explicit PureState(std::size_t num_qubits);
    PureState(std::size_t num_qubits, std::vector<Complex> amplitudes);

    [[nodiscard]] std::size_t num_qubits() const { return num_qubits_; }
    [[nodiscard]] std::size_t size() const { return amps_.size(); }
    [[nodiscard]] std::vector<Complex> &amplitudes() { return amps_; }
    [[nodiscard]] const std::vector<Complex> &amplitudes() const { return amps_; }
    Complex &operator[](std::size_t i) { return amps_[i]; }
    const Complex &operator[](std::size_t i) const { return amps_[i]; }

    [[nodiscard]] double norm_squared() const;

  private:
    std::size_t num_qubits_{0};
    std::vector<Complex> amps_;
};

/// |x, theta> = cos(theta/2)|0> + (-1)^x sin(theta/2)|1>.
std::array<double, 2> channel_qubit(int x, double theta);

/**
 * @brief Product of channel outputs, bit i on qubit i. Extra qubits up to
 * `num_qubits` (when larger than n) start in |0>.
 */
PureState channel_state(const Bits &x, std::span<const double> theta,
                        std::size_t num_qubits = 0);

double inner_product_abs(const PureState &a, const PureState &b);
Complex inner_product(const PureState &a, const PureState &b);

/// The equality node unitary in the basis |q_first q_second>, q_first the
/// more significant.
Eigen::Matrix4d u_ostar(double alpha, double beta);

struct Cnot {
    std::size_t control;
    std::size_t target;
};

struct Hadamard {
    std::size_t qubit;
};

/**
 * @brief U_ostar on (data1, data2) uniformly controlled by `controls`.
 *
 * The control pattern reads controls[0] as its most significant bit and
 * selects table[pattern] as the (alpha, beta) arguments.
 */
struct UcuStar {
    std::size_t data1;
    std::size_t data2;
    std::vector<std::size_t> controls;
    std::vector<std::pair<double, double>> table;
};

/// Arbitrary real two-qubit gate, used for cloners.
struct TwoQubit {
    std::size_t first;
    std::size_t second;
    Eigen::Matrix4d matrix;
};

using Gate = std::variant<Cnot, Hadamard, UcuStar, TwoQubit>;

struct Circuit {
    std::size_t num_qubits{0};
    std::vector<Gate> gates;

    [[nodiscard]] std::size_t count_cnot() const;
    [[nodiscard]] std::size_t count_ucu() const;
};

void apply(const Circuit &circuit, PureState &state);
void apply_inverse(const Circuit &circuit, PureState &state);
[[nodiscard]] PureState applied(const Circuit &circuit, PureState state);

void apply_two_qubit(PureState &state, std::size_t first, std::size_t second,
                     const Eigen::Matrix4d &u);

/// Probability of the outcome H|m><m|H on `qubit`.
double x_basis_probability(const PureState &state, std::size_t qubit, int m);

/// Applies the projector H|m><m|H on `qubit` without renormalizing.
void project_x_basis(PureState &state, std::size_t qubit, int m);

/**
 * @brief Role of every wire after running V_r.
 */
struct QubitRoles {
    std::size_t data{0};                ///< root data qubit (D)
    std::vector<std::size_t> ancillas;  ///< A, in root check-list order
    std::vector<std::size_t> zeros;     ///< Z
};

struct BpqmCircuit {
    Circuit circuit;
    QubitRoles roles;
};

/**
 * @brief Builds V_r from compiled lists.
 *
 * `leaf_qubit[i]` is the wire carrying code bit i; empty means identity.
 * Gates follow the post-order of the MPG.
 */
BpqmCircuit build_vr(const mpg::CompiledMpg &compiled,
                     std::span<const std::size_t> leaf_qubit = {},
                     std::size_t num_qubits = 0);

struct Branch {
    std::uint64_t pattern{0};
    double weight{0.0};
    std::array<Complex, 2> data_state{}; ///< normalized, Z at |0...0>
    double z_leakage{0.0};              ///< weight with some Z qubit set
};

/// Splits a post-V_r state by ancilla pattern. Roles must cover every wire.
std::vector<Branch> branch_decomposition(const PureState &state, const QubitRoles &roles);

/// Success of decoding bit r given codeword x.
double bpqm_bit_success_conditional(const codes::BinaryLinearCode &code,
                                    std::span<const double> theta, const Bits &x,
                                    std::size_t r);

/// Success of decoding bit r averaged over all codewords.
double bpqm_bit_success(const codes::BinaryLinearCode &code,
                        std::span<const double> theta, std::size_t r);

/**
 * @brief Probability that decoding the bits of `order` one after another,
 * each rewound after its measurement, returns all of them correctly.
 *
 * `order` must list k positions forming an information set. Empty means
 * the code's own information set.
 */
double bpqm_block_success(const codes::BinaryLinearCode &code,
                          std::span<const double> theta, const Bits &x,
                          std::span<const std::size_t> order = {});

/// Block success averaged over all codewords.
double bpqm_block_success_average(const codes::BinaryLinearCode &code,
                                  std::span<const double> theta,
                                  std::span<const std::size_t> order = {});

/// Throws InvalidInput unless `order` is an information set of the code.
void check_information_set(const codes::BinaryLinearCode &code,
                           std::span<const std::size_t> order);

/// Monte Carlo estimate of bit success: random codeword, sampled outcome.
double sampled_bit_success(const codes::BinaryLinearCode &code,
                           std::span<const double> theta, std::size_t r,
                           std::size_t shots, std::uint64_t seed);

} // namespace bpqm::qsim
