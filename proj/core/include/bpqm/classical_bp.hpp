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
 * Classical belief propagation on the message-passing graph, with messages
 * split into a bit estimate and a reliability.
 */
#pragma once

#include <cstddef>
#include <cstdint>

#include "bpqm/codes.hpp"

namespace bpqm::classical {

/// Reliabilities are capped here before entering tanh.
inline constexpr double kReliabilityCap = 700.0;
/// |l| at or below this counts as a zero log-likelihood ratio.
inline constexpr double kZeroTolerance = 1e-10;

/**
 * @brief Log-likelihood ratio l = (-1)^b c with c >= 0.
 */
struct LlrMessage {
    std::uint8_t b{0};
    double c{0.0};

    [[nodiscard]] double value() const { return b ? -c : c; }
    static LlrMessage from_value(double l);
};

LlrMessage bp_equality(const LlrMessage &m1, const LlrMessage &m2);
LlrMessage bp_check(const LlrMessage &m1, const LlrMessage &m2);

/// Leaf message of a BSC(p) output y.
LlrMessage channel_message(int y, double p);

/// Bit estimate of X_r (0-based) for received word y on BSC(p).
int bp_decode_bit(const codes::BinaryLinearCode &code, double p, const Bits &y, std::size_t r);

/// Root message, exposed for inspection.
LlrMessage bp_root_message(const codes::BinaryLinearCode &code, double p, const Bits &y,
                           std::size_t r);

} // namespace bpqm::classical
