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
#include "bpqm/classical_bp.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "bpqm/mpg.hpp"

namespace bpqm::classical {

LlrMessage LlrMessage::from_value(double l) {
    if (std::abs(l) <= kZeroTolerance) {
        return {0, 0.0};
    }
    return {static_cast<std::uint8_t>(l < 0.0 ? 1 : 0), std::abs(l)};
}

LlrMessage bp_equality(const LlrMessage &m1, const LlrMessage &m2) {
    return LlrMessage::from_value(m1.value() + m2.value());
}

LlrMessage bp_check(const LlrMessage &m1, const LlrMessage &m2) {
    const double c1 = std::min(m1.c, kReliabilityCap);
    const double c2 = std::min(m2.c, kReliabilityCap);
    const double t = std::tanh(c1 / 2) * std::tanh(c2 / 2);
    // atanh(1) overflows; the cap keeps the result finite and monotone.
    const double c = std::min(2.0 * std::atanh(std::min(t, 1.0 - 1e-16)), kReliabilityCap);
    return {static_cast<std::uint8_t>(m1.b ^ m2.b), c};
}

LlrMessage channel_message(int y, double p) {
    if (!(p > 0.0 && p < 0.5)) {
        throw InvalidInput("crossover probability must lie in (0, 1/2)");
    }
    return {static_cast<std::uint8_t>(y & 1), std::log((1.0 - p) / p)};
}

LlrMessage bp_root_message(const codes::BinaryLinearCode &code, double p, const Bits &y,
                           std::size_t r) {
    if (y.size() != code.n()) {
        throw InvalidInput("received word length must equal n");
    }
    const auto g = mpg::build_mpg(code, r);
    std::vector<LlrMessage> msg(g.nodes().size());
    for (std::size_t i = 0; i < g.nodes().size(); ++i) {
        const auto &nd = g.node(i);
        switch (nd.kind) {
        case mpg::NodeKind::Channel:
            msg[i] = channel_message(y[nd.leaf], p);
            break;
        case mpg::NodeKind::Check:
            msg[i] = bp_check(msg[static_cast<std::size_t>(nd.first)],
                              msg[static_cast<std::size_t>(nd.second)]);
            break;
        case mpg::NodeKind::Equality:
            msg[i] = bp_equality(msg[static_cast<std::size_t>(nd.first)],
                                 msg[static_cast<std::size_t>(nd.second)]);
            break;
        }
    }
    return msg.back();
}

int bp_decode_bit(const codes::BinaryLinearCode &code, double p, const Bits &y,
                  std::size_t r) {
    return bp_root_message(code, p, y, r).b;
}

} // namespace bpqm::classical
