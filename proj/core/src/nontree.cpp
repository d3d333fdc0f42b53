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
#include "bpqm/nontree.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "bpqm/mpg.hpp"

namespace bpqm::nontree {

Bits UnrollMap::lift(const Bits &x) const {
    if (x.size() != original_length) {
        throw InvalidInput("lift: word length must equal the original code length");
    }
    Bits out(origin.size());
    for (std::size_t p = 0; p < origin.size(); ++p) {
        out[p] = x[origin[p]];
    }
    return out;
}

UnrollMap unroll(const codes::BinaryLinearCode &code, std::size_t r, std::size_t h) {
    if (h == 0) {
        throw InvalidInput("unrolling depth must be at least 1");
    }
    if (r >= code.n()) {
        throw InvalidInput("bit index out of range");
    }
    const auto tg = codes::tanner_graph(code);
    struct Occurrence {
        std::size_t var;
        std::size_t depth;
        std::size_t parent_check;
    };
    constexpr auto kNone = static_cast<std::size_t>(-1);
    std::vector<Occurrence> occ{{r, 0, kNone}};
    std::vector<std::vector<std::size_t>> check_members;
    for (std::size_t i = 0; i < occ.size(); ++i) {
        const auto cur = occ[i];
        if (cur.depth >= h) {
            continue;
        }
        for (auto c : tg.var_checks[cur.var]) {
            if (c == cur.parent_check) {
                continue;
            }
            std::vector<std::size_t> members{i};
            for (auto u : tg.check_vars[c]) {
                if (u != cur.var) {
                    occ.push_back({u, cur.depth + 1, c});
                    members.push_back(occ.size() - 1);
                }
            }
            if (occ.size() > kMaxUnrolledLength) {
                throw GuardError("unrolling to depth " + std::to_string(h) +
                                 " exceeds " + std::to_string(kMaxUnrolledLength) + " bits");
            }
            check_members.push_back(std::move(members));
        }
    }

    std::vector<std::size_t> distinct;
    for (const auto &o : occ) {
        distinct.push_back(o.var);
    }
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::vector<std::size_t> position(occ.size());
    std::vector<std::uint8_t> seen(code.n(), 0);
    std::size_t next = distinct.size();
    for (std::size_t i = 0; i < occ.size(); ++i) {
        const auto v = occ[i].var;
        if (seen[v] == 0) {
            seen[v] = 1;
            position[i] = static_cast<std::size_t>(
                std::lower_bound(distinct.begin(), distinct.end(), v) - distinct.begin());
        } else {
            position[i] = next++;
        }
    }

    UnrollMap out{codes::BinaryLinearCode{}, std::vector<std::size_t>(occ.size()), {},
                  position[0], code.n()};
    for (std::size_t i = 0; i < occ.size(); ++i) {
        out.origin[position[i]] = occ[i].var;
    }
    Gf2Matrix H(check_members.size(), occ.size());
    for (std::size_t c = 0; c < check_members.size(); ++c) {
        for (auto i : check_members[c]) {
            H.set(c, position[i], 1);
        }
    }
    if (check_members.empty()) {
        H = Gf2Matrix(0, occ.size());
    }
    out.unrolled = codes::BinaryLinearCode::from_parity_check(
        H, code.name() + "-unrolled-h" + std::to_string(h));
    for (auto v : distinct) {
        std::vector<std::size_t> group;
        for (std::size_t p = 0; p < out.origin.size(); ++p) {
            if (out.origin[p] == v) {
                group.push_back(p);
            }
        }
        if (group.size() > 1) {
            out.clone_groups.push_back(std::move(group));
        }
    }
    return out;
}

double enu_angle(double theta, std::size_t copies) {
    const double c = std::cos(theta);
    if (c < 0.0) {
        throw InvalidInput("cloning is defined for channel angles in (0, pi/2]");
    }
    return std::acos(std::pow(c, 1.0 / static_cast<double>(copies)));
}

std::size_t scratch_count(const UnrollMap &map) {
    std::size_t s = 0;
    for (const auto &g : map.clone_groups) {
        s += g.size() - 1;
    }
    return s;
}

ClonePlan plan_cloning(const UnrollMap &map, double theta, const ClonerSpec &spec,
                       std::size_t scratch_base) {
    const std::size_t np = map.origin.size();
    ClonePlan plan;
    plan.wire.assign(np, 0);
    plan.decoder_theta.assign(np, theta);
    std::vector<std::uint8_t> duplicate(np, 0);
    for (const auto &g : map.clone_groups) {
        for (std::size_t t = 1; t < g.size(); ++t) {
            duplicate[g[t]] = 1;
        }
    }
    std::size_t scratch = scratch_base;
    for (std::size_t p = 0; p < np; ++p) {
        plan.wire[p] = duplicate[p] ? scratch++ : map.origin[p];
    }
    plan.cloner.num_qubits = scratch;
    const double c = std::cos(theta);
    for (const auto &g : map.clone_groups) {
        const std::size_t m = g.size();
        if (spec.kind == ClonerKind::Optimal) {
            if (m != 2) {
                throw InvalidInput("the optimal cloner makes exactly two copies");
            }
            const double a = spec.cloner_angle.value_or(theta);
            plan.cloner.gates.emplace_back(qsim::TwoQubit{
                plan.wire[g[0]], plan.wire[g[1]], qsim::u_ostar(a, a).transpose()});
            plan.decoder_theta[g[0]] = spec.decoder_angle;
            plan.decoder_theta[g[1]] = spec.decoder_angle;
            continue;
        }
        const double tp = enu_angle(theta, m);
        // Peel one copy at a time: the current wire keeps theta' and the next
        // wire carries the remaining m-t copies' worth of overlap.
        for (std::size_t t = 1; t < m; ++t) {
            const double rest =
                std::acos(std::pow(c, static_cast<double>(m - t) / static_cast<double>(m)));
            plan.cloner.gates.emplace_back(qsim::TwoQubit{
                plan.wire[g[t - 1]], plan.wire[g[t]], qsim::u_ostar(tp, rest).transpose()});
        }
        for (auto p : g) {
            plan.decoder_theta[p] = tp;
        }
    }
    return plan;
}

namespace {

struct BitDecoder {
    ClonePlan plan;
    qsim::BpqmCircuit v;
};

BitDecoder make_decoder(const codes::BinaryLinearCode &code, double theta, std::size_t r,
                        std::size_t h, const ClonerSpec &spec, std::size_t width) {
    const auto map = unroll(code, r, h);
    auto plan = plan_cloning(map, theta, spec, code.n());
    const auto compiled = mpg::compile_lists(
        mpg::build_mpg(map.unrolled, map.root_position), plan.decoder_theta);
    auto v = qsim::build_vr(compiled, plan.wire, width);
    return {std::move(plan), std::move(v)};
}

void check_width(std::size_t width) {
    if (width > qsim::kMaxQubits) {
        throw GuardError("cloned register of " + std::to_string(width) +
                         " qubits exceeds the simulator limit");
    }
}

} // namespace

double nontree_bit_success(const codes::BinaryLinearCode &code, double theta, std::size_t r,
                           std::size_t h, const ClonerSpec &spec) {
    const auto map = unroll(code, r, h);
    const std::size_t width = code.n() + scratch_count(map);
    check_width(width);
    const auto dec = make_decoder(code, theta, r, h, spec, width);
    const std::vector<double> th(code.n(), theta);
    const auto words = codes::codewords(code);
    double total = 0.0;
    for (const auto &x : words) {
        auto st = qsim::channel_state(x, th, width);
        qsim::apply(dec.plan.cloner, st);
        qsim::apply(dec.v.circuit, st);
        total += qsim::x_basis_probability(st, dec.v.roles.data, x[r]);
    }
    return total / static_cast<double>(words.size());
}

double nontree_block_success(const codes::BinaryLinearCode &code, double theta,
                             std::size_t h, const ClonerSpec &spec,
                             std::span<const std::size_t> order) {
    std::vector<std::size_t> ord(order.begin(), order.end());
    if (ord.empty()) {
        ord = code.info_set();
    }
    qsim::check_information_set(code, ord);
    std::size_t width = code.n();
    for (auto r : ord) {
        width = std::max(width, code.n() + scratch_count(unroll(code, r, h)));
    }
    check_width(width);
    std::vector<BitDecoder> decs;
    for (auto r : ord) {
        decs.push_back(make_decoder(code, theta, r, h, spec, width));
    }
    const std::vector<double> th(code.n(), theta);
    const auto words = codes::codewords(code);
    double total = 0.0;
    for (const auto &x : words) {
        auto st = qsim::channel_state(x, th, width);
        for (std::size_t j = 0; j < ord.size(); ++j) {
            qsim::apply(decs[j].plan.cloner, st);
            qsim::apply(decs[j].v.circuit, st);
            qsim::project_x_basis(st, decs[j].v.roles.data, x[ord[j]]);
            qsim::apply_inverse(decs[j].v.circuit, st);
            qsim::apply_inverse(decs[j].plan.cloner, st);
        }
        total += st.norm_squared();
    }
    return total / static_cast<double>(words.size());
}

std::vector<SweepPoint> optimal_cloner_sweep(const codes::BinaryLinearCode &code,
                                             std::size_t r, std::size_t h, double theta,
                                             std::span<const double> theta_primes) {
    std::vector<SweepPoint> out;
    out.reserve(theta_primes.size());
    for (double tp : theta_primes) {
        out.push_back({tp, nontree_bit_success(code, theta, r, h, ClonerSpec::optimal(tp))});
    }
    return out;
}

std::vector<SubtreeStrategy> code8_strategies() {
    // Indices below are 1-based for readability and shifted on return.
    std::vector<SubtreeStrategy> s = {
        {"strategy1", {1, 2, 4, 5, 6, 7, 8}, {{1, 2, 5}, {1, 4, 8}, {4, 7}, {2, 6}}},
        {"strategy2", {1, 2, 3, 4, 5, 6, 7, 8}, {{1, 2, 5}, {1, 4, 8}, {4, 7}, {2, 3, 6}}},
        {"strategy3", {1, 2, 3, 4, 5, 7, 8}, {{1, 2, 5}, {1, 4, 8}, {3, 4, 7}}},
    };
    for (auto &st : s) {
        for (auto &v : st.variables) {
            --v;
        }
        for (auto &c : st.checks) {
            for (auto &v : c) {
                --v;
            }
        }
    }
    return s;
}

double subtree_bit_success(const codes::BinaryLinearCode &code,
                           const SubtreeStrategy &strategy, double theta, std::size_t r,
                           const std::function<bool(const Bits &)> &keep) {
    auto vars = strategy.variables;
    std::sort(vars.begin(), vars.end());
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t p = 0; p < vars.size(); ++p) {
        if (vars[p] >= code.n()) {
            throw InvalidInput("subtree variable out of range");
        }
        pos[vars[p]] = p;
    }
    if (!pos.contains(r)) {
        throw InvalidInput("subtree does not contain the decoded bit");
    }
    Gf2Matrix H(strategy.checks.size(), vars.size());
    for (std::size_t c = 0; c < strategy.checks.size(); ++c) {
        for (auto v : strategy.checks[c]) {
            if (!pos.contains(v)) {
                throw InvalidInput("subtree check uses a variable outside the subtree");
            }
            H.set(c, pos[v], 1);
        }
    }
    const auto sub = codes::BinaryLinearCode::from_parity_check(H, strategy.name);
    const std::vector<double> th(vars.size(), theta);
    const auto v = qsim::build_vr(mpg::compile_lists(mpg::build_mpg(sub, pos[r]), th));
    double total = 0.0;
    std::size_t count = 0;
    for (const auto &x : codes::codewords(code)) {
        if (keep && !keep(x)) {
            continue;
        }
        Bits xs(vars.size());
        for (std::size_t p = 0; p < vars.size(); ++p) {
            xs[p] = x[vars[p]];
        }
        auto st = qsim::channel_state(xs, th);
        qsim::apply(v.circuit, st);
        total += qsim::x_basis_probability(st, v.roles.data, x[r]);
        ++count;
    }
    if (count == 0) {
        throw InvalidInput("no codeword passes the filter");
    }
    return total / static_cast<double>(count);
}

} // namespace bpqm::nontree
