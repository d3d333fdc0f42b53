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
#include "bpqm/mpg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace bpqm::mpg {

namespace {

/// Guard on the number of check ancillas below any node.
constexpr std::size_t kMaxChecksPerList = 24;

struct Builder {
    const codes::TannerGraph &tg;
    std::size_t n;
    std::vector<MpgNode> raw;

    int leaf(std::size_t v) {
        raw.push_back({NodeKind::Channel, 0, v, -1, -1, v});
        return static_cast<int>(raw.size() - 1);
    }

    int join(NodeKind kind, int a, int b) {
        raw.push_back({kind, 0, 0, a, b,
                       std::min(raw[static_cast<std::size_t>(a)].min_leaf,
                                raw[static_cast<std::size_t>(b)].min_leaf)});
        return static_cast<int>(raw.size() - 1);
    }

    // Sorts by smallest leaf and folds into a right comb, peeling off the two
    // largest first, so the result reads (c1, (c2, (..., (c_{d-1}, c_d)))).
    int comb(NodeKind kind, std::vector<int> items) {
        std::sort(items.begin(), items.end(), [this](int a, int b) {
            return raw[static_cast<std::size_t>(a)].min_leaf <
                   raw[static_cast<std::size_t>(b)].min_leaf;
        });
        while (items.size() > 1) {
            const int b = items.back();
            items.pop_back();
            const int a = items.back();
            items.back() = join(kind, a, b);
        }
        return items.front();
    }

    int variable(std::size_t v, std::size_t parent_check) {
        std::vector<int> items;
        if (v < n) {
            items.push_back(leaf(v));
        }
        for (auto c : tg.var_checks[v]) {
            if (c != parent_check) {
                items.push_back(check(c, v));
            }
        }
        if (items.empty()) {
            throw InvalidInput("hidden variable " + std::to_string(v + 1) +
                               " has a single check; realization is degenerate");
        }
        return comb(NodeKind::Equality, std::move(items));
    }

    int check(std::size_t c, std::size_t parent_var) {
        std::vector<int> items;
        for (auto u : tg.check_vars[c]) {
            if (u != parent_var) {
                items.push_back(variable(u, c));
            }
        }
        if (items.empty()) {
            throw InvalidInput("check " + std::to_string(c + 1) +
                               " involves a single bit; the code fixes that bit");
        }
        return comb(NodeKind::Check, std::move(items));
    }
};

} // namespace

std::size_t Mpg::count(NodeKind kind) const {
    return static_cast<std::size_t>(std::count_if(
        nodes_.begin(), nodes_.end(), [kind](const auto &nd) { return nd.kind == kind; }));
}

std::string Mpg::to_string() const {
    std::ostringstream os;
    std::function<void(std::size_t, int)> walk = [&](std::size_t i, int depth) {
        const auto &nd = nodes_[i];
        os << std::string(static_cast<std::size_t>(2 * depth), ' ');
        switch (nd.kind) {
        case NodeKind::Channel:
            os << "channel X" << nd.leaf + 1 << '\n';
            return;
        case NodeKind::Check:
            os << "check " << nd.id;
            break;
        case NodeKind::Equality:
            os << "equality " << nd.id;
            break;
        }
        os << (i == root() ? " (root)" : "") << '\n';
        walk(static_cast<std::size_t>(nd.first), depth + 1);
        walk(static_cast<std::size_t>(nd.second), depth + 1);
    };
    walk(root(), 0);
    return os.str();
}

Mpg build_mpg(const codes::BinaryLinearCode &code, std::size_t r) {
    const auto tg = codes::factor_graph(code);
    if (r >= code.n()) {
        throw InvalidInput("bit index out of range");
    }
    if (!codes::is_tree(tg)) {
        throw InvalidInput("factor graph of code '" + code.name() +
                           "' is not a connected tree; use the unrolled decoder");
    }
    Builder b{tg, code.n(), {}};
    std::vector<int> items{b.leaf(r)};
    for (auto c : tg.var_checks[r]) {
        items.push_back(b.check(c, r));
    }
    const int top = b.comb(NodeKind::Equality, std::move(items));

    // Re-emit in post-order and name internal nodes 1..n-1.
    std::vector<MpgNode> out;
    out.reserve(b.raw.size());
    std::size_t next_id = 1;
    std::function<int(int)> emit = [&](int i) -> int {
        MpgNode nd = b.raw[static_cast<std::size_t>(i)];
        if (nd.kind != NodeKind::Channel) {
            nd.first = emit(nd.first);
            nd.second = emit(nd.second);
            nd.id = next_id++;
        }
        out.push_back(nd);
        return static_cast<int>(out.size() - 1);
    };
    emit(top);
    return {std::move(out), r, code.n()};
}

CompiledMpg compile_lists(const Mpg &mpg, std::span<const double> theta) {
    if (theta.size() != mpg.num_leaves()) {
        throw InvalidInput("compile_lists: expected one angle per code bit");
    }
    for (double t : theta) {
        if (!(t > 0.0 && t < kPi)) {
            throw InvalidInput("channel angles must lie strictly inside (0, pi)");
        }
    }
    CompiledMpg out{mpg, {theta.begin(), theta.end()}, {}};
    out.lists.resize(mpg.nodes().size());
    for (std::size_t i = 0; i < mpg.nodes().size(); ++i) {
        const auto &nd = mpg.node(i);
        auto &dst = out.lists[i];
        if (nd.kind == NodeKind::Channel) {
            dst.branches.push_back({{}, theta[nd.leaf], 1.0});
            continue;
        }
        const auto &L1 = out.lists[static_cast<std::size_t>(nd.first)];
        const auto &L2 = out.lists[static_cast<std::size_t>(nd.second)];
        const bool is_check = nd.kind == NodeKind::Check;
        if (is_check) {
            dst.checks.push_back(nd.id);
        }
        dst.checks.insert(dst.checks.end(), L1.checks.begin(), L1.checks.end());
        dst.checks.insert(dst.checks.end(), L2.checks.begin(), L2.checks.end());
        if (dst.checks.size() > kMaxChecksPerList) {
            throw GuardError("branch list would exceed 2^" +
                             std::to_string(kMaxChecksPerList) + " entries");
        }
        dst.branches.reserve(std::size_t{1} << dst.checks.size());
        for (int l = 0; l < (is_check ? 2 : 1); ++l) {
            for (const auto &a : L1.branches) {
                for (const auto &b : L2.branches) {
                    BranchEntry e;
                    if (is_check) {
                        e.s.push_back(static_cast<std::uint8_t>(l));
                    }
                    e.s.insert(e.s.end(), a.s.begin(), a.s.end());
                    e.s.insert(e.s.end(), b.s.begin(), b.s.end());
                    if (is_check) {
                        e.angle = angle_boxstar(a.angle, b.angle, l);
                        e.prob = a.prob * b.prob * prob_boxstar(a.angle, b.angle, l);
                    } else {
                        e.angle = angle_ostar(a.angle, b.angle);
                        e.prob = a.prob * b.prob;
                    }
                    dst.branches.push_back(std::move(e));
                }
            }
        }
    }
    return out;
}

} // namespace bpqm::mpg
