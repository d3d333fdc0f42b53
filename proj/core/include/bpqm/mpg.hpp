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
 * Message-passing graphs and their compiled check and branch lists.
 */
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bpqm/angles.hpp"
#include "bpqm/codes.hpp"
#include "bpqm/common.hpp"

namespace bpqm::mpg {

enum class NodeKind { Channel, Check, Equality };

/**
 * @brief Node of a message-passing graph.
 *
 * Internal nodes carry an id in 1..n-1 (post-order). Channel leaves carry
 * the 0-based code bit they read. `first` and `second` index into
 * Mpg::nodes(); the first child is the one holding the smallest leaf.
 */
struct MpgNode {
    NodeKind kind{NodeKind::Channel};
    std::size_t id{0};
    std::size_t leaf{0};
    int first{-1};
    int second{-1};
    std::size_t min_leaf{0};
};

/**
 * @brief Rooted full binary tree used to decode one code bit.
 *
 * Nodes are stored in post-order, so children precede parents and the
 * root is the last node.
 */
class Mpg {
  public:
    Mpg() = default;
    Mpg(std::vector<MpgNode> nodes, std::size_t target, std::size_t num_leaves)
        : nodes_{std::move(nodes)}, target_{target}, num_leaves_{num_leaves} {}

    [[nodiscard]] const std::vector<MpgNode> &nodes() const { return nodes_; }
    [[nodiscard]] const MpgNode &node(std::size_t i) const { return nodes_[i]; }
    [[nodiscard]] std::size_t root() const { return nodes_.size() - 1; }
    [[nodiscard]] std::size_t target() const { return target_; }
    [[nodiscard]] std::size_t num_leaves() const { return num_leaves_; }
    [[nodiscard]] std::size_t count(NodeKind kind) const;

    /// Indented rendering; bits are printed 1-based as X1, X2, ...
    [[nodiscard]] std::string to_string() const;

  private:
    std::vector<MpgNode> nodes_;
    std::size_t target_{0};
    std::size_t num_leaves_{0};
};

/**
 * @brief Builds the message-passing graph for code bit r (0-based).
 *
 * Uses the code's tree realization when present, otherwise its Tanner
 * graph. Throws InvalidInput for cyclic or disconnected graphs and for
 * dangling checks.
 */
Mpg build_mpg(const codes::BinaryLinearCode &code, std::size_t r);

struct BranchEntry {
    Bits s;        ///< ancilla pattern, first entry is the most significant
    double angle;  ///< in (0, pi)
    double prob;
};

struct NodeLists {
    std::vector<std::size_t> checks; ///< check node ids, in ancilla order
    std::vector<BranchEntry> branches;
};

/**
 * @brief MPG with per-node check lists and branch lists for fixed channel
 * angles.
 */
struct CompiledMpg {
    Mpg mpg;
    std::vector<double> theta; ///< per code bit
    std::vector<NodeLists> lists; ///< indexed like mpg.nodes()

    [[nodiscard]] const NodeLists &root_lists() const { return lists.back(); }
};

/// theta holds one angle per code bit, each in (0, pi).
CompiledMpg compile_lists(const Mpg &mpg, std::span<const double> theta);

} // namespace bpqm::mpg
