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
 * Binary linear codes, Tanner graphs and the built-in benchmark codes.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bpqm/common.hpp"
#include "bpqm/gf2.hpp"

namespace bpqm::codes {

/// Largest code dimension for which codewords are enumerated.
inline constexpr std::size_t kMaxEnumerationDimension = 24;

/**
 * @brief Tree-shaped parity-check description of a code that uses extra
 * hidden (punctured) state variables.
 *
 * Columns 0..n-1 of `checks` are the code bits, columns n..n+hidden-1 are
 * hidden. Puncturing the hidden columns must give back the code.
 */
struct TreeRealization {
    std::size_t hidden{0};
    Gf2Matrix checks;
};

/**
 * @brief An (n,k) binary linear code with parity-check matrix H and a
 * generator matrix G derived from it.
 *
 * Bits are 0-based in the API. G is built from the reduced row echelon form
 * of H with pivots chosen from the right, so the free (information) columns
 * carry an identity block.
 */
class BinaryLinearCode {
  public:
    /// Throws InvalidInput when H is empty-width or not of full row rank.
    static BinaryLinearCode from_parity_check(const Gf2Matrix &H,
                                              std::string name = {});

    /// Attaches a tree realization after checking it describes this code.
    [[nodiscard]] BinaryLinearCode with_realization(TreeRealization realization) const;

    [[nodiscard]] std::size_t n() const { return n_; }
    [[nodiscard]] std::size_t k() const { return k_; }
    [[nodiscard]] const Gf2Matrix &H() const { return H_; }
    [[nodiscard]] const Gf2Matrix &G() const { return G_; }
    [[nodiscard]] const std::string &name() const { return name_; }

    /// Positions of the message bits (identity columns of G), ascending.
    [[nodiscard]] const std::vector<std::size_t> &info_set() const { return info_set_; }

    [[nodiscard]] const std::optional<TreeRealization> &realization() const {
        return realization_;
    }

    /// Message m (length k) to codeword mG.
    [[nodiscard]] Bits encode(const Bits &message) const;

    /// Message given as an integer whose most significant bit is m_1.
    [[nodiscard]] Bits encode_index(std::uint64_t index) const;

    [[nodiscard]] bool contains(const Bits &x) const;

  private:
    std::size_t n_{0};
    std::size_t k_{0};
    Gf2Matrix H_;
    Gf2Matrix G_;
    std::vector<std::size_t> info_set_;
    std::string name_;
    std::optional<TreeRealization> realization_;
};

/// All 2^k codewords in lexicographic message order.
std::vector<Bits> codewords(const BinaryLinearCode &code);

/// Packs bits into an integer, bit i of the result is x[i].
std::uint64_t pack(const Bits &x);

/**
 * @brief Bipartite variable/check graph given by the support of a
 * parity-check matrix.
 */
struct TannerGraph {
    std::size_t variables{0};
    std::vector<std::vector<std::size_t>> var_checks;
    std::vector<std::vector<std::size_t>> check_vars;

    static TannerGraph from_matrix(const Gf2Matrix &checks);
    [[nodiscard]] std::size_t num_checks() const { return check_vars.size(); }
    [[nodiscard]] std::size_t num_edges() const;
};

TannerGraph tanner_graph(const BinaryLinearCode &code);

/**
 * @brief Graph used for message passing: the tree realization when the code
 * has one, otherwise the Tanner graph of H. Variables >= n are hidden.
 */
TannerGraph factor_graph(const BinaryLinearCode &code);

/// True iff the graph is connected and has no cycle.
bool is_tree(const TannerGraph &tg);

/// Names accepted by builtin_code.
std::vector<std::string> builtin_names();

/// code5, code6, code8, code17 or rep<N> (repetition code of length N).
BinaryLinearCode builtin_code(std::string_view name);

/**
 * @brief Parses the plain-text code format.
 *
 * First line "n k", then n-k rows of H. An optional trailing section
 * "realization <hidden>" followed by rows over n+hidden columns attaches a
 * tree realization. Blank lines and lines starting with '#' are ignored.
 */
BinaryLinearCode parse_code(std::istream &in, std::string name = {});

/// "builtin:<name>" or a path to a code file.
BinaryLinearCode load_code(const std::string &source);

std::string format_code(const BinaryLinearCode &code);

} // namespace bpqm::codes
