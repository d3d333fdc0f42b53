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
#include "bpqm/codes.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

namespace bpqm::codes {

namespace {

/// Solves A z = b over GF(2); empty optional when inconsistent.
std::optional<Bits> solve(const Gf2Matrix &A, const Bits &b) {
    Gf2Matrix aug(A.rows(), A.cols() + 1);
    for (std::size_t r = 0; r < A.rows(); ++r) {
        for (std::size_t c = 0; c < A.cols(); ++c) {
            aug.set(r, c, A(r, c));
        }
        aug.set(r, A.cols(), b[r]);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t next = 0;
    for (std::size_t c = 0; c < A.cols() && next < aug.rows(); ++c) {
        std::size_t f = next;
        while (f < aug.rows() && aug(f, c) == 0) {
            ++f;
        }
        if (f == aug.rows()) {
            continue;
        }
        aug.swap_rows(f, next);
        for (std::size_t r = 0; r < aug.rows(); ++r) {
            if (r != next && aug(r, c) == 1) {
                aug.xor_row_into(next, r);
            }
        }
        pivot_col.push_back(c);
        ++next;
    }
    for (std::size_t r = next; r < aug.rows(); ++r) {
        if (aug(r, A.cols()) == 1) {
            return std::nullopt;
        }
    }
    Bits z(A.cols(), 0);
    for (std::size_t r = 0; r < next; ++r) {
        z[pivot_col[r]] = aug(r, A.cols());
    }
    return z;
}

std::vector<Bits> rows_from_sets(std::size_t n,
                                 const std::vector<std::vector<std::size_t>> &sets) {
    std::vector<Bits> rows;
    for (const auto &s : sets) {
        Bits row(n, 0);
        for (auto v : s) {
            row[v - 1] = 1;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

BinaryLinearCode code17() {
    const std::vector<std::vector<std::size_t>> h = {
        {2, 3, 4, 5},   {6, 7, 8, 9}, {10, 11, 12, 13}, {14, 15, 16, 17},
        {2, 3, 6, 7, 10, 11, 14, 15}, {1, 2, 3, 6, 7}};
    auto code = BinaryLinearCode::from_parity_check(
        Gf2Matrix::from_rows(rows_from_sets(17, h)), "code17");
    // Hidden variables 18..21 are the pair sums z1..z4 and 22 is w = z1+z2.
    const std::vector<std::vector<std::size_t>> tree = {
        {2, 3, 18},   {4, 5, 18},   {6, 7, 19},   {8, 9, 19},
        {10, 11, 20}, {12, 13, 20}, {14, 15, 21}, {16, 17, 21},
        {18, 19, 22}, {20, 21, 22}, {1, 22}};
    return code.with_realization({5, Gf2Matrix::from_rows(rows_from_sets(22, tree))});
}

} // namespace

BinaryLinearCode BinaryLinearCode::from_parity_check(const Gf2Matrix &H,
                                                     std::string name) {
    if (H.cols() == 0) {
        throw InvalidInput("parity-check matrix has no columns");
    }
    const auto ech = reduce_right(H);
    if (ech.pivots.size() != H.rows()) {
        throw InvalidInput("parity-check matrix is rank deficient (rank " +
                           std::to_string(ech.pivots.size()) + " < " +
                           std::to_string(H.rows()) + " rows); reduce it first");
    }
    BinaryLinearCode code;
    code.n_ = H.cols();
    code.k_ = H.cols() - H.rows();
    code.H_ = H;
    code.name_ = std::move(name);

    std::vector<std::uint8_t> is_pivot(code.n_, 0);
    for (auto p : ech.pivots) {
        is_pivot[p] = 1;
    }
    for (std::size_t c = 0; c < code.n_; ++c) {
        if (is_pivot[c] == 0) {
            code.info_set_.push_back(c);
        }
    }
    code.G_ = Gf2Matrix(code.k_, code.n_);
    for (std::size_t i = 0; i < code.k_; ++i) {
        const auto f = code.info_set_[i];
        code.G_.set(i, f, 1);
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
            if (ech.reduced(r, f) == 1) {
                code.G_.set(i, ech.pivots[r], 1);
            }
        }
    }
    return code;
}

BinaryLinearCode BinaryLinearCode::with_realization(TreeRealization realization) const {
    const auto &E = realization.checks;
    const std::size_t h = realization.hidden;
    if (E.cols() != n_ + h) {
        throw InvalidInput("tree realization must have n + hidden columns");
    }
    if (rank(E) != E.rows()) {
        throw InvalidInput("tree realization checks are rank deficient");
    }
    if (n_ + h - E.rows() != k_) {
        throw InvalidInput("tree realization describes a code of wrong dimension");
    }
    std::vector<std::size_t> visible(n_);
    std::iota(visible.begin(), visible.end(), 0);
    std::vector<std::size_t> hidden(h);
    std::iota(hidden.begin(), hidden.end(), n_);
    const auto Ev = E.select_columns(visible);
    const auto Eh = E.select_columns(hidden);
    if (rank(Eh) != h) {
        throw InvalidInput("hidden variables of the tree realization are not "
                           "determined by the code bits");
    }
    for (std::size_t i = 0; i < k_; ++i) {
        if (!solve(Eh, mul(Ev, G_.row(i)))) {
            throw InvalidInput("tree realization does not contain the code");
        }
    }
    BinaryLinearCode out = *this;
    out.realization_ = std::move(realization);
    return out;
}

Bits BinaryLinearCode::encode(const Bits &message) const {
    if (message.size() != k_) {
        throw InvalidInput("message length must equal k");
    }
    if (k_ == 0) {
        return Bits(n_, 0);
    }
    return mul(message, G_);
}

Bits BinaryLinearCode::encode_index(std::uint64_t index) const {
    Bits m(k_, 0);
    for (std::size_t i = 0; i < k_; ++i) {
        m[i] = static_cast<std::uint8_t>((index >> (k_ - 1 - i)) & 1U);
    }
    return encode(m);
}

bool BinaryLinearCode::contains(const Bits &x) const {
    if (x.size() != n_) {
        return false;
    }
    const auto s = mul(H_, x);
    return std::all_of(s.begin(), s.end(), [](auto v) { return v == 0; });
}

std::vector<Bits> codewords(const BinaryLinearCode &code) {
    if (code.k() > kMaxEnumerationDimension) {
        throw GuardError("codeword enumeration limited to k <= " +
                         std::to_string(kMaxEnumerationDimension));
    }
    std::vector<Bits> out;
    out.reserve(std::size_t{1} << code.k());
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << code.k()); ++i) {
        out.push_back(code.encode_index(i));
    }
    return out;
}

std::uint64_t pack(const Bits &x) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        v |= static_cast<std::uint64_t>(x[i] & 1U) << i;
    }
    return v;
}

TannerGraph TannerGraph::from_matrix(const Gf2Matrix &checks) {
    TannerGraph tg;
    tg.variables = checks.cols();
    tg.var_checks.resize(checks.cols());
    tg.check_vars.resize(checks.rows());
    for (std::size_t r = 0; r < checks.rows(); ++r) {
        for (std::size_t c = 0; c < checks.cols(); ++c) {
            if (checks(r, c) == 1) {
                tg.check_vars[r].push_back(c);
                tg.var_checks[c].push_back(r);
            }
        }
    }
    return tg;
}

std::size_t TannerGraph::num_edges() const {
    std::size_t e = 0;
    for (const auto &vs : check_vars) {
        e += vs.size();
    }
    return e;
}

TannerGraph tanner_graph(const BinaryLinearCode &code) {
    return TannerGraph::from_matrix(code.H());
}

TannerGraph factor_graph(const BinaryLinearCode &code) {
    if (code.realization()) {
        return TannerGraph::from_matrix(code.realization()->checks);
    }
    return tanner_graph(code);
}

bool is_tree(const TannerGraph &tg) {
    // Union-find over variables followed by checks; an edge joining two
    // vertices that are already connected closes a cycle.
    const std::size_t V = tg.variables + tg.num_checks();
    if (V == 0) {
        return false;
    }
    std::vector<std::size_t> parent(V);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    std::size_t components = V;
    for (std::size_t c = 0; c < tg.num_checks(); ++c) {
        for (auto v : tg.check_vars[c]) {
            const auto a = find(v);
            const auto b = find(tg.variables + c);
            if (a == b) {
                return false;
            }
            parent[a] = b;
            --components;
        }
    }
    return components == 1;
}

std::vector<std::string> builtin_names() {
    return {"code5", "code6", "code8", "code17", "rep<N>"};
}

BinaryLinearCode builtin_code(std::string_view name) {
    if (name == "code5") {
        return BinaryLinearCode::from_parity_check(
            Gf2Matrix::from_rows({{1, 1, 0, 1, 0}, {1, 0, 1, 0, 1}}), "code5");
    }
    if (name == "code6") {
        return BinaryLinearCode::from_parity_check(
            Gf2Matrix::from_rows(rows_from_sets(6, {{1, 3, 5}, {1, 2, 4}, {3, 4, 6}})),
            "code6");
    }
    if (name == "code8") {
        return BinaryLinearCode::from_parity_check(
            Gf2Matrix::from_rows(
                rows_from_sets(8, {{1, 2, 5}, {1, 4, 8}, {3, 4, 7}, {2, 3, 6}})),
            "code8");
    }
    if (name == "code17") {
        return code17();
    }
    if (name.starts_with("rep")) {
        std::size_t len = 0;
        try {
            len = std::stoul(std::string(name.substr(3)));
        } catch (const std::exception &) {
            throw InvalidInput("unknown built-in code '" + std::string(name) + "'");
        }
        if (len == 0 || len > 64) {
            throw InvalidInput("repetition length must be in 1..64");
        }
        Gf2Matrix H(len - 1, len);
        for (std::size_t i = 0; i + 1 < len; ++i) {
            H.set(i, i, 1);
            H.set(i, i + 1, 1);
        }
        return BinaryLinearCode::from_parity_check(H, std::string(name));
    }
    throw InvalidInput("unknown built-in code '" + std::string(name) + "'");
}

namespace {

Bits parse_row(const std::string &line, std::size_t width) {
    std::istringstream is(line);
    Bits row;
    int v = 0;
    while (is >> v) {
        if (v != 0 && v != 1) {
            throw InvalidInput("code file: entries must be 0 or 1");
        }
        row.push_back(static_cast<std::uint8_t>(v));
    }
    if (!is.eof()) {
        throw InvalidInput("code file: unparsable row '" + line + "'");
    }
    if (row.size() != width) {
        throw InvalidInput("code file: expected " + std::to_string(width) +
                           " entries in row '" + line + "'");
    }
    return row;
}

} // namespace

BinaryLinearCode parse_code(std::istream &in, std::string name) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        lines.push_back(line);
    }
    if (lines.empty()) {
        throw InvalidInput("code file is empty");
    }
    std::istringstream head(lines[0]);
    long n = 0;
    long k = 0;
    if (!(head >> n >> k) || n <= 0 || k < 0 || k > n) {
        throw InvalidInput("code file: first line must be 'n k' with 0 <= k <= n");
    }
    const auto m = static_cast<std::size_t>(n - k);
    if (lines.size() < 1 + m) {
        throw InvalidInput("code file: expected " + std::to_string(m) + " rows of H");
    }
    Gf2Matrix H(m, static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < m; ++r) {
        const auto row = parse_row(lines[1 + r], static_cast<std::size_t>(n));
        for (std::size_t c = 0; c < row.size(); ++c) {
            H.set(r, c, row[c]);
        }
    }
    auto code = BinaryLinearCode::from_parity_check(H, std::move(name));
    std::size_t pos = 1 + m;
    if (pos == lines.size()) {
        return code;
    }
    std::istringstream sec(lines[pos]);
    std::string keyword;
    long hidden = -1;
    if (!(sec >> keyword >> hidden) || keyword != "realization" || hidden < 0) {
        throw InvalidInput("code file: unexpected trailing line '" + lines[pos] + "'");
    }
    std::vector<Bits> rows;
    for (++pos; pos < lines.size(); ++pos) {
        rows.push_back(parse_row(lines[pos], static_cast<std::size_t>(n + hidden)));
    }
    return code.with_realization(
        {static_cast<std::size_t>(hidden), Gf2Matrix::from_rows(rows)});
}

BinaryLinearCode load_code(const std::string &source) {
    constexpr std::string_view prefix = "builtin:";
    if (source.starts_with(prefix)) {
        return builtin_code(std::string_view(source).substr(prefix.size()));
    }
    std::ifstream in(source);
    if (!in) {
        throw InvalidInput("cannot open code file '" + source + "'");
    }
    return parse_code(in, source);
}

std::string format_code(const BinaryLinearCode &code) {
    std::ostringstream os;
    os << code.n() << ' ' << code.k() << '\n';
    auto put = [&os](const Gf2Matrix &m) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                os << (c ? " " : "") << static_cast<int>(m(r, c));
            }
            os << '\n';
        }
    };
    put(code.H());
    if (code.realization()) {
        os << "realization " << code.realization()->hidden << '\n';
        put(code.realization()->checks);
    }
    return os.str();
}

} // namespace bpqm::codes
