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
#include "bpqm/gf2.hpp"

#include <algorithm>
#include <sstream>

namespace bpqm {

Gf2Matrix Gf2Matrix::from_rows(const std::vector<Bits> &rows) {
    if (rows.empty()) {
        return {};
    }
    Gf2Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) {
            throw InvalidInput("binary matrix has rows of different length");
        }
        for (std::size_t c = 0; c < m.cols_; ++c) {
            if (rows[r][c] > 1) {
                throw InvalidInput("binary matrix entries must be 0 or 1");
            }
            m.set(r, c, rows[r][c]);
        }
    }
    return m;
}

Bits Gf2Matrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

Gf2Matrix Gf2Matrix::transpose() const {
    Gf2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t.set(c, r, (*this)(r, c));
        }
    }
    return t;
}

bool Gf2Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](auto v) { return v == 0; });
}

void Gf2Matrix::xor_row_into(std::size_t src, std::size_t dst) {
    for (std::size_t c = 0; c < cols_; ++c) {
        data_[dst * cols_ + c] ^= data_[src * cols_ + c];
    }
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t c = 0; c < cols_; ++c) {
        std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
    }
}

Gf2Matrix Gf2Matrix::select_columns(const std::vector<std::size_t> &cols) const {
    Gf2Matrix out(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            out.set(r, j, (*this)(r, cols[j]));
        }
    }
    return out;
}

Gf2Matrix operator*(const Gf2Matrix &a, const Gf2Matrix &b) {
    if (a.cols() != b.rows()) {
        throw InvalidInput("binary matrix product: shape mismatch");
    }
    Gf2Matrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
            std::uint8_t acc = 0;
            for (std::size_t i = 0; i < a.cols(); ++i) {
                acc ^= a(r, i) & b(i, c);
            }
            out.set(r, c, acc);
        }
    }
    return out;
}

Bits mul(const Bits &v, const Gf2Matrix &m) {
    if (v.size() != m.rows()) {
        throw InvalidInput("vector-matrix product: shape mismatch");
    }
    Bits out(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (v[r] == 0) {
            continue;
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out[c] ^= m(r, c);
        }
    }
    return out;
}

Bits mul(const Gf2Matrix &m, const Bits &v) {
    if (v.size() != m.cols()) {
        throw InvalidInput("matrix-vector product: shape mismatch");
    }
    Bits out(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::uint8_t acc = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            acc ^= m(r, c) & v[c];
        }
        out[r] = acc;
    }
    return out;
}

Echelon reduce_right(const Gf2Matrix &m) {
    Gf2Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t cc = a.cols(); cc-- > 0 && next < a.rows();) {
        std::size_t found = next;
        while (found < a.rows() && a(found, cc) == 0) {
            ++found;
        }
        if (found == a.rows()) {
            continue;
        }
        a.swap_rows(found, next);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r != next && a(r, cc) == 1) {
                a.xor_row_into(next, r);
            }
        }
        pivots.push_back(cc);
        ++next;
    }
    Gf2Matrix kept(next, a.cols());
    for (std::size_t r = 0; r < next; ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            kept.set(r, c, a(r, c));
        }
    }
    return {std::move(kept), std::move(pivots)};
}

std::size_t rank(const Gf2Matrix &m) { return reduce_right(m).pivots.size(); }

std::string to_string(const Gf2Matrix &m) {
    std::ostringstream os;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            os << static_cast<int>(m(r, c));
        }
        if (r + 1 < m.rows()) {
            os << '\n';
        }
    }
    return os.str();
}

} // namespace bpqm
