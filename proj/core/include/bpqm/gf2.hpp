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
 * Dense linear algebra over GF(2).
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bpqm/common.hpp"

namespace bpqm {

/**
 * @brief Dense binary matrix, row-major, one byte per entry.
 */
class Gf2Matrix {
  public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_{rows}, cols_{cols}, data_(rows * cols, 0) {}

    /// Builds a matrix from equally sized rows. Throws InvalidInput on
    /// ragged rows or entries other than 0/1.
    static Gf2Matrix from_rows(const std::vector<Bits> &rows);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    [[nodiscard]] std::uint8_t operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    void set(std::size_t r, std::size_t c, std::uint8_t v) {
        data_[r * cols_ + c] = v & 1U;
    }

    [[nodiscard]] Bits row(std::size_t r) const;
    [[nodiscard]] Gf2Matrix transpose() const;
    [[nodiscard]] bool is_zero() const;
    void xor_row_into(std::size_t src, std::size_t dst);
    void swap_rows(std::size_t a, std::size_t b);

    /// Keeps only the listed columns, in the given order.
    [[nodiscard]] Gf2Matrix select_columns(const std::vector<std::size_t> &cols) const;

    bool operator==(const Gf2Matrix &) const = default;

  private:
    std::size_t rows_{0};
    std::size_t cols_{0};
    std::vector<std::uint8_t> data_;
};

Gf2Matrix operator*(const Gf2Matrix &a, const Gf2Matrix &b);

/// Row vector times matrix.
Bits mul(const Bits &v, const Gf2Matrix &m);

/// Matrix times column vector.
Bits mul(const Gf2Matrix &m, const Bits &v);

/**
 * @brief Reduced row echelon form with pivots searched from the rightmost
 * column leftwards. Zero rows are dropped.
 */
struct Echelon {
    Gf2Matrix reduced;
    std::vector<std::size_t> pivots; ///< pivot column of each kept row
};

Echelon reduce_right(const Gf2Matrix &m);

std::size_t rank(const Gf2Matrix &m);

/// Renders rows as strings of 0/1 separated by newlines.
std::string to_string(const Gf2Matrix &m);

} // namespace bpqm
