// Copyright 2026 The cssmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CSSMAP_BIT_MATRIX_H
#define CSSMAP_BIT_MATRIX_H

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cssmap/bit_vector.h"

namespace cssmap {

/// Dense row-major matrix over F2. Every row is a BitVector of length cols().
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {
    }
    /// Zero-row matrix that still remembers its column count.
    explicit BitMatrix(size_t cols) : cols_(cols) {
    }

    static BitMatrix identity(size_t n) {
        BitMatrix m(n, n);
        for (size_t i = 0; i < n; i++) {
            m.rows_[i].set(i, true);
        }
        return m;
    }

    /// Rows given as '0'/'1' strings of equal length.
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows) {
        return from_strings(std::vector<std::string_view>(rows));
    }
    static BitMatrix from_strings(const std::vector<std::string_view> &rows) {
        if (rows.empty()) {
            return BitMatrix();
        }
        BitMatrix m(rows.front().size());
        for (auto r : rows) {
            m.push_row(BitVector::from_string(r));
        }
        return m;
    }

    static BitMatrix from_rows(size_t cols, std::vector<BitVector> rows) {
        BitMatrix m(cols);
        for (auto &r : rows) {
            m.push_row(std::move(r));
        }
        return m;
    }

    size_t rows() const {
        return rows_.size();
    }
    size_t cols() const {
        return cols_;
    }
    bool empty() const {
        return rows_.empty();
    }

    const BitVector &row(size_t i) const {
        return rows_[i];
    }
    BitVector &row(size_t i) {
        return rows_[i];
    }
    const BitVector &operator[](size_t i) const {
        return rows_[i];
    }
    const std::vector<BitVector> &row_list() const {
        return rows_;
    }

    bool get(size_t r, size_t c) const {
        return rows_[r].get(c);
    }
    void set(size_t r, size_t c, bool v) {
        rows_[r].set(c, v);
    }

    void push_row(BitVector r) {
        if (r.size() != cols_) {
            throw DimensionError(
                "row of length " + std::to_string(r.size()) + " pushed into matrix with " + std::to_string(cols_) +
                " columns");
        }
        rows_.push_back(std::move(r));
    }

    BitMatrix transpose() const {
        BitMatrix t(cols_, rows_.size());
        for (size_t r = 0; r < rows_.size(); r++) {
            for (size_t c = 0; c < cols_; c++) {
                if (rows_[r].get(c)) {
                    t.rows_[c].set(r, true);
                }
            }
        }
        return t;
    }

    /// Column c as a vector of length rows().
    BitVector column(size_t c) const {
        BitVector v(rows_.size());
        for (size_t r = 0; r < rows_.size(); r++) {
            v.set(r, rows_[r].get(c));
        }
        return v;
    }

    /// Matrix made of the listed rows, in the listed order.
    BitMatrix select_rows(const std::vector<size_t> &indices) const {
        BitMatrix m(cols_);
        for (size_t i : indices) {
            m.push_row(rows_[i]);
        }
        return m;
    }

    bool is_zero() const {
        for (const auto &r : rows_) {
            if (!r.is_zero()) {
                return false;
            }
        }
        return true;
    }

    bool operator==(const BitMatrix &other) const = default;

    /// One line per row of '0'/'1' characters.
    std::string str() const {
        std::string out;
        for (const auto &r : rows_) {
            out += r.str();
            out += '\n';
        }
        return out;
    }

   private:
    size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

/// M v over F2.
inline BitVector matvec(const BitMatrix &m, const BitVector &v) {
    if (v.size() != m.cols()) {
        throw DimensionError(
            "matvec: matrix has " + std::to_string(m.cols()) + " columns but vector has length " +
            std::to_string(v.size()));
    }
    BitVector out(m.rows());
    for (size_t r = 0; r < m.rows(); r++) {
        if (dot(m[r], v)) {
            out.set(r, true);
        }
    }
    return out;
}

/// A * B^T over F2; entry (i, j) is dot(A_i, B_j).
inline BitMatrix mul_transpose(const BitMatrix &a, const BitMatrix &b) {
    if (a.cols() != b.cols()) {
        throw DimensionError("mul_transpose: column count mismatch");
    }
    BitMatrix out(a.rows(), b.rows());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < b.rows(); j++) {
            if (dot(a[i], b[j])) {
                out.set(i, j, true);
            }
        }
    }
    return out;
}

}  // namespace cssmap

#endif
