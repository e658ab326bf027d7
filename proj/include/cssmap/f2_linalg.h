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

#ifndef CSSMAP_F2_LINALG_H
#define CSSMAP_F2_LINALG_H

#include <optional>
#include <utility>
#include <vector>

#include "cssmap/bit_matrix.h"

namespace cssmap {

struct RowReduced {
    BitMatrix reduced;
    std::vector<size_t> pivot_cols;
};

/// Reduced row echelon form. Pivots are chosen column by column, taking the
/// first row at or below the current position with a one in that column.
/// Zero rows end up at the bottom; the shape of the input is preserved.
inline RowReduced row_reduce(const BitMatrix &m) {
    RowReduced out{m, {}};
    BitMatrix &r = out.reduced;
    size_t next = 0;
    for (size_t c = 0; c < r.cols() && next < r.rows(); c++) {
        size_t found = next;
        while (found < r.rows() && !r.get(found, c)) {
            found++;
        }
        if (found == r.rows()) {
            continue;
        }
        std::swap(r.row(found), r.row(next));
        for (size_t i = 0; i < r.rows(); i++) {
            if (i != next && r.get(i, c)) {
                r.row(i) ^= r.row(next);
            }
        }
        out.pivot_cols.push_back(c);
        next++;
    }
    return out;
}

inline size_t rank(const BitMatrix &m) {
    return row_reduce(m).pivot_cols.size();
}

/// Basis of {v : M v = 0}, one vector per free column in increasing order.
inline BitMatrix kernel_basis(const BitMatrix &m) {
    auto [r, pivots] = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) {
        is_pivot[c] = true;
    }
    BitMatrix basis(m.cols());
    for (size_t f = 0; f < m.cols(); f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVector v(m.cols());
        v.set(f, true);
        for (size_t i = 0; i < pivots.size(); i++) {
            if (r.get(i, f)) {
                v.set(pivots[i], true);
            }
        }
        basis.push_row(std::move(v));
    }
    return basis;
}

/// Nonzero rows of the reduced row echelon form.
inline BitMatrix row_space_basis(const BitMatrix &m) {
    auto [r, pivots] = row_reduce(m);
    BitMatrix basis(m.cols());
    for (size_t i = 0; i < pivots.size(); i++) {
        basis.push_row(r.row(i));
    }
    return basis;
}

/// Some v with M v = y, or nothing. Free variables are set to zero.
inline std::optional<BitVector> solve(const BitMatrix &m, const BitVector &y) {
    if (y.size() != m.rows()) {
        throw DimensionError("solve: right-hand side length does not match row count");
    }
    BitMatrix aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t c = 0; c < m.cols(); c++) {
            if (m.get(i, c)) {
                aug.set(i, c, true);
            }
        }
        aug.set(i, m.cols(), y.get(i));
    }
    auto [r, pivots] = row_reduce(aug);
    BitVector v(m.cols());
    for (size_t i = 0; i < pivots.size(); i++) {
        if (pivots[i] == m.cols()) {
            return std::nullopt;
        }
        if (r.get(i, m.cols())) {
            v.set(pivots[i], true);
        }
    }
    return v;
}

/// Incrementally built echelon basis; answers "is this vector new?" in
/// O(rank) word operations.
class EchelonBasis {
   public:
    explicit EchelonBasis(size_t cols) : cols_(cols) {
    }

    size_t rank() const {
        return rows_.size();
    }

    /// Reduces v against the stored rows.
    BitVector reduce(BitVector v) const {
        for (size_t i = 0; i < rows_.size(); i++) {
            if (v.get(pivots_[i])) {
                v ^= rows_[i];
            }
        }
        return v;
    }

    bool contains(const BitVector &v) const {
        return reduce(v).is_zero();
    }

    /// Adds v if it is independent of the stored rows; returns whether it was.
    bool insert(const BitVector &v) {
        BitVector r = reduce(v);
        size_t p = r.first_one();
        if (p == r.size()) {
            return false;
        }
        // Keep previously stored rows clear of the new pivot so reduce() stays single-pass.
        for (auto &row : rows_) {
            if (row.get(p)) {
                row ^= r;
            }
        }
        rows_.push_back(std::move(r));
        pivots_.push_back(p);
        return true;
    }

   private:
    size_t cols_;
    std::vector<BitVector> rows_;
    std::vector<size_t> pivots_;
};

/// Indices of the rows kept by a greedy first-come scan; these rows form a
/// basis of the row space. Equivalently, the pivot columns of row_reduce(M^T).
inline std::vector<size_t> independent_rows(const BitMatrix &m) {
    EchelonBasis basis(m.cols());
    std::vector<size_t> keep;
    for (size_t i = 0; i < m.rows(); i++) {
        if (basis.insert(m[i])) {
            keep.push_back(i);
        }
    }
    return keep;
}

/// Rows extending the row space of `sub` to that of `full`. The result has
/// rank(full) - rank(sub) rows drawn greedily from row_space_basis(full).
inline BitMatrix complete_basis(const BitMatrix &sub, const BitMatrix &full) {
    if (sub.cols() != full.cols()) {
        throw DimensionError("complete_basis: column count mismatch");
    }
    EchelonBasis span_full(full.cols());
    for (const auto &r : full.row_list()) {
        span_full.insert(r);
    }
    EchelonBasis basis(full.cols());
    for (const auto &r : sub.row_list()) {
        if (!span_full.contains(r)) {
            throw DimensionError("complete_basis: row space of sub is not contained in row space of full");
        }
        basis.insert(r);
    }
    BitMatrix extra(full.cols());
    BitMatrix full_basis = row_space_basis(full);
    for (const auto &r : full_basis.row_list()) {
        if (basis.insert(r)) {
            extra.push_row(r);
        }
    }
    return extra;
}

}  // namespace cssmap

#endif
