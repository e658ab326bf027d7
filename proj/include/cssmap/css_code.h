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

#ifndef CSSMAP_CSS_CODE_H
#define CSSMAP_CSS_CODE_H

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cssmap/bit_matrix.h"
#include "cssmap/error.h"
#include "cssmap/f2_linalg.h"
#include "cssmap/symplectic.h"

namespace cssmap {

/// Throws CommutationViolation naming the first (row_x, row_z) pair with a
/// nonzero entry in Hx Hz^T.
inline void check_commutation(const BitMatrix &hz, const BitMatrix &hx) {
    for (size_t i = 0; i < hx.rows(); i++) {
        for (size_t j = 0; j < hz.rows(); j++) {
            if (dot(hx[i], hz[j])) {
                throw CommutationViolation(i, j);
            }
        }
    }
}

struct LogicalOperators {
    BitMatrix logical_x;  ///< k x n, X-type supports, each in ker(Hz).
    BitMatrix logical_z;  ///< k x n, Z-type supports, each in ker(Hx).
};

/// k symplectically paired logical operators.
///
/// Z-type candidates are a basis of ker(Hx), X-type candidates a basis of
/// ker(Hz); SGSOP runs over the Z-type list followed by the X-type list.
/// Pairs come out as (Z-type, X-type) and dot(logical_z[i], logical_x[j]) is
/// the identity matrix.
inline LogicalOperators logical_operators(const BitMatrix &hz, const BitMatrix &hx) {
    if (hz.cols() != hx.cols()) {
        throw DimensionError("Hz and Hx must have the same number of columns");
    }
    check_commutation(hz, hx);
    size_t n = hz.cols();
    std::vector<SymplecticOp> ops;
    BitMatrix ker_x = kernel_basis(hx);
    BitMatrix ker_z = kernel_basis(hz);
    for (const auto &r : ker_x.row_list()) {
        ops.push_back(SymplecticOp::z_type(r));
    }
    for (const auto &r : ker_z.row_list()) {
        ops.push_back(SymplecticOp::x_type(r));
    }
    auto result = sgsop(std::move(ops));
    LogicalOperators out{BitMatrix(n), BitMatrix(n)};
    for (auto &[first, second] : result.pairs) {
        SymplecticOp &z_op = first.is_z_type() ? first : second;
        SymplecticOp &x_op = first.is_z_type() ? second : first;
        if (!z_op.is_z_type() || !x_op.is_x_type()) {
            throw InvariantViolation("SGSOP produced a pair that is not (Z-type, X-type)");
        }
        out.logical_z.push_row(std::move(z_op.z_part));
        out.logical_x.push_row(std::move(x_op.x_part));
    }
    return out;
}

/// Syndrome and logical labels of an error: a and b are syndromes on the
/// independent X and Z checks, kx and kz the logical parity changes.
struct SectorKey {
    BitVector a;
    BitVector b;
    BitVector kx;
    BitVector kz;

    bool operator==(const SectorKey &other) const = default;
    SectorKey operator^(const SectorKey &o) const {
        return {a ^ o.a, b ^ o.b, kx ^ o.kx, kz ^ o.kz};
    }
};

struct CodeDistance {
    /// Minimum weight of a nontrivial X-type logical; 0 when k == 0.
    size_t dx;
    /// Minimum weight of a nontrivial Z-type logical; 0 when k == 0.
    size_t dz;
};

/// A validated CSS code. Immutable after construction.
///
/// Hz rows are Z-type checks (they detect X errors), Hx rows are X-type checks.
class CssCode {
   public:
    /// Validates Hx Hz^T = 0 and derives ranks, k, symmetry dimensions and
    /// logical operators.
    CssCode(BitMatrix hz, BitMatrix hx) : hz_(std::move(hz)), hx_(std::move(hx)) {
        if (hz_.cols() != hx_.cols()) {
            throw DimensionError(
                "Hz has " + std::to_string(hz_.cols()) + " columns but Hx has " + std::to_string(hx_.cols()));
        }
        if (hz_.cols() == 0) {
            throw DimensionError("a code needs at least one qubit");
        }
        check_commutation(hz_, hx_);
        auto logicals = logical_operators(hz_, hx_);
        init(std::move(logicals), false);
    }

    /// Same code with caller-chosen logical operators. The supports must be
    /// valid logicals with identity pairing matrix.
    CssCode(BitMatrix hz, BitMatrix hx, BitMatrix logical_x, BitMatrix logical_z)
        : hz_(std::move(hz)), hx_(std::move(hx)) {
        if (hz_.cols() != hx_.cols() || hz_.cols() == 0) {
            throw DimensionError("Hz and Hx must have the same positive number of columns");
        }
        check_commutation(hz_, hx_);
        init(LogicalOperators{std::move(logical_x), std::move(logical_z)}, true);
    }

    size_t n() const {
        return hz_.cols();
    }
    size_t k() const {
        return k_;
    }
    const BitMatrix &hz() const {
        return hz_;
    }
    const BitMatrix &hx() const {
        return hx_;
    }
    size_t rank_x() const {
        return indep_x_.size();
    }
    size_t rank_z() const {
        return indep_z_.size();
    }
    /// dim ker(Hx^T): redundancy among X checks.
    size_t dim_sym_x() const {
        return hx_.rows() - rank_x();
    }
    /// dim ker(Hz^T): redundancy among Z checks.
    size_t dim_sym_z() const {
        return hz_.rows() - rank_z();
    }
    const BitMatrix &logical_x() const {
        return logical_x_;
    }
    const BitMatrix &logical_z() const {
        return logical_z_;
    }
    /// Indices of the Hx rows that carry the a-syndrome.
    const std::vector<size_t> &independent_x_checks() const {
        return indep_x_;
    }
    /// Indices of the Hz rows that carry the b-syndrome.
    const std::vector<size_t> &independent_z_checks() const {
        return indep_z_;
    }

    /// b: syndrome of an X error on the independent Z checks.
    BitVector syndrome_of_x_error(const BitVector &ex) const {
        return restricted_syndrome(hz_, indep_z_, ex);
    }
    /// a: syndrome of a Z error on the independent X checks.
    BitVector syndrome_of_z_error(const BitVector &ez) const {
        return restricted_syndrome(hx_, indep_x_, ez);
    }
    /// kz_i = dot(logical_z[i], ex).
    BitVector kz_of_x_error(const BitVector &ex) const {
        return matvec(logical_z_, ex);
    }
    /// kx_i = dot(logical_x[i], ez).
    BitVector kx_of_z_error(const BitVector &ez) const {
        return matvec(logical_x_, ez);
    }

    SectorKey sector_of(const BitVector &ex, const BitVector &ez) const {
        if (ex.size() != n() || ez.size() != n()) {
            throw DimensionError("sector_of: error strings must have length n");
        }
        return {syndrome_of_z_error(ez), syndrome_of_x_error(ex), kx_of_z_error(ez), kz_of_x_error(ex)};
    }

    /// An X error with sector (b, kz): a particular solution of the
    /// independent Z checks, corrected by logical X operators so its kz
    /// matches.
    BitVector x_error_representative(const BitVector &b, const BitVector &kz) const {
        return representative(hz_.select_rows(indep_z_), logical_x_, logical_z_, b, kz);
    }
    /// A Z error with sector (a, kx).
    BitVector z_error_representative(const BitVector &a, const BitVector &kx) const {
        return representative(hx_.select_rows(indep_x_), logical_z_, logical_x_, a, kx);
    }

   private:
    static BitVector restricted_syndrome(const BitMatrix &h, const std::vector<size_t> &rows, const BitVector &e) {
        if (e.size() != h.cols()) {
            throw DimensionError("error string length does not match code length");
        }
        BitVector s(rows.size());
        for (size_t i = 0; i < rows.size(); i++) {
            if (dot(h[rows[i]], e)) {
                s.set(i, true);
            }
        }
        return s;
    }

    static BitVector representative(
        const BitMatrix &checks,
        const BitMatrix &shifters,
        const BitMatrix &readers,
        const BitVector &syndrome,
        const BitVector &labels) {
        if (syndrome.size() != checks.rows() || labels.size() != shifters.rows()) {
            throw DimensionError("representative: label widths do not match the code");
        }
        auto base = solve(checks, syndrome);
        if (!base) {
            throw InvariantViolation("independent checks failed to realize a syndrome");
        }
        BitVector e = *base;
        BitVector have = matvec(readers, e);
        for (size_t i = 0; i < shifters.rows(); i++) {
            if (have.get(i) != labels.get(i)) {
                e ^= shifters[i];
            }
        }
        return e;
    }

    /// Bad caller-supplied logicals are a DimensionError; bad computed ones
    /// an InvariantViolation.
    void init(LogicalOperators logicals, bool supplied) {
        auto fail = [supplied](const std::string &msg) {
            if (supplied) {
                throw DimensionError(msg);
            }
            throw InvariantViolation(msg);
        };
        indep_x_ = independent_rows(hx_);
        indep_z_ = independent_rows(hz_);
        if (rank_x() + rank_z() > n()) {
            throw InvariantViolation("rank_x + rank_z exceeds n");
        }
        k_ = n() - rank_x() - rank_z();
        logical_x_ = std::move(logicals.logical_x);
        logical_z_ = std::move(logicals.logical_z);
        if (logical_x_.rows() != k_ || logical_z_.rows() != k_ || logical_x_.cols() != n() ||
            logical_z_.cols() != n()) {
            fail(
                "expected " + std::to_string(k_) + " logical pairs, got " + std::to_string(logical_x_.rows()) +
                " X and " + std::to_string(logical_z_.rows()) + " Z");
        }
        for (size_t i = 0; i < k_; i++) {
            if (!matvec(hz_, logical_x_[i]).is_zero()) {
                fail("logical X " + std::to_string(i) + " is not in ker(Hz)");
            }
            if (!matvec(hx_, logical_z_[i]).is_zero()) {
                fail("logical Z " + std::to_string(i) + " is not in ker(Hx)");
            }
            for (size_t j = 0; j < k_; j++) {
                if (dot(logical_z_[i], logical_x_[j]) != (i == j)) {
                    fail("logical operators are not symplectically paired");
                }
            }
        }
    }

    BitMatrix hz_;
    BitMatrix hx_;
    std::vector<size_t> indep_x_;
    std::vector<size_t> indep_z_;
    size_t k_ = 0;
    BitMatrix logical_x_;
    BitMatrix logical_z_;
};

inline CssCode new_css(BitMatrix hz, BitMatrix hx) {
    return CssCode(std::move(hz), std::move(hx));
}

inline SectorKey sector_of(const CssCode &code, const BitVector &ex, const BitVector &ez) {
    return code.sector_of(ex, ez);
}

/// The same code with a different valid logical basis.
///
/// For k >= 2: logical_x[0] += logical_x[1] and logical_z[1] += logical_z[0],
/// which keeps the pairing matrix the identity. For k = 1: the first X check
/// row is added to logical_x[0] and the first Z check row to logical_z[0].
inline CssCode with_changed_logical_basis(const CssCode &code) {
    BitMatrix lx = code.logical_x();
    BitMatrix lz = code.logical_z();
    if (code.k() >= 2) {
        lx.row(0) ^= lx[1];
        lz.row(1) ^= lz[0];
    } else if (code.k() == 1) {
        if (code.hx().rows() > 0) {
            lx.row(0) ^= code.hx()[0];
        }
        if (code.hz().rows() > 0) {
            lz.row(0) ^= code.hz()[0];
        }
    }
    return CssCode(code.hz(), code.hx(), std::move(lx), std::move(lz));
}

/// Largest kernel dimension distance() will enumerate.
inline constexpr size_t kMaxDistanceKernelDim = 24;

namespace detail {

/// Minimum weight over the kernel elements whose pairing with `detectors` is
/// nonzero, by Gray-code enumeration of all kernel combinations.
inline size_t min_nontrivial_weight(const BitMatrix &kernel, const BitMatrix &detectors) {
    size_t dim = kernel.rows();
    if (detectors.rows() == 0) {
        return 0;
    }
    std::vector<uint64_t> labels(dim, 0);
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < detectors.rows(); j++) {
            if (dot(kernel[i], detectors[j])) {
                labels[i] |= uint64_t{1} << j;
            }
        }
    }
    BitVector v(kernel.cols());
    uint64_t label = 0;
    size_t best = kernel.cols() + 1;
    uint64_t total = uint64_t{1} << dim;
    for (uint64_t t = 1; t < total; t++) {
        size_t bit = (size_t)std::countr_zero(t);
        v ^= kernel[bit];
        label ^= labels[bit];
        if (label) {
            size_t w = v.weight();
            if (w < best) {
                best = w;
            }
        }
    }
    return best;
}

}  // namespace detail

/// Code distances by exhaustive search over ker(Hz) and ker(Hx).
inline CodeDistance distance(const CssCode &code) {
    BitMatrix ker_z = kernel_basis(code.hz());
    BitMatrix ker_x = kernel_basis(code.hx());
    if (ker_z.rows() > kMaxDistanceKernelDim || ker_x.rows() > kMaxDistanceKernelDim) {
        throw TooLarge(
            "distance enumeration needs kernel dimension <= " + std::to_string(kMaxDistanceKernelDim) + ", got " +
            std::to_string(std::max(ker_z.rows(), ker_x.rows())));
    }
    if (code.k() > 64) {
        throw TooLarge("distance enumeration supports at most 64 logical qubits");
    }
    // X-type logicals live in ker(Hz) and are detected by logical Z; vice versa.
    return {
        detail::min_nontrivial_weight(ker_z, code.logical_z()),
        detail::min_nontrivial_weight(ker_x, code.logical_x()),
    };
}

}  // namespace cssmap

#endif
