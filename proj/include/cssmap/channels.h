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

#ifndef CSSMAP_CHANNELS_H
#define CSSMAP_CHANNELS_H

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "cssmap/code_io.h"
#include "cssmap/css_code.h"
#include "cssmap/error.h"
#include "cssmap/sector_distribution.h"

namespace cssmap {

struct IndependentNoise {
    double px = 0;
    double pz = 0;
};

/// Single-qubit Pauli channel with X, Y, Z probabilities.
struct PauliNoise {
    double ptx = 0;
    double pty = 0;
    double ptz = 0;

    double total() const {
        return ptx + pty + ptz;
    }
};

inline void validate_probability(double p, const char *what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DimensionError(std::string(what) + " must lie in [0, 1]");
    }
}

inline void validate(const PauliNoise &noise) {
    validate_probability(noise.ptx, "p_x");
    validate_probability(noise.pty, "p_y");
    validate_probability(noise.ptz, "p_z");
    if (noise.total() > 1.0 + 1e-15) {
        throw DimensionError("p_x + p_y + p_z must not exceed 1");
    }
}

/// Independent X and Z flips written as one Pauli channel.
inline PauliNoise depolarizing_from_independent(double px, double pz) {
    return {px * (1 - pz), px * pz, pz * (1 - px)};
}

namespace detail {

/// e * log(p) with the convention 0 * log(0) = 0.
inline double xlog(size_t e, double p) {
    return e == 0 ? 0.0 : (double)e * std::log(p);
}

}  // namespace detail

/// p^weight (1-p)^(n-weight), evaluated in log space. 0^0 = 1.
inline double error_weight_prob(size_t weight, size_t n, double p) {
    if (weight > n) {
        throw DimensionError("error weight exceeds n");
    }
    return std::exp(detail::xlog(weight, p) + detail::xlog(n - weight, 1.0 - p));
}

/// Hard caps on exhaustive enumeration.
inline constexpr size_t kMaxFactorizedQubits = 26;
inline constexpr size_t kMaxJointQubits = 13;
/// Cap on entries of a per-thread count table.
inline constexpr size_t kMaxCountEntries = size_t{1} << 25;

namespace detail {

/// Runs `body(lo, hi, worker)` over `threads` contiguous pieces of [0, total).
template <typename Body>
void parallel_ranges(uint64_t total, size_t threads, Body body) {
    threads = std::max<size_t>(1, std::min<uint64_t>(threads, total));
    if (threads == 1) {
        body(0, total, 0);
        return;
    }
    std::vector<std::thread> pool;
    for (size_t w = 0; w < threads; w++) {
        uint64_t lo = total * w / threads;
        uint64_t hi = total * (w + 1) / threads;
        pool.emplace_back([=, &body] { body(lo, hi, w); });
    }
    for (auto &t : pool) {
        t.join();
    }
}

/// Packs column l of `checks` restricted to `rows` at `offset`.
inline uint64_t column_bits(const BitMatrix &checks, const std::vector<size_t> &rows, size_t l, size_t offset) {
    uint64_t out = 0;
    for (size_t i = 0; i < rows.size(); i++) {
        if (checks.get(rows[i], l)) {
            out |= uint64_t{1} << (offset + i);
        }
    }
    return out;
}

inline uint64_t column_bits(const BitMatrix &m, size_t l, size_t offset) {
    uint64_t out = 0;
    for (size_t i = 0; i < m.rows(); i++) {
        if (m.get(i, l)) {
            out |= uint64_t{1} << (offset + i);
        }
    }
    return out;
}

/// Packed sector contribution of an X error on each qubit, in `layout`.
inline std::vector<uint64_t> x_error_columns(const CssCode &code, const SectorLayout &layout) {
    std::vector<uint64_t> cols(code.n(), 0);
    for (size_t l = 0; l < code.n(); l++) {
        if (layout.fields.has(Field::b)) {
            cols[l] |= column_bits(code.hz(), code.independent_z_checks(), l, layout.offset(Field::b));
        }
        if (layout.fields.has(Field::kz)) {
            cols[l] |= column_bits(code.logical_z(), l, layout.offset(Field::kz));
        }
    }
    return cols;
}

/// Packed sector contribution of a Z error on each qubit, in `layout`.
inline std::vector<uint64_t> z_error_columns(const CssCode &code, const SectorLayout &layout) {
    std::vector<uint64_t> cols(code.n(), 0);
    for (size_t l = 0; l < code.n(); l++) {
        if (layout.fields.has(Field::a)) {
            cols[l] |= column_bits(code.hx(), code.independent_x_checks(), l, layout.offset(Field::a));
        }
        if (layout.fields.has(Field::kx)) {
            cols[l] |= column_bits(code.logical_x(), l, layout.offset(Field::kx));
        }
    }
    return cols;
}

}  // namespace detail

/// Number of error strings of each weight in each sector, for one error type.
///
/// counts[sector * (n + 1) + w] is the number of strings of weight w landing
/// in `sector`. The counts are exact integers, so splitting the enumeration
/// into any number of pieces and adding the pieces gives an identical table.
struct SectorCounts {
    SectorLayout layout;
    size_t n = 0;
    size_t k = 0;
    std::string code_hash;
    std::vector<uint64_t> counts;

    uint64_t count(uint64_t sector, size_t weight) const {
        return counts[sector * (n + 1) + weight];
    }

    /// Probability table at flip probability p. Each entry is summed over
    /// weights in increasing order.
    SectorDistribution evaluate(double p) const {
        validate_probability(p, "flip probability");
        std::vector<double> wp(n + 1);
        for (size_t w = 0; w <= n; w++) {
            wp[w] = error_weight_prob(w, n, p);
        }
        SectorDistribution out(layout, k, code_hash);
        for (uint64_t s = 0; s < out.size(); s++) {
            double acc = 0;
            for (size_t w = 0; w <= n; w++) {
                acc += (double)counts[s * (n + 1) + w] * wp[w];
            }
            out[s] = acc;
        }
        return out;
    }
};

namespace detail {

inline SectorCounts count_sectors(
    const CssCode &code, const SectorLayout &layout, const std::vector<uint64_t> &cols, size_t threads) {
    size_t n = code.n();
    if (n > kMaxFactorizedQubits) {
        throw TooLarge(
            "factorized enumeration is capped at n <= " + std::to_string(kMaxFactorizedQubits) + " (got n = " +
            std::to_string(n) + ")");
    }
    size_t sectors = size_t{1} << layout.total_width();
    if (sectors * (n + 1) > kMaxCountEntries) {
        throw TooLarge("sector count table would exceed " + std::to_string(kMaxCountEntries) + " entries");
    }
    SectorCounts out{layout, n, code.k(), code_hash(code), {}};
    uint64_t total = uint64_t{1} << n;
    size_t workers = std::max<size_t>(1, std::min<uint64_t>(threads, total));
    std::vector<std::vector<uint64_t>> partial(workers);
    parallel_ranges(total, workers, [&](uint64_t lo, uint64_t hi, size_t w) {
        auto &tab = partial[w];
        tab.assign(sectors * (n + 1), 0);
        // Gray code: state(t) = t ^ (t >> 1); consecutive states differ in bit ctz(t).
        uint64_t state = lo ^ (lo >> 1);
        uint64_t key = 0;
        for (size_t l = 0; l < n; l++) {
            if ((state >> l) & 1) {
                key ^= cols[l];
            }
        }
        size_t weight = (size_t)std::popcount(state);
        for (uint64_t t = lo; t < hi; t++) {
            if (t != lo) {
                size_t l = (size_t)std::countr_zero(t);
                state ^= uint64_t{1} << l;
                key ^= cols[l];
                weight += ((state >> l) & 1) ? 1 : (size_t)-1;
            }
            tab[key * (n + 1) + weight]++;
        }
    });
    out.counts.assign(sectors * (n + 1), 0);
    for (const auto &tab : partial) {
        for (size_t i = 0; i < tab.size(); i++) {
            out.counts[i] += tab[i];
        }
    }
    return out;
}

}  // namespace detail

/// Enumerates all 2^n X errors into (b, kz) sectors.
inline SectorCounts count_x_sectors(const CssCode &code, size_t threads = 1) {
    SectorLayout layout{SectorWidths::of(code), kFactorizedX};
    return detail::count_sectors(code, layout, detail::x_error_columns(code, layout), threads);
}

/// Enumerates all 2^n Z errors into (a, kx) sectors.
inline SectorCounts count_z_sectors(const CssCode &code, size_t threads = 1) {
    SectorLayout layout{SectorWidths::of(code), kFactorizedZ};
    return detail::count_sectors(code, layout, detail::z_error_columns(code, layout), threads);
}

/// P(b, kz) under independent bit flips with probability px.
inline SectorDistribution sector_distribution_x(const CssCode &code, double px, size_t threads = 1) {
    auto dist = count_x_sectors(code, threads).evaluate(px);
    dist.noise() = {{"p_x", px}};
    return dist;
}

/// P(a, kx) under independent phase flips with probability pz.
inline SectorDistribution sector_distribution_z(const CssCode &code, double pz, size_t threads = 1) {
    auto dist = count_z_sectors(code, threads).evaluate(pz);
    dist.noise() = {{"p_z", pz}};
    return dist;
}

/// Joint counts: for each sector (a, b, kx, kz), how many (Ex, Ez) pairs
/// have each combination of X-only, Y and Z-only weights.
struct JointSectorCounts {
    SectorLayout layout;
    size_t n = 0;
    size_t k = 0;
    std::string code_hash;
    /// Compact index of each (wx, wy, wz) with wx + wy + wz <= n.
    std::vector<std::array<size_t, 3>> classes;
    std::vector<uint64_t> counts;

    size_t num_classes() const {
        return classes.size();
    }

    SectorDistribution evaluate(const PauliNoise &noise) const {
        validate(noise);
        double rest = 1.0 - noise.total();
        if (rest < 0) {
            rest = 0;
        }
        std::vector<double> cp(classes.size());
        for (size_t c = 0; c < classes.size(); c++) {
            auto [wx, wy, wz] = classes[c];
            cp[c] = std::exp(
                detail::xlog(wx, noise.ptx) + detail::xlog(wy, noise.pty) + detail::xlog(wz, noise.ptz) +
                detail::xlog(n - wx - wy - wz, rest));
        }
        SectorDistribution out(layout, k, code_hash);
        size_t nc = classes.size();
        for (uint64_t s = 0; s < out.size(); s++) {
            double acc = 0;
            for (size_t c = 0; c < nc; c++) {
                acc += (double)counts[s * nc + c] * cp[c];
            }
            out[s] = acc;
        }
        out.noise() = {{"pt_x", noise.ptx}, {"pt_y", noise.pty}, {"pt_z", noise.ptz}};
        return out;
    }
};

/// Enumerates all 4^n (Ex, Ez) pairs into full sectors.
inline JointSectorCounts count_joint_sectors(const CssCode &code, size_t threads = 1) {
    size_t n = code.n();
    if (n > kMaxJointQubits) {
        throw TooLarge(
            "joint enumeration is capped at n <= " + std::to_string(kMaxJointQubits) + " (got n = " +
            std::to_string(n) + ")");
    }
    SectorLayout layout{SectorWidths::of(code), kJoint};
    JointSectorCounts out{layout, n, code.k(), code_hash(code), {}, {}};
    std::vector<size_t> class_of((n + 1) * (n + 1) * (n + 1), 0);
    for (size_t wx = 0; wx <= n; wx++) {
        for (size_t wy = 0; wx + wy <= n; wy++) {
            for (size_t wz = 0; wx + wy + wz <= n; wz++) {
                class_of[(wx * (n + 1) + wy) * (n + 1) + wz] = out.classes.size();
                out.classes.push_back({wx, wy, wz});
            }
        }
    }
    size_t nc = out.classes.size();
    size_t sectors = size_t{1} << layout.total_width();
    if (sectors * nc > kMaxCountEntries) {
        throw TooLarge("joint count table would exceed " + std::to_string(kMaxCountEntries) + " entries");
    }
    // Bits 0..n-1 of the enumeration index are Ex, bits n..2n-1 are Ez.
    auto xcols = detail::x_error_columns(code, layout);
    auto zcols = detail::z_error_columns(code, layout);
    std::vector<uint64_t> cols(xcols);
    cols.insert(cols.end(), zcols.begin(), zcols.end());

    uint64_t total = uint64_t{1} << (2 * n);
    uint64_t low_mask = (uint64_t{1} << n) - 1;
    size_t workers = std::max<size_t>(1, std::min<uint64_t>(threads, total));
    std::vector<std::vector<uint64_t>> partial(workers);
    detail::parallel_ranges(total, workers, [&](uint64_t lo, uint64_t hi, size_t w) {
        auto &tab = partial[w];
        tab.assign(sectors * nc, 0);
        uint64_t state = lo ^ (lo >> 1);
        uint64_t key = 0;
        for (size_t l = 0; l < 2 * n; l++) {
            if ((state >> l) & 1) {
                key ^= cols[l];
            }
        }
        uint64_t ex = state & low_mask;
        uint64_t ez = state >> n;
        size_t wx = (size_t)std::popcount(ex & ~ez);
        size_t wy = (size_t)std::popcount(ex & ez);
        size_t wz = (size_t)std::popcount(ez & ~ex);
        for (uint64_t t = lo; t < hi; t++) {
            if (t != lo) {
                size_t l = (size_t)std::countr_zero(t);
                key ^= cols[l];
                if (l < n) {
                    uint64_t bit = uint64_t{1} << l;
                    ex ^= bit;
                    bool on = ex & bit;
                    if (ez & bit) {
                        wy += on ? 1 : (size_t)-1;
                        wz += on ? (size_t)-1 : 1;
                    } else {
                        wx += on ? 1 : (size_t)-1;
                    }
                } else {
                    uint64_t bit = uint64_t{1} << (l - n);
                    ez ^= bit;
                    bool on = ez & bit;
                    if (ex & bit) {
                        wy += on ? 1 : (size_t)-1;
                        wx += on ? (size_t)-1 : 1;
                    } else {
                        wz += on ? 1 : (size_t)-1;
                    }
                }
            }
            tab[key * nc + class_of[(wx * (n + 1) + wy) * (n + 1) + wz]]++;
        }
    });
    out.counts.assign(sectors * nc, 0);
    for (const auto &tab : partial) {
        for (size_t i = 0; i < tab.size(); i++) {
            out.counts[i] += tab[i];
        }
    }
    return out;
}

/// P(a, b, kx, kz) under a general single-qubit Pauli channel.
inline SectorDistribution sector_distribution_joint(const CssCode &code, const PauliNoise &noise, size_t threads = 1) {
    validate(noise);
    return count_joint_sectors(code, threads).evaluate(noise);
}

}  // namespace cssmap

#endif
