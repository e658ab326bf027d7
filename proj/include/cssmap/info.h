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

#ifndef CSSMAP_INFO_H
#define CSSMAP_INFO_H

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "cssmap/bit_vector.h"
#include "cssmap/error.h"
#include "cssmap/sector_distribution.h"

namespace cssmap {

/// A quantity in bits, or the tagged value +infinity.
struct InfoResult {
    double value = 0;
    bool infinite = false;
    size_t k = 0;
    std::map<std::string, double> noise;

    static InfoResult inf(size_t k) {
        InfoResult r;
        r.infinite = true;
        r.k = k;
        return r;
    }
    /// The value with +infinity mapped to the floating special.
    double as_double() const {
        return infinite ? std::numeric_limits<double>::infinity() : value;
    }
    /// "inf" or the value in shortest round-trip decimal form.
    std::string str() const;
};

inline std::string format_double(double v) {
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[32];
    snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string InfoResult::str() const {
    return infinite ? "inf" : format_double(value);
}

namespace detail {

inline SectorLayout syndrome_layout(const SectorDistribution &dist) {
    return {dist.layout().widths, dist.fields() & kSyndromeFields};
}

/// Σ P log2(P / P_syndrome) over every entry of `dist`.
inline double conditional_sum(const SectorDistribution &dist) {
    SectorLayout syn = syndrome_layout(dist);
    auto marginal = marginalize(dist, syn.fields);
    double acc = 0;
    for (uint64_t i = 0; i < dist.size(); i++) {
        double p = dist[i];
        if (p > 0) {
            acc += p * std::log2(p / marginal[dist.layout().project(i, syn)]);
        }
    }
    return acc;
}

inline void require_mode(const SectorDistribution &dist, DistMode mode, const char *what) {
    if (dist.mode() != mode) {
        throw DimensionError(std::string(what));
    }
}

}  // namespace detail

/// Coherent information from the two factorized tables, in bits.
inline InfoResult coherent_information_factorized(
    const SectorDistribution &dist_x, const SectorDistribution &dist_z, size_t k) {
    detail::require_mode(dist_x, DistMode::factorized_x, "first distribution must be over (b, kz)");
    detail::require_mode(dist_z, DistMode::factorized_z, "second distribution must be over (a, kx)");
    if (dist_x.code_hash() != dist_z.code_hash()) {
        throw DimensionError("distributions come from different codes");
    }
    InfoResult r;
    r.k = k;
    r.value = (double)k + detail::conditional_sum(dist_z) + detail::conditional_sum(dist_x);
    r.noise = dist_x.noise();
    r.noise.insert(dist_z.noise().begin(), dist_z.noise().end());
    return r;
}

/// Coherent information from the joint table, in bits.
inline InfoResult coherent_information_general(const SectorDistribution &dist, size_t k) {
    detail::require_mode(dist, DistMode::joint, "distribution must be over (a, b, kx, kz)");
    InfoResult r;
    r.k = k;
    r.value = (double)k + detail::conditional_sum(dist);
    r.noise = dist.noise();
    return r;
}

/// Σ P_{s,κ+k0} log2(P_{s,κ+k0} / P_{s,κ+k0p}) over a factorized table.
inline InfoResult relative_entropy(const SectorDistribution &dist, const BitVector &k0, const BitVector &k0p) {
    Field logical;
    if (dist.mode() == DistMode::factorized_x) {
        logical = Field::kz;
    } else if (dist.mode() == DistMode::factorized_z) {
        logical = Field::kx;
    } else {
        throw DimensionError("relative entropy needs a factorized distribution");
    }
    size_t kw = dist.layout().widths[logical];
    if (k0.size() != kw || k0p.size() != kw) {
        throw DimensionError("logical labels must have length k");
    }
    InfoResult r;
    r.k = dist.k();
    r.noise = dist.noise();
    uint64_t shift = dist.layout().place((k0 ^ k0p).to_uint(), logical);
    if (shift == 0) {
        return r;
    }
    double acc = 0;
    for (uint64_t i = 0; i < dist.size(); i++) {
        double p = dist[i];
        if (p <= 0) {
            continue;
        }
        double q = dist[i ^ shift];
        if (q <= 0) {
            auto out = InfoResult::inf(dist.k());
            out.noise = dist.noise();
            return out;
        }
        acc += p * std::log2(p / q);
    }
    r.value = acc;
    return r;
}

/// Σ over syndromes of the largest sector probability.
inline double ml_success(const SectorDistribution &dist) {
    SectorLayout syn = detail::syndrome_layout(dist);
    std::vector<double> best(size_t{1} << syn.total_width(), 0.0);
    for (uint64_t i = 0; i < dist.size(); i++) {
        double &b = best[dist.layout().project(i, syn)];
        b = std::max(b, dist[i]);
    }
    double acc = 0;
    for (double b : best) {
        acc += b;
    }
    return acc;
}

/// Σ P^2 / P_syndrome: success of the decoder that samples a sector from
/// its posterior.
inline double sampling_success(const SectorDistribution &dist) {
    SectorLayout syn = detail::syndrome_layout(dist);
    auto marginal = marginalize(dist, syn.fields);
    double acc = 0;
    for (uint64_t i = 0; i < dist.size(); i++) {
        double p = dist[i];
        if (p > 0) {
            acc += p * p / marginal[dist.layout().project(i, syn)];
        }
    }
    return acc;
}

struct BoundReport {
    double ic_bits = 0;
    double jensen_lower = 0;
    double sampling = 0;
    double ml = 0;
    double ml_lower = 0;
    size_t k = 0;

    bool ic_out_of_range = false;
    bool jensen_violated = false;
    bool sampling_above_ml = false;
    bool ml_above_one = false;
    bool ml_lower_violated = false;

    bool ok() const {
        return !(ic_out_of_range || jensen_violated || sampling_above_ml || ml_above_one || ml_lower_violated);
    }
    std::vector<std::string> violations() const {
        std::vector<std::string> out;
        if (ic_out_of_range) {
            out.push_back("ic outside [-k, k]");
        }
        if (jensen_violated) {
            out.push_back("2^(ic-k) > sampling");
        }
        if (sampling_above_ml) {
            out.push_back("sampling > ml");
        }
        if (ml_above_one) {
            out.push_back("ml > 1");
        }
        if (ml_lower_violated) {
            out.push_back("2 ml - 1 > sampling");
        }
        return out;
    }
};

inline constexpr double kBoundTolerance = 1e-12;

inline BoundReport make_bound_report(double ic, double sampling, double ml, size_t k) {
    const double tol = kBoundTolerance;
    BoundReport r;
    r.k = k;
    r.ic_bits = ic;
    r.jensen_lower = std::exp2(ic - (double)k);
    r.sampling = sampling;
    r.ml = ml;
    r.ml_lower = 2 * ml - 1;
    r.ic_out_of_range = ic < -(double)k - tol || ic > (double)k + tol;
    r.jensen_violated = r.jensen_lower > sampling + tol;
    r.sampling_above_ml = sampling > ml + tol;
    r.ml_above_one = ml > 1 + tol;
    r.ml_lower_violated = r.ml_lower > sampling + tol;
    return r;
}

/// Bound chain for one table. The coherent information is k plus the
/// conditional sum over the fields present.
inline BoundReport bound_report(const SectorDistribution &dist, size_t k) {
    double ic = (double)k + detail::conditional_sum(dist);
    return make_bound_report(ic, sampling_success(dist), ml_success(dist), k);
}

/// Bound chain for independent X and Z noise, where the two sides decode
/// separately and success probabilities multiply.
inline BoundReport bound_report(const SectorDistribution &dist_x, const SectorDistribution &dist_z, size_t k) {
    double ic = coherent_information_factorized(dist_x, dist_z, k).value;
    return make_bound_report(
        ic, sampling_success(dist_x) * sampling_success(dist_z), ml_success(dist_x) * ml_success(dist_z), k);
}

}  // namespace cssmap

#endif
