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

#ifndef CSSMAP_STATMECH_H
#define CSSMAP_STATMECH_H

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "cssmap/channels.h"
#include "cssmap/css_code.h"
#include "cssmap/error.h"
#include "cssmap/f2_linalg.h"
#include "cssmap/info.h"
#include "cssmap/sector_distribution.h"
#include "json.hpp"

namespace cssmap {

/// Which error type (and so which spin model) a computation refers to.
/// Side::x: X errors, spins on the X checks. Side::z: Z errors, spins on the
/// Z checks.
enum class Side { x, z };

inline const char *side_name(Side side) {
    return side == Side::x ? "x" : "z";
}

/// Term family. Single-species models use only one of sigma or tau. Coupled
/// models use all three, with mixed terms multiplying both registers.
enum class TermFamily : uint8_t { sigma = 0, tau = 1, mixed = 2 };

inline const char *family_name(TermFamily f) {
    static const char *names[] = {"sigma", "tau", "mixed"};
    return names[(int)f];
}

struct SmTerm {
    std::vector<size_t> sites;
    int sign = 1;
    TermFamily family = TermFamily::sigma;
    size_t qubit = 0;
};

/// Classical Ising-type model attached to a code and an error representative.
///
/// The weight of a configuration s is exp(Σ_t J[family(t)] sign(t) Π_{i in t} s_i).
/// For coupled models spins 0..num_sigma-1 are the sigma register and the
/// remaining spins are the tau register.
struct SmModel {
    size_t num_spins = 0;
    size_t num_sigma = 0;
    bool coupled = false;
    std::vector<SmTerm> terms;
    BitMatrix symmetry_basis{0};
    size_t degeneracy_exponent = 0;

    size_t num_tau() const {
        return num_spins - num_sigma;
    }
};

/// Coupling per term family.
struct Couplings {
    double sigma = 0;
    double tau = 0;
    double mixed = 0;

    static Couplings single(double beta) {
        return {beta, beta, beta};
    }
    double operator[](TermFamily f) const {
        return f == TermFamily::sigma ? sigma : f == TermFamily::tau ? tau : mixed;
    }
};

/// -1/2 ln(p / (1 - p)).
inline double nishimori_beta(double p) {
    if (!(p > 0 && p < 1)) {
        throw DimensionError("the Nishimori coupling needs 0 < p < 1");
    }
    return 0.5 * std::log((1 - p) / p);
}

namespace detail {

inline std::vector<SmTerm> single_terms(const BitMatrix &checks, const BitVector &e_rep, TermFamily family) {
    size_t n = checks.cols();
    if (e_rep.size() != n) {
        throw DimensionError("error representative must have length n");
    }
    std::vector<SmTerm> terms(n);
    for (size_t l = 0; l < n; l++) {
        terms[l].qubit = l;
        terms[l].family = family;
        terms[l].sign = e_rep.get(l) ? -1 : 1;
        for (size_t s = 0; s < checks.rows(); s++) {
            if (checks.get(s, l)) {
                terms[l].sites.push_back(s);
            }
        }
    }
    return terms;
}

inline SmModel single_model(const BitMatrix &checks, const BitVector &e_rep, TermFamily family, size_t degeneracy) {
    SmModel m;
    m.num_spins = checks.rows();
    m.num_sigma = family == TermFamily::sigma ? m.num_spins : 0;
    m.terms = single_terms(checks, e_rep, family);
    m.symmetry_basis = kernel_basis(checks.transpose());
    m.degeneracy_exponent = degeneracy;
    return m;
}

}  // namespace detail

/// Spins on the rows of Hx, one term per qubit, disorder from an X error.
inline SmModel build_sm_x(const CssCode &code, const BitVector &e_rep) {
    return detail::single_model(code.hx(), e_rep, TermFamily::sigma, code.dim_sym_x());
}

/// Spins on the rows of Hz, one term per qubit, disorder from a Z error.
inline SmModel build_sm_z(const CssCode &code, const BitVector &e_rep) {
    return detail::single_model(code.hz(), e_rep, TermFamily::tau, code.dim_sym_z());
}

inline SmModel build_sm(const CssCode &code, Side side, const BitVector &e_rep) {
    return side == Side::x ? build_sm_x(code, e_rep) : build_sm_z(code, e_rep);
}

/// Per-qubit couplings of the coupled model under a general Pauli channel.
///
/// With e^{-2 bt_i} = pt_i / (1 - pt), the single-qubit weight is
/// (1 - pt) exp(-(bt_x + bt_y + bt_z) / 2) exp(c_x s_x + c_z s_z + c_y s_x s_z).
struct CoupledCouplings {
    Couplings couplings;
    double log_constant_per_qubit = 0;
};

inline CoupledCouplings coupled_couplings(const PauliNoise &noise) {
    validate(noise);
    double rest = 1 - noise.total();
    if (noise.ptx <= 0 || noise.pty <= 0 || noise.ptz <= 0 || rest <= 0) {
        throw DimensionError("coupled model needs every Pauli probability and 1 - pt strictly positive");
    }
    double bx = -0.5 * std::log(noise.ptx / rest);
    double by = -0.5 * std::log(noise.pty / rest);
    double bz = -0.5 * std::log(noise.ptz / rest);
    CoupledCouplings out;
    out.couplings.sigma = (bx + by - bz) / 2;
    out.couplings.tau = (bz + by - bx) / 2;
    out.couplings.mixed = (bx + bz - by) / 2;
    out.log_constant_per_qubit = std::log(rest) - (bx + by + bz) / 2;
    return out;
}

/// Two registers (sigma on Hx rows, tau on Hz rows) and three terms per
/// qubit. The noise is validated; coupling values come from coupled_couplings.
inline SmModel build_sm_coupled(
    const CssCode &code, const BitVector &ex_rep, const BitVector &ez_rep, const PauliNoise &noise) {
    coupled_couplings(noise);
    auto sig = detail::single_terms(code.hx(), ex_rep, TermFamily::sigma);
    auto tau = detail::single_terms(code.hz(), ez_rep, TermFamily::tau);
    size_t mx = code.hx().rows();
    size_t mz = code.hz().rows();
    SmModel m;
    m.coupled = true;
    m.num_sigma = mx;
    m.num_spins = mx + mz;
    for (auto &t : tau) {
        for (auto &s : t.sites) {
            s += mx;
        }
    }
    for (size_t l = 0; l < code.n(); l++) {
        SmTerm mixed;
        mixed.family = TermFamily::mixed;
        mixed.qubit = l;
        mixed.sign = sig[l].sign * tau[l].sign;
        mixed.sites = sig[l].sites;
        mixed.sites.insert(mixed.sites.end(), tau[l].sites.begin(), tau[l].sites.end());
        m.terms.push_back(sig[l]);
        m.terms.push_back(mixed);
        m.terms.push_back(tau[l]);
    }
    auto kx = kernel_basis(code.hx().transpose());
    auto kz = kernel_basis(code.hz().transpose());
    BitMatrix sym(m.num_spins);
    for (const auto &r : kx.row_list()) {
        BitVector v(m.num_spins);
        for (size_t i = 0; i < mx; i++) {
            v.set(i, r.get(i));
        }
        sym.push_row(v);
    }
    for (const auto &r : kz.row_list()) {
        BitVector v(m.num_spins);
        for (size_t i = 0; i < mz; i++) {
            v.set(mx + i, r.get(i));
        }
        sym.push_row(v);
    }
    m.symmetry_basis = sym;
    m.degeneracy_exponent = code.dim_sym_x() + code.dim_sym_z();
    return m;
}

/// True when every symmetry row meets every term in an even number of sites.
inline bool symmetry_respected(const SmModel &model) {
    for (const auto &row : model.symmetry_basis.row_list()) {
        for (const auto &t : model.terms) {
            size_t hits = 0;
            for (size_t s : t.sites) {
                hits += row.get(s);
            }
            if (hits % 2) {
                return false;
            }
        }
    }
    return true;
}

inline constexpr size_t kMaxExactSpins = 24;

/// Energy exponent Σ_t J sign Π s for a configuration given as a bitmask
/// (bit i set means s_i = -1).
inline double log_weight(const SmModel &model, const Couplings &beta, uint64_t config) {
    double acc = 0;
    for (const auto &t : model.terms) {
        int v = t.sign;
        for (size_t s : t.sites) {
            if ((config >> s) & 1) {
                v = -v;
            }
        }
        acc += beta[t.family] * v;
    }
    return acc;
}

/// ln Σ_s exp(Σ_t J sign Π s) by enumeration of all spin configurations.
inline double partition_exact(const SmModel &model, const Couplings &beta) {
    size_t m = model.num_spins;
    if (m > kMaxExactSpins) {
        throw TooLarge(
            "exact partition function is capped at " + std::to_string(kMaxExactSpins) + " spins (got " +
            std::to_string(m) + ")");
    }
    std::vector<std::vector<size_t>> terms_of(m);
    std::vector<double> value(model.terms.size());
    double energy = 0;
    for (size_t t = 0; t < model.terms.size(); t++) {
        for (size_t s : model.terms[t].sites) {
            terms_of[s].push_back(t);
        }
        value[t] = beta[model.terms[t].family] * model.terms[t].sign;
        energy += value[t];
    }
    double shift = energy;
    double acc = 1;
    uint64_t total = uint64_t{1} << m;
    for (uint64_t i = 1; i < total; i++) {
        size_t s = (size_t)std::countr_zero(i);
        for (size_t t : terms_of[s]) {
            energy -= 2 * value[t];
            value[t] = -value[t];
        }
        if (energy > shift) {
            acc = acc * std::exp(shift - energy) + 1;
            shift = energy;
        } else {
            acc += std::exp(energy - shift);
        }
    }
    return shift + std::log(acc);
}

inline double partition_exact(const SmModel &model, double beta) {
    return partition_exact(model, Couplings::single(beta));
}

/// ln of the normalization 2^D (2 cosh beta)^n relating a single-species
/// partition function at the Nishimori coupling to a sector probability.
inline double sector_log_norm(size_t n, size_t degeneracy, double beta) {
    return (double)degeneracy * std::numbers::ln2 + (double)n * std::log(2 * std::cosh(beta));
}

/// Error representative of the sector with packed index `index` in a
/// factorized table of `side`.
inline BitVector sector_representative(const CssCode &code, Side side, const SectorLayout &layout, uint64_t index) {
    if (side == Side::x) {
        auto b = BitVector::from_uint(layout.extract(index, Field::b), code.rank_z());
        auto kz = BitVector::from_uint(layout.extract(index, Field::kz), code.k());
        return code.x_error_representative(b, kz);
    }
    auto a = BitVector::from_uint(layout.extract(index, Field::a), code.rank_x());
    auto kx = BitVector::from_uint(layout.extract(index, Field::kx), code.k());
    return code.z_error_representative(a, kx);
}

/// ln P of every sector of one side, computed from partition functions.
inline std::vector<double> sector_log_probabilities_sm(const CssCode &code, Side side, double p) {
    double beta = nishimori_beta(p);
    FieldSet fields = side == Side::x ? kFactorizedX : kFactorizedZ;
    SectorLayout layout{SectorWidths::of(code), fields};
    size_t degeneracy = side == Side::x ? code.dim_sym_x() : code.dim_sym_z();
    double norm = sector_log_norm(code.n(), degeneracy, beta);
    if (layout.total_width() > 30) {
        throw TooLarge("sector table would need 2^" + std::to_string(layout.total_width()) + " entries");
    }
    std::vector<double> out(size_t{1} << layout.total_width());
    for (uint64_t i = 0; i < out.size(); i++) {
        auto model = build_sm(code, side, sector_representative(code, side, layout, i));
        out[i] = partition_exact(model, beta) - norm;
    }
    return out;
}

struct SectorIdentityReport {
    double max_abs_deviation = 0;
    uint64_t worst_sector = 0;
    size_t sectors = 0;
    size_t sector_width = 0;
};

/// Compares every sector probability from channel enumeration against
/// Z / (2^D (2 cosh beta)^n) at the Nishimori coupling.
inline SectorIdentityReport verify_sector_identity(
    const CssCode &code, double p, Side side = Side::x, size_t threads = 1) {
    auto dist = side == Side::x ? sector_distribution_x(code, p, threads) : sector_distribution_z(code, p, threads);
    auto logs = sector_log_probabilities_sm(code, side, p);
    SectorIdentityReport r;
    r.sectors = dist.size();
    r.sector_width = dist.layout().total_width();
    for (uint64_t i = 0; i < dist.size(); i++) {
        double d = std::abs(dist[i] - std::exp(logs[i]));
        if (d > r.max_abs_deviation) {
            r.max_abs_deviation = d;
            r.worst_sector = i;
        }
    }
    return r;
}

/// Joint sector probabilities from the coupled model, for every full sector.
inline std::vector<double> sector_log_probabilities_coupled(const CssCode &code, const PauliNoise &noise) {
    auto cc = coupled_couplings(noise);
    SectorLayout layout{SectorWidths::of(code), kJoint};
    if (layout.total_width() > 30) {
        throw TooLarge("sector table would need 2^" + std::to_string(layout.total_width()) + " entries");
    }
    double norm = (double)code.n() * cc.log_constant_per_qubit -
                  (double)(code.dim_sym_x() + code.dim_sym_z()) * std::numbers::ln2;
    SectorLayout x_layout{layout.widths, kFactorizedX};
    SectorLayout z_layout{layout.widths, kFactorizedZ};
    std::vector<double> out(size_t{1} << layout.total_width());
    for (uint64_t i = 0; i < out.size(); i++) {
        auto ex = sector_representative(code, Side::x, x_layout, layout.project(i, x_layout));
        auto ez = sector_representative(code, Side::z, z_layout, layout.project(i, z_layout));
        out[i] = partition_exact(build_sm_coupled(code, ex, ez, noise), cc.couplings) + norm;
    }
    return out;
}

/// Coupled-model analogue of verify_sector_identity against the joint table.
inline SectorIdentityReport verify_coupled_sector_identity(const CssCode &code, const PauliNoise &noise) {
    auto dist = sector_distribution_joint(code, noise);
    auto logs = sector_log_probabilities_coupled(code, noise);
    SectorIdentityReport r;
    r.sectors = dist.size();
    r.sector_width = dist.layout().total_width();
    for (uint64_t i = 0; i < dist.size(); i++) {
        double d = std::abs(dist[i] - std::exp(logs[i]));
        if (d > r.max_abs_deviation) {
            r.max_abs_deviation = d;
            r.worst_sector = i;
        }
    }
    return r;
}

/// Kramers-Wannier comparison between the X-side model at beta_x and the
/// Z-side model at the dual coupling beta_z = -1/2 ln tanh beta_x.
///
/// With normalized partition functions Zn = Z / (2^D (2 cosh beta)^n) and
/// t = tanh beta_x, the exact relation is
///     ln Zn_x(0, 0) = n ln(1 + t) - (rank_z + k) ln 2 + ln Σ_kx Zn_z(0, kx)
/// and the raw form keeps only the kx = 0 term with rank_z in place of
/// rank_z + k.
struct KwReport {
    double beta_x = 0;
    double beta_z = 0;
    double log_zx = 0;
    double log_zz_trivial = 0;
    double log_zz_summed = 0;
    double raw_rhs = 0;
    double summed_rhs = 0;
    double raw_discrepancy = 0;
    double summed_discrepancy = 0;
};

inline KwReport kw_check(const CssCode &code, double beta_x) {
    if (!(beta_x > 0) || !std::isfinite(beta_x)) {
        throw DimensionError("kw-check needs a finite beta_x > 0");
    }
    KwReport r;
    size_t n = code.n();
    double t = std::tanh(beta_x);
    r.beta_x = beta_x;
    r.beta_z = -0.5 * std::log(t);
    BitVector zero(n);
    r.log_zx = partition_exact(build_sm_x(code, zero), beta_x) - sector_log_norm(n, code.dim_sym_x(), beta_x);
    double z_norm = sector_log_norm(n, code.dim_sym_z(), r.beta_z);
    std::vector<double> logs;
    for (uint64_t kx = 0; kx < (uint64_t{1} << code.k()); kx++) {
        auto rep = code.z_error_representative(BitVector(code.rank_x()), BitVector::from_uint(kx, code.k()));
        logs.push_back(partition_exact(build_sm_z(code, rep), r.beta_z) - z_norm);
    }
    r.log_zz_trivial = logs[0];
    double top = *std::max_element(logs.begin(), logs.end());
    double acc = 0;
    for (double v : logs) {
        acc += std::exp(v - top);
    }
    r.log_zz_summed = top + std::log(acc);
    double lead = (double)n * std::log1p(t);
    r.raw_rhs = lead - (double)code.rank_z() * std::numbers::ln2 + r.log_zz_trivial;
    r.summed_rhs = lead - (double)(code.rank_z() + code.k()) * std::numbers::ln2 + r.log_zz_summed;
    r.raw_discrepancy = r.log_zx - r.raw_rhs;
    r.summed_discrepancy = r.log_zx - r.summed_rhs;
    return r;
}

/// Σ P_{s,κ} log2(P_{s,κ} / P_{s,κ+shift}) with every probability taken from
/// partition functions at the Nishimori coupling.
inline double domain_wall_free_energy(const CssCode &code, double p, const BitVector &k_shift, Side side = Side::x) {
    if (k_shift.size() != code.k()) {
        throw DimensionError("logical shift must have length k");
    }
    if (k_shift.is_zero()) {
        throw DimensionError("logical shift must be nonzero");
    }
    auto logs = sector_log_probabilities_sm(code, side, p);
    FieldSet fields = side == Side::x ? kFactorizedX : kFactorizedZ;
    SectorLayout layout{SectorWidths::of(code), fields};
    uint64_t shift = layout.place(k_shift.to_uint(), side == Side::x ? Field::kz : Field::kx);
    double acc = 0;
    for (uint64_t i = 0; i < logs.size(); i++) {
        acc += std::exp(logs[i]) * (logs[i] - logs[i ^ shift]) / std::numbers::ln2;
    }
    return acc;
}

/// JSON export of a model.
inline nlohmann::ordered_json sm_to_json(const SmModel &model) {
    nlohmann::ordered_json j;
    j["format"] = "cssmap-sm-model-v1";
    j["num_spins"] = model.num_spins;
    j["species"] = model.coupled ? "coupled" : "single";
    if (model.coupled) {
        j["num_sigma"] = model.num_sigma;
        j["num_tau"] = model.num_tau();
    }
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto &t : model.terms) {
        nlohmann::ordered_json jt;
        jt["sites"] = t.sites;
        jt["sign"] = t.sign;
        if (model.coupled) {
            jt["family"] = family_name(t.family);
        }
        terms.push_back(jt);
    }
    j["terms"] = terms;
    nlohmann::ordered_json sym = nlohmann::ordered_json::array();
    for (const auto &r : model.symmetry_basis.row_list()) {
        sym.push_back(r.str());
    }
    j["symmetry_basis"] = sym;
    j["degeneracy_exponent"] = model.degeneracy_exponent;
    return j;
}

inline SmModel sm_from_json(const nlohmann::json &j) {
    try {
        if (j.at("format").get<std::string>() != "cssmap-sm-model-v1") {
            throw ParseError(0, "unknown model format");
        }
        SmModel m;
        m.num_spins = j.at("num_spins").get<size_t>();
        m.coupled = j.at("species").get<std::string>() == "coupled";
        m.num_sigma = m.coupled ? j.at("num_sigma").get<size_t>() : m.num_spins;
        for (const auto &jt : j.at("terms")) {
            SmTerm t;
            t.sites = jt.at("sites").get<std::vector<size_t>>();
            t.sign = jt.at("sign").get<int>();
            if (t.sign != 1 && t.sign != -1) {
                throw ParseError(0, "term sign must be +1 or -1");
            }
            for (size_t s : t.sites) {
                if (s >= m.num_spins) {
                    throw ParseError(0, "term site out of range");
                }
            }
            if (m.coupled) {
                std::string f = jt.at("family").get<std::string>();
                t.family = f == "sigma" ? TermFamily::sigma : f == "tau" ? TermFamily::tau : TermFamily::mixed;
            }
            t.qubit = m.terms.size();
            m.terms.push_back(std::move(t));
        }
        m.symmetry_basis = BitMatrix(m.num_spins);
        for (const auto &r : j.at("symmetry_basis")) {
            m.symmetry_basis.push_row(BitVector::from_string(r.get<std::string>()));
        }
        m.degeneracy_exponent = j.at("degeneracy_exponent").get<size_t>();
        return m;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(0, std::string("malformed model JSON: ") + e.what());
    }
}

}  // namespace cssmap

#endif
