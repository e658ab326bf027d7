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

#ifndef CSSMAP_COMMANDS_H
#define CSSMAP_COMMANDS_H

#include <array>
#include <cmath>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cssmap/channels.h"
#include "cssmap/code_io.h"
#include "cssmap/code_zoo.h"
#include "cssmap/css_code.h"
#include "cssmap/dist_io.h"
#include "cssmap/error.h"
#include "cssmap/info.h"
#include "cssmap/mc.h"
#include "cssmap/statmech.h"
#include "json.hpp"

#ifndef CSSMAP_VERSION
#define CSSMAP_VERSION "0.1.0"
#endif

namespace cssmap {

/// Process exit codes of the command line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitTooLarge = 1,
    kExitInput = 2,
    kExitInvariant = 3,
};

struct ResolvedCode {
    CssCode code;
    std::string label;
};

/// A selector is either a zoo name such as toric2d:3, steane, surface2d:3x5,
/// or the path of a css-code v1 file. Existing files win over zoo names.
inline ResolvedCode resolve_code(const std::string &selector) {
    if (selector.empty()) {
        throw DimensionError("no code selector given");
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(selector, ec)) {
        return {read_code_file(selector), selector};
    }
    return {make_code(parse_lattice_spec(selector)), selector};
}

/// Evenly spaced grid; a single point gives {start}.
inline std::vector<double> linspace(double start, double stop, size_t points) {
    if (points < 1) {
        throw DimensionError("a grid needs at least one point");
    }
    std::vector<double> out(points);
    for (size_t i = 0; i < points; i++) {
        out[i] = points == 1 ? start : start + (stop - start) * (double)i / (double)(points - 1);
    }
    out.back() = points == 1 ? start : stop;
    return out;
}

/// Noise family swept by a single parameter p.
///
/// symmetric: px = pz = p, factorized enumeration.
/// independent: px = p, pz = ratio * p, factorized enumeration.
/// depolarizing: the independent channel rewritten as a Pauli channel and
///     enumerated jointly.
/// general: Pauli channel with pt_i = p * w_i / (w_x + w_y + w_z), enumerated
///     jointly.
enum class NoiseMode { symmetric, independent, depolarizing, general };

inline NoiseMode parse_noise_mode(const std::string &text) {
    if (text == "symmetric") {
        return NoiseMode::symmetric;
    }
    if (text == "independent") {
        return NoiseMode::independent;
    }
    if (text == "depolarizing") {
        return NoiseMode::depolarizing;
    }
    if (text == "general") {
        return NoiseMode::general;
    }
    throw DimensionError("unknown noise mode '" + text + "'");
}

inline const char *noise_mode_name(NoiseMode mode) {
    static const char *names[] = {"symmetric", "independent", "depolarizing", "general"};
    return names[(int)mode];
}

struct NoiseSpec {
    NoiseMode mode = NoiseMode::symmetric;
    double ratio = 1;
    std::array<double, 3> weights{1, 1, 1};

    bool joint() const {
        return mode == NoiseMode::depolarizing || mode == NoiseMode::general;
    }
};

struct NoisePoint {
    double px = 0;
    double pz = 0;
    PauliNoise pt;
};

inline NoisePoint noise_at(const NoiseSpec &spec, double p) {
    validate_probability(p, "p");
    NoisePoint out;
    if (spec.mode == NoiseMode::general) {
        double w = spec.weights[0] + spec.weights[1] + spec.weights[2];
        if (!(w > 0) || spec.weights[0] < 0 || spec.weights[1] < 0 || spec.weights[2] < 0) {
            throw DimensionError("general noise weights must be nonnegative with a positive sum");
        }
        out.pt = {p * spec.weights[0] / w, p * spec.weights[1] / w, p * spec.weights[2] / w};
        out.px = out.pt.ptx + out.pt.pty;
        out.pz = out.pt.ptz + out.pt.pty;
        return out;
    }
    out.px = p;
    out.pz = spec.mode == NoiseMode::symmetric ? p : spec.ratio * p;
    validate_probability(out.pz, "p_z");
    out.pt = depolarizing_from_independent(out.px, out.pz);
    return out;
}

struct SweepRow {
    NoisePoint noise;
    InfoResult ic;
    InfoResult rel_entropy;
    BoundReport bounds;
};

/// Default logical labels for relative entropy: k0 flips the first logical
/// qubit, k0p is the trivial label.
inline std::pair<BitVector, BitVector> default_relent_labels(size_t k) {
    BitVector k0(k);
    if (k > 0) {
        k0.set(0, true);
    }
    return {k0, BitVector(k)};
}

/// Evaluates Ic, relative entropy on the X side and the bound chain at every
/// grid point. Enumeration runs once; each point reuses the count tables.
inline std::vector<SweepRow> run_sweep(
    const CssCode &code, const NoiseSpec &noise, const std::vector<double> &grid, size_t threads,
    const BitVector &k0, const BitVector &k0p) {
    std::vector<SweepRow> rows;
    if (noise.joint()) {
        auto counts = count_joint_sectors(code, threads);
        for (double p : grid) {
            SweepRow row;
            row.noise = noise_at(noise, p);
            auto dist = counts.evaluate(row.noise.pt);
            row.ic = coherent_information_general(dist, code.k());
            row.rel_entropy = relative_entropy(marginalize(dist, kFactorizedX), k0, k0p);
            row.bounds = bound_report(dist, code.k());
            rows.push_back(std::move(row));
        }
        return rows;
    }
    auto cx = count_x_sectors(code, threads);
    auto cz = count_z_sectors(code, threads);
    for (double p : grid) {
        SweepRow row;
        row.noise = noise_at(noise, p);
        auto dx = cx.evaluate(row.noise.px);
        auto dz = cz.evaluate(row.noise.pz);
        dx.noise() = {{"p_x", row.noise.px}};
        dz.noise() = {{"p_z", row.noise.pz}};
        row.ic = coherent_information_factorized(dx, dz, code.k());
        row.rel_entropy = relative_entropy(dx, k0, k0p);
        row.bounds = bound_report(dx, dz, code.k());
        rows.push_back(std::move(row));
    }
    return rows;
}

/// `#`-prefixed provenance lines for CSV output.
struct Provenance {
    std::string command;
    std::string selector;
    std::string code_hash;
    size_t n = 0;
    size_t k = 0;
    std::vector<std::pair<std::string, std::string>> params;

    static Provenance of(const std::string &command, const ResolvedCode &rc) {
        return {command, rc.label, cssmap::code_hash(rc.code), rc.code.n(), rc.code.k(), {}};
    }
    Provenance &add(const std::string &key, const std::string &value) {
        params.emplace_back(key, value);
        return *this;
    }
    Provenance &add(const std::string &key, double value) {
        return add(key, format_double(value));
    }
    void write_csv(std::ostream &out) const {
        out << "# cssmap " << CSSMAP_VERSION << " " << command << "\n";
        out << "# code " << selector << " hash=" << code_hash << " n=" << n << " k=" << k << "\n";
        for (const auto &[key, value] : params) {
            out << "# " << key << "=" << value << "\n";
        }
    }
    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["tool"] = std::string("cssmap ") + CSSMAP_VERSION;
        j["command"] = command;
        j["code"] = selector;
        j["code_hash"] = code_hash;
        j["n"] = n;
        j["k"] = k;
        for (const auto &[key, value] : params) {
            j["params"][key] = value;
        }
        return j;
    }
};

inline nlohmann::ordered_json info_json(const InfoResult &r) {
    nlohmann::ordered_json j;
    j["infinite"] = r.infinite;
    if (!r.infinite) {
        j["value"] = r.value;
    }
    return j;
}

enum class OutputFormat { csv, json };

inline OutputFormat parse_format(const std::string &text) {
    if (text == "csv") {
        return OutputFormat::csv;
    }
    if (text == "json") {
        return OutputFormat::json;
    }
    throw DimensionError("unknown output format '" + text + "'");
}

struct SweepOptions {
    std::string selector;
    std::vector<double> grid;
    NoiseSpec noise;
    OutputFormat format = OutputFormat::csv;
    size_t threads = 1;
    std::string k0;
    std::string k0p;
};

inline std::pair<BitVector, BitVector> relent_labels(const CssCode &code, const std::string &k0, const std::string &k0p) {
    auto labels = default_relent_labels(code.k());
    if (!k0.empty()) {
        labels.first = BitVector::from_string(k0);
    }
    if (!k0p.empty()) {
        labels.second = BitVector::from_string(k0p);
    }
    if (labels.first.size() != code.k() || labels.second.size() != code.k()) {
        throw DimensionError("logical labels must have exactly k = " + std::to_string(code.k()) + " bits");
    }
    return labels;
}

inline Provenance sweep_provenance(const std::string &command, const ResolvedCode &rc, const SweepOptions &opt) {
    auto prov = Provenance::of(command, rc);
    prov.add("noise", noise_mode_name(opt.noise.mode));
    if (opt.noise.mode == NoiseMode::independent || opt.noise.mode == NoiseMode::depolarizing) {
        prov.add("ratio", opt.noise.ratio);
    }
    if (opt.noise.mode == NoiseMode::general) {
        prov.add(
            "weights", format_double(opt.noise.weights[0]) + "," + format_double(opt.noise.weights[1]) + "," +
                           format_double(opt.noise.weights[2]));
    }
    prov.add("points", std::to_string(opt.grid.size()));
    if (!opt.grid.empty()) {
        prov.add("p_start", opt.grid.front()).add("p_stop", opt.grid.back());
    }
    return prov;
}

/// Sweep CSV: p_x,p_z,ic_bits,ml_success,sampling_success,jensen_lower,
/// rel_entropy_bits, plus pt_x,pt_y,pt_z for jointly enumerated noise.
inline void cmd_ic_sweep(const SweepOptions &opt, std::ostream &out) {
    auto rc = resolve_code(opt.selector);
    auto [k0, k0p] = relent_labels(rc.code, opt.k0, opt.k0p);
    auto rows = run_sweep(rc.code, opt.noise, opt.grid, opt.threads, k0, k0p);
    auto prov = sweep_provenance("ic-sweep", rc, opt);
    prov.add("k0", k0.str()).add("k0p", k0p.str());
    bool joint = opt.noise.joint();
    if (opt.format == OutputFormat::json) {
        nlohmann::ordered_json j;
        j["provenance"] = prov.to_json();
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto &r : rows) {
            nlohmann::ordered_json jr;
            jr["p_x"] = r.noise.px;
            jr["p_z"] = r.noise.pz;
            jr["ic_bits"] = r.ic.value;
            jr["ml_success"] = r.bounds.ml;
            jr["sampling_success"] = r.bounds.sampling;
            jr["jensen_lower"] = r.bounds.jensen_lower;
            jr["rel_entropy_bits"] = info_json(r.rel_entropy);
            if (joint) {
                jr["pt_x"] = r.noise.pt.ptx;
                jr["pt_y"] = r.noise.pt.pty;
                jr["pt_z"] = r.noise.pt.ptz;
            }
            j["rows"].push_back(jr);
        }
        out << j.dump(2) << "\n";
        return;
    }
    prov.write_csv(out);
    out << "p_x,p_z,ic_bits,ml_success,sampling_success,jensen_lower,rel_entropy_bits";
    if (joint) {
        out << ",pt_x,pt_y,pt_z";
    }
    out << "\n";
    for (const auto &r : rows) {
        out << format_double(r.noise.px) << "," << format_double(r.noise.pz) << "," << format_double(r.ic.value)
            << "," << format_double(r.bounds.ml) << "," << format_double(r.bounds.sampling) << ","
            << format_double(r.bounds.jensen_lower) << "," << r.rel_entropy.str();
        if (joint) {
            out << "," << format_double(r.noise.pt.ptx) << "," << format_double(r.noise.pt.pty) << ","
                << format_double(r.noise.pt.ptz);
        }
        out << "\n";
    }
}

/// Decoder CSV: p_x,p_z,ml_success,sampling_success,jensen_lower,
/// ml_lower,violations. Throws InvariantViolation after writing if
/// any row breaks the bound chain.
inline void cmd_decoder_sweep(const SweepOptions &opt, std::ostream &out) {
    auto rc = resolve_code(opt.selector);
    auto [k0, k0p] = relent_labels(rc.code, opt.k0, opt.k0p);
    auto rows = run_sweep(rc.code, opt.noise, opt.grid, opt.threads, k0, k0p);
    auto prov = sweep_provenance("decoder-sweep", rc, opt);
    size_t bad = 0;
    auto violations = [](const BoundReport &b) {
        std::string s;
        for (const auto &v : b.violations()) {
            s += (s.empty() ? "" : ";") + v;
        }
        return s;
    };
    if (opt.format == OutputFormat::json) {
        nlohmann::ordered_json j;
        j["provenance"] = prov.to_json();
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto &r : rows) {
            nlohmann::ordered_json jr;
            jr["p_x"] = r.noise.px;
            jr["p_z"] = r.noise.pz;
            jr["ml_success"] = r.bounds.ml;
            jr["sampling_success"] = r.bounds.sampling;
            jr["jensen_lower"] = r.bounds.jensen_lower;
            jr["ml_lower"] = r.bounds.ml_lower;
            jr["violations"] = r.bounds.violations();
            bad += !r.bounds.ok();
            j["rows"].push_back(jr);
        }
        out << j.dump(2) << "\n";
    } else {
        prov.write_csv(out);
        out << "p_x,p_z,ml_success,sampling_success,jensen_lower,ml_lower,violations\n";
        for (const auto &r : rows) {
            out << format_double(r.noise.px) << "," << format_double(r.noise.pz) << ","
                << format_double(r.bounds.ml) << "," << format_double(r.bounds.sampling) << ","
                << format_double(r.bounds.jensen_lower) << "," << format_double(r.bounds.ml_lower) << ","
                << violations(r.bounds) << "\n";
            bad += !r.bounds.ok();
        }
    }
    if (bad) {
        throw InvariantViolation(std::to_string(bad) + " grid points violate the decoder bound chain");
    }
}

/// Relative entropy between logical sectors k0 and k0p of one side over the
/// grid. The flip probability of that side is the grid value.
inline void cmd_relent_sweep(const SweepOptions &opt, Side side, std::ostream &out) {
    auto rc = resolve_code(opt.selector);
    auto [k0, k0p] = relent_labels(rc.code, opt.k0, opt.k0p);
    auto counts = side == Side::x ? count_x_sectors(rc.code, opt.threads) : count_z_sectors(rc.code, opt.threads);
    auto prov = Provenance::of("relent-sweep", rc);
    prov.add("side", side_name(side)).add("k0", k0.str()).add("k0p", k0p.str());
    prov.add("points", std::to_string(opt.grid.size()));
    std::vector<std::pair<double, InfoResult>> rows;
    for (double p : opt.grid) {
        rows.emplace_back(p, relative_entropy(counts.evaluate(p), k0, k0p));
    }
    if (opt.format == OutputFormat::json) {
        nlohmann::ordered_json j;
        j["provenance"] = prov.to_json();
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto &[p, r] : rows) {
            j["rows"].push_back({{"p", p}, {"rel_entropy_bits", info_json(r)}});
        }
        out << j.dump(2) << "\n";
        return;
    }
    prov.write_csv(out);
    out << "p,rel_entropy_bits\n";
    for (const auto &[p, r] : rows) {
        out << format_double(p) << "," << r.str() << "\n";
    }
}

inline std::string support_string(const BitVector &v) {
    std::string s;
    for (size_t i = 0; i < v.size(); i++) {
        if (v.get(i)) {
            s += (s.empty() ? "" : " ") + std::to_string(i);
        }
    }
    return "{" + s + "}";
}

/// Code summary. Distances are omitted when their enumeration is too large.
inline void cmd_code_info(const std::string &selector, bool json, std::ostream &out) {
    auto rc = resolve_code(selector);
    const auto &c = rc.code;
    std::optional<CodeDistance> d;
    try {
        d = distance(c);
    } catch (const TooLarge &) {
    }
    if (json) {
        nlohmann::ordered_json j;
        j["code"] = rc.label;
        j["hash"] = code_hash(c);
        j["n"] = c.n();
        j["k"] = c.k();
        j["rank_x"] = c.rank_x();
        j["rank_z"] = c.rank_z();
        j["Dx"] = c.dim_sym_x();
        j["Dz"] = c.dim_sym_z();
        if (d) {
            j["dx"] = d->dx;
            j["dz"] = d->dz;
        } else {
            j["dx"] = nullptr;
            j["dz"] = nullptr;
        }
        for (size_t i = 0; i < c.k(); i++) {
            j["logical_x"].push_back(c.logical_x()[i].str());
            j["logical_z"].push_back(c.logical_z()[i].str());
        }
        out << j.dump(2) << "\n";
        return;
    }
    out << "code " << rc.label << "\n";
    out << "hash " << code_hash(c) << "\n";
    out << "n=" << c.n() << " k=" << c.k();
    if (d) {
        out << " d=(" << d->dx << "," << d->dz << ")";
    } else {
        out << " d=unknown";
    }
    out << "\n";
    out << "rank_x=" << c.rank_x() << " rank_z=" << c.rank_z() << " Dx=" << c.dim_sym_x() << " Dz=" << c.dim_sym_z()
        << "\n";
    for (size_t i = 0; i < c.k(); i++) {
        out << "logical_x[" << i << "] " << support_string(c.logical_x()[i]) << "\n";
        out << "logical_z[" << i << "] " << support_string(c.logical_z()[i]) << "\n";
    }
}

inline void cmd_code_export(const std::string &selector, std::ostream &out) {
    out << write_code_text(resolve_code(selector).code);
}

/// JSON export of the spin model of one sector. For side x the sector is a
/// hex (b, kz) key, for side z an (a, kx) key. An explicit error string
/// overrides the sector representative.
inline void cmd_sm_export(
    const std::string &selector, Side side, const std::string &sector, const std::string &error, std::ostream &out) {
    auto rc = resolve_code(selector);
    const auto &c = rc.code;
    SectorLayout layout{SectorWidths::of(c), side == Side::x ? kFactorizedX : kFactorizedZ};
    BitVector rep(c.n());
    uint64_t index = 0;
    if (!error.empty()) {
        rep = BitVector::from_string(error);
        if (rep.size() != c.n()) {
            throw DimensionError("error string must have n = " + std::to_string(c.n()) + " bits");
        }
        if (side == Side::x) {
            index = layout.place(c.syndrome_of_x_error(rep).to_uint(), Field::b) |
                    layout.place(c.kz_of_x_error(rep).to_uint(), Field::kz);
        } else {
            index = layout.place(c.syndrome_of_z_error(rep).to_uint(), Field::a) |
                    layout.place(c.kx_of_z_error(rep).to_uint(), Field::kx);
        }
    } else {
        index = parse_sector_hex(sector.empty() ? sector_hex(0, layout.total_width()) : sector, layout.total_width());
        rep = sector_representative(c, side, layout, index);
    }
    auto j = sm_to_json(build_sm(c, side, rep));
    nlohmann::ordered_json wrapped;
    wrapped["provenance"] = Provenance::of("sm-export", rc)
                                .add("side", side_name(side))
                                .add("sector", sector_hex(index, layout.total_width()))
                                .add("error", rep.str())
                                .to_json();
    wrapped["model"] = j;
    out << wrapped.dump(2) << "\n";
}

inline void cmd_kw_check(const std::string &selector, double beta_x, std::ostream &out) {
    auto rc = resolve_code(selector);
    auto r = kw_check(rc.code, beta_x);
    out << "code " << rc.label << "\n";
    out << "beta_x=" << format_double(r.beta_x) << " beta_z=" << format_double(r.beta_z) << "\n";
    out << "ln Zx(0,0)=" << format_double(r.log_zx) << "\n";
    out << "raw_rhs=" << format_double(r.raw_rhs) << " raw_discrepancy=" << format_double(r.raw_discrepancy)
        << "\n";
    out << "summed_rhs=" << format_double(r.summed_rhs)
        << " summed_discrepancy=" << format_double(r.summed_discrepancy) << "\n";
}

inline constexpr double kIdentityTolerance = 1e-12;

/// Sector identity and bound chain at one p. Throws InvariantViolation when
/// either fails.
inline void cmd_verify(const std::string &selector, double p, Side side, size_t threads, std::ostream &out) {
    auto rc = resolve_code(selector);
    auto r = verify_sector_identity(rc.code, p, side, threads);
    auto dx = sector_distribution_x(rc.code, p, threads);
    auto dz = sector_distribution_z(rc.code, p, threads);
    auto b = bound_report(dx, dz, rc.code.k());
    out << "code " << rc.label << " side=" << side_name(side) << " p=" << format_double(p) << "\n";
    out << "sectors=" << r.sectors << " max_abs_deviation=" << format_double(r.max_abs_deviation)
        << " worst_sector=" << sector_hex(r.worst_sector, r.sector_width) << "\n";
    out << "ic_bits=" << format_double(b.ic_bits) << " ml=" << format_double(b.ml)
        << " sampling=" << format_double(b.sampling) << " jensen_lower=" << format_double(b.jensen_lower)
        << " ml_lower=" << format_double(b.ml_lower) << "\n";
    bool ok = r.max_abs_deviation < kIdentityTolerance && b.ok();
    out << (ok ? "ok" : "FAILED") << "\n";
    if (r.max_abs_deviation >= kIdentityTolerance) {
        throw InvariantViolation("sector identity deviation " + format_double(r.max_abs_deviation));
    }
    if (!b.ok()) {
        throw InvariantViolation("bound chain violated");
    }
}

struct McOptions {
    std::string selector;
    Side side = Side::x;
    std::vector<double> grid;
    size_t disorder_samples = 4;
    McConfig cfg;
};

/// MC CSV: p,beta,mean_energy,energy_err,ea_overlap,ea_err,samples.
inline void cmd_mc(const McOptions &opt, std::ostream &out) {
    auto rc = resolve_code(opt.selector);
    auto rows = nishimori_scan(rc.code, opt.side, opt.grid, opt.disorder_samples, opt.cfg);
    auto prov = Provenance::of("mc", rc);
    prov.add("side", side_name(opt.side))
        .add("sweeps", std::to_string(opt.cfg.sweeps))
        .add("burn_in", std::to_string(opt.cfg.burn_in))
        .add("replicas", std::to_string(opt.cfg.replicas))
        .add("seed", std::to_string(opt.cfg.seed))
        .add("threads", std::to_string(opt.cfg.threads))
        .add("start", opt.cfg.start == McStart::random ? "random" : "ordered")
        .add("disorder_samples", std::to_string(opt.disorder_samples));
    prov.write_csv(out);
    out << "p,beta,mean_energy,energy_err,ea_overlap,ea_err,samples\n";
    for (const auto &r : rows) {
        out << format_double(r.p) << "," << format_double(r.beta) << "," << format_double(r.obs.mean_energy) << ","
            << format_double(r.obs.energy_err) << "," << format_double(r.obs.ea_overlap) << ","
            << format_double(r.obs.ea_err) << "," << r.obs.samples << "\n";
    }
}

/// Exact sector distribution as JSON. side is "x", "z" or "joint"; the
/// joint table uses `noise` directly, the factorized ones use p.
inline void cmd_sector_dist(
    const std::string &selector, const std::string &side, double p, const PauliNoise &noise, size_t threads,
    std::ostream &out) {
    auto rc = resolve_code(selector);
    SectorDistribution dist;
    if (side == "x") {
        dist = sector_distribution_x(rc.code, p, threads);
    } else if (side == "z") {
        dist = sector_distribution_z(rc.code, p, threads);
    } else if (side == "joint") {
        dist = sector_distribution_joint(rc.code, noise, threads);
    } else {
        throw DimensionError("side must be x, z or joint");
    }
    out << dist_to_json(dist).dump(2) << "\n";
}

/// Info quantities of one joint table, or of an (x, z) pair of factorized
/// tables given in either order.
inline void cmd_dist_info(const std::vector<std::string> &paths, std::ostream &out) {
    if (paths.empty() || paths.size() > 2) {
        throw DimensionError("dist-info takes one joint or two factorized distribution files");
    }
    std::vector<SectorDistribution> dists;
    for (const auto &p : paths) {
        dists.push_back(read_dist_file(p));
    }
    BoundReport b;
    if (dists.size() == 1) {
        const auto &d = dists[0];
        if (d.mode() != DistMode::joint) {
            throw DimensionError("a single distribution must be joint");
        }
        b = bound_report(d, d.k());
    } else {
        if (dists[0].mode() == DistMode::factorized_z) {
            std::swap(dists[0], dists[1]);
        }
        b = bound_report(dists[0], dists[1], dists[0].k());
    }
    out << "ic_bits=" << format_double(b.ic_bits) << "\n";
    out << "ml_success=" << format_double(b.ml) << "\n";
    out << "sampling_success=" << format_double(b.sampling) << "\n";
    out << "jensen_lower=" << format_double(b.jensen_lower) << "\n";
    out << "ml_lower=" << format_double(b.ml_lower) << "\n";
}

}  // namespace cssmap

#endif
