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

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cssmap/commands.h"

using namespace cssmap;

namespace {

struct Common {
    std::string selector;
    std::string code;
    std::string out = "-";
    size_t threads = 1;

    std::string resolve() const {
        if (!code.empty() && !selector.empty() && code != selector) {
            throw DimensionError("conflicting code selectors '" + selector + "' and '" + code + "'");
        }
        return code.empty() ? selector : code;
    }
};

struct GridFlags {
    double start = 0;
    double stop = 0.5;
    size_t points = 21;
    std::vector<double> list;

    std::vector<double> grid() const {
        return list.empty() ? linspace(start, stop, points) : list;
    }
};

void add_selector(CLI::App *cmd, Common &c) {
    cmd->add_option("selector", c.selector, "Zoo name (e.g. toric2d:3, steane) or css-code file");
    cmd->add_option("--code", c.code, "Same as the positional selector");
}

void add_out(CLI::App *cmd, Common &c) {
    cmd->add_option("--out", c.out, "Output path, '-' for stdout");
}

void add_grid(CLI::App *cmd, GridFlags &g) {
    cmd->add_option("--p-start", g.start, "First grid point");
    cmd->add_option("--p-stop", g.stop, "Last grid point");
    cmd->add_option("--points", g.points, "Number of grid points");
    cmd->add_option("--p-list", g.list, "Explicit grid, overrides start/stop/points")->delimiter(',');
}

Side parse_side(const std::string &s) {
    if (s == "x") {
        return Side::x;
    }
    if (s == "z") {
        return Side::z;
    }
    throw DimensionError("side must be x or z");
}

template <typename Fn>
void with_output(const std::string &path, Fn fn) {
    if (path.empty() || path == "-") {
        fn(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream f(path);
    if (!f) {
        throw Error("cannot open '" + path + "' for writing");
    }
    fn(f);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"cssmap: exact sector statistics and spin-model mappings of CSS codes"};
    app.set_version_flag("--version", std::string("cssmap ") + CSSMAP_VERSION);
    app.require_subcommand(1);

    Common common;
    GridFlags grid;
    std::string noise = "symmetric";
    double ratio = 1;
    std::vector<double> weights{1, 1, 1};
    std::string format = "csv";
    std::string k0, k0p;
    std::string side = "x";

    auto *info = app.add_subcommand("code-info", "Print n, k, ranks, distances and logical supports");
    add_selector(info, common);
    info->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto *exp = app.add_subcommand("code-export", "Write a code in css-code v1 text form");
    add_selector(exp, common);
    add_out(exp, common);

    auto sweep_flags = [&](CLI::App *cmd) {
        add_selector(cmd, common);
        add_grid(cmd, grid);
        add_out(cmd, common);
        cmd->add_option("--noise", noise, "symmetric, independent, depolarizing or general");
        cmd->add_option("--ratio", ratio, "p_z / p_x for independent and depolarizing noise");
        cmd->add_option("--weights", weights, "Relative X,Y,Z weights for general noise")->delimiter(',')->expected(3);
        cmd->add_option("--format", format, "csv or json");
        cmd->add_option("--threads", common.threads, "Enumeration threads");
    };
    auto *ic = app.add_subcommand("ic-sweep", "Coherent information, decoder success and relative entropy");
    sweep_flags(ic);
    ic->add_option("--k0", k0, "First logical label for relative entropy");
    ic->add_option("--k0p", k0p, "Second logical label for relative entropy");
    auto *dec = app.add_subcommand("decoder-sweep", "ML and sampling decoder success with the bound chain");
    sweep_flags(dec);

    auto *rel = app.add_subcommand("relent-sweep", "Relative entropy between two logical sectors");
    add_selector(rel, common);
    rel->add_option("k0", k0, "First logical label, k bits");
    rel->add_option("k0p", k0p, "Second logical label, k bits");
    add_grid(rel, grid);
    add_out(rel, common);
    rel->add_option("--side", side, "x or z");
    rel->add_option("--format", format, "csv or json");
    rel->add_option("--threads", common.threads, "Enumeration threads");

    std::string sector, error;
    auto *sm = app.add_subcommand("sm-export", "Export the spin model of one sector as JSON");
    add_selector(sm, common);
    sm->add_option("--side", side, "x or z");
    sm->add_option("--sector", sector, "Hex sector key, default all zeros");
    sm->add_option("--error", error, "Explicit error string used as disorder");
    add_out(sm, common);

    double beta = 0.4;
    auto *kw = app.add_subcommand("kw-check", "Kramers-Wannier duality check");
    add_selector(kw, common);
    kw->add_option("BETA", beta, "beta_x");
    kw->add_option("--beta", beta, "beta_x");

    double p = 0.1;
    auto *ver = app.add_subcommand("verify", "Sector identity and bound chain at one p");
    add_selector(ver, common);
    ver->add_option("P", p, "Flip probability");
    ver->add_option("--p", p, "Flip probability");
    ver->add_option("--side", side, "x or z");
    ver->add_option("--threads", common.threads, "Enumeration threads");

    McOptions mc_opt;
    std::string start = "random";
    auto *mc = app.add_subcommand("mc", "Metropolis scan along the Nishimori line");
    add_selector(mc, common);
    add_grid(mc, grid);
    add_out(mc, common);
    mc->add_option("--side", side, "x or z");
    mc->add_option("--disorder-samples", mc_opt.disorder_samples, "Disorder draws per grid point");
    mc->add_option("--sweeps", mc_opt.cfg.sweeps, "Total sweeps per replica");
    mc->add_option("--burn-in", mc_opt.cfg.burn_in, "Discarded sweeps");
    mc->add_option("--replicas", mc_opt.cfg.replicas, "Replicas per disorder draw");
    mc->add_option("--seed", mc_opt.cfg.seed, "Master seed");
    mc->add_option("--threads", common.threads, "Worker threads");
    mc->add_option("--start", start, "random or ordered")->check(CLI::IsMember({"random", "ordered"}));

    std::vector<double> pt{0, 0, 0};
    auto *sd = app.add_subcommand("sector-dist", "Export an exact sector distribution as JSON");
    add_selector(sd, common);
    sd->add_option("--side", side, "x, z or joint");
    sd->add_option("--p", p, "Flip probability for x or z");
    sd->add_option("--pt", pt, "pt_x,pt_y,pt_z for joint")->delimiter(',')->expected(3);
    sd->add_option("--threads", common.threads, "Enumeration threads");
    add_out(sd, common);

    std::vector<std::string> files;
    auto *di = app.add_subcommand("dist-info", "Info quantities of exported distributions");
    di->add_option("files", files, "One joint or two factorized distribution files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        std::string sel = common.resolve();
        if (*info) {
            cmd_code_info(sel, format == "json", std::cout);
        } else if (*exp) {
            resolve_code(sel);
            with_output(common.out, [&](std::ostream &o) { cmd_code_export(sel, o); });
        } else if (*ic || *dec) {
            SweepOptions opt;
            opt.selector = sel;
            opt.grid = grid.grid();
            opt.noise.mode = parse_noise_mode(noise);
            opt.noise.ratio = ratio;
            opt.noise.weights = {weights[0], weights[1], weights[2]};
            opt.format = parse_format(format);
            opt.threads = common.threads;
            opt.k0 = k0;
            opt.k0p = k0p;
            resolve_code(sel);
            with_output(common.out, [&](std::ostream &o) {
                if (*ic) {
                    cmd_ic_sweep(opt, o);
                } else {
                    cmd_decoder_sweep(opt, o);
                }
            });
        } else if (*rel) {
            SweepOptions opt;
            opt.selector = sel;
            opt.grid = grid.grid();
            opt.format = parse_format(format);
            opt.threads = common.threads;
            opt.k0 = k0;
            opt.k0p = k0p;
            resolve_code(sel);
            with_output(common.out, [&](std::ostream &o) { cmd_relent_sweep(opt, parse_side(side), o); });
        } else if (*sm) {
            with_output(common.out, [&](std::ostream &o) { cmd_sm_export(sel, parse_side(side), sector, error, o); });
        } else if (*kw) {
            cmd_kw_check(sel, beta, std::cout);
        } else if (*ver) {
            cmd_verify(sel, p, parse_side(side), common.threads, std::cout);
        } else if (*mc) {
            mc_opt.selector = sel;
            mc_opt.side = parse_side(side);
            mc_opt.grid = grid.grid();
            mc_opt.cfg.threads = common.threads;
            mc_opt.cfg.start = start == "ordered" ? McStart::ordered : McStart::random;
            resolve_code(sel);
            with_output(common.out, [&](std::ostream &o) { cmd_mc(mc_opt, o); });
        } else if (*sd) {
            PauliNoise n{pt[0], pt[1], pt[2]};
            with_output(common.out, [&](std::ostream &o) { cmd_sector_dist(sel, side, p, n, common.threads, o); });
        } else if (*di) {
            cmd_dist_info(files, std::cout);
        }
    } catch (const TooLarge &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTooLarge;
    } catch (const InvariantViolation &e) {
        std::cerr << "error: invariant violated: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
