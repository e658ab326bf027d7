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

#include "cssmap/commands.h"

#include <filesystem>
#include <sstream>

#include "gtest/gtest.h"

using namespace cssmap;

namespace {

std::vector<std::string> data_lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') {
            out.push_back(line);
        }
    }
    return out;
}

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        out.push_back(cell);
    }
    return out;
}

std::string temp_path(const std::string &name) {
    return (std::filesystem::temp_directory_path() / ("cssmap_test_" + name)).string();
}

}  // namespace

TEST(commands, resolve_code) {
    EXPECT_EQ(resolve_code("toric2d:2").code.n(), 8u);
    auto path = temp_path("code.txt");
    {
        std::ofstream f(path);
        f << write_code_text(steane());
    }
    EXPECT_EQ(code_hash(resolve_code(path).code), code_hash(steane()));
    EXPECT_THROW(resolve_code("nonexistent_family:3"), Error);
    EXPECT_THROW(resolve_code(""), DimensionError);
}

TEST(commands, linspace) {
    auto g = linspace(0, 0.5, 21);
    ASSERT_EQ(g.size(), 21u);
    EXPECT_EQ(g.front(), 0.0);
    EXPECT_EQ(g.back(), 0.5);
    EXPECT_NEAR(g[1], 0.025, 1e-17);
    EXPECT_EQ(linspace(0.2, 0.4, 1), std::vector<double>{0.2});
    EXPECT_THROW(linspace(0, 1, 0), DimensionError);
}

TEST(commands, noise_modes) {
    NoiseSpec s;
    s.mode = NoiseMode::independent;
    s.ratio = 0.5;
    auto p = noise_at(s, 0.2);
    EXPECT_EQ(p.px, 0.2);
    EXPECT_EQ(p.pz, 0.1);
    s.mode = NoiseMode::general;
    s.weights = {1, 2, 1};
    auto g = noise_at(s, 0.2);
    EXPECT_NEAR(g.pt.pty, 0.1, 1e-15);
    EXPECT_NEAR(g.px, 0.15, 1e-15);
    EXPECT_EQ(parse_noise_mode("depolarizing"), NoiseMode::depolarizing);
    EXPECT_THROW(parse_noise_mode("bogus"), DimensionError);
    s.mode = NoiseMode::independent;
    s.ratio = 3;
    EXPECT_THROW(noise_at(s, 0.5), DimensionError);
}

TEST(commands, ic_sweep_steane) {
    SweepOptions opt;
    opt.selector = "steane";
    opt.grid = linspace(0, 0.5, 21);
    std::ostringstream out;
    cmd_ic_sweep(opt, out);
    EXPECT_NE(out.str().find("# cssmap"), std::string::npos);
    EXPECT_NE(out.str().find("hash=" + code_hash(steane())), std::string::npos);
    auto lines = data_lines(out.str());
    ASSERT_EQ(lines.size(), 22u);
    EXPECT_EQ(lines[0], "p_x,p_z,ic_bits,ml_success,sampling_success,jensen_lower,rel_entropy_bits");
    auto first = split(lines[1]);
    auto last = split(lines[21]);
    EXPECT_EQ(std::stod(first[2]), 1.0);
    EXPECT_EQ(first[6], "inf");
    EXPECT_NEAR(std::stod(last[2]), -1.0, 1e-9);

    std::ostringstream again;
    cmd_ic_sweep(opt, again);
    EXPECT_EQ(again.str(), out.str());
}

TEST(commands, ic_sweep_depolarizing_has_pt_columns) {
    SweepOptions opt;
    opt.selector = "four22";
    opt.grid = {0.0, 0.1, 0.2};
    opt.noise.mode = NoiseMode::depolarizing;
    std::ostringstream out;
    cmd_ic_sweep(opt, out);
    auto lines = data_lines(out.str());
    ASSERT_EQ(lines.size(), 4u);
    EXPECT_EQ(lines[0], "p_x,p_z,ic_bits,ml_success,sampling_success,jensen_lower,rel_entropy_bits,pt_x,pt_y,pt_z");
    auto row = split(lines[2]);
    ASSERT_EQ(row.size(), 10u);
    EXPECT_NEAR(std::stod(row[7]), 0.09, 1e-15);
    EXPECT_NEAR(std::stod(row[8]), 0.01, 1e-15);
    EXPECT_NEAR(std::stod(row[2]), 0.15484599355374495, 1e-10);
}

TEST(commands, ic_sweep_json) {
    SweepOptions opt;
    opt.selector = "steane";
    opt.grid = {0.0, 0.25};
    opt.format = OutputFormat::json;
    std::ostringstream out;
    cmd_ic_sweep(opt, out);
    auto j = nlohmann::json::parse(out.str());
    EXPECT_EQ(j["provenance"]["code_hash"], code_hash(steane()));
    EXPECT_EQ(j["rows"][0]["rel_entropy_bits"]["infinite"], true);
    EXPECT_FALSE(j["rows"][0]["rel_entropy_bits"].contains("value"));
    EXPECT_EQ(j["rows"][1]["rel_entropy_bits"]["infinite"], false);
}

TEST(commands, decoder_sweep) {
    SweepOptions opt;
    opt.selector = "toric2d:2";
    opt.grid = linspace(0, 0.5, 11);
    std::ostringstream out;
    cmd_decoder_sweep(opt, out);
    auto lines = data_lines(out.str());
    ASSERT_EQ(lines.size(), 12u);
    for (size_t i = 1; i < lines.size(); i++) {
        EXPECT_EQ(lines[i].back(), ',');
    }
}

TEST(commands, relent_sweep_inf_literal) {
    SweepOptions opt;
    opt.selector = "steane";
    opt.grid = {0.0, 0.1};
    opt.k0 = "1";
    opt.k0p = "0";
    std::ostringstream out;
    cmd_relent_sweep(opt, Side::x, out);
    auto lines = data_lines(out.str());
    ASSERT_EQ(lines.size(), 3u);
    EXPECT_EQ(lines[0], "p,rel_entropy_bits");
    EXPECT_EQ(lines[1], "0,inf");
    opt.k0 = "11";
    std::ostringstream bad;
    EXPECT_THROW(cmd_relent_sweep(opt, Side::x, bad), DimensionError);
}

TEST(commands, code_info) {
    std::ostringstream out;
    cmd_code_info("toric2d:2", false, out);
    EXPECT_NE(out.str().find("n=8 k=2 d=(2,2)"), std::string::npos);
    std::ostringstream s;
    cmd_code_info("steane", false, s);
    EXPECT_NE(s.str().find("n=7 k=1 d=(3,3)"), std::string::npos);
    std::ostringstream big;
    cmd_code_info("toric3d:3", true, big);
    auto j = nlohmann::json::parse(big.str());
    EXPECT_EQ(j["k"], 3);
    EXPECT_TRUE(j["dx"].is_null());
}

TEST(commands, verify_and_kw) {
    std::ostringstream out;
    cmd_verify("four22", 0.1, Side::x, 1, out);
    EXPECT_NE(out.str().find("\nok\n"), std::string::npos);
    std::ostringstream kw;
    cmd_kw_check("toric2d:2", 0.4, kw);
    EXPECT_NE(kw.str().find("raw_discrepancy="), std::string::npos);
    EXPECT_NE(kw.str().find("summed_discrepancy="), std::string::npos);
}

TEST(commands, sm_export) {
    std::ostringstream out;
    cmd_sm_export("toric2d:2", Side::x, "", "01000000", out);
    auto j = nlohmann::json::parse(out.str());
    EXPECT_EQ(j["model"]["num_spins"], 4);
    EXPECT_EQ(j["model"]["terms"][1]["sign"], -1);
    std::ostringstream by_sector;
    cmd_sm_export(
        "toric2d:2", Side::x, j["provenance"]["params"]["sector"].get<std::string>(), "", by_sector);
    auto j2 = nlohmann::json::parse(by_sector.str());
    auto m1 = sm_from_json(j["model"]);
    auto m2 = sm_from_json(j2["model"]);
    EXPECT_NEAR(partition_exact(m1, 0.6), partition_exact(m2, 0.6), 1e-12);
}

TEST(commands, mc_csv) {
    McOptions opt;
    opt.selector = "toric2d:3";
    opt.grid = {0.05, 0.3};
    opt.disorder_samples = 2;
    opt.cfg.sweeps = 200;
    opt.cfg.burn_in = 50;
    std::ostringstream out;
    cmd_mc(opt, out);
    auto lines = data_lines(out.str());
    ASSERT_EQ(lines.size(), 3u);
    EXPECT_EQ(lines[0], "p,beta,mean_energy,energy_err,ea_overlap,ea_err,samples");
    EXPECT_EQ(split(lines[1]).size(), 7u);
}

TEST(commands, distribution_round_trip) {
    auto px = temp_path("dx.json");
    auto pz = temp_path("dz.json");
    auto pj = temp_path("dj.json");
    write_dist_file(px, sector_distribution_x(steane(), 0.07));
    write_dist_file(pz, sector_distribution_z(steane(), 0.07));
    write_dist_file(pj, sector_distribution_joint(steane(), {0.03, 0.01, 0.07}));
    auto rx = read_dist_file(px);
    auto rz = read_dist_file(pz);
    auto direct = bound_report(sector_distribution_x(steane(), 0.07), sector_distribution_z(steane(), 0.07), 1);
    auto loaded = bound_report(rx, rz, 1);
    EXPECT_EQ(direct.ic_bits, loaded.ic_bits);
    EXPECT_EQ(direct.ml, loaded.ml);
    EXPECT_EQ(direct.sampling, loaded.sampling);
    EXPECT_EQ(
        coherent_information_general(read_dist_file(pj), 1).value,
        coherent_information_general(sector_distribution_joint(steane(), {0.03, 0.01, 0.07}), 1).value);

    std::ostringstream a, b;
    cmd_dist_info({px, pz}, a);
    cmd_dist_info({pz, px}, b);
    EXPECT_EQ(a.str(), b.str());
    EXPECT_NE(a.str().find("ic_bits=" + format_double(direct.ic_bits)), std::string::npos);
    EXPECT_THROW(cmd_dist_info({px}, a), DimensionError);
}
