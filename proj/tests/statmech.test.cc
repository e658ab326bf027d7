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

#include "cssmap/statmech.h"

#include <cmath>

#include "gtest/gtest.h"

#include "cssmap/code_zoo.h"

using namespace cssmap;

namespace {

/// ln Z by direct summation of exp over configurations.
double brute_log_z(const SmModel &m, const Couplings &beta) {
    double acc = 0;
    for (uint64_t c = 0; c < (uint64_t{1} << m.num_spins); c++) {
        acc += std::exp(log_weight(m, beta, c));
    }
    return std::log(acc);
}

}  // namespace

TEST(statmech, build_sm_x_four22) {
    auto m = build_sm_x(four22(), BitVector(4));
    EXPECT_EQ(m.num_spins, 1u);
    ASSERT_EQ(m.terms.size(), 4u);
    for (const auto &t : m.terms) {
        EXPECT_EQ(t.sites, (std::vector<size_t>{0}));
        EXPECT_EQ(t.sign, 1);
    }
    EXPECT_EQ(m.symmetry_basis.rows(), 0u);
    EXPECT_EQ(m.degeneracy_exponent, 0u);
}

TEST(statmech, build_sm_x_toric2d) {
    auto c = toric2d(2);
    auto e = BitVector::from_string("01000000");
    auto m = build_sm_x(c, e);
    EXPECT_EQ(m.num_spins, 4u);
    ASSERT_EQ(m.terms.size(), 8u);
    for (size_t l = 0; l < 8; l++) {
        EXPECT_EQ(m.terms[l].sites.size(), 2u);
        EXPECT_EQ(m.terms[l].sign, l == 1 ? -1 : 1);
    }
    ASSERT_EQ(m.symmetry_basis.rows(), 1u);
    EXPECT_EQ(m.symmetry_basis[0].str(), "1111");
    EXPECT_EQ(m.degeneracy_exponent, 1u);
    EXPECT_TRUE(symmetry_respected(m));
}

TEST(statmech, build_sm_color_and_3d) {
    auto color = build_sm_x(color666(3, 3), BitVector(18));
    EXPECT_EQ(color.symmetry_basis.rows(), 2u);
    for (const auto &t : color.terms) {
        EXPECT_EQ(t.sites.size(), 3u);
    }
    EXPECT_TRUE(symmetry_respected(color));

    auto t3 = build_sm_z(toric3d(2), BitVector(24));
    for (const auto &t : t3.terms) {
        EXPECT_EQ(t.sites.size(), 4u);
    }
    EXPECT_EQ(t3.degeneracy_exponent, 10u);
    EXPECT_TRUE(symmetry_respected(t3));

    auto xc = build_sm_x(xcube(2), BitVector(24));
    EXPECT_TRUE(symmetry_respected(xc));
    EXPECT_EQ(xc.symmetry_basis.rows(), 4u);

    auto s = build_sm_x(surface2d(3, 3), BitVector(13));
    size_t single_site = 0;
    for (const auto &t : s.terms) {
        single_site += t.sites.size() == 1;
    }
    EXPECT_GT(single_site, 0u);
    EXPECT_EQ(s.symmetry_basis.rows(), 0u);
}

TEST(statmech, nishimori_beta) {
    EXPECT_EQ(nishimori_beta(0.5), 0.0);
    EXPECT_NEAR(nishimori_beta(0.1), 0.5 * std::log(9.0), 1e-15);
    EXPECT_NEAR(nishimori_beta(0.1), 1.0986122886681098, 1e-15);
    EXPECT_NEAR(nishimori_beta(0.2), -nishimori_beta(0.8), 1e-15);
    EXPECT_THROW(nishimori_beta(0), DimensionError);
    EXPECT_THROW(nishimori_beta(1), DimensionError);
}

TEST(statmech, partition_exact) {
    auto t = build_sm_x(toric2d(2), BitVector(8));
    EXPECT_NEAR(partition_exact(t, 0.0), 4 * std::log(2.0), 1e-14);

    SmModel single;
    single.num_spins = 1;
    single.terms.push_back({{0}, 1, TermFamily::sigma, 0});
    for (double b : {0.3, 2.0, -1.1}) {
        EXPECT_NEAR(partition_exact(single, b), std::log(2 * std::cosh(b)), 1e-14);
    }

    EXPECT_NEAR(partition_exact(t, 0.3), 3.533037848289407, 1e-13);
    EXPECT_NEAR(partition_exact(build_sm_x(toric2d(2), BitVector::from_string("01000000")), 0.4), 3.6448494032249616, 1e-13);
    EXPECT_NEAR(partition_exact(build_sm_x(steane(), BitVector(7)), 0.7), 4.925555699550842, 1e-13);

    auto big = build_sm_z(toric3d(2), BitVector::from_string("100000000100000000000001"));
    EXPECT_NEAR(partition_exact(big, 0.6), brute_log_z(big, Couplings::single(0.6)), 1e-9);

    EXPECT_THROW(partition_exact(build_sm_x(toric2d(5), BitVector(50)), 0.1), TooLarge);
    EXPECT_THROW(partition_exact(build_sm_z(toric3d(3), BitVector(81)), 0.1), TooLarge);
}

TEST(statmech, partition_exact_no_overflow) {
    auto m = build_sm_z(toric3d(2), BitVector(24));
    double lz = partition_exact(m, 40.0);
    EXPECT_TRUE(std::isfinite(lz));
    EXPECT_NEAR(lz, 40.0 * 24 + std::log(1024.0), 1e-9);
}

TEST(statmech, gauge_covariance) {
    auto c = toric2d(2);
    auto e = BitVector::from_string("01100000");
    double base = partition_exact(build_sm_x(c, e), 0.45);
    for (const auto &r : c.hx().row_list()) {
        EXPECT_NEAR(partition_exact(build_sm_x(c, e ^ r), 0.45), base, 1e-12);
    }
    auto s = steane();
    auto es = BitVector::from_string("0010010");
    double bs = partition_exact(build_sm_z(s, es), 0.9);
    EXPECT_NEAR(partition_exact(build_sm_z(s, es ^ s.hz()[1]), 0.9), bs, 1e-12);
}

TEST(statmech, high_temperature_expansion) {
    // ln Z = m ln 2 + n ln cosh b + ln Σ_{A in ker Hx} t^|A|, truncated at order t^4.
    auto c = four22();
    auto m = build_sm_x(c, BitVector(4));
    for (double b : {0.05, 0.1, 0.2}) {
        double t = std::tanh(b);
        double series = std::log(2.0) + 4 * std::log(std::cosh(b)) + std::log1p(6 * t * t);
        double exact = partition_exact(m, b);
        EXPECT_NEAR(exact, series, 1.5 * std::pow(t, 4));
        EXPECT_NEAR(exact, series + std::log1p(std::pow(t, 4) / (1 + 6 * t * t)), 1e-13);
    }
}

TEST(statmech, sector_identity) {
    for (double p : {0.1, 0.3, 0.5}) {
        EXPECT_LT(verify_sector_identity(four22(), p).max_abs_deviation, 1e-12);
    }
    for (double p : {0.1, 0.15}) {
        EXPECT_LT(verify_sector_identity(toric2d(2), p).max_abs_deviation, 1e-12);
        EXPECT_LT(verify_sector_identity(toric2d(2), p, Side::z).max_abs_deviation, 1e-12);
    }
    auto r = verify_sector_identity(steane(), 0.05);
    EXPECT_LT(r.max_abs_deviation, 1e-12);
    EXPECT_EQ(r.sectors, 16u);
    EXPECT_LT(verify_sector_identity(surface2d(2, 3), 0.2).max_abs_deviation, 1e-12);
    EXPECT_LT(verify_sector_identity(color666(3, 3), 0.07, Side::z).max_abs_deviation, 1e-12);
}

TEST(statmech, coupled_model) {
    auto c = four22();
    auto m = build_sm_coupled(c, BitVector(4), BitVector(4), {0.1, 0.05, 0.02});
    EXPECT_EQ(m.num_spins, 2u);
    EXPECT_EQ(m.terms.size(), 12u);
    EXPECT_TRUE(m.coupled);
    EXPECT_TRUE(symmetry_respected(m));
    EXPECT_THROW(build_sm_coupled(c, BitVector(4), BitVector(4), {0, 0, 0}), DimensionError);

    for (auto [px, pz] : {std::pair{0.1, 0.2}, std::pair{0.3, 0.05}}) {
        auto noise = depolarizing_from_independent(px, pz);
        auto cc = coupled_couplings(noise);
        EXPECT_NEAR(cc.couplings.mixed, 0.0, 1e-14);
        EXPECT_NEAR(cc.couplings.sigma, nishimori_beta(px), 1e-14);
        EXPECT_NEAR(cc.couplings.tau, nishimori_beta(pz), 1e-14);
        auto ex = BitVector::from_string("0100");
        auto ez = BitVector::from_string("1101");
        double joint = partition_exact(build_sm_coupled(c, ex, ez, noise), cc.couplings);
        double split = partition_exact(build_sm_x(c, ex), nishimori_beta(px)) +
                       partition_exact(build_sm_z(c, ez), nishimori_beta(pz));
        EXPECT_NEAR(joint, split, 1e-10);
    }

    auto pure_y = coupled_couplings({1e-9, 0.2, 1e-9});
    EXPECT_GT(pure_y.couplings.sigma + pure_y.couplings.tau, 0);
    EXPECT_GT(pure_y.couplings.mixed, 5);

    EXPECT_LT(verify_coupled_sector_identity(four22(), {0.1, 0.05, 0.02}).max_abs_deviation, 1e-12);
    EXPECT_LT(verify_coupled_sector_identity(steane(), {0.03, 0.01, 0.07}).max_abs_deviation, 1e-12);
}

TEST(statmech, kramers_wannier) {
    for (const auto &c : {four22(), toric2d(2), steane(), surface2d(2, 3)}) {
        for (double b : {0.3, 0.5, 0.8}) {
            auto r = kw_check(c, b);
            EXPECT_NEAR(std::sinh(2 * r.beta_x) * std::sinh(2 * r.beta_z), 1.0, 1e-12);
            EXPECT_LT(std::abs(r.summed_discrepancy), 1e-9);
        }
    }
    auto raw = kw_check(toric2d(2), 0.4);
    EXPECT_GT(std::abs(raw.raw_discrepancy), 1e-3);
    auto cold = kw_check(toric2d(2), 6.0);
    EXPECT_LT(std::abs(cold.summed_discrepancy), 1e-9);
    EXPECT_THROW(kw_check(four22(), 0), DimensionError);
}

TEST(statmech, domain_wall_free_energy) {
    auto c = toric2d(2);
    auto shift = BitVector::from_string("10");
    EXPECT_NEAR(domain_wall_free_energy(c, 0.5, shift), 0.0, 1e-12);
    EXPECT_NEAR(domain_wall_free_energy(c, 0.1, shift), 3.155587884602384, 1e-12);
    double prev = 0;
    for (double p : {0.4, 0.3, 0.2, 0.1, 0.05, 0.01}) {
        double v = domain_wall_free_energy(c, p, shift);
        EXPECT_GT(v, prev);
        prev = v;
    }
    for (double p : {0.05, 0.1, 0.2, 0.3, 0.45}) {
        for (const auto &s : {BitVector::from_string("10"), BitVector::from_string("01"), BitVector::from_string("11")}) {
            auto re = relative_entropy(sector_distribution_x(c, p), s, BitVector(2));
            EXPECT_NEAR(domain_wall_free_energy(c, p, s), re.value, 1e-12);
            auto rz = relative_entropy(sector_distribution_z(c, p), s, BitVector(2));
            EXPECT_NEAR(domain_wall_free_energy(c, p, s, Side::z), rz.value, 1e-12);
        }
    }
    EXPECT_THROW(domain_wall_free_energy(c, 0.1, BitVector(2)), DimensionError);
}

TEST(statmech, json_round_trip) {
    auto m = build_sm_x(toric2d(2), BitVector::from_string("01000000"));
    auto j = sm_to_json(m);
    EXPECT_EQ(j["num_spins"], 4);
    EXPECT_EQ(j["degeneracy_exponent"], 1);
    EXPECT_EQ(j["terms"][1]["sign"], -1);
    auto back = sm_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back.num_spins, m.num_spins);
    ASSERT_EQ(back.terms.size(), m.terms.size());
    for (size_t i = 0; i < m.terms.size(); i++) {
        EXPECT_EQ(back.terms[i].sites, m.terms[i].sites);
        EXPECT_EQ(back.terms[i].sign, m.terms[i].sign);
    }
    EXPECT_EQ(back.symmetry_basis, m.symmetry_basis);
    EXPECT_EQ(partition_exact(back, 0.7), partition_exact(m, 0.7));

    auto cm = build_sm_coupled(four22(), BitVector(4), BitVector(4), {0.1, 0.05, 0.02});
    auto cback = sm_from_json(nlohmann::json::parse(sm_to_json(cm).dump()));
    auto cc = coupled_couplings({0.1, 0.05, 0.02}).couplings;
    EXPECT_EQ(partition_exact(cback, cc), partition_exact(cm, cc));
    EXPECT_THROW(sm_from_json(nlohmann::json::parse("{\"format\":\"cssmap-sm-model-v1\"}")), ParseError);
}
