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

#include "cssmap/info.h"

#include <cmath>

#include "gtest/gtest.h"

#include "cssmap/channels.h"
#include "cssmap/code_zoo.h"

using namespace cssmap;

namespace {

InfoResult ic_at(const CssCode &c, double px, double pz) {
    return coherent_information_factorized(sector_distribution_x(c, px), sector_distribution_z(c, pz), c.k());
}

BitVector e0(size_t k) {
    BitVector v(k);
    v.set(0, true);
    return v;
}

}  // namespace

TEST(info, ic_endpoints) {
    for (const auto &c : {four22(), steane(), toric2d(2), surface2d(2, 2), color666(3, 3)}) {
        auto zero = ic_at(c, 0, 0);
        EXPECT_EQ(zero.value, (double)c.k());
        EXPECT_EQ(zero.k, c.k());
        EXPECT_NEAR(ic_at(c, 0.5, 0.5).value, -(double)c.k(), 1e-9);
    }
}

TEST(info, ic_golden) {
    // Values from an independent enumeration over stabilizer cosets.
    EXPECT_NEAR(ic_at(steane(), 0.05, 0.05).value, 0.6393359064359232, 1e-12);
    EXPECT_NEAR(ic_at(steane(), 0.05, 0.12).value, 0.2676907990069928, 1e-12);
    EXPECT_NEAR(ic_at(four22(), 0.1, 0.1).value, 0.15484599355374495, 1e-12);
    EXPECT_NEAR(ic_at(toric2d(2), 0.1, 0.1).value, 0.1500985101650003, 1e-12);
    EXPECT_NEAR(ic_at(toric2d(2), 0.07, 0.13).value, 0.1756997075216129, 1e-12);
    auto r = ic_at(steane(), 0.05, 0.05);
    EXPECT_GT(r.value, -1.0);
    EXPECT_LT(r.value, 1.0);
}

TEST(info, ic_mode_checks) {
    auto c = steane();
    auto dx = sector_distribution_x(c, 0.1);
    auto dz = sector_distribution_z(c, 0.1);
    EXPECT_THROW(coherent_information_factorized(dz, dx, 1), DimensionError);
    EXPECT_THROW(coherent_information_general(dx, 1), DimensionError);
    auto other = sector_distribution_z(four22(), 0.1);
    EXPECT_THROW(coherent_information_factorized(dx, other, 1), DimensionError);
}

TEST(info, ic_general) {
    EXPECT_EQ(coherent_information_general(sector_distribution_joint(steane(), {0, 0, 0}), 1).value, 1.0);
    EXPECT_NEAR(
        coherent_information_general(sector_distribution_joint(steane(), {0.02, 0.01, 0.03}), 1).value,
        0.8153246031598576, 1e-12);
    EXPECT_NEAR(
        coherent_information_general(sector_distribution_joint(four22(), {0.1, 0.05, 0.02}), 2).value,
        0.28888138265630636, 1e-12);
    auto y = coherent_information_general(sector_distribution_joint(four22(), {0, 0.5, 0}), 2);
    EXPECT_GE(y.value, -2.0 - 1e-12);
    EXPECT_LE(y.value, 2.0 + 1e-12);
}

TEST(info, ic_general_matches_factorized) {
    for (const auto &c : {four22(), steane(), toric2d(2)}) {
        for (auto [px, pz] : {std::pair{0.02, 0.07}, std::pair{0.1, 0.1}, std::pair{0.25, 0.4}}) {
            auto joint = sector_distribution_joint(c, depolarizing_from_independent(px, pz));
            EXPECT_NEAR(coherent_information_general(joint, c.k()).value, ic_at(c, px, pz).value, 1e-10);
        }
    }
}

TEST(info, relative_entropy) {
    auto c = toric2d(2);
    auto k0 = e0(2);
    auto zero = BitVector(2);
    auto d = sector_distribution_x(c, 0.1);
    EXPECT_EQ(relative_entropy(d, k0, k0).value, 0.0);
    EXPECT_TRUE(relative_entropy(sector_distribution_x(c, 0), k0, zero).infinite);
    EXPECT_EQ(relative_entropy(sector_distribution_x(c, 0), k0, zero).str(), "inf");
    EXPECT_NEAR(relative_entropy(sector_distribution_x(c, 0.5), k0, zero).value, 0.0, 1e-12);
    EXPECT_NEAR(relative_entropy(d, k0, zero).value, 3.155587884602384, 1e-12);
    EXPECT_NEAR(
        relative_entropy(sector_distribution_x(steane(), 0.05), e0(1), BitVector(1)).value, 7.518810975388241,
        1e-12);
    EXPECT_THROW(relative_entropy(d, BitVector(3), zero), DimensionError);
    EXPECT_THROW(relative_entropy(sector_distribution_joint(four22(), {0.1, 0, 0}), e0(2), zero), DimensionError);
}

TEST(info, ml_and_sampling) {
    auto c = steane();
    EXPECT_EQ(ml_success(sector_distribution_x(c, 0)), 1.0);
    EXPECT_EQ(sampling_success(sector_distribution_x(c, 0)), 1.0);
    EXPECT_NEAR(ml_success(sector_distribution_x(c, 0.05)), 0.9585136624999996, 1e-12);
    EXPECT_NEAR(sampling_success(sector_distribution_x(c, 0.05)), 0.9280784355858819, 1e-12);
    EXPECT_NEAR(ml_success(sector_distribution_z(c, 0.12)), 0.8291845203558398, 1e-12);
    EXPECT_NEAR(sampling_success(sector_distribution_z(c, 0.12)), 0.7503832474988259, 1e-12);
    EXPECT_NEAR(ml_success(sector_distribution_x(toric2d(2), 0.1)), 0.6724000000000001, 1e-12);
    EXPECT_NEAR(sampling_success(sector_distribution_x(toric2d(2), 0.1)), 0.637593127860428, 1e-12);

    auto j = sector_distribution_joint(steane(), {0.02, 0.01, 0.03});
    EXPECT_NEAR(ml_success(j), 0.9584606220870431, 1e-12);
    EXPECT_NEAR(sampling_success(j), 0.9338782980688333, 1e-12);

    for (const auto &code : {four22(), toric2d(2)}) {
        double k = (double)code.k();
        EXPECT_NEAR(ml_success(sector_distribution_x(code, 0.5)), std::exp2(-k), 1e-14);
        EXPECT_NEAR(sampling_success(sector_distribution_x(code, 0.5)), std::exp2(-k), 1e-14);
        auto uj = sector_distribution_joint(four22(), {0.25, 0.25, 0.25});
        EXPECT_NEAR(ml_success(uj), 1.0 / 16, 1e-14);
        EXPECT_NEAR(sampling_success(uj), 1.0 / 16, 1e-14);
    }
}

TEST(info, sampling_below_ml_on_grid) {
    auto c = toric2d(2);
    auto counts = count_x_sectors(c);
    for (int i = 0; i <= 20; i++) {
        auto d = counts.evaluate(0.025 * i);
        EXPECT_LE(sampling_success(d), ml_success(d) + 1e-12);
    }
}

TEST(info, bound_report) {
    auto c = toric2d(2);
    auto zero = bound_report(sector_distribution_x(c, 0), sector_distribution_z(c, 0), 2);
    EXPECT_EQ(zero.ic_bits, 2.0);
    EXPECT_EQ(zero.jensen_lower, 1.0);
    EXPECT_EQ(zero.sampling, 1.0);
    EXPECT_EQ(zero.ml, 1.0);
    EXPECT_EQ(zero.ml_lower, 1.0);
    EXPECT_TRUE(zero.ok());

    auto half = bound_report(sector_distribution_x(c, 0.5), sector_distribution_z(c, 0.5), 2);
    EXPECT_NEAR(half.jensen_lower, 1.0 / 16, 1e-14);
    EXPECT_NEAR(half.sampling, 1.0 / 16, 1e-14);
    EXPECT_TRUE(half.ok());

    auto j = bound_report(sector_distribution_joint(four22(), {0.25, 0.25, 0.25}), 2);
    EXPECT_NEAR(j.jensen_lower, 1.0 / 16, 1e-14);
    EXPECT_NEAR(j.sampling, 1.0 / 16, 1e-14);
    EXPECT_TRUE(j.ok());

    auto bad = make_bound_report(0.5, 0.9, 0.5, 1);
    EXPECT_FALSE(bad.ok());
    EXPECT_TRUE(bad.sampling_above_ml);
    EXPECT_FALSE(bad.jensen_violated);
    auto bad2 = make_bound_report(3, 0.1, 0.9, 2);
    EXPECT_TRUE(bad2.ic_out_of_range);
    EXPECT_TRUE(bad2.jensen_violated);
    EXPECT_TRUE(bad2.ml_lower_violated);
    EXPECT_EQ(bad2.violations().size(), 3u);
}

TEST(info, bound_chain_every_zoo_code) {
    for (const auto &c : {four22(), steane(), toric2d(2), toric2d(3), surface2d(2, 2), surface2d(3, 3), color666(3, 3)}) {
        auto cx = count_x_sectors(c);
        auto cz = count_z_sectors(c);
        for (int i = 0; i <= 10; i++) {
            double p = 0.05 * i;
            auto r = bound_report(cx.evaluate(p), cz.evaluate(p), c.k());
            EXPECT_TRUE(r.ok()) << "p=" << p;
        }
    }
}

TEST(info, monotone_in_p) {
    for (const auto &c : {steane(), toric2d(2), surface2d(3, 3)}) {
        auto cx = count_x_sectors(c);
        auto cz = count_z_sectors(c);
        double prev = INFINITY;
        for (int i = 0; i <= 20; i++) {
            double p = 0.025 * i;
            double v = coherent_information_factorized(cx.evaluate(p), cz.evaluate(p), c.k()).value;
            EXPECT_LE(v, prev + 1e-9);
            prev = v;
        }
    }
}

TEST(info, logical_basis_independence) {
    for (const auto &c : {steane(), toric2d(2), four22()}) {
        auto c2 = with_changed_logical_basis(c);
        ASSERT_NE(c2.logical_x(), c.logical_x());
        for (double p : {0.03, 0.11, 0.27}) {
            auto a = bound_report(sector_distribution_x(c, p), sector_distribution_z(c, 0.8 * p), c.k());
            auto b = bound_report(sector_distribution_x(c2, p), sector_distribution_z(c2, 0.8 * p), c.k());
            EXPECT_NEAR(a.ic_bits, b.ic_bits, 1e-12);
            EXPECT_NEAR(a.ml, b.ml, 1e-12);
            EXPECT_NEAR(a.sampling, b.sampling, 1e-12);
        }
    }
}

TEST(info, self_dual_ic_symmetry) {
    for (const auto &c : {steane(), color666(3, 3)}) {
        EXPECT_NEAR(ic_at(c, 0.04, 0.13).value, ic_at(c, 0.13, 0.04).value, 1e-12);
    }
}
