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

#include "cssmap/f2_linalg.h"

#include "gtest/gtest.h"

#include "cssmap/bit_matrix.h"
#include "cssmap/bit_vector.h"
#include "cssmap/code_zoo.h"
#include "cssmap/symplectic.h"

using namespace cssmap;

TEST(bit_vector, basics) {
    auto v = BitVector::from_string("1011000000000000000000000000000000000000000000000000000000000000001");
    EXPECT_EQ(v.size(), 67u);
    EXPECT_EQ(v.weight(), 4u);
    EXPECT_TRUE(v.get(66));
    EXPECT_FALSE(v.get(1));
    EXPECT_EQ(v.first_one(), 0u);
    v.flip(0);
    EXPECT_EQ(v.first_one(), 2u);
    EXPECT_EQ(BitVector::from_string(v.str()), v);
    EXPECT_EQ(BitVector::from_uint(5, 4).str(), "1010");
    EXPECT_EQ(BitVector::from_string("0110").to_uint(), 6u);
    EXPECT_THROW(BitVector::from_string("012"), DimensionError);
}

TEST(bit_vector, dot_and_xor) {
    auto a = BitVector::from_string("1101");
    auto b = BitVector::from_string("1011");
    EXPECT_EQ((a ^ b).str(), "0110");
    EXPECT_EQ((a & b).str(), "1001");
    EXPECT_EQ((a | b).str(), "1111");
    EXPECT_FALSE(dot(a, b));
    EXPECT_TRUE(dot(a, BitVector::from_string("1000")));
    EXPECT_THROW(dot(a, BitVector(3)), DimensionError);
    EXPECT_THROW(a ^= BitVector(5), DimensionError);
}

TEST(bit_matrix, matvec_and_transpose) {
    auto m = BitMatrix::from_strings({"110", "011"});
    EXPECT_EQ(matvec(m, BitVector::from_string("111")).str(), "00");
    EXPECT_EQ(matvec(m, BitVector::from_string("100")).str(), "10");
    EXPECT_THROW(matvec(m, BitVector(2)), DimensionError);
    auto t = m.transpose();
    EXPECT_EQ(t.rows(), 3u);
    EXPECT_EQ(t.str(), "10\n11\n01\n");
    EXPECT_EQ(mul_transpose(m, m).str(), "01\n10\n");
    EXPECT_THROW(m.push_row(BitVector(4)), DimensionError);
}

TEST(f2_linalg, rank) {
    EXPECT_EQ(rank(BitMatrix::identity(3)), 3u);
    EXPECT_EQ(rank(BitMatrix::from_strings({"1111"})), 1u);
    EXPECT_EQ(rank(hamming7_checks()), 3u);
    EXPECT_EQ(rank(BitMatrix(4, 5)), 0u);
    EXPECT_EQ(rank(BitMatrix::from_strings({"110", "011", "101"})), 2u);
}

TEST(f2_linalg, row_reduce) {
    auto z = row_reduce(BitMatrix(2, 3));
    EXPECT_TRUE(z.reduced.is_zero());
    EXPECT_TRUE(z.pivot_cols.empty());

    auto id = row_reduce(BitMatrix::identity(4));
    EXPECT_EQ(id.reduced, BitMatrix::identity(4));
    EXPECT_EQ(id.pivot_cols, (std::vector<size_t>{0, 1, 2, 3}));

    auto r = row_reduce(BitMatrix::from_strings({"11", "11"}));
    EXPECT_EQ(r.reduced, BitMatrix::from_strings({"11", "00"}));
    EXPECT_EQ(r.pivot_cols, (std::vector<size_t>{0}));

    auto h = row_reduce(hamming7_checks());
    EXPECT_EQ(h.pivot_cols, (std::vector<size_t>{0, 1, 3}));
    for (size_t i = 0; i < h.pivot_cols.size(); i++) {
        for (size_t j = 0; j < 3; j++) {
            EXPECT_EQ(h.reduced.get(j, h.pivot_cols[i]), i == j);
        }
    }
}

TEST(f2_linalg, kernel_basis) {
    EXPECT_EQ(kernel_basis(BitMatrix::identity(5)).rows(), 0u);

    auto k = kernel_basis(BitMatrix::from_strings({"1111"}));
    EXPECT_EQ(k.rows(), 3u);
    for (const auto &v : k.row_list()) {
        EXPECT_EQ(v.weight() % 2, 0u);
    }
    EXPECT_EQ(rank(k), 3u);

    auto h = hamming7_checks();
    auto kh = kernel_basis(h);
    EXPECT_EQ(kh.rows(), 4u);
    EXPECT_TRUE(mul_transpose(h, kh).is_zero());
    EXPECT_EQ(rank(kh), 4u);
}

TEST(f2_linalg, row_space_basis) {
    EXPECT_EQ(row_space_basis(BitMatrix::identity(3)), BitMatrix::identity(3));
    EXPECT_EQ(row_space_basis(BitMatrix::from_strings({"101", "101", "101"})).rows(), 1u);
    EXPECT_EQ(row_space_basis(hamming7_checks()).rows(), 3u);
}

TEST(f2_linalg, solve) {
    auto h = hamming7_checks();
    auto zero = solve(h, BitVector(3));
    ASSERT_TRUE(zero.has_value());
    EXPECT_TRUE(zero->is_zero());

    auto y = BitVector::from_string("1011");
    EXPECT_EQ(solve(BitMatrix::identity(4), y), y);

    auto m = BitMatrix::from_strings({"1111"});
    auto v = solve(m, BitVector::from_string("1"));
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->weight() % 2, 1u);
    EXPECT_EQ(matvec(m, *v).str(), "1");

    auto dependent = BitMatrix::from_strings({"11", "11"});
    EXPECT_FALSE(solve(dependent, BitVector::from_string("10")).has_value());
    EXPECT_THROW(solve(dependent, BitVector(3)), DimensionError);

    for (uint64_t s = 0; s < 8; s++) {
        auto b = BitVector::from_uint(s, 3);
        auto x = solve(h, b);
        ASSERT_TRUE(x.has_value());
        EXPECT_EQ(matvec(h, *x), b);
    }
}

TEST(f2_linalg, independent_rows) {
    auto m = BitMatrix::from_strings({"110", "011", "101", "111", "000"});
    EXPECT_EQ(independent_rows(m), (std::vector<size_t>{0, 1, 3}));
    auto t = toric2d(2);
    EXPECT_EQ(independent_rows(t.hx()).size(), 3u);
}

TEST(f2_linalg, echelon_basis) {
    EchelonBasis b(4);
    EXPECT_TRUE(b.insert(BitVector::from_string("1100")));
    EXPECT_TRUE(b.insert(BitVector::from_string("0110")));
    EXPECT_FALSE(b.insert(BitVector::from_string("1010")));
    EXPECT_TRUE(b.contains(BitVector::from_string("1010")));
    EXPECT_FALSE(b.contains(BitVector::from_string("0001")));
    EXPECT_EQ(b.rank(), 2u);
}

TEST(f2_linalg, complete_basis) {
    auto h = hamming7_checks();
    EXPECT_EQ(complete_basis(h, h).rows(), 0u);
    EXPECT_EQ(complete_basis(BitMatrix(7), h).rows(), 3u);
    EXPECT_THROW(complete_basis(BitMatrix::from_strings({"1000000"}), h), DimensionError);

    auto t = toric2d(2);
    auto reps = complete_basis(t.hx(), kernel_basis(t.hz()));
    ASSERT_EQ(reps.rows(), 2u);
    for (const auto &r : reps.row_list()) {
        EXPECT_TRUE(matvec(t.hz(), r).is_zero());
        bool hits = false;
        for (const auto &lz : t.logical_z().row_list()) {
            hits |= dot(r, lz);
        }
        EXPECT_TRUE(hits);
    }
}

TEST(symplectic, sgsop_commuting_input) {
    std::vector<SymplecticOp> ops{
        SymplecticOp::z_type(BitVector::from_string("110")),
        SymplecticOp::z_type(BitVector::from_string("011")),
    };
    auto r = sgsop(ops);
    EXPECT_TRUE(r.pairs.empty());
    EXPECT_EQ(r.commuting, ops);
}

TEST(symplectic, sgsop_single_pair) {
    auto z = SymplecticOp::z_type(BitVector::from_string("1"));
    auto x = SymplecticOp::x_type(BitVector::from_string("1"));
    auto r = sgsop({z, x});
    ASSERT_EQ(r.pairs.size(), 1u);
    EXPECT_EQ(r.pairs[0].first, z);
    EXPECT_EQ(r.pairs[0].second, x);
    EXPECT_TRUE(r.commuting.empty());
}

TEST(symplectic, sgsop_four22_normalizer) {
    auto c = four22();
    std::vector<SymplecticOp> ops;
    auto ker_x = kernel_basis(c.hx());
    auto ker_z = kernel_basis(c.hz());
    for (const auto &r : ker_x.row_list()) {
        ops.push_back(SymplecticOp::z_type(r));
    }
    for (const auto &r : ker_z.row_list()) {
        ops.push_back(SymplecticOp::x_type(r));
    }
    auto res = sgsop(ops);
    ASSERT_EQ(res.pairs.size(), 2u);
    EXPECT_EQ(res.commuting.size(), 2u);
    std::vector<SymplecticOp> all;
    for (const auto &[a, b] : res.pairs) {
        EXPECT_TRUE(a.is_z_type());
        EXPECT_TRUE(b.is_x_type());
        EXPECT_TRUE(anticommutes(a, b));
        all.push_back(a);
        all.push_back(b);
    }
    for (size_t i = 0; i < all.size(); i++) {
        for (size_t j = 0; j < all.size(); j++) {
            EXPECT_EQ(anticommutes(all[i], all[j]), (i / 2 == j / 2) && i != j);
        }
        for (const auto &c2 : res.commuting) {
            EXPECT_FALSE(anticommutes(all[i], c2));
        }
    }
}
