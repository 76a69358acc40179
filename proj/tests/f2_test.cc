// Copyright 2026 The tcc-lab Authors
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

#include <gtest/gtest.h>

#include <random>

#include "tcc/f2.h"

namespace tcc {
namespace {

using Dense = std::vector<std::vector<int>>;

BinVec random_vec(std::mt19937_64 &rng, size_t n, double density = 0.5) {
    std::bernoulli_distribution bit(density);
    BinVec v(n);
    for (size_t i = 0; i < n; i++) {
        v.set(i, bit(rng));
    }
    return v;
}

BinMat random_mat(std::mt19937_64 &rng, size_t r, size_t c, double density = 0.5) {
    std::vector<BinVec> rows;
    for (size_t i = 0; i < r; i++) {
        rows.push_back(random_vec(rng, c, density));
    }
    return BinMat(rows, c);
}

Dense to_dense(const BinMat &A) {
    Dense d(A.num_rows(), std::vector<int>(A.num_cols()));
    for (size_t i = 0; i < A.num_rows(); i++) {
        for (size_t j = 0; j < A.num_cols(); j++) {
            d[i][j] = A.row(i).get(j);
        }
    }
    return d;
}

// Plain Gauss-Jordan on ints, independent of the packed code.
size_t oracle_rank(Dense d) {
    size_t rank = 0;
    const size_t cols = d.empty() ? 0 : d[0].size();
    for (size_t c = 0; c < cols && rank < d.size(); c++) {
        size_t p = rank;
        while (p < d.size() && !d[p][c]) p++;
        if (p == d.size()) continue;
        std::swap(d[p], d[rank]);
        for (size_t i = 0; i < d.size(); i++) {
            if (i != rank && d[i][c]) {
                for (size_t j = 0; j < cols; j++) d[i][j] ^= d[rank][j];
            }
        }
        rank++;
    }
    return rank;
}

TEST(BinVec, StringRoundTripAcrossWordBoundary) {
    for (size_t n : {1u, 63u, 64u, 65u, 130u}) {
        std::string s(n, '0');
        s[0] = '1';
        s[n - 1] = '1';
        BinVec v = BinVec::from_string(s);
        EXPECT_EQ(v.str(), s);
        EXPECT_EQ(v.popcount(), n == 1 ? 1u : 2u);
        EXPECT_EQ(v.first_one(), 0u);
    }
    EXPECT_EQ(BinVec(70).first_one(), 70u);
}

TEST(BinVec, ArithmeticMatchesBitLoop) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; t++) {
        const size_t n = 1 + rng() % 200;
        BinVec a = random_vec(rng, n), b = random_vec(rng, n);
        int overlap = 0;
        std::vector<size_t> ones;
        for (size_t i = 0; i < n; i++) {
            overlap += a.get(i) & b.get(i);
            EXPECT_EQ((a ^ b).get(i), a.get(i) != b.get(i));
            EXPECT_EQ((a & b).get(i), a.get(i) && b.get(i));
            if (a.get(i)) ones.push_back(i);
        }
        EXPECT_EQ(a.dot(b), overlap % 2 == 1);
        EXPECT_EQ(a.ones(), ones);
        EXPECT_EQ(a.popcount(), ones.size());
        EXPECT_TRUE((a ^ a).is_zero());
    }
}

TEST(BinVec, LengthMismatchThrows) {
    EXPECT_THROW(BinVec(3) ^ BinVec(4), std::invalid_argument);
    EXPECT_THROW(BinVec::from_string("01x"), std::invalid_argument);
}

TEST(F2Rank, PackedMatchesIndependentElimination) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 200; t++) {
        const size_t r = 1 + rng() % 40, c = 1 + rng() % 90;
        BinMat A = random_mat(rng, r, c, t % 3 == 0 ? 0.1 : 0.5);
        const size_t want = oracle_rank(to_dense(A));
        EXPECT_EQ(f2_rank_solve(A).rank, want);
        EXPECT_EQ(f2_rank_naive(A), want);
        EXPECT_EQ(independent_rows(A).size(), want);
    }
}

TEST(F2Rank, LargeSparseMatrix) {
    std::mt19937_64 rng(3);
    BinMat A = random_mat(rng, 300, 500, 0.02);
    EXPECT_EQ(f2_rank_solve(A).rank, f2_rank_naive(A));
}

TEST(F2Rank, EmptyMatrixThrows) { EXPECT_THROW(f2_rank_solve(BinMat()), std::invalid_argument); }

TEST(F2Solve, SolutionsReproduceTargetAndInconsistencyIsDetected) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 200; t++) {
        const size_t r = 1 + rng() % 20, c = 1 + rng() % 30;
        BinMat A = random_mat(rng, r, c);
        const BinVec reachable = A.combine(random_vec(rng, r));
        auto s = f2_rank_solve(A, reachable);
        ASSERT_TRUE(s.solution.has_value());
        EXPECT_EQ(A.combine(*s.solution), reachable);
        BinVec target = random_vec(rng, c);
        Dense aug = to_dense(A);
        std::vector<int> row(c);
        for (size_t j = 0; j < c; j++) row[j] = target.get(j);
        aug.push_back(row);
        const bool in_span = oracle_rank(aug) == oracle_rank(to_dense(A));
        EXPECT_EQ(f2_rank_solve(A, target).solution.has_value(), in_span);
    }
}

TEST(F2Solve, LengthMismatchThrows) {
    BinMat A(std::vector<BinVec>{BinVec::from_string("101")}, 3);
    EXPECT_THROW(f2_rank_solve(A, BinVec(2)), std::invalid_argument);
}

TEST(F2Kernel, BasisSpansNullSpace) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; t++) {
        const size_t r = 1 + rng() % 25, c = 1 + rng() % 40;
        BinMat A = random_mat(rng, r, c);
        auto ker = f2_kernel(A);
        EXPECT_EQ(ker.size(), c - oracle_rank(to_dense(A)));
        for (const BinVec &v : ker) {
            EXPECT_TRUE(A.apply(v).is_zero());
        }
        if (!ker.empty()) {
            EXPECT_EQ(f2_rank_naive(BinMat(ker, c)), ker.size());
        }
    }
}

TEST(F2Basis, TracksCombinations) {
    std::mt19937_64 rng(6);
    const size_t n = 40, m = 60;
    F2Basis basis(n, m);
    std::vector<BinVec> added;
    for (size_t i = 0; i < m; i++) {
        added.push_back(random_vec(rng, n, 0.2));
        basis.add(added.back(), i);
    }
    EXPECT_EQ(basis.rank(), f2_rank_naive(BinMat(added, n)));
    for (int t = 0; t < 30; t++) {
        BinVec target(n);
        for (size_t i = 0; i < m; i++) {
            if (rng() % 2) target ^= added[i];
        }
        BinVec combo;
        ASSERT_TRUE(basis.reduce(target, &combo));
        BinVec sum(n);
        for (size_t i : combo.ones()) sum ^= added[i];
        EXPECT_EQ(sum, target);
    }
}

TEST(F2Basis, RejectsDependentVector) {
    F2Basis basis(3, 3);
    EXPECT_TRUE(basis.add(BinVec::from_string("110"), 0));
    EXPECT_TRUE(basis.add(BinVec::from_string("011"), 1));
    EXPECT_FALSE(basis.add(BinVec::from_string("101"), 2));
    EXPECT_EQ(basis.rank(), 2u);
    EXPECT_FALSE(basis.reduce(BinVec::from_string("100")));
}

}  // namespace
}  // namespace tcc
