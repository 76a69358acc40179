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

#include <complex>
#include <random>

#include "tcc/cyclo.h"

namespace tcc {
namespace {

std::complex<double> w(int k) { return std::polar(1.0, M_PI * k / 4); }

TEST(Cyclo, OmegaIsPrimitiveEighthRoot) {
    EXPECT_EQ(Cyclo::omega(8), Cyclo(1));
    EXPECT_EQ(Cyclo::omega(4), Cyclo(-1));
    EXPECT_EQ(Cyclo::omega(-1), Cyclo::omega(7));
    for (int k = 0; k < 8; k++) {
        EXPECT_EQ(Cyclo::omega(k).omega_exponent(), k);
        EXPECT_LT(std::abs(Cyclo::omega(k).to_complex() - w(k)), 1e-15);
        for (int j = -9; j < 9; j++) {
            EXPECT_EQ(Cyclo::omega(k) * Cyclo::omega(j), Cyclo::omega(k + j));
        }
    }
    EXPECT_EQ(Cyclo(2).omega_exponent(), -1);
}

TEST(Cyclo, SqrtTwoIdentities) {
    const Cyclo sqrt2 = Cyclo::omega(1) + Cyclo::omega(-1);
    EXPECT_EQ(sqrt2 * sqrt2, Cyclo(2));
    EXPECT_EQ(sqrt2 * Cyclo::inv_sqrt2_pow(1), Cyclo(1));
    EXPECT_EQ(Cyclo::inv_sqrt2_pow(2) * Cyclo(2), Cyclo(1));
    // Same value reached two ways must compare equal (canonical form).
    EXPECT_EQ((Cyclo(1) + Cyclo::omega(2)) * (Cyclo(1) - Cyclo::omega(2)), Cyclo(2));
    EXPECT_EQ((Cyclo(2) * Cyclo::inv_sqrt2_pow(3)) * sqrt2, Cyclo(1));
}

TEST(Cyclo, ConjugateAndNorm) {
    EXPECT_EQ(Cyclo::omega(3).conj(), Cyclo::omega(5));
    const Cyclo z = (Cyclo(1) + Cyclo::omega(1)) * Cyclo::inv_sqrt2_pow(2);
    EXPECT_LT(std::abs(z.norm2().to_complex() - std::norm(z.to_complex())), 1e-15);
    EXPECT_TRUE((z - z).is_zero());
}

TEST(Cyclo, RandomExpressionsMatchComplexArithmetic) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-3, 3), pw(0, 4), pick(0, 3);
    for (int t = 0; t < 500; t++) {
        Cyclo a({coef(rng), coef(rng), coef(rng), coef(rng)}, pw(rng));
        Cyclo b({coef(rng), coef(rng), coef(rng), coef(rng)}, pw(rng));
        const auto za = a.to_complex(), zb = b.to_complex();
        Cyclo r;
        std::complex<double> zr;
        switch (pick(rng)) {
            case 0: r = a + b, zr = za + zb; break;
            case 1: r = a - b, zr = za - zb; break;
            case 2: r = a * b, zr = za * zb; break;
            default: r = a.conj() * b, zr = std::conj(za) * zb; break;
        }
        EXPECT_LT(std::abs(r.to_complex() - zr), 1e-12);
        EXPECT_EQ(r == a + b, std::abs(zr - (za + zb)) < 1e-12);
    }
}

TEST(Cyclo, StringIsStable) {
    EXPECT_EQ(Cyclo(1).str(), Cyclo::omega(0).str());
    EXPECT_NE(Cyclo::omega(1).str(), Cyclo::omega(2).str());
}

}  // namespace
}  // namespace tcc
