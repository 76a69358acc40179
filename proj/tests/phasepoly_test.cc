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

#include "tcc/oracle.h"
#include "tcc/phasepoly.h"

namespace tcc {
namespace {

BinVec bits_of(uint64_t v, size_t n) {
    BinVec b(n);
    for (size_t j = 0; j < n; j++) b.set(j, (v >> j) & 1);
    return b;
}

PhasePolynomial random_poly(std::mt19937_64 &rng, size_t n, int level, int terms, int max_deg = 3) {
    PhasePolynomial P(n, level);
    for (int t = 0; t < terms; t++) {
        PhasePolynomial::Monomial m;
        const int deg = static_cast<int>(rng() % (max_deg + 1));
        for (int d = 0; d < deg; d++) m.push_back(static_cast<uint32_t>(rng() % n));
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
        P.add_term(m, static_cast<int64_t>(rng() % 16) - 8);
    }
    return P;
}

// theta(v) straight from the term list.
uint32_t brute_eval(const PhasePolynomial &P, const BinVec &v) {
    int64_t s = 0;
    for (const auto &[m, c] : P.terms()) {
        bool all = true;
        for (uint32_t j : m) all = all && v.get(j);
        if (all) s += c;
    }
    return static_cast<uint32_t>(s % P.modulus());
}

// X^x diag(w8^theta) applied to an amplitude vector, written out directly.
Amplitudes apply_oracle(const Amplitudes &psi, const MixedOperator &M) {
    const size_t n = M.size();
    Amplitudes out(psi.size());
    uint64_t xmask = 0;
    for (size_t j : M.x.ones()) xmask |= uint64_t{1} << j;
    for (uint64_t v = 0; v < psi.size(); v++) {
        const uint32_t th = brute_eval(M.diag, bits_of(v, n));
        out[v ^ xmask] += std::polar(1.0, M_PI * th / 4) * psi[v];
    }
    return out;
}

Amplitudes random_state(std::mt19937_64 &rng, size_t n) {
    std::normal_distribution<double> g;
    Amplitudes a(size_t{1} << n);
    for (auto &z : a) z = {g(rng), g(rng)};
    return a;
}

double distance(const Amplitudes &a, const Amplitudes &b) {
    double d = 0;
    for (size_t i = 0; i < a.size(); i++) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

TEST(PhasePolynomial, TermsReduceModulo) {
    PhasePolynomial P(3, 3);
    P.add_term({0, 0, 1}, 9);
    P.add_term({1, 0}, -1);
    EXPECT_EQ(P.coefficient({0, 1}), 0);
    P.add_term({2}, -1);
    EXPECT_EQ(P.coefficient({2}), 7);
    EXPECT_THROW(P.add_term({3}, 1), std::invalid_argument);
}

TEST(PhasePolynomial, EvaluateMatchesTermList) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 50; t++) {
        PhasePolynomial P = random_poly(rng, 6, 1 + t % 3, 8);
        for (uint64_t v = 0; v < 64; v++) EXPECT_EQ(P.evaluate(bits_of(v, 6)), brute_eval(P, bits_of(v, 6)));
    }
}

TEST(PhasePolynomial, ShiftLevelAndSubstitute) {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 40; t++) {
        const size_t n = 5;
        PhasePolynomial P = random_poly(rng, n, 2, 6);
        const BinVec x = bits_of(rng() % 32, n);
        PhasePolynomial S = P.shift(x), L = P.at_level(3);
        BinMat M(std::vector<BinVec>{bits_of(rng() % 32, n), bits_of(rng() % 32, n), bits_of(rng() % 32, n)}, n);
        PhasePolynomial Q = P.substitute(M);
        for (uint64_t v = 0; v < 32; v++) {
            const BinVec bv = bits_of(v, n);
            EXPECT_EQ(S.evaluate(bv), P.evaluate(bv ^ x));
            EXPECT_EQ(L.evaluate(bv), 2 * P.evaluate(bv) % 8);
        }
        for (uint64_t u = 0; u < 8; u++) {
            EXPECT_EQ(Q.evaluate(bits_of(u, 3)), P.evaluate(M.combine(bits_of(u, 3))));
        }
    }
}

TEST(PhasePolynomial, CliffordLevelOfStandardGates) {
    auto level_of = [](PhasePolynomial::Monomial m, int64_t c) {
        PhasePolynomial P(3, 3);
        P.add_term(m, c);
        return P.clifford_level();
    };
    EXPECT_EQ(level_of({}, 3), 0);         // global phase
    EXPECT_EQ(level_of({0}, 4), 1);        // Z
    EXPECT_EQ(level_of({0}, 2), 2);        // S
    EXPECT_EQ(level_of({0}, 1), 3);        // T
    EXPECT_EQ(level_of({0, 1}, 4), 2);     // CZ
    EXPECT_EQ(level_of({0, 1}, 2), 3);     // controlled-S
    EXPECT_EQ(level_of({0, 1, 2}, 4), 3);  // CCZ
    EXPECT_EQ(cz_poly(3, 0, 2).clifford_level(), 2);
}

TEST(MixedOperator, ProductAdjointAndCommutatorMatchDenseAlgebra) {
    std::mt19937_64 rng(23);
    const size_t n = 5;
    for (int t = 0; t < 30; t++) {
        MixedOperator A(bits_of(rng() % 32, n), random_poly(rng, n, 3, 6));
        MixedOperator B(bits_of(rng() % 32, n), random_poly(rng, n, 3, 6));
        Amplitudes psi = random_state(rng, n);
        EXPECT_LT(distance(apply_oracle(psi, A * B), apply_oracle(apply_oracle(psi, B), A)), 1e-12);
        EXPECT_LT(distance(apply_oracle(psi, A * A.adjoint()), psi), 1e-12);
        MixedOperator K = group_commutator(A, B);
        Amplitudes seq = apply_oracle(
            apply_oracle(apply_oracle(apply_oracle(psi, B.adjoint()), A.adjoint()), B), A);
        EXPECT_LT(distance(apply_oracle(psi, K), seq), 1e-12);
        DenseState d{n, psi};
        dense_apply(d, A);
        EXPECT_LT(distance(d.amp, apply_oracle(psi, A)), 1e-12);
        DenseState s{n, psi};
        dense_apply_serial(s, A);
        EXPECT_LT(distance(s.amp, d.amp), 1e-12);
    }
}

TEST(MixedOperator, PauliRoundTripAndPhases) {
    Pauli P = Pauli::parse("-iXYZI");
    auto M = MixedOperator::from_pauli(P);
    ASSERT_TRUE(M.to_pauli().has_value());
    EXPECT_EQ(*M.to_pauli(), P);
    // K(X, Z) = XZXZ = -1 on a single qubit.
    auto K = group_commutator(MixedOperator::from_pauli(Pauli::parse("X")), MixedOperator::from_pauli(Pauli::parse("Z")));
    ASSERT_TRUE(K.global_phase().has_value());
    EXPECT_EQ(*K.global_phase(), 4u);
    PhasePolynomial T(1, 3);
    T.add_term({0}, 1);
    EXPECT_FALSE(MixedOperator::from_diagonal(T).to_pauli().has_value());
}

TEST(Pauli, ProductsAndCommutation) {
    std::mt19937_64 rng(24);
    const char *letters = "IXYZ";
    for (int t = 0; t < 100; t++) {
        std::string a, b;
        for (int j = 0; j < 4; j++) {
            a += letters[rng() % 4];
            b += letters[rng() % 4];
        }
        Pauli P = Pauli::parse(a), Q = Pauli::parse(b);
        Pauli PQ = pauli_product(P, Q), QP = pauli_product(Q, P);
        EXPECT_EQ(PQ.x, QP.x);
        EXPECT_EQ(symplectic_commute(P, Q), PQ.phase == QP.phase);
        EXPECT_TRUE(pauli_product(P, P.adjoint()).is_identity_up_to_phase());
        EXPECT_EQ(pauli_product(P, P.adjoint()).phase, 0);
        Amplitudes psi = random_state(rng, 4);
        EXPECT_LT(distance(apply_oracle(psi, MixedOperator::from_pauli(PQ)),
                           apply_oracle(apply_oracle(psi, MixedOperator::from_pauli(Q)), MixedOperator::from_pauli(P))),
                  1e-12);
    }
}

TEST(PhaseHistogram, ParallelSerialAndBruteForceAgree) {
    std::mt19937_64 rng(25);
    for (int t = 0; t < 20; t++) {
        PhasePolynomial P = random_poly(rng, 10, 3, 12);
        auto h = phase_histogram(P);
        EXPECT_EQ(h, phase_histogram_serial(P));
        std::vector<uint64_t> brute(8);
        for (uint64_t v = 0; v < 1024; v++) brute[brute_eval(P, bits_of(v, 10))]++;
        EXPECT_EQ(h, brute);
    }
}

TEST(WalshHadamard, MatchesDirectSum) {
    std::mt19937_64 rng(26);
    Amplitudes f = random_state(rng, 6), g = f, h = f;
    walsh_hadamard(g);
    walsh_hadamard_serial(h);
    for (size_t p = 0; p < f.size(); p++) {
        std::complex<double> s = 0;
        for (size_t u = 0; u < f.size(); u++) s += (__builtin_popcountll(p & u) % 2 ? -1.0 : 1.0) * f[u];
        EXPECT_LT(std::abs(g[p] - s), 1e-10);
        EXPECT_LT(std::abs(h[p] - s), 1e-10);
    }
    Amplitudes bad(3);
    EXPECT_THROW(walsh_hadamard(bad), std::invalid_argument);
}

TEST(DenseOracle, LimitsAndGroundState) {
    EXPECT_THROW(dense_zero_state(kMaxDenseQubits + 1), ResourceError);
    ColorCode code = build_color_code(build_octahedral_sphere(0));
    DenseState gs = dense_ground_state(code);
    EXPECT_NEAR(std::abs(dense_inner(gs, gs)), 1.0, 1e-12);
    for (const BinVec &row : code.hx.rows()) {
        EXPECT_NEAR(dense_pauli_expectation(gs, Pauli::X(code.n, row)).real(), 1.0, 1e-12);
    }
    for (const BinVec &row : code.hz.rows()) {
        EXPECT_NEAR(dense_pauli_expectation(gs, Pauli::Z(code.n, row)).real(), 1.0, 1e-12);
    }
}

// For k = 0, D preserves the codespace iff |<gs|D|gs>| = 1.
bool dense_preserves(const ColorCode &code, const PhasePolynomial &D) {
    DenseState gs = dense_ground_state(code), psi = gs;
    dense_apply(psi, MixedOperator::from_diagonal(D.at_level(3)));
    return std::abs(std::abs(dense_inner(gs, psi)) - 1.0) < 1e-9;
}

TEST(PreservesCodespace, SymbolicEnumerationAndDenseAgree) {
    std::mt19937_64 rng(27);
    for (const char *spec : {"octa-sphere:0", "16cell"}) {
        ColorCode code = build_color_code(build_colex(spec));
        Codespace cs(code);
        std::vector<PhasePolynomial> cases = {transversal_phase_poly(code, 2), transversal_phase_poly(code, 3)};
        for (int t = 0; t < 20; t++) cases.push_back(random_poly(rng, code.n, 3, 1 + t % 4, 2));
        for (const PhasePolynomial &D : cases) {
            const bool sym = preserves_codespace(cs, D, Method::kSymbolic);
            EXPECT_EQ(sym, preserves_codespace(cs, D, Method::kEnumerate));
            EXPECT_EQ(sym, dense_preserves(code, D));
            const Cyclo e = ground_expectation(cs, MixedOperator::from_diagonal(D.at_level(3)));
            DenseState gs = dense_ground_state(code), psi = gs;
            dense_apply(psi, MixedOperator::from_diagonal(D.at_level(3)));
            EXPECT_LT(std::abs(e.to_complex() - dense_inner(gs, psi)), 1e-10);
        }
    }
}

TEST(PreservesCodespace, TransversalPatterns) {
    for (const char *spec : {"octa-sphere:0", "octa-sphere:1", "octa-sphere:2"}) {
        ColorCode code = build_color_code(build_colex(spec));
        EXPECT_TRUE(preserves_codespace(Codespace(code), transversal_phase_poly(code, 2))) << spec;
    }
    ColorCode cube = build_color_code(build_octahedral_sphere(0));
    EXPECT_FALSE(preserves_codespace(Codespace(cube), transversal_phase_poly(cube, 3)));
    for (const char *spec : {"16cell", "bcc-torus:2,2,2"}) {
        ColorCode code = build_color_code(build_colex(spec));
        EXPECT_TRUE(preserves_codespace(Codespace(code), transversal_phase_poly(code, 3), Method::kSymbolic)) << spec;
    }
}

TEST(PreservesCodespace, LogicalQubitsUseLogicalSubstitution) {
    ColorCode code = build_color_code(build_hex_torus(2, 2));
    Codespace cs(code);
    EXPECT_EQ(cs.k(), 4u);
    EXPECT_TRUE(preserves_codespace(cs, transversal_phase_poly(code, 2)));
    PhasePolynomial single(code.n, 2);
    single.add_term({0}, 1);
    EXPECT_FALSE(preserves_codespace(cs, single));
    EXPECT_THROW(preserves_codespace(cs, single, Method::kEnumerate), std::domain_error);
}

TEST(SequentialCommutator, ReducesToScalarOnCodespace) {
    ColorCode code = build_color_code(build_octahedral_sphere(0));
    Codespace cs(code);
    // A Z string and an X string crossing once anticommute.
    const Pauli Z0 = Pauli::Z(code.n, BinVec::from_indices(code.n, {0}));
    const Pauli X0 = Pauli::X(code.n, BinVec::from_indices(code.n, {0}));
    auto r = sequential_commutator({MixedOperator::from_pauli(Z0), MixedOperator::from_pauli(X0)}, &cs);
    ASSERT_TRUE(r.is_scalar);
    EXPECT_EQ(r.phase8, 4u);
    EXPECT_THROW(sequential_commutator({MixedOperator::identity(code.n)}), std::invalid_argument);
}

}  // namespace
}  // namespace tcc
