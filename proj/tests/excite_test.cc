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

#include "tcc/excite.h"
#include "tcc/oracle.h"

namespace tcc {
namespace {

std::vector<uint32_t> top_cells_of_color(const Colex &cx, ColorSet c) {
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < cx.top_cells().size(); i++) {
        if (cx.top_cells()[i].colors == c) out.push_back(i);
    }
    return out;
}

BinVec rows_containing(const ColorCode &code, uint32_t q) {
    BinVec p(code.hx.num_rows());
    for (size_t i = 0; i < code.hx.num_rows(); i++) p.set(i, code.hx.row(i).get(q));
    return p;
}

TEST(ExcitationSpectrum, SingleQubitRotationOnEveryQubitOfTheCube) {
    Colex cx = build_octahedral_sphere(0);
    ColorCode code = build_color_code(cx);
    for (uint32_t q = 0; q < code.n; q++) {
        for (int c = 1; c < 8; c++) {
            PhasePolynomial D(code.n, 3);
            D.add_term({q}, c);
            ExcitationState s = excitation_spectrum(code, D);
            // R(theta) = ((1 + w^c) + (1 - w^c) Z)/2 and Z on one qubit flips its three plaquettes.
            const BinVec zero(code.hx.num_rows()), flipped = rows_containing(code, q);
            EXPECT_EQ(flipped.popcount(), 3u);
            EXPECT_EQ(s.amplitude(zero), (Cyclo(1) + Cyclo::omega(c)) * Cyclo::inv_sqrt2_pow(2));
            EXPECT_EQ(s.amplitude(flipped), (Cyclo(1) - Cyclo::omega(c)) * Cyclo::inv_sqrt2_pow(2));
            EXPECT_EQ(s.norm2(), Cyclo(1));
            EXPECT_TRUE(satisfies_color_parity(s, 2));
            EXPECT_LT(max_deviation(s, excitation_spectrum_dense(code, D, s.modes)), 1e-10);
        }
    }
}

TEST(ExcitationSpectrum, ModeFilterRejectsWeightElsewhere) {
    ColorCode code = build_color_code(build_octahedral_sphere(0));
    PhasePolynomial D(code.n, 3);
    D.add_term({0}, 2);
    std::vector<uint32_t> other;
    const BinVec hit = rows_containing(code, 0);
    for (uint32_t i = 0; i < code.hx.num_rows(); i++) {
        if (!hit.get(i)) other.push_back(i);
    }
    EXPECT_THROW(excitation_spectrum(code, D, other), OffBoundaryError);
    std::vector<uint32_t> own;
    for (size_t i : hit.ones()) own.push_back(static_cast<uint32_t>(i));
    EXPECT_EQ(excitation_spectrum(code, D, own).amplitudes.size(), 2u);
}

TEST(ExcitationSpectrum, WrongSizeThrows) {
    ColorCode code = build_color_code(build_octahedral_sphere(0));
    EXPECT_THROW(excitation_spectrum(code, PhasePolynomial(code.n + 1, 3)), std::invalid_argument);
}

TEST(BoundaryWavefunction, CubeCPlaquettesMatchDenseAndClusterChecks) {
    Colex cx = build_octahedral_sphere(0);
    ColorCode code = build_color_code(cx);
    for (uint32_t p : top_cells_of_color(cx, kC)) {
        auto [region, boundary] = region_and_boundary(cx, kC, {p});
        ExcitationState s = boundary_wavefunction(code, region, boundary, 2);
        EXPECT_EQ(s.modes, boundary.mode_rows);
        EXPECT_TRUE(satisfies_color_parity(s, 2));
        auto dense = excitation_spectrum_dense(code, transversal_phase_poly(code, 2, region.V), s.modes);
        EXPECT_LT(max_deviation(s, dense), 1e-10);
        for (Frame f : {Frame::kHadamard, Frame::kExcitation}) {
            ClusterReport rep = verify_cluster_state_2d(s, boundary, f);
            EXPECT_EQ(rep.stabilizers.size(), boundary.mode_rows.size());
            EXPECT_TRUE(rep.all_plus) << rep.note;
        }
    }
}

TEST(BoundaryWavefunction, RefinedSpheresGiveClusterStates) {
    for (int ref : {1, 2}) {
        Colex cx = build_octahedral_sphere(ref);
        ColorCode code = build_color_code(cx);
        for (uint32_t p : top_cells_of_color(cx, kC)) {
            auto [region, boundary] = region_and_boundary(cx, kC, {p});
            ExcitationState s = boundary_wavefunction(code, region, boundary, 2);
            ClusterReport rep = verify_cluster_state_2d(s, boundary);
            EXPECT_TRUE(rep.all_plus) << "refinement " << ref << " plaquette " << p;
            EXPECT_EQ(rep.symmetry_a, Cyclo(1));
            EXPECT_EQ(rep.symmetry_b, Cyclo(1));
        }
    }
}

TEST(BoundaryWavefunction, MatchesClosedFormUpToPhase) {
    struct Case {
        const char *spec;
        ColorSet color;
        int level;
    };
    for (const Case &c : {Case{"octa-sphere:0", kC, 2}, Case{"octa-sphere:1", kC, 2}, Case{"16cell", kD, 3}}) {
        Colex cx = build_colex(c.spec);
        ColorCode code = build_color_code(cx);
        const uint32_t cell = top_cells_of_color(cx, c.color).front();
        auto [region, boundary] = region_and_boundary(cx, c.color, {cell});
        ExcitationState s = boundary_wavefunction(code, region, boundary, c.level);
        const bool either = equal_up_to_omega(s, closed_form_boundary_state(code, boundary, 1)).has_value() ||
                            equal_up_to_omega(s, closed_form_boundary_state(code, boundary, -1)).has_value();
        EXPECT_TRUE(either) << c.spec;
    }
}

TEST(BoundaryWavefunction, LevelMustMatchDimension) {
    Colex cx = build_octahedral_sphere(0);
    ColorCode code = build_color_code(cx);
    auto [region, boundary] = region_and_boundary(cx, kC, {top_cells_of_color(cx, kC).front()});
    EXPECT_THROW(boundary_wavefunction(code, region, boundary, 3), std::invalid_argument);
}

TEST(SptBoundary, SixteenCellVolumesSymbolicAndDense) {
    Colex cx = build_16cell_colex();
    ColorCode code = build_color_code(cx);
    for (uint32_t v : top_cells_of_color(cx, kD)) {
        auto [region, boundary] = region_and_boundary(cx, kD, {v});
        ExcitationState s = boundary_wavefunction(code, region, boundary, 3);
        EXPECT_TRUE(satisfies_color_parity(s, 3));
        SptReport rep = verify_spt_state_3d(s, boundary);
        EXPECT_TRUE(rep.all_plus);
        for (bool b : rep.product_identity) EXPECT_TRUE(b);
        auto dense = excitation_spectrum_dense(code, transversal_phase_poly(code, 3, region.V), s.modes);
        EXPECT_LT(max_deviation(s, dense), 1e-10);
        for (auto z : spt_expectations_dense(dense, boundary)) EXPECT_LT(std::abs(z - 1.0), 1e-10);
    }
}

TEST(SptBoundary, StabilizerProductsEqualSymmetries) {
    Colex cx = build_16cell_colex();
    auto [region, boundary] = region_and_boundary(cx, kD, {top_cells_of_color(cx, kD).front()});
    for (ColorSet color : {kA, kB, kC}) {
        MixedOperator prod = MixedOperator::identity(boundary.mode_rows.size());
        for (uint32_t j = 0; j < boundary.mode_colors.size(); j++) {
            if (boundary.mode_colors[j] == color) prod = prod * spt_stabilizer(boundary, j);
        }
        EXPECT_TRUE(prod.equal_up_to_phase(spt_symmetry(boundary, color))) << color_name(color);
    }
}

TEST(Hadamard, IsAnInvolution) {
    Colex cx = build_16cell_colex();
    ColorCode code = build_color_code(cx);
    auto [region, boundary] = region_and_boundary(cx, kD, {top_cells_of_color(cx, kD).front()});
    ExcitationState s = boundary_wavefunction(code, region, boundary, 3);
    EXPECT_EQ(hadamard_all(hadamard_all(s)), s);
    EXPECT_EQ(hadamard_all(s).norm2(), Cyclo(1));
}

TEST(FluxCrossing, ConjugatedStringsStayInTheCliffordGroup) {
    {
        Colex cx = build_octahedral_sphere(1);
        ColorCode code = build_color_code(cx);
        auto [region, boundary] = region_and_boundary(cx, kC, {top_cells_of_color(cx, kC).front()});
        uint32_t e = 0;
        while (cx.edges[e].colors != (kA | kB)) e++;
        Pauli X = string_or_membrane_operator(code, kA | kB, {PathKind::kEdges, {e}}, PauliKind::kX);
        FluxCrossing f = flux_crossing_witness(code, region, X);
        ASSERT_TRUE(f.pauli.has_value());
        EXPECT_LE(f.clifford_level, 1);
    }
    {
        Colex cx = build_16cell_colex();
        ColorCode code = build_color_code(cx);
        auto [region, boundary] = region_and_boundary(cx, kD, {top_cells_of_color(cx, kD).front()});
        uint32_t p = 0;
        while (cx.plaquettes[p].colors != (kA | kB)) p++;
        Pauli X = string_or_membrane_operator(code, kA | kB, {PathKind::kPlaquettes, {p}}, PauliKind::kX);
        FluxCrossing f = flux_crossing_witness(code, region, X);
        EXPECT_LE(f.clifford_level, 2);
    }
}

TEST(Cocycles, IdentityHoldsForEveryIndexChoice) {
    for (int i = 1; i <= 3; i++) {
        EXPECT_TRUE(cocycle_identity_holds(CocycleType::kI, {i, i, i}));
        for (int j = 1; j <= 3; j++) {
            if (j != i) EXPECT_TRUE(cocycle_identity_holds(CocycleType::kII, {i, j, j}));
        }
    }
    EXPECT_TRUE(cocycle_identity_holds(CocycleType::kIII, {1, 2, 3}));
    EXPECT_THROW(cocycle_identity_holds(CocycleType::kI, {4, 1, 1}), std::invalid_argument);
}

TEST(Cocycles, TypeOneIsTheCubeOfTheGeneratorBit) {
    // omega_I(A, B, C) = (-1)^{a_i b_i c_i}: w8^4 exactly when all three selected bits are set.
    for (int a = 0; a < 8; a++) {
        for (int b = 0; b < 8; b++) {
            for (int c = 0; c < 8; c++) {
                const std::array<int, 3> A{a & 1, a >> 1 & 1, a >> 2 & 1}, B{b & 1, b >> 1 & 1, b >> 2 & 1},
                    C{c & 1, c >> 1 & 1, c >> 2 & 1};
                const int want = (A[0] && B[0] && C[0]) ? 4 : 0;
                EXPECT_EQ(evaluate_cocycle(CocycleType::kI, {1, 1, 1}, A, B, C) % 8, want);
            }
        }
    }
}

}  // namespace
}  // namespace tcc
