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

#include "tcc/braid.h"

namespace tcc {
namespace {

struct Lattice {
    Colex colex;
    ColorCode code;
    Codespace cs;
    CornerFixture fx;

    explicit Lattice(const std::string &spec)
        : colex(build_colex(spec)), code(build_color_code(colex)), cs(code), fx(corner_fixture(colex, 0)) {}
    LoopProcess p(const std::string &label, Placement pl = Placement::kLocal) const {
        return corner_process(code, fx, label, pl);
    }
};

const Lattice &sixteen() {
    static const Lattice l("16cell");
    return l;
}

const std::vector<std::string> kLoops = {"m_AB", "m_BC", "m_CA", "s_AB", "s_BC", "s_CA"};

TEST(PiFraction, LowestTerms) {
    EXPECT_EQ(phase8_as_pi(0).str(), "0");
    EXPECT_EQ(phase8_as_pi(4).str(), "pi");
    EXPECT_EQ(phase8_as_pi(2).str(), "pi/2");
    EXPECT_EQ(phase8_as_pi(1).str(), "pi/4");
    EXPECT_EQ(phase8_as_pi(6).str(), "3pi/2");
    PiFraction f = phase8_as_pi(6);
    EXPECT_EQ(f.num, 3);
    EXPECT_EQ(f.den_log2, 1);
}

TEST(CornerFixture, OneCellPerColorSubset) {
    const Lattice &l = sixteen();
    EXPECT_EQ(l.fx.edge.size(), 4u);
    EXPECT_EQ(l.fx.plaquette.size(), 6u);
    EXPECT_EQ(l.fx.volume.size(), 4u);
    for (const auto &[colors, id] : l.fx.plaquette) {
        EXPECT_EQ(l.colex.plaquettes[id].colors, colors);
        const auto &v = l.colex.plaquettes[id].verts;
        EXPECT_TRUE(std::binary_search(v.begin(), v.end(), 0u));
    }
}

TEST(TwoExcitation, ReferencePhases) {
    for (const char *spec : {"16cell", "bcc-torus:2,2,2"}) {
        Lattice l(spec);
        EXPECT_EQ(braid_two(l.cs, l.p("e_A"), l.p("e_B")).sign(), 1) << spec;
        EXPECT_EQ(braid_two(l.cs, l.p("e_A"), l.p("m_BC")).sign(), -1) << spec;
        EXPECT_EQ(braid_two(l.cs, l.p("e_A"), l.p("m_AB")).sign(), 1) << spec;
        EXPECT_EQ(braid_two(l.cs, l.p("m_AB", Placement::kEnclosing), l.p("s_BC")).sign(), 1) << spec;
    }
}

TEST(TwoExcitation, PauliPairsFollowSymplecticCount) {
    const Lattice &l = sixteen();
    const std::vector<std::string> labels = {"e_A", "e_B", "e_C", "e_D", "m_AB", "m_BC", "m_CA", "m_AD", "m_BD", "m_CD"};
    for (const auto &a : labels) {
        for (const auto &b : labels) {
            LoopProcess pa = l.p(a), pb = l.p(b);
            if (a[0] == 'm' && b[0] == 'm') continue;
            BraidResult r = braid_two(l.cs, pa, pb);
            EXPECT_EQ(r.sign(), symplectic_sign(pa, pb)) << a << " " << b;
            EXPECT_LT(std::abs(braid_two_dense(l.code, pa, pb) - r.value()), 1e-10);
        }
    }
}

TEST(TwoExcitation, ChargeAgainstFluxColorRule) {
    // e_X and m_K braid nontrivially exactly when X is not one of the colors in K.
    const Lattice &l = sixteen();
    for (const std::string x : {"A", "B", "C"}) {
        for (const std::string k : {"AB", "BC", "CA"}) {
            const int want = k.find(x) != std::string::npos ? 1 : -1;
            EXPECT_EQ(braid_two(l.cs, l.p("e_" + x), l.p("m_" + k)).sign(), want) << x << " " << k;
        }
    }
}

TEST(TwoExcitation, LocalMembranePairIsNotAScalar) {
    const Lattice &l = sixteen();
    EXPECT_THROW(braid_two(l.cs, l.p("m_AB"), l.p("s_BC")), ConfigurationError);
}

TEST(ThreeLoop, ExpectedSignRule) {
    size_t minus = 0;
    for (const auto &a : kLoops) {
        for (const auto &b : kLoops) {
            for (const auto &c : kLoops) minus += expected_three_loop_sign(a, b, c) == -1;
        }
    }
    // (m, s, m) and (s, m, m) over the 3! orderings of distinct pairs.
    EXPECT_EQ(minus, 12u);
    EXPECT_EQ(expected_three_loop_sign("m_AB", "s_BC", "m_CA"), -1);
    EXPECT_EQ(expected_three_loop_sign("m_AB", "m_BC", "s_CA"), 1);
}

TEST(ThreeLoop, TableMatchesRuleAndDenseOracle) {
    const Lattice &l = sixteen();
    auto rows = three_loop_table(l.code, l.fx);
    ASSERT_EQ(rows.size(), 216u);
    for (const ThreeLoopRow &r : rows) {
        EXPECT_EQ(r.result.sign(), expected_three_loop_sign(r.a, r.b, r.c)) << r.a << r.b << r.c;
    }
    for (size_t i = 0; i < rows.size(); i += 7) {
        const ThreeLoopRow &r = rows[i];
        auto dense = braid_three_loop_dense(l.code, l.p(r.a), l.p(r.b), l.p(r.c));
        EXPECT_LT(std::abs(dense - r.result.value()), 1e-10);
    }
}

TEST(ThreeLoop, RepeatedLoopsAreTrivial) {
    const Lattice &l = sixteen();
    for (const auto &a : kLoops) {
        for (const auto &b : kLoops) {
            EXPECT_EQ(braid_three_loop(l.cs, l.p(a), l.p(a), l.p(a)).sign(), 1);
            EXPECT_EQ(braid_three_loop(l.cs, l.p(a), l.p(a), l.p(b)).sign(), 1);
            EXPECT_EQ(braid_three_loop(l.cs, l.p(a), l.p(b), l.p(a)).sign(), 1);
        }
    }
}

TEST(ThreeLoop, BccTableAgrees) {
    Lattice l("bcc-torus:2,2,2");
    for (const ThreeLoopRow &r : three_loop_table(l.code, l.fx)) {
        EXPECT_EQ(r.result.sign(), expected_three_loop_sign(r.a, r.b, r.c));
    }
}

TEST(Deformation, PhasesAreInvariant) {
    const Lattice &l = sixteen();
    for (uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        std::mt19937_64 rng(seed);
        const auto &a = kLoops[rng() % 6], &b = kLoops[rng() % 6];
        const std::string c = "m_" + kLoops[rng() % 6].substr(2);
        LoopProcess pa = l.p(a), pb = l.p(b), pc = l.p(c);
        const uint32_t base = braid_three_loop(l.cs, pa, pb, pc).phase8;
        const MixedOperator inner = group_commutator(pa.U.adjoint(), pb.U.adjoint());
        LoopProcess qa = deform(l.code, pa, {pb.U, pc.U}, rng, 4);
        LoopProcess qc = deform(l.code, pc, {pa.U, pb.U, inner}, rng, 4);
        EXPECT_EQ(braid_three_loop(l.cs, qa, pb, qc).phase8, base) << a << b << c;
        EXPECT_EQ(braid_two(l.cs, deform(l.code, l.p("e_A"), {l.p("m_BC").U}, rng, 3), l.p("m_BC")).sign(), -1);
    }
}

TEST(WallBraiding, R3WallIsTrivial) {
    const Lattice &l = sixteen();
    WallBraidReport rep = wall_braiding_triviality(l.cs, l.code, l.fx, r3_wall_action());
    EXPECT_TRUE(rep.all_trivial);
    EXPECT_FALSE(rep.offending.has_value());
    EXPECT_EQ(rep.pairs.size(), 30u);
    EXPECT_EQ(rep.triples.size(), 27u);
    for (const auto *list : {&rep.pairs, &rep.triples}) {
        for (const WallBraidItem &it : *list) {
            EXPECT_TRUE(it.factorizes);
            EXPECT_EQ(it.total, it.left * it.right);
        }
    }
}

TEST(WallBraiding, RemovingAnAttachmentIsDetected) {
    const Lattice &l = sixteen();
    for (const std::string k : {"AB", "BC", "CA"}) {
        WallAction3D action = r3_wall_action();
        for (auto &[left, right] : action) {
            if (left == "m_" + k) right = "m_" + k;
        }
        WallBraidReport rep = wall_braiding_triviality(l.cs, l.code, l.fx, action);
        EXPECT_FALSE(rep.all_trivial) << k;
        ASSERT_TRUE(rep.offending.has_value());
        EXPECT_EQ(rep.offending->total, -1);
    }
}

TEST(CommutatorIdentity, EveryPlaquette) {
    for (const char *spec : {"16cell", "bcc-torus:2,2,2"}) {
        Colex cx = build_colex(spec);
        ColorCode code = build_color_code(cx);
        for (const Cell &p : cx.plaquettes) {
            CommutatorIdentity id = commutator_identity(code, BinVec(), cx.cell_vector(p));
            EXPECT_TRUE(id.holds) << spec;
            EXPECT_TRUE(id.commutator.x.is_zero());
        }
    }
}

TEST(CommutatorIdentity, RestrictedRegion) {
    Colex cx = build_16cell_colex();
    ColorCode code = build_color_code(cx);
    const BinVec V = cx.cell_vector(cx.volumes[0]);
    for (const Cell &p : cx.plaquettes) {
        EXPECT_TRUE(commutator_identity(code, V, cx.cell_vector(p)).holds);
    }
}

TEST(Labels, MalformedLabelsThrow) {
    const Lattice &l = sixteen();
    EXPECT_THROW(l.p("x_AB"), std::invalid_argument);
    EXPECT_THROW(l.p("m_A"), std::invalid_argument);
}

}  // namespace
}  // namespace tcc
