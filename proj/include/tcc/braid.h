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

#ifndef TCC_BRAID_H
#define TCC_BRAID_H

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tcc/phasepoly.h"

namespace tcc {

enum class ExcitationKind { kCharge, kFlux, kSpt };  // e, m, s

/// One elementary or composite excitation process and the operator U that creates it.
///
/// Charges are Z strings, fluxes X membranes, SPT loops R2 membranes (R2 on T, R2^dag on
/// the complement). Composites multiply the operators of their parts.
struct LoopProcess {
    std::string label;                 // e.g. "e_A", "m_BC", "m_BC s_BC"
    std::vector<ExcitationKind> kinds;  // one per part
    MixedOperator U;
    BinVec support;  // qubits touched by any part

    bool is_pauli() const { return U.to_pauli().has_value(); }
    bool is_loop() const;
};

/// Z string on the given edges (colors = all but `color`). Label e_<color>.
LoopProcess charge_string(const ColorCode &code, ColorSet color, const std::vector<uint32_t> &edges);
/// X membrane on plaquettes whose colors are the complement of `pair`. Label m_<pair>.
LoopProcess flux_membrane(const ColorCode &code, ColorSet pair, const std::vector<uint32_t> &plaquettes);
/// X on an explicit support, labelled m_<pair> (e.g. a whole volume as a closed membrane).
LoopProcess flux_on_support(const ColorCode &code, ColorSet pair, const BinVec &support);
/// R2 membrane on the union of the plaquettes (colors = complement of `pair`). Label s_<pair>.
LoopProcess spt_membrane(const ColorCode &code, ColorSet pair, const std::vector<uint32_t> &plaquettes);
LoopProcess spt_on_support(const ColorCode &code, ColorSet pair, const BinVec &support);
/// Product a.U * b.U with the labels joined.
LoopProcess compose(const LoopProcess &a, const LoopProcess &b);

/// Cells of a 3D colex meeting at one vertex: the edge of every color triple, the plaquette
/// of every color pair and the volume of every color.
struct CornerFixture {
    uint32_t vertex = 0;
    std::map<ColorSet, uint32_t> edge;       // keyed by edge colors
    std::map<ColorSet, uint32_t> plaquette;  // keyed by plaquette colors
    std::map<ColorSet, uint32_t> volume;     // keyed by single color
};

CornerFixture corner_fixture(const Colex &colex, uint32_t vertex);

enum class Placement {
    kLocal,      // string on one edge or membrane on one plaquette at the corner
    kEnclosing,  // loops only: the whole volume bounded by the membrane's plaquettes
};

/// Builds a process from a label such as "e_A", "m_BC", "s_AB" or "m_BC s_BC" at a corner.
/// Membranes for m_K / s_K use plaquettes of the colors complementary to K; the enclosing
/// placement uses the volume of the largest such color at the vertex.
LoopProcess corner_process(const ColorCode &code, const CornerFixture &fx, const std::string &label,
                           Placement placement = Placement::kLocal);

/// Thrown when a commutator does not reduce to a scalar on the codespace.
struct ConfigurationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BraidResult {
    std::vector<std::string> participants;
    uint32_t phase8 = 0;             // e^{i theta} = w8^phase8
    std::vector<std::string> trace;  // commutator normal forms, innermost first

    int sign() const;  // +1 / -1, 0 for other phases
    std::complex<double> value() const;
};

/// Phase k pi / 4 written as num pi / 2^den_log2 in lowest terms, num in [0, 2^(den_log2+1)).
struct PiFraction {
    int num = 0;
    int den_log2 = 0;
    std::string str() const;
};
PiFraction phase8_as_pi(uint32_t phase8);

/// Scalar of K(a.U^dag, b.U^dag) on the codespace. Throws ConfigurationError otherwise.
BraidResult braid_two(const Codespace &cs, const LoopProcess &a, const LoopProcess &b);
/// Scalar of K(K(a^dag, b^dag)^dag, c^dag) on the codespace.
BraidResult braid_three_loop(const Codespace &cs, const LoopProcess &a, const LoopProcess &b, const LoopProcess &c);

/// Dense <gs| K(K(a^dag, b^dag)^dag, c^dag) |gs>, applying the ten factors one by one.
std::complex<double> braid_three_loop_dense(const ColorCode &code, const LoopProcess &a, const LoopProcess &b,
                                            const LoopProcess &c);
/// Dense <gs| K(a^dag, b^dag) |gs>.
std::complex<double> braid_two_dense(const ColorCode &code, const LoopProcess &a, const LoopProcess &b);

/// (-1)^{x_a . z_b + z_a . x_b} for two Pauli processes.
int symplectic_sign(const LoopProcess &a, const LoopProcess &b);

/// Sign rule for elementary loop triples: -1 exactly for (m_K, s_K', m_K'') and
/// (s_K, m_K', m_K'') with K, K', K'' distinct pairs.
int expected_three_loop_sign(const std::string &a, const std::string &b, const std::string &c);

struct ThreeLoopRow {
    std::string a, b, c;
    BraidResult result;
};

/// All ordered triples of {m_AB, m_BC, m_CA, s_AB, s_BC, s_CA} at one corner, in parallel.
std::vector<ThreeLoopRow> three_loop_table(const ColorCode &code, const CornerFixture &fx);

/// Multiplies a Pauli process by `steps` random stabilizer generators (X volumes for X
/// parts, Z plaquettes for Z parts), drawn among generators commuting exactly with every
/// operator in `others`. Non-Pauli processes are returned unchanged.
LoopProcess deform(const ColorCode &code, const LoopProcess &p, const std::vector<MixedOperator> &others,
                   std::mt19937_64 &rng, int steps);

/// A transparent wall as a list of (left label | right label) entries.
using WallAction3D = std::vector<std::pair<std::string, std::string>>;

/// (e_X|e_X) for X in A, B, C and (m_K|m_K s_K) for K in BC, CA, AB.
WallAction3D r3_wall_action();

struct WallBraidItem {
    std::vector<std::string> participants;  // entries as "(l|r)"
    int left = 1;
    int right = 1;
    int total = 1;
    /// Elementary part tuples braiding with -1, as "left: (e_A, m_BC)" etc.
    std::vector<std::string> minus_contributions;
    bool factorizes = false;  // each side equals the product over its elementary parts
};

struct WallBraidReport {
    std::vector<WallBraidItem> pairs;
    std::vector<WallBraidItem> triples;
    bool all_trivial = true;
    std::optional<WallBraidItem> offending;
};

/// Folded braiding across a wall: every ordered pair of entries and every ordered triple of
/// loop entries is braided on each side at the corner; the wall is trivial if every product
/// of the two sides is +1.
WallBraidReport wall_braiding_triviality(const Codespace &cs, const ColorCode &code, const CornerFixture &fx,
                                         const WallAction3D &action);

struct CommutatorIdentity {
    MixedOperator commutator;  // K(R3 restricted to V, X on the membrane)
    PhasePolynomial expected;  // R2 on membrane and V, level 3 units
    bool holds = false;        // equal up to the constant term, with no X part
};

/// Compares K(R3|_V, X_M) with R2 restricted to M and V.
CommutatorIdentity commutator_identity(const ColorCode &code, const BinVec &region, const BinVec &membrane);

}  // namespace tcc

#endif
