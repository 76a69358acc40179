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

#ifndef TCC_EXCITE_H
#define TCC_EXCITE_H

#include <complex>
#include <map>
#include <optional>
#include <string>

#include "tcc/oracle.h"

namespace tcc {

/// State in the excitation basis |p~>, one bit per mode (an X-check row).
struct ExcitationState {
    std::vector<uint32_t> modes;
    std::vector<ColorSet> mode_colors;
    std::map<BinVec, Cyclo> amplitudes;  // nonzero entries only

    Cyclo amplitude(const BinVec &p) const;
    Cyclo norm2() const;
    /// Same state with every amplitude multiplied by w8^k.
    ExcitationState times_omega(int k) const;
    bool operator==(const ExcitationState &o) const { return modes == o.modes && amplitudes == o.amplitudes; }
};

/// Floating-point counterpart filled by the dense oracle.
struct DenseExcitationState {
    std::vector<uint32_t> modes;
    std::map<BinVec, std::complex<double>> amplitudes;
};

/// Thrown when a state has weight on a mode that was declared silent.
struct OffBoundaryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// lambda_p = <p~| D |gs>, exact. Patterns are over all X-check rows unless `mode_filter`
/// lists the allowed rows; weight elsewhere raises OffBoundaryError naming the cell.
ExcitationState excitation_spectrum(const ColorCode &code, const PhasePolynomial &D,
                                    const std::optional<std::vector<uint32_t>> &mode_filter = std::nullopt);

/// Same amplitudes from a dense simulation (n <= 20) and a Walsh-Hadamard transform over
/// the 2^r stabilizer group elements.
DenseExcitationState excitation_spectrum_dense(const ColorCode &code, const PhasePolynomial &D,
                                               const std::vector<uint32_t> &modes);

/// Largest |lambda_exact - lambda_dense| over the union of supports.
double max_deviation(const ExcitationState &exact, const DenseExcitationState &dense);

/// Per-color count parity check: 2D N_A = N_B = N_C, 3D also N_D (mod 2), on every pattern.
bool satisfies_color_parity(const ExcitationState &s, int dim);

/// Restricted transversal phase gate on V applied to the ground state, in the excitation
/// basis of the boundary modes (level 2 for 2D regions, 3 for 3D).
ExcitationState boundary_wavefunction(const ColorCode &code, const Region &region, const BoundaryLattice &boundary,
                                      int level);

/// Closed-form boundary state: 2D product of exp(+-i pi/4 X X) over consecutive cycle modes,
/// 3D product over dual triangles of exp(+-i pi/8 X X X) (carried with its w8^{+-1/2}
/// normalisation, i.e. ((1 + w^s) + (1 - w^s) XXX)/2). `sigma` flips every sign.
ExcitationState closed_form_boundary_state(const ColorCode &code, const BoundaryLattice &boundary, int sigma);

/// k in 0..7 with a = w8^k b, if any.
std::optional<int> equal_up_to_omega(const ExcitationState &a, const ExcitationState &b);

enum class Frame { kExcitation, kHadamard };

struct ClusterReport {
    size_t modes = 0;
    std::vector<Cyclo> stabilizers;  // 2n chain terms, cycle order
    Cyclo symmetry_a;
    Cyclo symmetry_b;
    bool all_plus = false;
    std::string note;
};

/// Hadamard frame: terms Z_{j-1} X_j Z_{j+1} and symmetries prod X on each sublattice, on the
/// Hadamard-transformed state. Excitation frame: X~ Z~ X~ and prod Z~ on the state as given.
/// Throws std::invalid_argument unless the boundary is a simple alternating cycle.
ClusterReport verify_cluster_state_2d(const ExcitationState &state, const BoundaryLattice &boundary,
                                      Frame frame = Frame::kHadamard);

struct SptReport {
    std::vector<Cyclo> q_values;             // <Q_j>, one per dual vertex
    std::array<Cyclo, 3> symmetry_values;    // <S_A>, <S_B>, <S_C>
    std::array<bool, 3> product_identity{};  // prod_{j in color} Q_j == S_color exactly
    bool all_plus = false;
};

/// Q_j = X_j prod_{triangles jqq'} CZ_qq' on the Hadamard-transformed boundary state.
SptReport verify_spt_state_3d(const ExcitationState &state, const BoundaryLattice &boundary);
/// Same expectations from a floating-point state (used with the dense oracle).
std::vector<std::complex<double>> spt_expectations_dense(const DenseExcitationState &state,
                                                         const BoundaryLattice &boundary);

/// Q_j as an operator on the dual vertices (Hadamard frame).
MixedOperator spt_stabilizer(const BoundaryLattice &boundary, uint32_t j);
/// prod X over dual vertices of one color.
MixedOperator spt_symmetry(const BoundaryLattice &boundary, ColorSet color);

/// Exact expectation <psi|M|psi> of an operator on the modes of an excitation state.
Cyclo expectation(const ExcitationState &s, const MixedOperator &M);
/// Exact transversal Hadamard on all modes.
ExcitationState hadamard_all(const ExcitationState &s);

struct FluxCrossing {
    MixedOperator delta;            // U P U^dag P^dag
    std::optional<Pauli> pauli;     // when the delta is a Pauli (2D)
    std::optional<Syndrome> syndrome;
    int clifford_level = 0;
};

/// Conjugates an X-type string/membrane P by the restricted phase gate on V (level 2 in 2D,
/// 3 in 3D) and returns what it picks up.
FluxCrossing flux_crossing_witness(const ColorCode &code, const Region &region, const Pauli &P);

enum class CocycleType { kI, kII, kIII };

/// Cocycle value as w8^k, returns k. Indices are 1-based as in the usual formulas.
/// Type I uses (i), type II (i, j), type III (i, j, l); arguments are 3-bit vectors.
int evaluate_cocycle(CocycleType t, const std::array<int, 3> &idx, const std::array<int, 3> &A,
                     const std::array<int, 3> &B, const std::array<int, 3> &C);

/// Checks the 3-cocycle condition over all 2^12 argument tuples.
bool cocycle_identity_holds(CocycleType t, const std::array<int, 3> &idx);

}  // namespace tcc

#endif
