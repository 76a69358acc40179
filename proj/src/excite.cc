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

#include "tcc/excite.h"

#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>

namespace tcc {

Cyclo ExcitationState::amplitude(const BinVec &p) const {
    auto it = amplitudes.find(p);
    return it == amplitudes.end() ? Cyclo(0) : it->second;
}

Cyclo ExcitationState::norm2() const {
    Cyclo s(0);
    for (const auto &[p, a] : amplitudes) {
        s += a.norm2();
    }
    return s;
}

ExcitationState ExcitationState::times_omega(int k) const {
    ExcitationState out = *this;
    for (auto &[p, a] : out.amplitudes) {
        a = a * Cyclo::omega(k);
    }
    return out;
}

namespace {

using SparseState = std::map<BinVec, Cyclo>;

void drop_zeros(SparseState &s) {
    for (auto it = s.begin(); it != s.end();) {
        it = it->second.is_zero() ? s.erase(it) : std::next(it);
    }
}

std::vector<int> mode_positions(const ColorCode &code, const std::vector<uint32_t> &modes) {
    std::vector<int> pos(code.hx.num_rows(), -1);
    for (size_t i = 0; i < modes.size(); i++) {
        if (modes[i] >= pos.size()) {
            throw std::invalid_argument("mode " + std::to_string(modes[i]) + " is not an X check");
        }
        pos[modes[i]] = static_cast<int>(i);
    }
    return pos;
}

[[noreturn]] void off_boundary(const ColorCode &code, size_t row) {
    throw OffBoundaryError("amplitude on X check " + std::to_string(row) + " (color " +
                           color_name(code.x_colors[row]) + ") outside the allowed modes");
}

uint32_t to_mask(const BinVec &p) {
    uint32_t m = 0;
    for (size_t i : p.ones()) {
        m |= 1u << i;
    }
    return m;
}

uint32_t to_mask(const std::vector<uint32_t> &idx) {
    uint32_t m = 0;
    for (uint32_t i : idx) {
        m |= 1u << i;
    }
    return m;
}

BinVec from_mask(uint32_t m, size_t n) {
    BinVec p(n);
    for (size_t i = 0; i < n; i++) {
        if ((m >> i) & 1) {
            p.set(i);
        }
    }
    return p;
}

std::vector<Cyclo> to_dense(const ExcitationState &s) {
    const size_t m = s.modes.size();
    if (m > 20) {
        throw ResourceError("dense excitation vector over " + std::to_string(m) + " modes");
    }
    std::vector<Cyclo> v(size_t{1} << m, Cyclo(0));
    for (const auto &[p, a] : s.amplitudes) {
        v[to_mask(p)] = a;
    }
    return v;
}

struct CompiledOp {
    uint32_t x = 0;
    std::vector<std::pair<uint32_t, uint32_t>> terms;
    uint32_t phase(uint32_t v) const {
        uint32_t th = 0;
        for (const auto &[mask, c] : terms) {
            if ((v & mask) == mask) {
                th += c;
            }
        }
        return th & 7;
    }
};

CompiledOp compile(const MixedOperator &M) {
    if (M.size() > 20) {
        throw ResourceError("operator on more than 20 modes");
    }
    CompiledOp op;
    op.x = to_mask(M.x);
    for (const auto &[mono, c] : M.diag.terms()) {
        op.terms.emplace_back(to_mask(mono), c);
    }
    return op;
}

Cyclo expectation_dense(const std::vector<Cyclo> &psi, const MixedOperator &M) {
    CompiledOp op = compile(M);
    Cyclo acc(0);
    for (uint32_t v = 0; v < psi.size(); v++) {
        if (psi[v].is_zero() || psi[v ^ op.x].is_zero()) {
            continue;
        }
        acc += psi[v ^ op.x].conj() * Cyclo::omega(static_cast<int>(op.phase(v))) * psi[v];
    }
    return acc;
}

std::complex<double> expectation_dense(const Amplitudes &psi, const MixedOperator &M) {
    CompiledOp op = compile(M);
    std::complex<double> acc = 0;
    for (uint32_t v = 0; v < psi.size(); v++) {
        acc += std::conj(psi[v ^ op.x]) * std::polar(1.0, M_PI * op.phase(v) / 4.0) * psi[v];
    }
    return acc;
}

MixedOperator pauli_on_modes(size_t m, const std::vector<uint32_t> &xs, const std::vector<uint32_t> &zs) {
    Pauli P(m);
    for (uint32_t i : xs) {
        P.x.flip(i);
    }
    for (uint32_t i : zs) {
        P.z.flip(i);
    }
    return MixedOperator::from_pauli(P);
}

// Each 2D dual edge or 3D dual triangle multiplies by (1 + w^s)/2 + (1 - w^s)/2 X...X, which is
// the single-qubit R3^{s} factor; for R2 (s = +-2) it is (1 + i^{s/2} X X)/sqrt(2) up to a phase.
void apply_x_factor(SparseState &state, uint32_t flip_mask, size_t m, const Cyclo &keep, const Cyclo &flip) {
    SparseState next;
    BinVec f = from_mask(flip_mask, m);
    for (const auto &[p, a] : state) {
        next[p] += a * keep;
        next[p ^ f] += a * flip;
    }
    drop_zeros(next);
    state.swap(next);
}

}  // namespace

ExcitationState excitation_spectrum(const ColorCode &code, const PhasePolynomial &D,
                                    const std::optional<std::vector<uint32_t>> &mode_filter) {
    const PhasePolynomial theta = D.at_level(3);
    if (theta.num_vars() != code.n) {
        throw std::invalid_argument("excitation_spectrum: diagonal acts on the wrong number of qubits");
    }
    const size_t m = code.hx.num_rows();
    std::vector<BinVec> col;
    for (size_t j = 0; j < code.n; j++) {
        col.push_back(code.hx.column(j));
    }
    // omega^{c v_S} = 1 + (omega^c - 1) 2^{-|S|} sum_{R subset S} (-1)^{|R|} Z_R, and Z_R flips the
    // excitation pattern by the syndrome of Z_R.
    SparseState state{{BinVec(m), Cyclo(1)}};
    for (const auto &[S, c] : theta.terms()) {
        if (S.empty()) {
            continue;
        }
        const Cyclo scale = (Cyclo::omega(static_cast<int>(c)) - Cyclo(1)) *
                            Cyclo::inv_sqrt2_pow(static_cast<int>(2 * S.size()));
        SparseState next = state;
        for (uint64_t mask = 0; mask < (uint64_t{1} << S.size()); mask++) {
            BinVec flip(m);
            for (size_t b = 0; b < S.size(); b++) {
                if ((mask >> b) & 1) {
                    flip ^= col[S[b]];
                }
            }
            const Cyclo coef = (std::popcount(mask) & 1) ? -scale : scale;
            for (const auto &[p, a] : state) {
                next[p ^ flip] += a * coef;
            }
        }
        drop_zeros(next);
        state.swap(next);
    }
    const Cyclo global = Cyclo::omega(static_cast<int>(theta.constant()));

    ExcitationState out;
    if (!mode_filter) {
        for (uint32_t i = 0; i < m; i++) {
            out.modes.push_back(i);
        }
    } else {
        out.modes = *mode_filter;
    }
    std::vector<int> pos = mode_positions(code, out.modes);
    for (uint32_t i : out.modes) {
        out.mode_colors.push_back(code.x_colors[i]);
    }
    for (const auto &[p, a] : state) {
        BinVec q(out.modes.size());
        for (size_t i : p.ones()) {
            if (pos[i] < 0) {
                off_boundary(code, i);
            }
            q.set(pos[i]);
        }
        out.amplitudes[q] = a * global;
    }
    return out;
}

DenseExcitationState excitation_spectrum_dense(const ColorCode &code, const PhasePolynomial &D,
                                               const std::vector<uint32_t> &modes) {
    DenseState psi = dense_ground_state(code);
    dense_apply(psi, MixedOperator::from_diagonal(D));
    GroundState gs = x_generators(code);
    const size_t r = gs.r;
    std::vector<uint32_t> gmask;
    for (const BinVec &g : gs.G.rows()) {
        gmask.push_back(to_mask(g));
    }
    // f(u) = <u G | D | gs>; lambda_p = 2^{-r/2} sum_u (-1)^{p.u} f(u).
    Amplitudes f(size_t{1} << r);
    std::vector<uint32_t> element(f.size(), 0);
    for (uint32_t u = 1; u < f.size(); u++) {
        element[u] = element[u & (u - 1)] ^ gmask[std::countr_zero(u)];
    }
    for (uint32_t u = 0; u < f.size(); u++) {
        f[u] = psi.amp[element[u]];
    }
    walsh_hadamard(f);
    const double scale = std::pow(2.0, -0.5 * static_cast<double>(r));
    // Full syndrome of a generator pattern: row i = combo_i . G, so bit i = p . combo_i.
    F2Basis basis(code.n, std::max<size_t>(r, 1));
    for (size_t i = 0; i < r; i++) {
        basis.add(gs.G.row(i), i);
    }
    std::vector<uint32_t> combo;
    for (const BinVec &row : code.hx.rows()) {
        BinVec c(std::max<size_t>(r, 1));
        basis.reduce(row, &c);
        combo.push_back(to_mask(c));
    }
    std::vector<int> pos = mode_positions(code, modes);
    DenseExcitationState out;
    out.modes = modes;
    for (uint32_t p = 0; p < f.size(); p++) {
        std::complex<double> lam = f[p] * scale;
        if (std::abs(lam) < 1e-12) {
            continue;
        }
        BinVec q(modes.size());
        for (size_t i = 0; i < combo.size(); i++) {
            if (std::popcount(p & combo[i]) & 1) {
                if (pos[i] < 0) {
                    off_boundary(code, i);
                }
                q.set(pos[i]);
            }
        }
        out.amplitudes[q] = lam;
    }
    return out;
}

double max_deviation(const ExcitationState &exact, const DenseExcitationState &dense) {
    double worst = 0;
    for (const auto &[p, a] : exact.amplitudes) {
        auto it = dense.amplitudes.find(p);
        std::complex<double> d = it == dense.amplitudes.end() ? 0.0 : it->second;
        worst = std::max(worst, std::abs(a.to_complex() - d));
    }
    for (const auto &[p, d] : dense.amplitudes) {
        if (!exact.amplitudes.count(p)) {
            worst = std::max(worst, std::abs(d));
        }
    }
    return worst;
}

bool satisfies_color_parity(const ExcitationState &s, int dim) {
    for (const auto &[p, a] : s.amplitudes) {
        std::array<int, 4> parity{0, 0, 0, 0};
        for (size_t i : p.ones()) {
            parity[color_index(s.mode_colors[i])] ^= 1;
        }
        for (int c = 1; c <= dim; c++) {
            if (parity[c] != parity[0]) {
                return false;
            }
        }
    }
    return true;
}

ExcitationState boundary_wavefunction(const ColorCode &code, const Region &region, const BoundaryLattice &boundary,
                                      int level) {
    const int want = code.colex->dim == 2 ? 2 : 3;
    if (level != want) {
        throw std::invalid_argument("boundary states use level " + std::to_string(want) + " in dimension " +
                                    std::to_string(code.colex->dim));
    }
    std::vector<uint32_t> modes;
    std::set<uint32_t> seen;
    for (uint32_t r : boundary.mode_rows) {
        if (seen.insert(r).second) {
            modes.push_back(r);
        }
    }
    return excitation_spectrum(code, transversal_phase_poly(code, level, region.V), modes);
}

ExcitationState closed_form_boundary_state(const ColorCode &code, const BoundaryLattice &boundary, int sigma) {
    if (boundary.degenerate) {
        throw std::invalid_argument("closed form needs a non-degenerate boundary");
    }
    const size_t m = boundary.mode_rows.size();
    SparseState state{{BinVec(m), Cyclo(1)}};
    const auto &in_T = code.colex->in_T;
    if (boundary.dim == 2) {
        // exp(i s pi/4 X X) = (1 + i s X X)/sqrt(2), with s alternating along the cycle.
        for (size_t e = 0; e < boundary.simplices.size(); e++) {
            int s = sigma * ((e % 2 == 0) ? 1 : -1);
            apply_x_factor(state, to_mask(boundary.simplices[e]), m, Cyclo::inv_sqrt2_pow(1),
                           Cyclo::omega(2 * s) * Cyclo::inv_sqrt2_pow(1));
        }
    } else {
        for (size_t t = 0; t < boundary.simplices.size(); t++) {
            int s = sigma * (in_T[boundary.simplex_qubit[t]] ? 1 : -1);
            Cyclo half = Cyclo::inv_sqrt2_pow(2);
            apply_x_factor(state, to_mask(boundary.simplices[t]), m, (Cyclo(1) + Cyclo::omega(s)) * half,
                           (Cyclo(1) - Cyclo::omega(s)) * half);
        }
    }
    ExcitationState out;
    out.modes = boundary.mode_rows;
    out.mode_colors = boundary.mode_colors;
    out.amplitudes = state;
    return out;
}

std::optional<int> equal_up_to_omega(const ExcitationState &a, const ExcitationState &b) {
    if (a.modes != b.modes) {
        return std::nullopt;
    }
    for (int k = 0; k < 8; k++) {
        if (a.amplitudes == b.times_omega(k).amplitudes) {
            return k;
        }
    }
    return std::nullopt;
}

Cyclo expectation(const ExcitationState &s, const MixedOperator &M) {
    if (M.size() != s.modes.size()) {
        throw std::invalid_argument("expectation: operator acts on " + std::to_string(M.size()) + " modes, state has " +
                                    std::to_string(s.modes.size()));
    }
    return expectation_dense(to_dense(s), M);
}

ExcitationState hadamard_all(const ExcitationState &s) {
    std::vector<Cyclo> v = to_dense(s);
    const size_t dim = v.size();
    for (size_t h = 1; h < dim; h <<= 1) {
        for (size_t i = 0; i < dim; i += 2 * h) {
            for (size_t j = i; j < i + h; j++) {
                Cyclo a = v[j], b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
    const Cyclo scale = Cyclo::inv_sqrt2_pow(static_cast<int>(s.modes.size()));
    ExcitationState out;
    out.modes = s.modes;
    out.mode_colors = s.mode_colors;
    for (uint32_t i = 0; i < dim; i++) {
        if (!v[i].is_zero()) {
            out.amplitudes[from_mask(i, s.modes.size())] = v[i] * scale;
        }
    }
    return out;
}

ClusterReport verify_cluster_state_2d(const ExcitationState &state, const BoundaryLattice &boundary, Frame frame) {
    if (boundary.dim != 2 || !boundary.cyclic || boundary.degenerate) {
        throw std::invalid_argument("cluster check needs a simple alternating boundary cycle");
    }
    if (state.modes != boundary.mode_rows) {
        throw std::invalid_argument("state modes do not follow the boundary cycle");
    }
    const size_t m = state.modes.size();
    if (m < 4 || m % 2) {
        throw std::invalid_argument("cluster check needs an even cycle of at least 4 modes");
    }
    ClusterReport rep;
    rep.modes = m;
    const bool had = frame == Frame::kHadamard;
    ExcitationState psi = had ? hadamard_all(state) : state;
    std::vector<Cyclo> dense = to_dense(psi);
    for (uint32_t j = 0; j < m; j++) {
        uint32_t prev = static_cast<uint32_t>((j + m - 1) % m), next = static_cast<uint32_t>((j + 1) % m);
        MixedOperator term = had ? pauli_on_modes(m, {j}, {prev, next}) : pauli_on_modes(m, {prev, next}, {j});
        rep.stabilizers.push_back(expectation_dense(dense, term));
    }
    std::vector<uint32_t> even, odd;
    for (uint32_t j = 0; j < m; j++) {
        (j % 2 ? odd : even).push_back(j);
    }
    rep.symmetry_a = expectation_dense(dense, had ? pauli_on_modes(m, even, {}) : pauli_on_modes(m, {}, even));
    rep.symmetry_b = expectation_dense(dense, had ? pauli_on_modes(m, odd, {}) : pauli_on_modes(m, {}, odd));
    rep.all_plus = rep.symmetry_a == Cyclo(1) && rep.symmetry_b == Cyclo(1);
    for (const Cyclo &c : rep.stabilizers) {
        rep.all_plus = rep.all_plus && c == Cyclo(1);
    }
    rep.note = std::string(had ? "hadamard" : "excitation") + " frame; sublattice a = color " +
               color_name(boundary.mode_colors[0]);
    return rep;
}

MixedOperator spt_stabilizer(const BoundaryLattice &boundary, uint32_t j) {
    const size_t m = boundary.mode_rows.size();
    PhasePolynomial d(m, 3);
    for (const auto &t : boundary.simplices) {
        if (std::find(t.begin(), t.end(), j) == t.end()) {
            continue;
        }
        std::vector<uint32_t> others;
        for (uint32_t q : t) {
            if (q != j) {
                others.push_back(q);
            }
        }
        d.add_term(others, 4);
    }
    return MixedOperator(from_mask(1u << j, m), d);
}

MixedOperator spt_symmetry(const BoundaryLattice &boundary, ColorSet color) {
    const size_t m = boundary.mode_rows.size();
    BinVec x(m);
    for (size_t i = 0; i < m; i++) {
        if (boundary.mode_colors[i] == color) {
            x.set(i);
        }
    }
    return MixedOperator(x, PhasePolynomial(m, 3));
}

namespace {

std::array<ColorSet, 3> boundary_colors(const BoundaryLattice &boundary) {
    std::set<ColorSet> cs(boundary.mode_colors.begin(), boundary.mode_colors.end());
    if (cs.size() != 3) {
        throw std::invalid_argument("dual boundary lattice is not 3-colored");
    }
    std::array<ColorSet, 3> out{};
    std::copy(cs.begin(), cs.end(), out.begin());
    for (const auto &t : boundary.simplices) {
        std::set<ColorSet> tc;
        for (uint32_t q : t) {
            tc.insert(boundary.mode_colors[q]);
        }
        if (tc.size() != 3) {
            throw std::invalid_argument("dual triangle with repeated colors");
        }
    }
    return out;
}

}  // namespace

SptReport verify_spt_state_3d(const ExcitationState &state, const BoundaryLattice &boundary) {
    if (boundary.dim != 3 || boundary.degenerate) {
        throw std::invalid_argument("SPT check needs a non-degenerate 3D boundary");
    }
    if (state.modes != boundary.mode_rows) {
        throw std::invalid_argument("state modes do not match the dual vertices");
    }
    auto colors = boundary_colors(boundary);
    const size_t m = state.modes.size();
    std::vector<Cyclo> dense = to_dense(hadamard_all(state));
    SptReport rep;
    rep.all_plus = true;
    for (uint32_t j = 0; j < m; j++) {
        rep.q_values.push_back(expectation_dense(dense, spt_stabilizer(boundary, j)));
        rep.all_plus = rep.all_plus && rep.q_values.back() == Cyclo(1);
    }
    for (int c = 0; c < 3; c++) {
        MixedOperator S = spt_symmetry(boundary, colors[c]);
        rep.symmetry_values[c] = expectation_dense(dense, S);
        rep.all_plus = rep.all_plus && rep.symmetry_values[c] == Cyclo(1);
        MixedOperator prod = MixedOperator::identity(m);
        for (uint32_t j = 0; j < m; j++) {
            if (boundary.mode_colors[j] == colors[c]) {
                prod = prod * spt_stabilizer(boundary, j);
            }
        }
        rep.product_identity[c] = prod == S;
    }
    return rep;
}

std::vector<std::complex<double>> spt_expectations_dense(const DenseExcitationState &state,
                                                         const BoundaryLattice &boundary) {
    auto colors = boundary_colors(boundary);
    const size_t m = state.modes.size();
    Amplitudes v(size_t{1} << m, 0.0);
    for (const auto &[p, a] : state.amplitudes) {
        v[to_mask(p)] = a;
    }
    walsh_hadamard(v);
    const double scale = std::pow(2.0, -0.5 * static_cast<double>(m));
    for (auto &z : v) {
        z *= scale;
    }
    std::vector<std::complex<double>> out;
    for (uint32_t j = 0; j < m; j++) {
        out.push_back(expectation_dense(v, spt_stabilizer(boundary, j)));
    }
    for (int c = 0; c < 3; c++) {
        out.push_back(expectation_dense(v, spt_symmetry(boundary, colors[c])));
    }
    return out;
}

FluxCrossing flux_crossing_witness(const ColorCode &code, const Region &region, const Pauli &P) {
    if (!P.z.is_zero()) {
        throw std::invalid_argument("flux crossing needs an X-type string or membrane");
    }
    const int level = code.colex->dim == 2 ? 2 : 3;
    FluxCrossing out;
    out.delta = pauli_commutator(transversal_phase_poly(code, level, region.V), P);
    out.clifford_level = out.delta.diag.clifford_level();
    out.pauli = out.delta.to_pauli();
    if (out.pauli) {
        out.syndrome = syndrome_of(code, *out.pauli);
    }
    return out;
}

namespace {

using Bits3 = std::array<int, 3>;

void check_indices(CocycleType t, const Bits3 &idx) {
    int need = t == CocycleType::kI ? 1 : t == CocycleType::kII ? 2 : 3;
    std::set<int> seen;
    for (int k = 0; k < need; k++) {
        if (idx[k] < 1 || idx[k] > 3 || !seen.insert(idx[k]).second) {
            throw std::invalid_argument("cocycle index selection out of range");
        }
    }
}

}  // namespace

int evaluate_cocycle(CocycleType t, const Bits3 &idx, const Bits3 &A, const Bits3 &B, const Bits3 &C) {
    check_indices(t, idx);
    const int i = idx[0] - 1;
    if (t == CocycleType::kIII) {
        return 4 * (A[i] & B[idx[1] - 1] & C[idx[2] - 1]);
    }
    const int j = t == CocycleType::kI ? i : idx[1] - 1;
    // exp(i pi/2 a (b + c - [b + c])) = w8^{2 a (b + c - [b + c])}.
    const int s = B[j] + C[j];
    return (2 * A[i] * (s - s % 2)) % 8;
}

bool cocycle_identity_holds(CocycleType t, const Bits3 &idx) {
    check_indices(t, idx);
    auto bits = [](int v) { return Bits3{v & 1, (v >> 1) & 1, (v >> 2) & 1}; };
    for (int a = 0; a < 8; a++) {
        for (int b = 0; b < 8; b++) {
            for (int c = 0; c < 8; c++) {
                for (int d = 0; d < 8; d++) {
                    int lhs = evaluate_cocycle(t, idx, bits(b), bits(c), bits(d)) +
                              evaluate_cocycle(t, idx, bits(a), bits(b ^ c), bits(d)) +
                              evaluate_cocycle(t, idx, bits(a), bits(b), bits(c));
                    int rhs = evaluate_cocycle(t, idx, bits(a ^ b), bits(c), bits(d)) +
                              evaluate_cocycle(t, idx, bits(a), bits(b), bits(c ^ d));
                    if ((lhs - rhs) % 8 != 0) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace tcc
