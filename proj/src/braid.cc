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

#include "tcc/braid.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tcc/oracle.h"

namespace tcc {

namespace {

constexpr ColorSet kAll3D = kA | kB | kC | kD;

void require_3d(const ColorCode &code) {
    if (code.colex->dim != 3) {
        throw std::invalid_argument("loop processes need a 3D color code");
    }
}

ColorSet require_pair(ColorSet pair) {
    if (std::popcount(static_cast<unsigned>(pair)) != 2) {
        throw std::invalid_argument("loop label needs a color pair, got " + color_name(pair));
    }
    return pair;
}

BinVec plaquette_union(const ColorCode &code, ColorSet colors, const std::vector<uint32_t> &ids) {
    const Colex &cx = *code.colex;
    BinVec s(code.n);
    for (uint32_t id : ids) {
        if (id >= cx.plaquettes.size() || cx.plaquettes[id].colors != colors) {
            throw std::invalid_argument("plaquette " + std::to_string(id) + " is not of color " + color_name(colors));
        }
        for (uint32_t v : cx.plaquettes[id].verts) {
            s.set(v);
        }
    }
    return s;
}

std::vector<std::string> split_label(const std::string &label) {
    std::istringstream in(label);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

BinVec support_of(const MixedOperator &U) {
    BinVec s = U.x;
    for (const auto &[m, c] : U.diag.terms()) {
        for (uint32_t j : m) {
            s.set(j);
        }
    }
    return s;
}

}  // namespace

bool LoopProcess::is_loop() const {
    return std::any_of(kinds.begin(), kinds.end(), [](ExcitationKind k) { return k != ExcitationKind::kCharge; });
}

LoopProcess charge_string(const ColorCode &code, ColorSet color, const std::vector<uint32_t> &edges) {
    require_3d(code);
    const ColorSet edge_colors = static_cast<ColorSet>(kAll3D & ~color);
    Support s = cell_support(*code.colex, edge_colors, {PathKind::kEdges, edges});
    return {"e_" + color_name(color), {ExcitationKind::kCharge}, MixedOperator::from_pauli(Pauli::Z(code.n, s.qubits)),
            s.qubits};
}

LoopProcess flux_on_support(const ColorCode &code, ColorSet pair, const BinVec &support) {
    require_pair(pair);
    return {"m_" + color_name(pair), {ExcitationKind::kFlux}, MixedOperator::from_pauli(Pauli::X(code.n, support)),
            support};
}

LoopProcess flux_membrane(const ColorCode &code, ColorSet pair, const std::vector<uint32_t> &plaquettes) {
    require_3d(code);
    const ColorSet pc = static_cast<ColorSet>(kAll3D & ~require_pair(pair));
    Support s = cell_support(*code.colex, pc, {PathKind::kPlaquettes, plaquettes});
    return flux_on_support(code, pair, s.qubits);
}

LoopProcess spt_on_support(const ColorCode &code, ColorSet pair, const BinVec &support) {
    require_pair(pair);
    return {"s_" + color_name(pair), {ExcitationKind::kSpt},
            MixedOperator::from_diagonal(transversal_phase_poly(code, 2, support)), support};
}

LoopProcess spt_membrane(const ColorCode &code, ColorSet pair, const std::vector<uint32_t> &plaquettes) {
    require_3d(code);
    const ColorSet pc = static_cast<ColorSet>(kAll3D & ~require_pair(pair));
    return spt_on_support(code, pair, plaquette_union(code, pc, plaquettes));
}

LoopProcess compose(const LoopProcess &a, const LoopProcess &b) {
    LoopProcess out{a.label + " " + b.label, a.kinds, a.U * b.U, a.support};
    out.kinds.insert(out.kinds.end(), b.kinds.begin(), b.kinds.end());
    for (size_t j : b.support.ones()) {
        out.support.set(j);
    }
    return out;
}

CornerFixture corner_fixture(const Colex &colex, uint32_t vertex) {
    if (colex.dim != 3) {
        throw std::invalid_argument("corner fixtures need a 3D colex");
    }
    if (vertex >= colex.num_vertices) {
        throw std::invalid_argument("vertex out of range");
    }
    CornerFixture fx;
    fx.vertex = vertex;
    auto has = [&](const Cell &c) { return std::binary_search(c.verts.begin(), c.verts.end(), vertex); };
    for (uint32_t i = 0; i < colex.edges.size(); i++) {
        if (has(colex.edges[i])) {
            fx.edge[colex.edges[i].colors] = i;
        }
    }
    for (uint32_t i = 0; i < colex.plaquettes.size(); i++) {
        if (has(colex.plaquettes[i])) {
            fx.plaquette[colex.plaquettes[i].colors] = i;
        }
    }
    for (uint32_t i = 0; i < colex.volumes.size(); i++) {
        if (has(colex.volumes[i])) {
            fx.volume[colex.volumes[i].colors] = i;
        }
    }
    if (fx.edge.size() != 4 || fx.plaquette.size() != 6 || fx.volume.size() != 4) {
        throw std::logic_error("vertex " + std::to_string(vertex) + " does not have a full corner");
    }
    return fx;
}

LoopProcess corner_process(const ColorCode &code, const CornerFixture &fx, const std::string &label,
                           Placement placement) {
    require_3d(code);
    std::istringstream in(label);
    std::string tok;
    std::optional<LoopProcess> acc;
    while (in >> tok) {
        if (tok.size() < 3 || tok[1] != '_') {
            throw std::invalid_argument("bad excitation label '" + tok + "'");
        }
        const ColorSet colors = parse_colors(tok.substr(2));
        LoopProcess p;
        if (tok[0] == 'e') {
            if (std::popcount(static_cast<unsigned>(colors)) != 1) {
                throw std::invalid_argument("charge label needs one color: " + tok);
            }
            p = charge_string(code, colors, {fx.edge.at(static_cast<ColorSet>(kAll3D & ~colors))});
        } else if (tok[0] == 'm' || tok[0] == 's') {
            const ColorSet pc = static_cast<ColorSet>(kAll3D & ~require_pair(colors));
            BinVec supp;
            if (placement == Placement::kEnclosing) {
                const ColorSet top = static_cast<ColorSet>(1u << (std::bit_width(static_cast<unsigned>(pc)) - 1));
                supp = code.colex->cell_vector(code.colex->volumes[fx.volume.at(top)]);
            } else {
                supp = code.colex->cell_vector(code.colex->plaquettes[fx.plaquette.at(pc)]);
            }
            p = tok[0] == 'm' ? flux_on_support(code, colors, supp) : spt_on_support(code, colors, supp);
        } else {
            throw std::invalid_argument("bad excitation label '" + tok + "'");
        }
        acc = acc ? compose(*acc, p) : p;
    }
    if (!acc) {
        throw std::invalid_argument("empty excitation label");
    }
    return *acc;
}

int BraidResult::sign() const {
    if (phase8 % 8 == 0) {
        return 1;
    }
    return phase8 % 8 == 4 ? -1 : 0;
}

std::complex<double> BraidResult::value() const { return std::polar(1.0, M_PI * (phase8 % 8) / 4.0); }

std::string PiFraction::str() const {
    if (num == 0) {
        return "0";
    }
    std::string s = (num == 1 ? "" : std::to_string(num)) + "pi";
    if (den_log2 > 0) {
        s += "/" + std::to_string(1 << den_log2);
    }
    return s;
}

PiFraction phase8_as_pi(uint32_t phase8) {
    PiFraction f{static_cast<int>(phase8 % 8), 2};
    if (f.num == 0) {
        return {0, 0};
    }
    while (f.den_log2 > 0 && f.num % 2 == 0) {
        f.num /= 2;
        f.den_log2--;
    }
    return f;
}

namespace {

BraidResult finish(const Codespace &cs, std::vector<std::string> participants, std::vector<MixedOperator> levels) {
    BraidResult r;
    r.participants = std::move(participants);
    for (const MixedOperator &M : levels) {
        r.trace.push_back(M.str());
    }
    std::optional<uint32_t> phase = scalar_on_codespace(cs, levels.back());
    if (!phase) {
        std::string who;
        for (const auto &p : r.participants) {
            who += (who.empty() ? "" : ", ") + p;
        }
        throw ConfigurationError("commutator for (" + who + ") is not a scalar on the codespace: " + r.trace.back());
    }
    r.phase8 = *phase % 8;
    r.trace.push_back("scalar w8^" + std::to_string(r.phase8));
    return r;
}

}  // namespace

BraidResult braid_two(const Codespace &cs, const LoopProcess &a, const LoopProcess &b) {
    MixedOperator K = group_commutator(a.U.adjoint(), b.U.adjoint());
    return finish(cs, {a.label, b.label}, {K});
}

BraidResult braid_three_loop(const Codespace &cs, const LoopProcess &a, const LoopProcess &b, const LoopProcess &c) {
    MixedOperator inner = group_commutator(a.U.adjoint(), b.U.adjoint());
    MixedOperator outer = group_commutator(inner.adjoint(), c.U.adjoint());
    return finish(cs, {a.label, b.label, c.label}, {inner, outer});
}

namespace {

// <gs| F_0 F_1 ... F_last |gs>, applying F_last first.
std::complex<double> dense_word(const ColorCode &code, const std::vector<MixedOperator> &word) {
    DenseState gs = dense_ground_state(code);
    DenseState psi = gs;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        dense_apply(psi, *it);
    }
    return dense_inner(gs, psi);
}

}  // namespace

std::complex<double> braid_two_dense(const ColorCode &code, const LoopProcess &a, const LoopProcess &b) {
    return dense_word(code, {a.U.adjoint(), b.U.adjoint(), a.U, b.U});
}

std::complex<double> braid_three_loop_dense(const ColorCode &code, const LoopProcess &a, const LoopProcess &b,
                                            const LoopProcess &c) {
    // (a^ b^ a b)^dag c^ (a^ b^ a b) c, with ^ the adjoint.
    const MixedOperator ad = a.U.adjoint(), bd = b.U.adjoint(), cd = c.U.adjoint();
    return dense_word(code, {bd, ad, b.U, a.U, cd, ad, bd, a.U, b.U, c.U});
}

int symplectic_sign(const LoopProcess &a, const LoopProcess &b) {
    auto pa = a.U.to_pauli(), pb = b.U.to_pauli();
    if (!pa || !pb) {
        throw std::invalid_argument("symplectic_sign needs Pauli processes");
    }
    return symplectic_commute(*pa, *pb) ? 1 : -1;
}

int expected_three_loop_sign(const std::string &a, const std::string &b, const std::string &c) {
    auto parse = [](const std::string &s) {
        if (s.size() < 3 || s[1] != '_') {
            throw std::invalid_argument("bad loop label '" + s + "'");
        }
        return std::make_pair(s[0], parse_colors(s.substr(2)));
    };
    auto [ta, ka] = parse(a);
    auto [tb, kb] = parse(b);
    auto [tc, kc] = parse(c);
    const bool distinct = ka != kb && kb != kc && ka != kc;
    const bool pattern = tc == 'm' && ((ta == 'm' && tb == 's') || (ta == 's' && tb == 'm'));
    return distinct && pattern ? -1 : 1;
}

std::vector<ThreeLoopRow> three_loop_table(const ColorCode &code, const CornerFixture &fx) {
    const std::vector<std::string> labels = {"m_AB", "m_BC", "m_CA", "s_AB", "s_BC", "s_CA"};
    std::vector<LoopProcess> procs;
    for (const auto &l : labels) {
        procs.push_back(corner_process(code, fx, l));
    }
    const Codespace cs(code);
    const int64_t total = static_cast<int64_t>(labels.size() * labels.size() * labels.size());
    std::vector<ThreeLoopRow> rows(total);
    std::vector<std::string> errors(total);
#pragma omp parallel for schedule(dynamic)
    for (int64_t t = 0; t < total; t++) {
        const size_t i = t / 36, j = (t / 6) % 6, k = t % 6;
        rows[t].a = labels[i];
        rows[t].b = labels[j];
        rows[t].c = labels[k];
        try {
            rows[t].result = braid_three_loop(cs, procs[i], procs[j], procs[k]);
        } catch (const std::exception &e) {
            errors[t] = e.what();
        }
    }
    for (const auto &e : errors) {
        if (!e.empty()) {
            throw ConfigurationError(e);
        }
    }
    return rows;
}

LoopProcess deform(const ColorCode &code, const LoopProcess &p, const std::vector<MixedOperator> &others,
                   std::mt19937_64 &rng, int steps) {
    auto P = p.U.to_pauli();
    if (!P || steps <= 0) {
        return p;
    }
    const MixedOperator id = MixedOperator::identity(code.n);
    std::vector<MixedOperator> pool;
    auto consider = [&](const MixedOperator &S) {
        for (const MixedOperator &o : others) {
            if (!(group_commutator(S, o) == id)) {
                return;
            }
        }
        pool.push_back(S);
    };
    if (!P->x.is_zero()) {
        for (const BinVec &r : code.hx.rows()) {
            consider(MixedOperator::from_pauli(Pauli::X(code.n, r)));
        }
    }
    if (!P->z.is_zero()) {
        for (const BinVec &r : code.hz.rows()) {
            consider(MixedOperator::from_pauli(Pauli::Z(code.n, r)));
        }
    }
    if (pool.empty()) {
        return p;
    }
    LoopProcess out = p;
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    for (int s = 0; s < steps; s++) {
        out.U = out.U * pool[pick(rng)];
    }
    out.support = support_of(out.U);
    return out;
}

WallAction3D r3_wall_action() {
    return {{"e_A", "e_A"},           {"e_B", "e_B"},           {"e_C", "e_C"},
            {"m_BC", "m_BC s_BC"}, {"m_CA", "m_CA s_CA"}, {"m_AB", "m_AB s_AB"}};
}

WallBraidReport wall_braiding_triviality(const Codespace &cs, const ColorCode &code, const CornerFixture &fx,
                                         const WallAction3D &action) {
    WallBraidReport rep;
    auto entry = [&](size_t i) { return "(" + action[i].first + "|" + action[i].second + ")"; };
    auto record = [&](std::vector<WallBraidItem> &list, WallBraidItem item) {
        item.total = item.left * item.right;
        if (item.total != 1 && rep.all_trivial) {
            rep.all_trivial = false;
            rep.offending = item;
        }
        list.push_back(std::move(item));
    };
    auto pair_sign = [&](const std::string &l1, const std::string &l2) {
        LoopProcess p1 = corner_process(code, fx, l1);
        LoopProcess p2 = corner_process(code, fx, l2);
        if (p1.is_loop() && p2.is_loop()) {
            p1 = corner_process(code, fx, l1, Placement::kEnclosing);
        }
        return braid_two(cs, p1, p2).sign();
    };
    auto three = [&](const std::string &x, const std::string &y, const std::string &z) {
        return braid_three_loop(cs, corner_process(code, fx, x), corner_process(code, fx, y),
                                corner_process(code, fx, z))
            .sign();
    };
    // Braids every choice of elementary parts and lists the -1 factors.
    auto expand = [&](WallBraidItem &item, const char *side_name, const std::vector<std::string> &labels) {
        std::vector<std::vector<std::string>> parts;
        for (const auto &l : labels) {
            parts.push_back(split_label(l));
        }
        int product = 1;
        std::vector<size_t> idx(parts.size(), 0);
        while (true) {
            std::vector<std::string> pick;
            for (size_t i = 0; i < parts.size(); i++) {
                pick.push_back(parts[i][idx[i]]);
            }
            int s = pick.size() == 2 ? pair_sign(pick[0], pick[1]) : three(pick[0], pick[1], pick[2]);
            if (s != 1) {
                std::string t = std::string(side_name) + ": (";
                for (size_t i = 0; i < pick.size(); i++) {
                    t += (i ? ", " : "") + pick[i];
                }
                item.minus_contributions.push_back(t + ")");
            }
            product *= s;
            size_t i = 0;
            while (i < idx.size() && ++idx[i] == parts[i].size()) {
                idx[i++] = 0;
            }
            if (i == idx.size()) {
                break;
            }
        }
        return product;
    };
    for (size_t i = 0; i < action.size(); i++) {
        for (size_t j = 0; j < action.size(); j++) {
            if (i == j) {
                continue;
            }
            WallBraidItem item;
            item.participants = {entry(i), entry(j)};
            item.left = pair_sign(action[i].first, action[j].first);
            item.right = pair_sign(action[i].second, action[j].second);
            int l = expand(item, "left", {action[i].first, action[j].first});
            int r = expand(item, "right", {action[i].second, action[j].second});
            item.factorizes = l == item.left && r == item.right;
            record(rep.pairs, item);
        }
    }
    std::vector<size_t> loops;
    for (size_t i = 0; i < action.size(); i++) {
        if (corner_process(code, fx, action[i].first).is_loop()) {
            loops.push_back(i);
        }
    }
    for (size_t i : loops) {
        for (size_t j : loops) {
            for (size_t k : loops) {
                WallBraidItem item;
                item.participants = {entry(i), entry(j), entry(k)};
                item.left = three(action[i].first, action[j].first, action[k].first);
                item.right = three(action[i].second, action[j].second, action[k].second);
                int l = expand(item, "left", {action[i].first, action[j].first, action[k].first});
                int r = expand(item, "right", {action[i].second, action[j].second, action[k].second});
                item.factorizes = l == item.left && r == item.right;
                record(rep.triples, item);
            }
        }
    }
    return rep;
}

CommutatorIdentity commutator_identity(const ColorCode &code, const BinVec &region, const BinVec &membrane) {
    const MixedOperator r3 = MixedOperator::from_diagonal(transversal_phase_poly(code, 3, region));
    const MixedOperator x = MixedOperator::from_pauli(Pauli::X(code.n, membrane));
    BinVec overlap = membrane;
    if (region.size() != 0) {
        overlap = overlap & region;
    }
    CommutatorIdentity out{group_commutator(r3, x), transversal_phase_poly(code, 2, overlap).at_level(3), false};
    out.holds = out.commutator.x.is_zero() &&
                out.commutator.diag.without_constant() == out.expected.without_constant();
    return out;
}

}  // namespace tcc
