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

#include "tcc/anyons.h"

#include <algorithm>
#include <bit>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tcc/phasepoly.h"

namespace tcc {

AnyonModel::AnyonModel(std::vector<std::string> names, std::vector<Label> pairing, Label spin)
    : names_(std::move(names)), pairing_(std::move(pairing)), spin_(spin) {
    if (names_.size() != pairing_.size() || names_.size() > 16) {
        throw std::invalid_argument("anyon model: bad generator data");
    }
    for (size_t i = 0; i < rank(); i++) {
        for (size_t j = 0; j < rank(); j++) {
            if (((pairing_[i] >> j) & 1) != ((pairing_[j] >> i) & 1)) {
                throw std::invalid_argument("anyon model: braiding form is not symmetric");
            }
        }
    }
}

int AnyonModel::braid_bit(Label a, Label b) const {
    int s = 0;
    for (Label r = a; r; r &= r - 1) {
        s ^= std::popcount(pairing_[std::countr_zero(r)] & b) & 1;
    }
    return s;
}

int AnyonModel::spin_bit(Label a) const {
    int q = std::popcount(a & spin_) & 1;
    for (Label r = a; r; r &= r - 1) {
        int i = std::countr_zero(r);
        Label later = a & ~((Label{2} << i) - 1);
        q ^= std::popcount(pairing_[i] & later) & 1;
    }
    return q;
}

std::string AnyonModel::label_name(Label a) const {
    if (a == 0) {
        return "1";
    }
    std::string s;
    for (size_t i = 0; i < rank(); i++) {
        if ((a >> i) & 1) {
            s += (s.empty() ? "" : " ") + names_[i];
        }
    }
    return s;
}

Label AnyonModel::parse_label(const std::string &text) const {
    std::string t;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '*' && ch != 'x') {
            t += ch;
        }
    }
    if (t == "1" || t.empty()) {
        return 0;
    }
    std::vector<std::pair<std::string, Label>> known;
    for (size_t i = 0; i < rank(); i++) {
        known.emplace_back(names_[i], Label{1} << i);
    }
    for (const auto &[name, a] : aliases_) {
        known.emplace_back(name, a);
    }
    std::sort(known.begin(), known.end(),
              [](const auto &x, const auto &y) { return x.first.size() > y.first.size(); });
    Label out = 0;
    size_t pos = 0;
    while (pos < t.size()) {
        bool hit = false;
        for (const auto &[name, a] : known) {
            if (t.compare(pos, name.size(), name) == 0) {
                out ^= a;
                pos += name.size();
                hit = true;
                break;
            }
        }
        if (!hit) {
            throw std::invalid_argument("unknown anyon label '" + text + "'");
        }
    }
    return out;
}

AnyonModel color_code_anyon_model(int dimension) {
    if (dimension != 2) {
        throw std::invalid_argument("color_code_anyon_model: only dimension 2 carries full braiding data");
    }
    // Order: e_A, e_B, m_A, m_B. e_A braids nontrivially with m_B only.
    AnyonModel m({"e_A", "e_B", "m_A", "m_B"}, {0b1000, 0b0100, 0b0010, 0b0001});
    m.add_alias("e_C", 0b0011);
    m.add_alias("m_C", 0b1100);
    return m;
}

AnyonModel toric_code_anyon_model() { return AnyonModel({"e", "m"}, {0b10, 0b01}); }

AnyonModel two_toric_code_anyon_model() {
    return AnyonModel({"e1", "m1", "e2", "m2"}, {0b0010, 0b0001, 0b1000, 0b0100});
}

AnyonModel trivial_anyon_model() { return AnyonModel({}, {}); }

Wall Wall::identity(size_t m) {
    Wall w;
    for (size_t i = 0; i < m; i++) {
        w.images.push_back(Label{1} << i);
    }
    return w;
}

Label Wall::apply(Label a) const {
    Label out = 0;
    for (Label r = a; r; r &= r - 1) {
        out ^= images[std::countr_zero(r)];
    }
    return out;
}

Wall Wall::operator*(const Wall &o) const {
    if (rank() != o.rank()) {
        throw std::invalid_argument("wall product: rank mismatch");
    }
    Wall w;
    for (Label b : o.images) {
        w.images.push_back(apply(b));
    }
    return w;
}

namespace {

// Rank of the images by elimination on small words.
size_t label_rank(std::vector<Label> v) {
    size_t r = 0;
    for (size_t i = 0; i < v.size(); i++) {
        if (!v[i]) {
            continue;
        }
        r++;
        Label low = v[i] & (~v[i] + 1);
        for (size_t j = i + 1; j < v.size(); j++) {
            if (v[j] & low) {
                v[j] ^= v[i];
            }
        }
    }
    return r;
}

}  // namespace

bool Wall::invertible() const { return label_rank(images) == rank(); }

Wall Wall::inverse() const {
    if (!invertible()) {
        throw std::domain_error("wall is not invertible");
    }
    Wall inv;
    inv.images.assign(rank(), 0);
    const Label total = Label{1} << rank();
    for (Label a = 0; a < total; a++) {
        Label b = apply(a);
        if (std::popcount(b) == 1) {
            inv.images[std::countr_zero(b)] = a;
        }
    }
    return inv;
}

std::string Wall::matrix_str() const {
    std::string s;
    for (size_t i = 0; i < rank(); i++) {
        for (Label col : images) {
            s += ((col >> i) & 1) ? '1' : '0';
        }
        s += '\n';
    }
    return s;
}

bool is_isomorphism(const AnyonModel &from, const AnyonModel &to, const Wall &map) {
    if (map.rank() != from.rank() || from.rank() != to.rank() || !map.invertible()) {
        return false;
    }
    for (size_t i = 0; i < map.rank(); i++) {
        if (to.spin_bit(map.images[i]) != from.spin_bit(Label{1} << i)) {
            return false;
        }
        for (size_t j = 0; j < i; j++) {
            if (to.braid_bit(map.images[i], map.images[j]) != from.braid_bit(Label{1} << i, Label{1} << j)) {
                return false;
            }
        }
    }
    return true;
}

bool preserves_statistics(const AnyonModel &model, const Wall &w) { return is_isomorphism(model, model, w); }

std::string action_list(const AnyonModel &model, const Wall &w) {
    std::string s;
    for (size_t i = 0; i < w.rank(); i++) {
        s += (i ? ", (" : "(") + model.generator_names()[i] + "|" + model.label_name(w.images[i]) + ")";
    }
    return s;
}

Wall parse_action_list(const AnyonModel &model, const std::string &text) {
    Wall w;
    w.images.assign(model.rank(), 0);
    std::vector<int> seen(model.rank(), 0);
    size_t pos = 0;
    while ((pos = text.find('(', pos)) != std::string::npos) {
        size_t bar = text.find('|', pos);
        size_t close = text.find(')', pos);
        if (bar == std::string::npos || close == std::string::npos || bar > close) {
            throw std::invalid_argument("malformed action list: " + text);
        }
        Label a = model.parse_label(text.substr(pos + 1, bar - pos - 1));
        Label b = model.parse_label(text.substr(bar + 1, close - bar - 1));
        if (std::popcount(a) != 1) {
            throw std::invalid_argument("action list entries must start from a generator: " + text);
        }
        int i = std::countr_zero(a);
        w.images[i] = b;
        seen[i]++;
        pos = close + 1;
    }
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
        throw std::invalid_argument("action list must name every generator once: " + text);
    }
    return w;
}

namespace {

struct Search {
    const AnyonModel &model;
    std::vector<Label> images;
    std::vector<uint8_t> span;  // membership of the span of the chosen images
    std::vector<Wall> *out;

    void run(size_t i) {
        const size_t m = model.rank();
        if (i == m) {
            out->push_back(Wall{images});
            return;
        }
        const Label gi = Label{1} << i;
        for (Label c = 1; c < model.size(); c++) {
            if (span[c] || model.spin_bit(c) != model.spin_bit(gi)) {
                continue;
            }
            bool ok = true;
            for (size_t j = 0; j < i && ok; j++) {
                ok = model.braid_bit(c, images[j]) == model.braid_bit(gi, Label{1} << j);
            }
            if (!ok) {
                continue;
            }
            std::vector<uint8_t> saved = span;
            for (Label s = 0; s < model.size(); s++) {
                if (saved[s]) {
                    span[s ^ c] = 1;
                }
            }
            images.push_back(c);
            run(i + 1);
            images.pop_back();
            span.swap(saved);
        }
    }
};

}  // namespace

std::vector<Wall> enumerate_transparent_walls(const AnyonModel &model) {
    const size_t m = model.rank();
    if (m > 8) {
        throw ResourceError("wall enumeration limited to 8 generators");
    }
    if (m == 0) {
        return {Wall{}};
    }
    const int64_t first_choices = static_cast<int64_t>(model.size());
    std::vector<std::vector<Wall>> parts(first_choices);
#pragma omp parallel for schedule(dynamic)
    for (int64_t c = 1; c < first_choices; c++) {
        if (model.spin_bit(static_cast<Label>(c)) != model.spin_bit(1)) {
            continue;
        }
        Search s{model, {static_cast<Label>(c)}, std::vector<uint8_t>(model.size(), 0), &parts[c]};
        s.span[0] = 1;
        s.span[c] = 1;
        s.run(1);
    }
    std::vector<Wall> all;
    for (auto &p : parts) {
        all.insert(all.end(), p.begin(), p.end());
    }
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<Wall> enumerate_transparent_walls_serial(const AnyonModel &model) {
    std::vector<Wall> out;
    for (const Wall &w : invertible_label_maps(model.rank())) {
        bool ok = true;
        // Checks every pair of labels, not just generators.
        for (Label a = 0; a < model.size() && ok; a++) {
            ok = model.spin_bit(w.apply(a)) == model.spin_bit(a);
            for (Label b = 0; b < a && ok; b++) {
                ok = model.braid_bit(w.apply(a), w.apply(b)) == model.braid_bit(a, b);
            }
        }
        if (ok) {
            out.push_back(w);
        }
    }
    return out;
}

std::vector<Wall> invertible_label_maps(size_t m) {
    if (m > 4) {
        throw ResourceError("brute-force matrix enumeration limited to 4 x 4");
    }
    std::vector<Wall> out;
    const uint64_t total = uint64_t{1} << (m * m);
    for (uint64_t bits = 0; bits < total; bits++) {
        Wall w;
        for (size_t i = 0; i < m; i++) {
            w.images.push_back(static_cast<Label>((bits >> (i * m)) & ((uint64_t{1} << m) - 1)));
        }
        if (w.invertible()) {
            out.push_back(std::move(w));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_abelian(const std::vector<Wall> &walls) {
    for (size_t i = 0; i < walls.size(); i++) {
        for (size_t j = 0; j < i; j++) {
            if (!(walls[i] * walls[j] == walls[j] * walls[i])) {
                return false;
            }
        }
    }
    return true;
}

WallGroupReport wall_group_structure(const std::vector<Wall> &walls) {
    if (walls.empty()) {
        throw std::logic_error("empty wall set");
    }
    std::set<Wall> members(walls.begin(), walls.end());
    if (!members.count(Wall::identity(walls.front().rank()))) {
        throw std::logic_error("wall set lacks the identity");
    }
    for (const Wall &a : members) {
        for (const Wall &b : members) {
            if (!members.count(a * b)) {
                throw std::logic_error("wall set not closed: product of [" + a.matrix_str() + "] and [" +
                                       b.matrix_str() + "] missing");
            }
        }
    }
    std::vector<Wall> list(members.begin(), members.end());
    return {list.size(), is_abelian(list)};
}

std::vector<Wall> generated_subgroup(const std::vector<Wall> &generators) {
    if (generators.empty()) {
        return {};
    }
    std::set<Wall> seen{Wall::identity(generators.front().rank())};
    std::vector<Wall> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<Wall> next;
        for (const Wall &w : frontier) {
            for (const Wall &g : generators) {
                Wall p = g * w;
                if (seen.insert(p).second) {
                    next.push_back(p);
                }
            }
        }
        frontier.swap(next);
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::pair<std::string, Wall>> load_wall_fixture(const AnyonModel &model, const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open wall fixture " + path);
    }
    std::vector<std::pair<std::string, Wall>> out;
    std::string line;
    while (std::getline(in, line)) {
        line = line.substr(0, line.find('#'));
        size_t colon = line.find(':');
        if (colon == std::string::npos) {
            continue;
        }
        std::string name = line.substr(0, colon);
        name.erase(std::remove_if(name.begin(), name.end(), ::isspace), name.end());
        out.emplace_back(name, parse_action_list(model, line.substr(colon + 1)));
    }
    return out;
}

Condensate condensable_set_of_wall(const Wall &w, const AnyonModel &model) {
    Condensate c;
    const Label total = static_cast<Label>(model.size());
    std::set<std::pair<Label, Label>> elems;
    for (Label a = 0; a < total; a++) {
        elems.emplace(a, w.apply(a));
    }
    c.elements.assign(elems.begin(), elems.end());
    // Folding reverses the left half; with +-1 phases the conjugation is invisible.
    c.bosonic = std::all_of(c.elements.begin(), c.elements.end(),
                            [&](const auto &p) { return model.spin_bit(p.first) == model.spin_bit(p.second); });
    c.mutually_trivial = true;
    for (const auto &p : c.elements) {
        for (const auto &q : c.elements) {
            if (model.braid_bit(p.first, q.first) != model.braid_bit(p.second, q.second)) {
                c.mutually_trivial = false;
            }
        }
    }
    c.transparent = std::none_of(c.elements.begin(), c.elements.end(), [](const auto &p) {
        return (p.first == 0) != (p.second == 0);
    });
    c.lagrangian = c.bosonic && c.mutually_trivial && c.transparent && c.elements.size() == model.size();
    return c;
}

Wall color_to_toric_isomorphism() {
    // Color basis e_A, e_B, m_A, m_B; toric basis e1, m1, e2, m2.
    return Wall{{0b0100, 0b0001, 0b0010, 0b1000}};
}

Wall transport(const Wall &w, const Wall &iso) { return iso * w * iso.inverse(); }

std::string gate_name(Gate g) {
    switch (g) {
        case Gate::kIdentity:
            return "I";
        case Gate::kHadamard:
            return "H";
        case Gate::kR2:
            return "R2";
        case Gate::kT:
            return "T";
    }
    return "?";
}

Gate parse_gate(const std::string &name) {
    for (Gate g : {Gate::kIdentity, Gate::kHadamard, Gate::kR2, Gate::kT}) {
        if (gate_name(g) == name) {
            return g;
        }
    }
    if (name == "hadamard" || name == "Hadamard") {
        return Gate::kHadamard;
    }
    throw std::invalid_argument("unknown gate '" + name + "' (expected I, H, R2 or T)");
}

namespace {

Pauli hadamard_conjugate(const Pauli &P) {
    // H X^x Z^z H = Z^x X^z = (-1)^{x.z} X^z Z^x.
    Pauli out(P.z, P.x, P.phase);
    if (P.x.dot(P.z)) {
        out.phase = static_cast<uint8_t>((out.phase + 2) & 3);
    }
    return out;
}

Pauli diagonal_conjugate(const MixedOperator &U, const Pauli &P) {
    auto q = (U * MixedOperator::from_pauli(P) * U.adjoint()).to_pauli();
    if (!q) {
        throw std::runtime_error("conjugated operator is not a Pauli");
    }
    return *q;
}

MixedOperator transversal_r2(const ColorCode &code) {
    return MixedOperator::from_diagonal(transversal_phase_poly(code, 2));
}

void require_preserved(const ColorCode &code, Gate g) {
    if (g == Gate::kHadamard || g == Gate::kT) {
        // Transversal H preserves a CSS code iff the X and Z check spaces coincide.
        BinMat both = code.hx;
        for (const BinVec &r : code.hz.rows()) {
            both.push_row(r);
        }
        size_t rx = f2_rank_solve(code.hx).rank;
        size_t rz = f2_rank_solve(code.hz).rank;
        if (rx != rz || f2_rank_solve(both).rank != rx) {
            throw std::domain_error("transversal Hadamard does not preserve this codespace");
        }
    }
    if (g == Gate::kR2 || g == Gate::kT) {
        if (!preserves_codespace(Codespace(code), transversal_phase_poly(code, 2))) {
            throw std::domain_error("transversal R2 does not preserve this codespace");
        }
    }
}

// Label carried at endpoint u by a Pauli whose syndrome sits at the ends of a short string.
Label label_at(const ColorCode &code, const Pauli &P, uint32_t u, uint32_t v) {
    Syndrome s = syndrome_of(code, P);
    int e_colors = 0, m_colors = 0;
    auto scan = [&](const BinVec &violated, const BinMat &H, const std::vector<ColorSet> &colors, int &acc) {
        for (size_t row : violated.ones()) {
            bool at_u = H.row(row).get(u), at_v = H.row(row).get(v);
            if (!at_u && !at_v) {
                throw std::runtime_error("conjugated string has syndrome away from its endpoints");
            }
            if (at_u && !at_v) {
                if (acc & colors[row]) {
                    throw std::runtime_error("conjugated string has two violations of one color at an end");
                }
                acc |= colors[row];
            }
        }
    };
    scan(s.x_violated, code.hx, code.x_colors, e_colors);
    scan(s.z_violated, code.hz, code.z_colors, m_colors);
    // Quotient basis: e_C = e_A e_B, m_C = m_A m_B.
    auto fold = [](int c) -> Label {
        Label a = ((c & kA) ? 1 : 0) ^ ((c & kC) ? 1 : 0);
        Label b = ((c & kB) ? 1 : 0) ^ ((c & kC) ? 1 : 0);
        return a | (b << 1);
    };
    return fold(e_colors) | (fold(m_colors) << 2);
}

}  // namespace

Pauli conjugate_by_gate(const ColorCode &code, Gate g, const Pauli &P) {
    switch (g) {
        case Gate::kIdentity:
            return P;
        case Gate::kHadamard:
            return hadamard_conjugate(P);
        case Gate::kR2:
            return diagonal_conjugate(transversal_r2(code), P);
        case Gate::kT:
            // T = H R2^dag: X -> Y, Y -> Z, Z -> X.
            return hadamard_conjugate(diagonal_conjugate(transversal_r2(code).adjoint(), P));
    }
    return P;
}

AnyonAutomorphism automorphism_from_gate(const ColorCode &code, const std::vector<Gate> &word) {
    const Colex &cx = *code.colex;
    if (cx.dim != 2) {
        throw std::invalid_argument("gate automorphisms are computed on 2D color codes");
    }
    for (Gate g : word) {
        require_preserved(code, g);
    }
    AnyonModel model = color_code_anyon_model(2);
    Wall w;
    w.images.assign(4, 0);
    for (int c = 0; c < 2; c++) {
        const ColorSet color = c == 0 ? kA : kB;
        const ColorSet edge_colors = static_cast<ColorSet>((kA | kB | kC) & ~color);
        auto it = std::find_if(cx.edges.begin(), cx.edges.end(),
                               [&](const Cell &e) { return e.colors == edge_colors; });
        if (it == cx.edges.end()) {
            throw std::runtime_error("no edge of colors " + color_name(edge_colors));
        }
        const uint32_t u = it->verts[0], v = it->verts[1];
        BinVec supp = BinVec::from_indices(code.n, {u, v});
        for (PauliKind kind : {PauliKind::kZ, PauliKind::kX}) {
            Pauli P = kind == PauliKind::kZ ? Pauli::Z(code.n, supp) : Pauli::X(code.n, supp);
            for (auto g = word.rbegin(); g != word.rend(); ++g) {
                P = conjugate_by_gate(code, *g, P);
            }
            const int gen = (kind == PauliKind::kZ ? 0 : 2) + c;
            w.images[gen] = label_at(code, P, u, v);
        }
    }
    std::string name;
    for (Gate g : word) {
        name += (name.empty() ? "" : " ") + gate_name(g);
    }
    if (!preserves_statistics(model, w)) {
        throw std::runtime_error("gate word '" + name + "' induced a map that does not preserve statistics");
    }
    return {w, name.empty() ? "I" : name};
}

AnyonAutomorphism automorphism_from_gate(const ColorCode &code, Gate g) {
    return automorphism_from_gate(code, std::vector<Gate>{g});
}

}  // namespace tcc
