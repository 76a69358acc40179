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

#include "tcc/code.h"

#include <ostream>
#include <stdexcept>

namespace tcc {

ColorCode build_color_code(const Colex &colex) {
    ColorCode code;
    code.colex = std::make_shared<const Colex>(colex);
    code.n = colex.num_vertices;
    code.hx = BinMat(0, code.n);
    code.hz = BinMat(0, code.n);
    for (const Cell &c : colex.top_cells()) {
        code.hx.push_row(colex.cell_vector(c));
        code.x_colors.push_back(c.colors);
    }
    for (const Cell &c : colex.plaquettes) {
        code.hz.push_row(colex.cell_vector(c));
        code.z_colors.push_back(c.colors);
    }
    for (size_t i = 0; i < code.hx.num_rows(); i++) {
        for (size_t j = 0; j < code.hz.num_rows(); j++) {
            if (code.hx.row(i).dot(code.hz.row(j))) {
                throw std::logic_error("X check " + std::to_string(i) + " (" + color_name(code.x_colors[i]) +
                                       ") anticommutes with Z check " + std::to_string(j) + " (" +
                                       color_name(code.z_colors[j]) + ")");
            }
        }
    }
    return code;
}

CodeParameters code_parameters(const ColorCode &code) {
    CodeParameters p;
    p.n = code.n;
    p.rank_x = f2_rank_solve(code.hx).rank;
    p.rank_z = f2_rank_solve(code.hz).rank;
    p.k = p.n - p.rank_x - p.rank_z;
    return p;
}

GroundState x_generators(const ColorCode &code) {
    GroundState gs;
    gs.rows = independent_rows(code.hx);
    gs.G = BinMat(0, code.n);
    for (size_t i : gs.rows) {
        gs.G.push_row(code.hx.row(i));
    }
    gs.r = gs.rows.size();
    return gs;
}

GroundState ground_state(const ColorCode &code) {
    CodeParameters p = code_parameters(code);
    if (p.k != 0) {
        throw std::domain_error("ground_state: code encodes " + std::to_string(p.k) +
                                " logical qubits; the ground state is not unique");
    }
    return x_generators(code);
}

BinMat logical_x_representatives(const ColorCode &code) {
    F2Basis span(code.n, code.hx.num_rows() + code.n);
    for (size_t i = 0; i < code.hx.num_rows(); i++) {
        span.add(code.hx.row(i), i);
    }
    BinMat L(0, code.n);
    size_t label = code.hx.num_rows();
    for (const BinVec &v : f2_kernel(code.hz)) {
        if (span.add(v, label++)) {
            L.push_row(v);
        }
    }
    return L;
}

std::array<size_t, 4> Syndrome::x_counts_by_color() const {
    std::array<size_t, 4> c{0, 0, 0, 0};
    for (size_t i : x_violated.ones()) {
        c[color_index(x_colors[i])]++;
    }
    return c;
}

Syndrome syndrome_of(const ColorCode &code, const Pauli &P) {
    if (P.size() != code.n) {
        throw std::invalid_argument("syndrome_of: Pauli has " + std::to_string(P.size()) + " qubits, code has " +
                                    std::to_string(code.n));
    }
    Syndrome s;
    s.x_violated = code.hx.apply(P.z);
    s.z_violated = code.hz.apply(P.x);
    s.x_colors = code.x_colors;
    return s;
}

int stabilizer_sign(const ColorCode &code, const Pauli &P) {
    if (P.phase % 2) {
        return 0;
    }
    if (!P.x.is_zero() && !f2_rank_solve(code.hx, P.x).solution) {
        return 0;
    }
    if (!P.z.is_zero() && !f2_rank_solve(code.hz, P.z).solution) {
        return 0;
    }
    return P.phase == 0 ? 1 : -1;
}

Pauli string_or_membrane_operator(const ColorCode &code, ColorSet color_set, const PathSpec &path, PauliKind kind) {
    Support s = cell_support(*code.colex, color_set, path);
    return kind == PauliKind::kX ? Pauli::X(code.n, s.qubits) : Pauli::Z(code.n, s.qubits);
}

void write_css(std::ostream &out, const ColorCode &code) {
    out << "# css n=" << code.n << " x_checks=" << code.hx.num_rows() << " z_checks=" << code.hz.num_rows() << "\n";
    auto dump = [&](char tag, const BinMat &m, const std::vector<ColorSet> &colors) {
        for (size_t i = 0; i < m.num_rows(); i++) {
            out << tag << " " << color_name(colors[i]);
            for (size_t q : m.row(i).ones()) {
                out << " " << q;
            }
            out << "\n";
        }
    };
    dump('X', code.hx, code.x_colors);
    dump('Z', code.hz, code.z_colors);
}

}  // namespace tcc
