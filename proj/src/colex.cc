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

#include "tcc/colex.h"

#include <algorithm>
#include <bit>
#include <istream>
#include <map>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tcc {

std::string color_name(ColorSet c) {
    std::string s;
    for (int k = 0; k < 4; k++) {
        if (c & (1 << k)) {
            s += static_cast<char>('A' + k);
        }
    }
    return s.empty() ? "-" : s;
}

ColorSet parse_colors(const std::string &s) {
    ColorSet c = 0;
    for (char ch : s) {
        if (ch < 'A' || ch > 'D') {
            throw std::invalid_argument("bad color letter in '" + s + "'");
        }
        c |= static_cast<ColorSet>(1 << (ch - 'A'));
    }
    return c;
}

int color_index(ColorSet single) {
    if (std::popcount(static_cast<unsigned>(single)) != 1) {
        throw std::invalid_argument("expected a single color, got " + color_name(single));
    }
    return std::countr_zero(static_cast<unsigned>(single));
}

std::string manifold_name(Manifold m) {
    switch (m) {
        case Manifold::kTorus2:
            return "torus2";
        case Manifold::kSphere2:
            return "sphere2";
        case Manifold::kSphere3:
            return "sphere3";
        case Manifold::kTorus3:
            return "torus3";
    }
    return "?";
}

static Manifold parse_manifold(const std::string &s) {
    for (Manifold m : {Manifold::kTorus2, Manifold::kSphere2, Manifold::kSphere3, Manifold::kTorus3}) {
        if (manifold_name(m) == s) {
            return m;
        }
    }
    throw std::invalid_argument("unknown manifold '" + s + "'");
}

int euler_characteristic(Manifold m) { return m == Manifold::kSphere2 ? 2 : 0; }

std::vector<std::vector<int>> Colex::vertex_top_cells() const {
    std::vector<std::vector<int>> out(num_vertices, std::vector<int>(4, -1));
    const auto &tops = top_cells();
    for (size_t c = 0; c < tops.size(); c++) {
        int k = color_index(tops[c].colors);
        for (uint32_t v : tops[c].verts) {
            out[v][k] = static_cast<int>(c);
        }
    }
    return out;
}

BinVec Colex::cell_vector(const Cell &c) const {
    BinVec v(num_vertices);
    for (uint32_t q : c.verts) {
        v.set(q);
    }
    return v;
}

int Colex::euler() const {
    int chi = static_cast<int>(num_vertices) - static_cast<int>(edges.size()) + static_cast<int>(plaquettes.size());
    if (dim == 3) {
        chi -= static_cast<int>(volumes.size());
    }
    return chi;
}

void Colex::validate() const {
    auto fail = [&](const std::string &msg) { throw std::logic_error(name + ": " + msg); };
    if (dim != 2 && dim != 3) {
        fail("dimension must be 2 or 3");
    }
    const int ncol = dim + 1;
    std::vector<int> valence(num_vertices, 0);
    for (size_t e = 0; e < edges.size(); e++) {
        const Cell &c = edges[e];
        if (c.verts.size() != 2 || c.verts[0] == c.verts[1]) {
            fail("edge " + std::to_string(e) + " is not a proper pair");
        }
        if (std::popcount(static_cast<unsigned>(c.colors)) != dim) {
            fail("edge " + std::to_string(e) + " has color label " + color_name(c.colors));
        }
        for (uint32_t v : c.verts) {
            valence[v]++;
        }
        if (in_T.size() == num_vertices && in_T[c.verts[0]] == in_T[c.verts[1]]) {
            fail("edge " + std::to_string(e) + " joins two vertices of the same bipartition class");
        }
    }
    for (uint32_t v = 0; v < num_vertices; v++) {
        if (valence[v] != ncol) {
            fail("vertex " + std::to_string(v) + " has valence " + std::to_string(valence[v]));
        }
    }
    if (in_T.size() != num_vertices) {
        fail("bipartition missing");
    }
    std::vector<std::vector<int>> count(num_vertices, std::vector<int>(4, 0));
    for (const Cell &c : top_cells()) {
        if (std::popcount(static_cast<unsigned>(c.colors)) != 1 || c.colors >= (1 << ncol)) {
            fail("top cell with color label " + color_name(c.colors));
        }
        for (uint32_t v : c.verts) {
            count[v][color_index(c.colors)]++;
        }
    }
    for (uint32_t v = 0; v < num_vertices; v++) {
        for (int k = 0; k < ncol; k++) {
            if (count[v][k] != 1) {
                // Two same-colored cells through one vertex would be adjacent.
                fail("vertex " + std::to_string(v) + " lies in " + std::to_string(count[v][k]) + " cells of color " +
                     color_name(static_cast<ColorSet>(1 << k)));
            }
        }
    }
    auto tops = vertex_top_cells();
    auto check_label = [&](const Cell &c, const std::string &what) {
        for (int k = 0; k < ncol; k++) {
            if (!(c.colors & (1 << k))) {
                continue;
            }
            int owner = tops[c.verts[0]][k];
            for (uint32_t v : c.verts) {
                if (tops[v][k] != owner) {
                    fail(what + " labelled " + color_name(c.colors) + " is not inside one cell of color " +
                         color_name(static_cast<ColorSet>(1 << k)));
                }
            }
        }
    };
    for (const Cell &e : edges) {
        check_label(e, "edge");
    }
    if (dim == 3) {
        for (const Cell &p : plaquettes) {
            if (std::popcount(static_cast<unsigned>(p.colors)) != 2) {
                fail("plaquette with color label " + color_name(p.colors));
            }
            check_label(p, "plaquette");
        }
    }
    if (euler() != euler_characteristic(manifold)) {
        fail("Euler characteristic " + std::to_string(euler()) + " does not match " + manifold_name(manifold));
    }
}

void Colex::compute_bipartition() {
    std::vector<std::vector<uint32_t>> adj(num_vertices);
    for (const Cell &e : edges) {
        adj[e.verts[0]].push_back(e.verts[1]);
        adj[e.verts[1]].push_back(e.verts[0]);
    }
    std::vector<int> side(num_vertices, -1);
    for (uint32_t s = 0; s < num_vertices; s++) {
        if (side[s] >= 0) {
            continue;
        }
        side[s] = 1;
        std::queue<uint32_t> q;
        q.push(s);
        while (!q.empty()) {
            uint32_t v = q.front();
            q.pop();
            for (uint32_t w : adj[v]) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    q.push(w);
                } else if (side[w] == side[v]) {
                    throw std::logic_error(name + ": vertex graph is not bipartite");
                }
            }
        }
    }
    in_T.assign(side.begin(), side.end());
}

namespace {

// Top cells a and b (same color) are neighbours if a colex edge joins them.
bool connected_cells(const Colex &colex, const std::vector<uint32_t> &cells) {
    if (cells.empty()) {
        return false;
    }
    auto tops = colex.vertex_top_cells();
    int k = color_index(colex.top_cells()[cells[0]].colors);
    std::set<uint32_t> todo(cells.begin(), cells.end());
    std::map<uint32_t, std::vector<uint32_t>> nbr;
    for (const Cell &e : colex.edges) {
        int a = tops[e.verts[0]][k];
        int b = tops[e.verts[1]][k];
        if (a != b && todo.count(a) && todo.count(b)) {
            nbr[a].push_back(b);
            nbr[b].push_back(a);
        }
    }
    std::set<uint32_t> seen{cells[0]};
    std::queue<uint32_t> q;
    q.push(cells[0]);
    while (!q.empty()) {
        uint32_t c = q.front();
        q.pop();
        for (uint32_t d : nbr[c]) {
            if (seen.insert(d).second) {
                q.push(d);
            }
        }
    }
    return seen.size() == todo.size();
}

}  // namespace

std::pair<Region, BoundaryLattice> region_and_boundary(const Colex &colex, ColorSet color,
                                                       const std::vector<uint32_t> &cell_ids) {
    const auto &tops = colex.top_cells();
    Region region;
    region.color = color;
    region.V = BinVec(colex.num_vertices);
    std::set<uint32_t> uniq;
    for (uint32_t c : cell_ids) {
        if (c >= tops.size()) {
            throw std::invalid_argument("region cell " + std::to_string(c) + " out of range");
        }
        if (tops[c].colors != color) {
            throw std::invalid_argument("region cell " + std::to_string(c) + " has color " +
                                        color_name(tops[c].colors) + ", expected " + color_name(color));
        }
        if (uniq.insert(c).second) {
            region.V ^= colex.cell_vector(tops[c]);
        }
    }
    region.cells.assign(uniq.begin(), uniq.end());
    if (!connected_cells(colex, region.cells)) {
        throw std::invalid_argument("region cells are not connected");
    }

    BoundaryLattice bl;
    bl.dim = colex.dim;
    auto vt = colex.vertex_top_cells();
    const int rk = color_index(color);
    auto straddles = [&](const Cell &c) {
        bool in = false, out = false;
        for (uint32_t v : c.verts) {
            (region.V.get(v) ? in : out) = true;
        }
        return in && out;
    };

    if (colex.dim == 2) {
        for (uint32_t c = 0; c < tops.size(); c++) {
            if (tops[c].colors != color && straddles(tops[c])) {
                bl.cells.push_back(c);
            }
        }
        std::map<uint32_t, uint32_t> index;
        for (uint32_t i = 0; i < bl.cells.size(); i++) {
            index[bl.cells[i]] = i;
            bl.mode_rows.push_back(bl.cells[i]);
            bl.mode_colors.push_back(tops[bl.cells[i]].colors);
        }
        // Each qubit of V links the two boundary cells of the other colors that contain it.
        std::vector<std::vector<std::pair<uint32_t, uint32_t>>> adj(bl.cells.size());
        for (size_t q : region.V.ones()) {
            std::vector<uint32_t> ends;
            for (int k = 0; k < 3; k++) {
                if (k == rk) {
                    continue;
                }
                auto it = index.find(static_cast<uint32_t>(vt[q][k]));
                if (it != index.end()) {
                    ends.push_back(it->second);
                }
            }
            if (ends.size() == 2) {
                adj[ends[0]].push_back({ends[1], static_cast<uint32_t>(q)});
                adj[ends[1]].push_back({ends[0], static_cast<uint32_t>(q)});
            }
        }
        bool ok = !bl.cells.empty();
        for (auto &a : adj) {
            if (a.size() != 2 || a[0].first == a[1].first) {
                ok = false;
            }
        }
        if (ok) {
            // Walk the cycle from the first cell of the lower boundary color.
            ColorSet low = 0;
            for (ColorSet c : bl.mode_colors) {
                if (low == 0 || c < low) {
                    low = c;
                }
            }
            uint32_t start = 0;
            while (bl.mode_colors[start] != low) {
                start++;
            }
            std::vector<uint32_t> order{start};
            std::vector<uint32_t> via;
            uint32_t prev = UINT32_MAX, cur = start;
            while (true) {
                auto step = adj[cur][0].first != prev ? adj[cur][0] : adj[cur][1];
                if (adj[cur][0].first == prev && adj[cur][1].first == prev) {
                    ok = false;
                    break;
                }
                via.push_back(step.second);
                prev = cur;
                cur = step.first;
                if (cur == start) {
                    break;
                }
                order.push_back(cur);
                if (order.size() > bl.cells.size()) {
                    ok = false;
                    break;
                }
            }
            if (ok && order.size() == bl.cells.size()) {
                std::vector<uint32_t> cells, rows;
                std::vector<ColorSet> cols;
                for (uint32_t i : order) {
                    cells.push_back(bl.cells[i]);
                    cols.push_back(bl.mode_colors[i]);
                }
                for (size_t i = 1; i < cols.size(); i++) {
                    if (cols[i] == cols[i - 1]) {
                        ok = false;
                    }
                }
                if (ok) {
                    bl.cells = cells;
                    bl.mode_rows = cells;
                    bl.mode_colors = cols;
                    for (size_t i = 0; i < order.size(); i++) {
                        bl.simplices.push_back({static_cast<uint32_t>(i), static_cast<uint32_t>((i + 1) % order.size())});
                        bl.simplex_qubit.push_back(via[i]);
                    }
                    bl.cyclic = true;
                }
            } else {
                ok = false;
            }
        }
        if (!bl.cyclic) {
            bl.degenerate = !bl.cells.empty();
            bl.note = bl.cells.empty() ? "empty boundary" : "boundary is not a simple alternating cycle";
            bl.simplices.clear();
            bl.simplex_qubit.clear();
            for (size_t q : region.V.ones()) {
                std::vector<uint32_t> s;
                for (int k = 0; k < 3; k++) {
                    auto it = k == rk ? index.end() : index.find(static_cast<uint32_t>(vt[q][k]));
                    if (it != index.end()) {
                        s.push_back(it->second);
                    }
                }
                if (s.size() == 2) {
                    bl.simplices.push_back(s);
                    bl.simplex_qubit.push_back(static_cast<uint32_t>(q));
                }
            }
        }
        region.single_boundary = bl.cyclic;
        return {region, bl};
    }

    // 3D: surface plaquettes of colors XD (D = region color) whose X-volume sticks out of V.
    std::map<uint32_t, uint32_t> plaq_index;
    for (uint32_t p = 0; p < colex.plaquettes.size(); p++) {
        const Cell &pl = colex.plaquettes[p];
        if (!(pl.colors & color) || !region.V.get(pl.verts[0])) {
            continue;
        }
        int other = color_index(static_cast<ColorSet>(pl.colors & ~color));
        int vol = vt[pl.verts[0]][other];
        if (vol < 0 || !straddles(tops[vol])) {
            continue;
        }
        plaq_index[p] = static_cast<uint32_t>(bl.cells.size());
        bl.cells.push_back(p);
        bl.mode_rows.push_back(static_cast<uint32_t>(vol));
        bl.mode_colors.push_back(tops[vol].colors);
    }
    std::set<uint32_t> distinct(bl.mode_rows.begin(), bl.mode_rows.end());
    if (distinct.size() != bl.mode_rows.size()) {
        bl.degenerate = true;
        bl.note = "several surface plaquettes face the same volume";
    }
    // Which plaquette of each color pair contains each vertex.
    std::vector<std::map<ColorSet, uint32_t>> vp(colex.num_vertices);
    for (const auto &[p, i] : plaq_index) {
        for (uint32_t v : colex.plaquettes[p].verts) {
            vp[v][colex.plaquettes[p].colors] = i;
        }
    }
    for (size_t q : region.V.ones()) {
        if (vp[q].size() == 3) {
            std::vector<uint32_t> tri;
            for (const auto &[c, i] : vp[q]) {
                tri.push_back(i);
            }
            bl.simplices.push_back(tri);
            bl.simplex_qubit.push_back(static_cast<uint32_t>(q));
        }
    }
    // A single closed surface: every dual edge in two triangles and Euler characteristic 2.
    std::map<std::pair<uint32_t, uint32_t>, int> edge_use;
    for (const auto &t : bl.simplices) {
        for (int a = 0; a < 3; a++) {
            uint32_t u = t[a], w = t[(a + 1) % 3];
            edge_use[{std::min(u, w), std::max(u, w)}]++;
        }
    }
    bool closed = !bl.simplices.empty();
    for (const auto &[e, n] : edge_use) {
        if (n != 2) {
            closed = false;
        }
    }
    int chi = static_cast<int>(bl.cells.size()) - static_cast<int>(edge_use.size()) +
              static_cast<int>(bl.simplices.size());
    region.single_boundary = closed && chi == 2;
    if (!region.single_boundary && bl.note.empty()) {
        bl.note = "dual boundary is not a single 2-sphere";
    }
    return {region, bl};
}

Support cell_support(const Colex &colex, ColorSet color_set, const PathSpec &path) {
    Support s;
    s.qubits = BinVec(colex.num_vertices);
    const std::vector<Cell> *cells = nullptr;
    if (path.kind == PathKind::kEdges) {
        if (std::popcount(static_cast<unsigned>(color_set)) != colex.dim) {
            throw std::invalid_argument("string color set " + color_name(color_set) + " has the wrong size");
        }
        cells = &colex.edges;
    } else {
        if (colex.dim != 3 || std::popcount(static_cast<unsigned>(color_set)) != 2) {
            throw std::invalid_argument("membranes need a 3D colex and a color pair");
        }
        cells = &colex.plaquettes;
    }
    for (uint32_t id : path.ids) {
        if (id >= cells->size()) {
            throw std::invalid_argument("path cell " + std::to_string(id) + " out of range");
        }
        if ((*cells)[id].colors != color_set) {
            throw std::invalid_argument("path cell " + std::to_string(id) + " has color " +
                                        color_name((*cells)[id].colors) + ", expected " + color_name(color_set));
        }
        s.qubits ^= colex.cell_vector((*cells)[id]);
    }
    const ColorSet all = static_cast<ColorSet>((1 << (colex.dim + 1)) - 1);
    if (path.kind == PathKind::kEdges) {
        ColorSet missing = static_cast<ColorSet>(all & ~color_set);
        const auto &tops = colex.top_cells();
        for (uint32_t c = 0; c < tops.size(); c++) {
            if (tops[c].colors == missing && colex.cell_vector(tops[c]).dot(s.qubits)) {
                s.boundary.push_back(c);
            }
        }
    } else {
        ColorSet comp = static_cast<ColorSet>(all & ~color_set);
        for (uint32_t p = 0; p < colex.plaquettes.size(); p++) {
            if (colex.plaquettes[p].colors == comp && colex.cell_vector(colex.plaquettes[p]).dot(s.qubits)) {
                s.boundary.push_back(p);
            }
        }
    }
    s.closed = s.boundary.empty();
    return s;
}

void write_colex(std::ostream &out, const Colex &colex) {
    out << "colex 1\n";
    out << "name " << (colex.name.empty() ? "unnamed" : colex.name) << "\n";
    out << "dim " << colex.dim << "\n";
    out << "manifold " << manifold_name(colex.manifold) << "\n";
    out << "vertices " << colex.num_vertices << "\n";
    out << "bipartition ";
    for (uint8_t t : colex.in_T) {
        out << static_cast<int>(t);
    }
    out << "\n";
    auto dump = [&](const char *tag, const std::vector<Cell> &cells) {
        out << tag << " " << cells.size() << "\n";
        for (const Cell &c : cells) {
            out << color_name(c.colors) << " " << c.verts.size();
            for (uint32_t v : c.verts) {
                out << " " << v;
            }
            out << "\n";
        }
    };
    dump("edges", colex.edges);
    dump("plaquettes", colex.plaquettes);
    dump("volumes", colex.volumes);
    out << "end\n";
}

Colex read_colex(std::istream &in) {
    auto expect = [&](const std::string &word) {
        std::string w;
        if (!(in >> w) || w != word) {
            throw std::invalid_argument("colex file: expected '" + word + "', got '" + w + "'");
        }
    };
    Colex c;
    int version = 0;
    expect("colex");
    in >> version;
    if (version != 1) {
        throw std::invalid_argument("colex file: unsupported version " + std::to_string(version));
    }
    std::string s;
    expect("name");
    in >> c.name;
    expect("dim");
    in >> c.dim;
    expect("manifold");
    in >> s;
    c.manifold = parse_manifold(s);
    expect("vertices");
    in >> c.num_vertices;
    expect("bipartition");
    in >> s;
    if (s.size() != c.num_vertices) {
        throw std::invalid_argument("colex file: bipartition length mismatch");
    }
    for (char ch : s) {
        c.in_T.push_back(ch == '1');
    }
    auto load = [&](const char *tag, std::vector<Cell> &cells) {
        expect(tag);
        size_t n = 0;
        in >> n;
        cells.resize(n);
        for (Cell &cell : cells) {
            std::string col;
            size_t k = 0;
            in >> col >> k;
            cell.colors = col == "-" ? 0 : parse_colors(col);
            cell.verts.resize(k);
            for (auto &v : cell.verts) {
                in >> v;
                if (v >= c.num_vertices) {
                    throw std::invalid_argument("colex file: vertex index out of range");
                }
            }
        }
    };
    load("edges", c.edges);
    load("plaquettes", c.plaquettes);
    load("volumes", c.volumes);
    expect("end");
    if (!in) {
        throw std::invalid_argument("colex file: truncated");
    }
    return c;
}

}  // namespace tcc
