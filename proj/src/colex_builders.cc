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

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "tcc/colex.h"

namespace tcc {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

void sort_cell(Cell &c) {
    std::sort(c.verts.begin(), c.verts.end());
    c.verts.erase(std::unique(c.verts.begin(), c.verts.end()), c.verts.end());
}

using Tri = std::array<int, 3>;
using EdgeKey = std::pair<long, long>;

/// Colex dual to a vertex-3-colored triangulated surface: qubits on triangles,
/// plaquettes around triangulation vertices, colex edges across triangulation edges.
/// `side_keys[t][a]` names the edge from corner a to corner a+1 of triangle t; small tori
/// need it because two distinct edges can join the same pair of vertices.
Colex dual_of_triangulation(const std::vector<int> &vertex_color, const std::vector<Tri> &triangles,
                            const std::vector<std::array<EdgeKey, 3>> &side_keys, Manifold manifold,
                            std::string name) {
    Colex c;
    c.dim = 2;
    c.manifold = manifold;
    c.name = std::move(name);
    c.num_vertices = static_cast<uint32_t>(triangles.size());
    c.plaquettes.resize(vertex_color.size());
    for (size_t v = 0; v < vertex_color.size(); v++) {
        c.plaquettes[v].colors = static_cast<ColorSet>(1 << vertex_color[v]);
    }
    std::map<EdgeKey, std::vector<uint32_t>> edge_tris;
    std::map<EdgeKey, ColorSet> edge_color;
    for (uint32_t t = 0; t < triangles.size(); t++) {
        for (int a = 0; a < 3; a++) {
            c.plaquettes[triangles[t][a]].verts.push_back(t);
            int u = triangles[t][a], w = triangles[t][(a + 1) % 3];
            edge_tris[side_keys[t][a]].push_back(t);
            edge_color[side_keys[t][a]] = static_cast<ColorSet>((1 << vertex_color[u]) | (1 << vertex_color[w]));
        }
    }
    for (auto &p : c.plaquettes) {
        sort_cell(p);
    }
    for (const auto &[key, ts] : edge_tris) {
        if (ts.size() != 2) {
            throw std::logic_error(c.name + ": triangulation edge not shared by two triangles");
        }
        Cell e;
        e.verts = {std::min(ts[0], ts[1]), std::max(ts[0], ts[1])};
        e.colors = edge_color[key];
        c.edges.push_back(e);
    }
    c.compute_bipartition();
    return c;
}

std::vector<std::array<EdgeKey, 3>> keys_by_vertex_pair(const std::vector<Tri> &triangles) {
    std::vector<std::array<EdgeKey, 3>> keys(triangles.size());
    for (size_t t = 0; t < triangles.size(); t++) {
        for (int a = 0; a < 3; a++) {
            int u = triangles[t][a], w = triangles[t][(a + 1) % 3];
            keys[t][a] = {std::min(u, w), std::max(u, w)};
        }
    }
    return keys;
}

}  // namespace

Colex build_hex_torus(int d1, int d2) {
    if (d1 < 1 || d2 < 1) {
        throw std::invalid_argument("build_hex_torus: sizes must be positive");
    }
    // Triangular lattice of plaquette centres modulo the periods (3 d1, 0) and (d2, d2);
    // both periods preserve the coloring (i - j) mod 3.
    const int P = 3 * d1;
    auto canon = [&](int i, int j) {
        int q = (j >= 0) ? j / d2 : -((-j + d2 - 1) / d2);
        i -= q * d2;
        j -= q * d2;
        return std::make_pair(mod(i, P), j);
    };
    auto index = [&](int i, int j) {
        auto [a, b] = canon(i, j);
        return b * P + a;
    };
    const int nv = P * d2;
    std::vector<int> color(nv);
    for (int j = 0; j < d2; j++) {
        for (int i = 0; i < P; i++) {
            color[index(i, j)] = mod(i - j, 3);
        }
    }
    // Edge keys: (base point, direction) with directions (1,0), (0,1) and (-1,1) from (i+1,j).
    std::vector<Tri> tris;
    std::vector<std::array<EdgeKey, 3>> keys;
    for (int j = 0; j < d2; j++) {
        for (int i = 0; i < P; i++) {
            tris.push_back({index(i, j), index(i + 1, j), index(i, j + 1)});
            keys.push_back({EdgeKey{index(i, j), 0}, EdgeKey{index(i, j), 2}, EdgeKey{index(i, j), 1}});
            tris.push_back({index(i + 1, j), index(i, j + 1), index(i + 1, j + 1)});
            keys.push_back({EdgeKey{index(i, j), 2}, EdgeKey{index(i, j + 1), 0}, EdgeKey{index(i + 1, j), 1}});
        }
    }
    return dual_of_triangulation(color, tris, keys, Manifold::kTorus2,
                                 "hex-torus:" + std::to_string(d1) + "," + std::to_string(d2));
}

Colex build_octahedral_sphere(int refinement) {
    if (refinement < 0) {
        throw std::invalid_argument("build_octahedral_sphere: refinement must be nonnegative");
    }
    // Octahedron vertices +e_i (index 2i) and -e_i (index 2i+1), colored by axis.
    std::vector<int> color = {0, 0, 1, 1, 2, 2};
    std::vector<Tri> tris;
    for (int s = 0; s < 8; s++) {
        tris.push_back({0 + (s & 1), 2 + ((s >> 1) & 1), 4 + ((s >> 2) & 1)});
    }
    for (int level = 0; level < refinement; level++) {
        std::map<std::pair<int, int>, int> mid;
        auto midpoint = [&](int u, int w) {
            auto key = std::make_pair(std::min(u, w), std::max(u, w));
            auto it = mid.find(key);
            if (it != mid.end()) {
                return it->second;
            }
            int m = static_cast<int>(color.size());
            color.push_back(3 - color[u] - color[w]);
            mid[key] = m;
            return m;
        };
        std::vector<Tri> next;
        for (const auto &t : tris) {
            int ab = midpoint(t[0], t[1]), bc = midpoint(t[1], t[2]), ca = midpoint(t[2], t[0]);
            next.push_back({t[0], ab, ca});
            next.push_back({t[1], bc, ab});
            next.push_back({t[2], ca, bc});
            next.push_back({ab, bc, ca});
        }
        tris = std::move(next);
    }
    return dual_of_triangulation(color, tris, keys_by_vertex_pair(tris), Manifold::kSphere2, "octa-sphere:" + std::to_string(refinement));
}

Colex build_16cell_colex() {
    // Qubit q has sign bits b_i (bit i of q); it is the tetrahedron with vertices (-1)^{b_i} e_i.
    Colex c;
    c.dim = 3;
    c.manifold = Manifold::kSphere3;
    c.name = "16cell";
    c.num_vertices = 16;
    auto cell_fixing = [&](const std::vector<int> &axes, int signs) {
        Cell cell;
        for (uint32_t q = 0; q < 16; q++) {
            bool ok = true;
            for (size_t k = 0; k < axes.size(); k++) {
                if (((q >> axes[k]) & 1) != static_cast<uint32_t>((signs >> k) & 1)) {
                    ok = false;
                }
            }
            if (ok) {
                cell.verts.push_back(q);
            }
            cell.colors |= 0;
        }
        for (int a : axes) {
            cell.colors |= static_cast<ColorSet>(1 << a);
        }
        return cell;
    };
    for (int i = 0; i < 4; i++) {
        for (int s = 0; s < 2; s++) {
            c.volumes.push_back(cell_fixing({i}, s));
        }
    }
    for (int i = 0; i < 4; i++) {
        for (int j = i + 1; j < 4; j++) {
            for (int s = 0; s < 4; s++) {
                c.plaquettes.push_back(cell_fixing({i, j}, s));
            }
        }
    }
    for (int i = 0; i < 4; i++) {
        for (int j = i + 1; j < 4; j++) {
            for (int k = j + 1; k < 4; k++) {
                for (int s = 0; s < 8; s++) {
                    c.edges.push_back(cell_fixing({i, j, k}, s));
                }
            }
        }
    }
    c.compute_bipartition();
    return c;
}

Colex build_bcc_torus(int L1, int L2, int L3) {
    for (int L : {L1, L2, L3}) {
        if (L < 2 || L % 2) {
            throw std::invalid_argument("build_bcc_torus: every size must be even and positive, got " +
                                        std::to_string(L));
        }
    }
    // Doubled coordinates: cell centres at all-0 or all-2 residues mod 4, vertices at
    // centre + permutations of (0, +-1, +-2). Periods 4L keep the 4-coloring consistent.
    const std::array<int, 3> P = {4 * L1, 4 * L2, 4 * L3};
    using V3 = std::array<int, 3>;
    auto wrap = [&](V3 v) {
        for (int k = 0; k < 3; k++) {
            v[k] = mod(v[k], P[k]);
        }
        return v;
    };
    std::vector<V3> offsets;
    const int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto &pm : perm) {
        for (int s1 : {-1, 1}) {
            for (int s2 : {-1, 1}) {
                V3 o{};
                o[pm[0]] = 0;
                o[pm[1]] = s1 * 1;
                o[pm[2]] = s2 * 2;
                offsets.push_back(o);
            }
        }
    }
    auto is_offset = [&](const V3 &d) {
        return std::find(offsets.begin(), offsets.end(), d) != offsets.end();
    };
    std::vector<V3> centres;
    std::vector<int> ccolor;
    for (int x = 0; x < P[0]; x += 2) {
        for (int y = 0; y < P[1]; y += 2) {
            for (int z = 0; z < P[2]; z += 2) {
                if (x % 4 == y % 4 && y % 4 == z % 4) {
                    centres.push_back({x, y, z});
                    int base = (x % 4 == 0) ? 0 : 2;
                    int s = (x + y + z - (base == 0 ? 0 : 6)) / 4;
                    ccolor.push_back(base + mod(s, 2));
                }
            }
        }
    }
    std::map<V3, uint32_t> vid;
    auto vertex = [&](const V3 &p) {
        V3 w = wrap(p);
        auto it = vid.find(w);
        if (it != vid.end()) {
            return it->second;
        }
        uint32_t id = static_cast<uint32_t>(vid.size());
        vid[w] = id;
        return id;
    };
    Colex c;
    c.dim = 3;
    c.manifold = Manifold::kTorus3;
    c.name = "bcc-torus:" + std::to_string(L1) + "," + std::to_string(L2) + "," + std::to_string(L3);
    for (size_t i = 0; i < centres.size(); i++) {
        Cell vol;
        vol.colors = static_cast<ColorSet>(1 << ccolor[i]);
        for (const V3 &o : offsets) {
            vol.verts.push_back(vertex({centres[i][0] + o[0], centres[i][1] + o[1], centres[i][2] + o[2]}));
        }
        sort_cell(vol);
        c.volumes.push_back(vol);
    }
    c.num_vertices = static_cast<uint32_t>(vid.size());
    std::map<V3, size_t> centre_index;
    for (size_t i = 0; i < centres.size(); i++) {
        centre_index[centres[i]] = i;
    }
    // Faces toward the 8 hexagon neighbours and 6 square neighbours.
    std::vector<V3> disp;
    for (int a : {-2, 2}) {
        for (int b : {-2, 2}) {
            for (int d : {-2, 2}) {
                disp.push_back({a, b, d});
            }
        }
    }
    for (int k = 0; k < 3; k++) {
        for (int s : {-4, 4}) {
            V3 d{0, 0, 0};
            d[k] = s;
            disp.push_back(d);
        }
    }
    std::map<std::vector<uint32_t>, ColorSet> faces;
    std::map<std::pair<uint32_t, uint32_t>, std::vector<size_t>> edge_cells;
    for (size_t i = 0; i < centres.size(); i++) {
        const V3 &ctr = centres[i];
        for (const V3 &d : disp) {
            std::vector<uint32_t> verts;
            for (const V3 &o : offsets) {
                V3 rel{o[0] - d[0], o[1] - d[1], o[2] - d[2]};
                if (is_offset(rel)) {
                    verts.push_back(vertex({ctr[0] + o[0], ctr[1] + o[1], ctr[2] + o[2]}));
                }
            }
            std::sort(verts.begin(), verts.end());
            size_t j = centre_index.at(wrap({ctr[0] + d[0], ctr[1] + d[1], ctr[2] + d[2]}));
            faces[verts] = static_cast<ColorSet>((1 << ccolor[i]) | (1 << ccolor[j]));
        }
        for (size_t a = 0; a < offsets.size(); a++) {
            for (size_t b = a + 1; b < offsets.size(); b++) {
                int d2 = 0;
                for (int k = 0; k < 3; k++) {
                    d2 += (offsets[a][k] - offsets[b][k]) * (offsets[a][k] - offsets[b][k]);
                }
                if (d2 != 2) {
                    continue;
                }
                uint32_t u = vertex({ctr[0] + offsets[a][0], ctr[1] + offsets[a][1], ctr[2] + offsets[a][2]});
                uint32_t w = vertex({ctr[0] + offsets[b][0], ctr[1] + offsets[b][1], ctr[2] + offsets[b][2]});
                edge_cells[{std::min(u, w), std::max(u, w)}].push_back(i);
            }
        }
    }
    for (const auto &[verts, col] : faces) {
        c.plaquettes.push_back(Cell{verts, col});
    }
    for (const auto &[uv, cells] : edge_cells) {
        Cell e;
        e.verts = {uv.first, uv.second};
        for (size_t i : cells) {
            e.colors |= static_cast<ColorSet>(1 << ccolor[i]);
        }
        c.edges.push_back(e);
    }
    c.compute_bipartition();
    return c;
}

Colex build_colex(const std::string &spec) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::vector<int> args;
    if (colon != std::string::npos) {
        std::string rest = spec.substr(colon + 1);
        size_t pos = 0;
        while (pos <= rest.size()) {
            size_t comma = rest.find(',', pos);
            std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            try {
                args.push_back(std::stoi(tok));
            } catch (const std::exception &) {
                throw std::invalid_argument("bad lattice argument '" + tok + "' in '" + spec + "'");
            }
            if (comma == std::string::npos) {
                break;
            }
            pos = comma + 1;
        }
    }
    auto need = [&](size_t n) {
        if (args.size() != n) {
            throw std::invalid_argument("lattice '" + kind + "' takes " + std::to_string(n) + " arguments");
        }
    };
    if (kind == "hex-torus") {
        need(2);
        return build_hex_torus(args[0], args[1]);
    }
    if (kind == "octa-sphere") {
        need(1);
        return build_octahedral_sphere(args[0]);
    }
    if (kind == "16cell") {
        need(0);
        return build_16cell_colex();
    }
    if (kind == "bcc-torus") {
        need(3);
        return build_bcc_torus(args[0], args[1], args[2]);
    }
    throw std::invalid_argument("unknown lattice '" + spec + "'");
}

}  // namespace tcc
