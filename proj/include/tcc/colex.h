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

#ifndef TCC_COLEX_H
#define TCC_COLEX_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tcc/f2.h"

namespace tcc {

/// Set of colors as a bitmask: A=1, B=2, C=4, D=8.
using ColorSet = uint8_t;
constexpr ColorSet kA = 1, kB = 2, kC = 4, kD = 8;

std::string color_name(ColorSet c);
/// Parses "A", "AB", "BCD", ... (order insensitive).
ColorSet parse_colors(const std::string &s);
/// Index 0..3 of a single color.
int color_index(ColorSet single);

enum class Manifold { kTorus2, kSphere2, kSphere3, kTorus3 };
std::string manifold_name(Manifold m);
int euler_characteristic(Manifold m);

struct Cell {
    std::vector<uint32_t> verts;  // sorted qubit indices
    ColorSet colors = 0;          // colors of the top cells containing this cell
};

/// Colorable cell complex with qubits on vertices.
///
/// Edges and plaquettes carry the set of top-cell colors they lie in. In 2D the top
/// cells are the plaquettes (one color each); in 3D they are the volumes.
class Colex {
   public:
    int dim = 2;
    Manifold manifold = Manifold::kSphere2;
    std::string name;
    uint32_t num_vertices = 0;
    std::vector<Cell> edges;
    std::vector<Cell> plaquettes;
    std::vector<Cell> volumes;
    std::vector<uint8_t> in_T;  // bipartition: 1 for T, 0 for its complement

    const std::vector<Cell> &top_cells() const { return dim == 2 ? plaquettes : volumes; }
    size_t num_colors() const { return dim + 1; }
    /// For each vertex and single color, the top cell of that color containing it.
    std::vector<std::vector<int>> vertex_top_cells() const;
    BinVec cell_vector(const Cell &c) const;
    /// V - E + F (- C in 3D).
    int euler() const;
    /// Throws std::logic_error naming the first violated colex axiom.
    void validate() const;
    /// Recomputes in_T by 2-coloring the vertex graph; throws if not bipartite.
    void compute_bipartition();
};

/// Hexagonal lattice on a torus with 3 d1 d2 plaquettes.
Colex build_hex_torus(int d1, int d2);
/// Dual of the axis-colored octahedron, refined by 4-to-1 subdivision `refinement` times.
Colex build_octahedral_sphere(int refinement);
/// Dual of the 16-cell boundary: 16 qubits, 8 volumes, 24 plaquettes, 32 edges.
Colex build_16cell_colex();
/// Truncated-octahedra honeycomb on a 3-torus of L1 x L2 x L3 cubic cells; all L even.
Colex build_bcc_torus(int L1, int L2, int L3);
/// Builds from a spec like "hex-torus:2,2", "octa-sphere:1", "16cell", "bcc-torus:2,2,2".
Colex build_colex(const std::string &spec);

/// Region made of top cells of one color.
struct Region {
    BinVec V;
    std::vector<uint32_t> cells;
    ColorSet color = 0;
    bool single_boundary = false;
};

/// Boundary of a region and its dual lattice.
///
/// 2D: `cells` are the plaquettes of the other two colors touching V, in cyclic order
/// when `cyclic` holds. 3D: `cells` are plaquettes on the surface of V; `mode_rows` maps each
/// to the adjacent top cell (the stabilizer whose excitation it represents).
struct BoundaryLattice {
    int dim = 2;
    std::vector<uint32_t> cells;
    std::vector<uint32_t> mode_rows;     // top-cell index per dual vertex
    std::vector<ColorSet> mode_colors;   // color of each mode's top cell
    /// Dual simplices: 2D edges between consecutive modes, 3D triangles. Each entry lists
    /// dual-vertex indices and carries the qubit it stands for.
    std::vector<std::vector<uint32_t>> simplices;
    std::vector<uint32_t> simplex_qubit;
    bool cyclic = false;       // 2D: modes form one alternating cycle
    bool degenerate = false;   // some boundary cell touched more than once, or modes repeat
    std::string note;
};

/// Builds the region spanned by `cell_ids` (top cells of `color`) and its boundary.
/// Throws std::invalid_argument on wrong colors or a disconnected cell set.
std::pair<Region, BoundaryLattice> region_and_boundary(const Colex &colex, ColorSet color,
                                                       const std::vector<uint32_t> &cell_ids);

enum class PathKind { kEdges, kPlaquettes };

/// Selection of edges (strings) or plaquettes (membranes) by index.
struct PathSpec {
    PathKind kind = PathKind::kEdges;
    std::vector<uint32_t> ids;
};

struct Support {
    BinVec qubits;
    /// Cells of the complementary colors met an odd number of times: top cells for strings,
    /// plaquettes of the complementary color pair for membranes.
    std::vector<uint32_t> boundary;
    bool closed = false;
};

/// Qubit support of a string or membrane of the given color set.
Support cell_support(const Colex &colex, ColorSet color_set, const PathSpec &path);

void write_colex(std::ostream &out, const Colex &colex);
Colex read_colex(std::istream &in);

}  // namespace tcc

#endif
