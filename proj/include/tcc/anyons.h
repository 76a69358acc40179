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

#ifndef TCC_ANYONS_H
#define TCC_ANYONS_H

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tcc/code.h"

namespace tcc {

/// Anyon label as a bit vector over the model's generators (bit i = generator i).
using Label = uint32_t;

/// Abelian anyon model with Z2 fusion: label group F2^m, a symmetric braiding form and a
/// quadratic spin refinement. Phases are +-1 and stored as bits.
class AnyonModel {
   public:
    AnyonModel() = default;
    /// `pairing[i]` has bit j set when generators i and j braid with -1. `spin` has bit i set
    /// for fermionic generators.
    AnyonModel(std::vector<std::string> names, std::vector<Label> pairing, Label spin = 0);

    size_t rank() const { return names_.size(); }
    size_t size() const { return size_t{1} << rank(); }
    const std::vector<std::string> &generator_names() const { return names_; }

    /// 1 when a and b braid with -1.
    int braid_bit(Label a, Label b) const;
    /// q(a) with q(a + b) = q(a) + q(b) + braid_bit(a, b).
    int spin_bit(Label a) const;
    int braid(Label a, Label b) const { return braid_bit(a, b) ? -1 : 1; }
    int spin(Label a) const { return spin_bit(a) ? -1 : 1; }

    /// Extra names for composite labels (e.g. e_C = e_A e_B), accepted by parse_label.
    void add_alias(const std::string &name, Label a) { aliases_[name] = a; }
    /// "1" for the vacuum, otherwise generator names separated by spaces.
    std::string label_name(Label a) const;
    /// Parses "1", "e_A", "e_A m_B", "e_Am_A", "e_C". Throws std::invalid_argument.
    Label parse_label(const std::string &text) const;

   private:
    std::vector<std::string> names_;
    std::vector<Label> pairing_;
    Label spin_ = 0;
    std::map<std::string, Label> aliases_;
};

/// 2D color code in the basis (e_A, e_B, m_A, m_B); e_C, m_C are aliases.
AnyonModel color_code_anyon_model(int dimension = 2);
/// One toric code: generators e, m.
AnyonModel toric_code_anyon_model();
/// Two decoupled toric codes: e1, m1, e2, m2.
AnyonModel two_toric_code_anyon_model();
/// No anyons at all.
AnyonModel trivial_anyon_model();

/// Linear map on labels, stored by the images of the generators.
struct Wall {
    std::vector<Label> images;

    static Wall identity(size_t m);
    size_t rank() const { return images.size(); }
    Label apply(Label a) const;
    /// (this * o)(a) = this(o(a)).
    Wall operator*(const Wall &o) const;
    bool operator==(const Wall &o) const { return images == o.images; }
    bool operator<(const Wall &o) const { return images < o.images; }
    bool invertible() const;
    /// Throws std::domain_error if not invertible.
    Wall inverse() const;
    /// Rows of the m x m matrix, row i = bit i of every image.
    std::string matrix_str() const;
};

/// Invertible and preserves braiding and spin (checked on generators).
bool preserves_statistics(const AnyonModel &model, const Wall &w);
/// Same test for a map between two models.
bool is_isomorphism(const AnyonModel &from, const AnyonModel &to, const Wall &map);

/// "(a|Ma), ..." over the generators.
std::string action_list(const AnyonModel &model, const Wall &w);
/// Inverse of action_list; every generator must appear exactly once.
Wall parse_action_list(const AnyonModel &model, const std::string &text);

/// All statistics-preserving invertible maps, sorted. Backtracks over generator images in
/// parallel. Needs rank <= 8.
std::vector<Wall> enumerate_transparent_walls(const AnyonModel &model);
/// Brute force over all m x m matrices; single-threaded reference, rank <= 4.
std::vector<Wall> enumerate_transparent_walls_serial(const AnyonModel &model);
/// Every invertible m x m matrix over GF(2), sorted. rank <= 4.
std::vector<Wall> invertible_label_maps(size_t m);

struct WallGroupReport {
    size_t order = 0;
    bool abelian = false;
};

/// Throws std::logic_error if the set is not closed under products or lacks the identity.
WallGroupReport wall_group_structure(const std::vector<Wall> &walls);
/// Closure of the generators under products, sorted.
std::vector<Wall> generated_subgroup(const std::vector<Wall> &generators);
bool is_abelian(const std::vector<Wall> &walls);

/// Walls listed in a fixture file, one "name: action list" per line, '#' comments.
std::vector<std::pair<std::string, Wall>> load_wall_fixture(const AnyonModel &model, const std::string &path);

/// Folded picture of a wall: the pairs (a, Ma) in the doubled model.
struct Condensate {
    std::vector<std::pair<Label, Label>> elements;
    bool bosonic = false;
    bool mutually_trivial = false;
    bool transparent = false;  // no (a, 1) or (1, b) besides the vacuum
    bool lagrangian = false;   // all of the above and |L| = |model|
};

Condensate condensable_set_of_wall(const Wall &w, const AnyonModel &model);

/// Color code to two toric codes: m_A -> m1, m_B -> m2, e_A -> e2, e_B -> e1.
Wall color_to_toric_isomorphism();
/// iso * w * iso^-1.
Wall transport(const Wall &w, const Wall &iso);

enum class Gate { kIdentity, kHadamard, kR2, kT };
std::string gate_name(Gate g);
Gate parse_gate(const std::string &name);

struct AnyonAutomorphism {
    Wall wall;
    std::string gate;
};

/// Conjugates P by the transversal gate (R2 on T, its inverse on the complement).
/// Throws std::runtime_error if the result is not a Pauli.
Pauli conjugate_by_gate(const ColorCode &code, Gate g, const Pauli &P);

/// Label automorphism of a 2D color code induced by a gate word U = g_0 g_1 ... (g_last acts
/// first). Each generator's canonical single-edge string is conjugated by U and the label is
/// read off the syndrome at one endpoint. Throws std::invalid_argument for non-2D codes,
/// std::domain_error if a gate does not preserve the codespace and std::runtime_error if the
/// conjugated string is not string-like.
AnyonAutomorphism automorphism_from_gate(const ColorCode &code, const std::vector<Gate> &word);
AnyonAutomorphism automorphism_from_gate(const ColorCode &code, Gate g);

}  // namespace tcc

#endif
