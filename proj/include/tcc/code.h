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

#ifndef TCC_CODE_H
#define TCC_CODE_H

#include <array>
#include <iosfwd>
#include <memory>

#include "tcc/colex.h"
#include "tcc/pauli.h"

namespace tcc {

/// CSS color code on a colex. X checks sit on top cells (plaquettes in 2D, volumes in 3D),
/// Z checks on plaquettes.
struct ColorCode {
    std::shared_ptr<const Colex> colex;
    size_t n = 0;
    BinMat hx;
    BinMat hz;
    std::vector<ColorSet> x_colors;
    std::vector<ColorSet> z_colors;
};

/// Throws std::logic_error naming the first X/Z check pair with odd overlap.
ColorCode build_color_code(const Colex &colex);

struct CodeParameters {
    size_t n = 0;
    size_t k = 0;
    size_t rank_x = 0;
    size_t rank_z = 0;
};
CodeParameters code_parameters(const ColorCode &code);

/// |gs> = 2^{-r/2} sum_u |u G> for the independent X rows G.
struct GroundState {
    BinMat G;
    std::vector<size_t> rows;  // X-check rows forming G
    size_t r = 0;
};

/// Throws std::domain_error when the code has logical qubits.
GroundState ground_state(const ColorCode &code);
/// Independent X rows, without the k = 0 requirement.
GroundState x_generators(const ColorCode &code);
/// Representatives of the logical X operators: ker(hz) modulo the X row space.
BinMat logical_x_representatives(const ColorCode &code);

struct Syndrome {
    BinVec x_violated;  // X checks anticommuting with the Z part
    BinVec z_violated;  // Z checks anticommuting with the X part
    /// Violated X checks per single color (index 0..3).
    std::array<size_t, 4> x_counts_by_color() const;
    std::vector<ColorSet> x_colors;
};

Syndrome syndrome_of(const ColorCode &code, const Pauli &P);

/// True iff P is +1 (sign = 1) or -1 (sign = -1) times a stabilizer; sign = 0 otherwise.
int stabilizer_sign(const ColorCode &code, const Pauli &P);

enum class PauliKind { kX, kZ };

/// Pauli string (edges) or membrane (plaquettes) of the given color set.
Pauli string_or_membrane_operator(const ColorCode &code, ColorSet color_set, const PathSpec &path, PauliKind kind);

/// Plain-text CSS export: header line, then one line of qubit indices per check.
void write_css(std::ostream &out, const ColorCode &code);

}  // namespace tcc

#endif
