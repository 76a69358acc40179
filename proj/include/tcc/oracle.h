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

#ifndef TCC_ORACLE_H
#define TCC_ORACLE_H

#include <complex>
#include <vector>

#include "tcc/phasepoly.h"

namespace tcc {

using Amplitudes = std::vector<std::complex<double>>;

/// Dense state vector on at most kMaxDenseQubits qubits; bit j of the index is qubit j.
constexpr size_t kMaxDenseQubits = 20;

struct DenseState {
    size_t n = 0;
    Amplitudes amp;
};

/// Computational basis state |0...0>. ResourceError above kMaxDenseQubits.
DenseState dense_zero_state(size_t n);
/// Applies (1 + X^g)/sqrt(2) for each independent X check g to |0...0>.
DenseState dense_ground_state(const ColorCode &code);
/// In place: |v> -> w8^theta(v) |v xor x>.
void dense_apply(DenseState &psi, const MixedOperator &M);
/// Single-threaded reference for dense_apply.
void dense_apply_serial(DenseState &psi, const MixedOperator &M);
std::complex<double> dense_inner(const DenseState &a, const DenseState &b);

/// Ground state followed by `ops` in order.
DenseState dense_statevector_oracle(const ColorCode &code, const std::vector<MixedOperator> &ops);

/// Expectation <psi|P|psi> of a Pauli.
std::complex<double> dense_pauli_expectation(const DenseState &psi, const Pauli &P);

/// Unnormalized Walsh-Hadamard transform: f^(p) = sum_u (-1)^{p.u} f(u).
void walsh_hadamard(Amplitudes &f);
void walsh_hadamard_serial(Amplitudes &f);

}  // namespace tcc

#endif
