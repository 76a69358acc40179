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

#ifndef TCC_PAULI_H
#define TCC_PAULI_H

#include <string>

#include "tcc/f2.h"

namespace tcc {

/// i^phase * X^x * Z^z (X applied after Z). phase is taken mod 4.
struct Pauli {
    BinVec x;
    BinVec z;
    uint8_t phase = 0;

    Pauli() = default;
    explicit Pauli(size_t n) : x(n), z(n) {}
    Pauli(BinVec x_, BinVec z_, uint8_t phase_ = 0);

    static Pauli X(size_t n, const BinVec &support);
    static Pauli Z(size_t n, const BinVec &support);
    /// Parses strings like "+XYZI" or "-iX_Z"; '_' and 'I' are identity.
    static Pauli parse(const std::string &text);

    size_t size() const { return x.size(); }
    bool is_identity_up_to_phase() const { return x.is_zero() && z.is_zero(); }
    bool operator==(const Pauli &o) const { return x == o.x && z == o.z && phase == o.phase; }
    Pauli adjoint() const;
    std::string str() const;
};

/// Operator product P*Q with exact phase.
Pauli pauli_product(const Pauli &P, const Pauli &Q);

/// True iff P and Q commute.
bool symplectic_commute(const Pauli &P, const Pauli &Q);

}  // namespace tcc

#endif
