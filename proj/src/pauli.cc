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

#include "tcc/pauli.h"

#include <stdexcept>

namespace tcc {

Pauli::Pauli(BinVec x_, BinVec z_, uint8_t phase_) : x(std::move(x_)), z(std::move(z_)), phase(phase_ & 3) {
    if (x.size() != z.size()) {
        throw std::invalid_argument("Pauli: x/z length mismatch");
    }
}

Pauli Pauli::X(size_t n, const BinVec &support) { return Pauli(support, BinVec(n)); }

Pauli Pauli::Z(size_t n, const BinVec &support) { return Pauli(BinVec(n), support); }

Pauli Pauli::parse(const std::string &text) {
    size_t k = 0;
    uint8_t phase = 0;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        phase = text[k] == '-' ? 2 : 0;
        k++;
    }
    if (k < text.size() && text[k] == 'i') {
        phase = (phase + 1) & 3;
        k++;
    }
    size_t n = text.size() - k;
    Pauli p(n);
    for (size_t q = 0; q < n; q++) {
        char c = text[k + q];
        switch (c) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.x.set(q);
                break;
            case 'Z':
                p.z.set(q);
                break;
            case 'Y':
                // Y = i X Z
                p.x.set(q);
                p.z.set(q);
                phase = (phase + 1) & 3;
                break;
            default:
                throw std::invalid_argument("bad Pauli character '" + std::string(1, c) + "'");
        }
    }
    p.phase = phase;
    return p;
}

Pauli Pauli::adjoint() const {
    // (X^x Z^z)^dagger = Z^z X^x = (-1)^{x.z} X^x Z^z
    uint8_t ph = static_cast<uint8_t>((4 - phase) & 3);
    if (x.dot(z)) {
        ph = (ph + 2) & 3;
    }
    return Pauli(x, z, ph);
}

std::string Pauli::str() const {
    // Render with Y letters; each Y absorbs one factor of i.
    int ph = phase;
    std::string body(size(), '_');
    for (size_t q = 0; q < size(); q++) {
        bool a = x.get(q), b = z.get(q);
        if (a && b) {
            body[q] = 'Y';
            ph -= 1;
        } else if (a) {
            body[q] = 'X';
        } else if (b) {
            body[q] = 'Z';
        }
    }
    ph = ((ph % 4) + 4) % 4;
    static const char *prefix[] = {"+", "+i", "-", "-i"};
    return prefix[ph] + body;
}

Pauli pauli_product(const Pauli &P, const Pauli &Q) {
    if (P.size() != Q.size()) {
        throw std::invalid_argument("pauli_product: length mismatch");
    }
    // X^a Z^b X^c Z^d = (-1)^{b.c} X^{a+c} Z^{b+d}
    uint8_t ph = static_cast<uint8_t>(P.phase + Q.phase + (P.z.dot(Q.x) ? 2 : 0));
    return Pauli(P.x ^ Q.x, P.z ^ Q.z, ph);
}

bool symplectic_commute(const Pauli &P, const Pauli &Q) {
    if (P.size() != Q.size()) {
        throw std::invalid_argument("symplectic_commute: length mismatch");
    }
    return P.x.dot(Q.z) == P.z.dot(Q.x);
}

}  // namespace tcc
