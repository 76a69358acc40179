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

#include "tcc/oracle.h"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace tcc {

namespace {

struct DenseDiag {
    std::vector<std::pair<uint32_t, uint32_t>> terms;  // (mask, coefficient)
    uint32_t x = 0;
};

DenseDiag compile(const DenseState &psi, const MixedOperator &M) {
    if (M.size() != psi.n) {
        throw std::invalid_argument("dense_apply: operator and state differ in size");
    }
    DenseDiag d;
    for (size_t j : M.x.ones()) {
        d.x |= 1u << j;
    }
    for (const auto &[m, c] : M.diag.terms()) {
        uint32_t mask = 0;
        for (uint32_t j : m) {
            mask |= 1u << j;
        }
        d.terms.emplace_back(mask, c);
    }
    return d;
}

std::complex<double> omega8(uint32_t k) { return std::polar(1.0, M_PI * (k & 7) / 4.0); }

uint32_t phase_at(const DenseDiag &d, uint32_t v) {
    uint32_t s = 0;
    for (const auto &[mask, c] : d.terms) {
        if ((v & mask) == mask) {
            s += c;
        }
    }
    return s & 7;
}

}  // namespace

DenseState dense_zero_state(size_t n) {
    if (n > kMaxDenseQubits) {
        throw ResourceError("dense oracle limited to " + std::to_string(kMaxDenseQubits) + " qubits, got " +
                            std::to_string(n));
    }
    DenseState psi;
    psi.n = n;
    psi.amp.assign(size_t{1} << n, 0.0);
    psi.amp[0] = 1.0;
    return psi;
}

DenseState dense_ground_state(const ColorCode &code) {
    DenseState psi = dense_zero_state(code.n);
    GroundState gs = x_generators(code);
    const double s = 1.0 / std::sqrt(2.0);
    Amplitudes next(psi.amp.size());
    for (const BinVec &g : gs.G.rows()) {
        uint32_t mask = 0;
        for (size_t j : g.ones()) {
            mask |= 1u << j;
        }
        const int64_t dim = static_cast<int64_t>(psi.amp.size());
#pragma omp parallel for schedule(static)
        for (int64_t v = 0; v < dim; v++) {
            next[v] = s * (psi.amp[v] + psi.amp[v ^ mask]);
        }
        psi.amp.swap(next);
    }
    return psi;
}

void dense_apply(DenseState &psi, const MixedOperator &M) {
    DenseDiag d = compile(psi, M);
    Amplitudes out(psi.amp.size());
    const int64_t dim = static_cast<int64_t>(psi.amp.size());
#pragma omp parallel for schedule(static)
    for (int64_t v = 0; v < dim; v++) {
        out[static_cast<uint32_t>(v) ^ d.x] = omega8(phase_at(d, static_cast<uint32_t>(v))) * psi.amp[v];
    }
    psi.amp.swap(out);
}

void dense_apply_serial(DenseState &psi, const MixedOperator &M) {
    DenseDiag d = compile(psi, M);
    Amplitudes out(psi.amp.size());
    for (uint32_t v = 0; v < psi.amp.size(); v++) {
        out[v ^ d.x] = omega8(phase_at(d, v)) * psi.amp[v];
    }
    psi.amp.swap(out);
}

std::complex<double> dense_inner(const DenseState &a, const DenseState &b) {
    if (a.n != b.n) {
        throw std::invalid_argument("dense_inner: size mismatch");
    }
    double re = 0, im = 0;
    const int64_t dim = static_cast<int64_t>(a.amp.size());
#pragma omp parallel for reduction(+ : re, im) schedule(static)
    for (int64_t v = 0; v < dim; v++) {
        std::complex<double> z = std::conj(a.amp[v]) * b.amp[v];
        re += z.real();
        im += z.imag();
    }
    return {re, im};
}

DenseState dense_statevector_oracle(const ColorCode &code, const std::vector<MixedOperator> &ops) {
    DenseState psi = dense_ground_state(code);
    for (const MixedOperator &M : ops) {
        dense_apply(psi, M);
    }
    return psi;
}

std::complex<double> dense_pauli_expectation(const DenseState &psi, const Pauli &P) {
    DenseState phi = psi;
    dense_apply(phi, MixedOperator::from_pauli(P));
    return dense_inner(psi, phi);
}

void walsh_hadamard_serial(Amplitudes &f) {
    const size_t dim = f.size();
    if (dim & (dim - 1)) {
        throw std::invalid_argument("walsh_hadamard: length must be a power of two");
    }
    for (size_t h = 1; h < dim; h <<= 1) {
        for (size_t i = 0; i < dim; i += 2 * h) {
            for (size_t j = i; j < i + h; j++) {
                std::complex<double> a = f[j], b = f[j + h];
                f[j] = a + b;
                f[j + h] = a - b;
            }
        }
    }
}

void walsh_hadamard(Amplitudes &f) {
    const int64_t dim = static_cast<int64_t>(f.size());
    if (dim & (dim - 1)) {
        throw std::invalid_argument("walsh_hadamard: length must be a power of two");
    }
    for (int64_t h = 1; h < dim; h <<= 1) {
        // Butterflies of one stage are independent.
#pragma omp parallel for schedule(static)
        for (int64_t k = 0; k < dim / 2; k++) {
            int64_t j = (k / h) * 2 * h + (k % h);
            std::complex<double> a = f[j], b = f[j + h];
            f[j] = a + b;
            f[j + h] = a - b;
        }
    }
}

}  // namespace tcc
