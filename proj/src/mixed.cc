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

#include <omp.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tcc/phasepoly.h"

namespace tcc {

MixedOperator::MixedOperator(BinVec x_, PhasePolynomial diag_) : x(std::move(x_)), diag(diag_.at_level(3)) {
    if (diag.num_vars() != x.size()) {
        throw std::invalid_argument("mixed operator: X part and diagonal differ in size");
    }
}

MixedOperator MixedOperator::identity(size_t n) { return MixedOperator(BinVec(n), PhasePolynomial(n, 3)); }

MixedOperator MixedOperator::from_pauli(const Pauli &P) {
    PhasePolynomial d(P.size(), 3);
    d.add_term({}, 2 * P.phase);
    for (size_t j : P.z.ones()) {
        d.add_term({static_cast<uint32_t>(j)}, 4);
    }
    return MixedOperator(P.x, d);
}

MixedOperator MixedOperator::from_diagonal(const PhasePolynomial &D) { return MixedOperator(BinVec(D.num_vars()), D); }

MixedOperator MixedOperator::operator*(const MixedOperator &o) const {
    // (X^a D_a)(X^b D_b) = X^{a+b} D_a(v + b) D_b.
    return MixedOperator(x ^ o.x, diag.shift(o.x) + o.diag);
}

MixedOperator MixedOperator::adjoint() const { return MixedOperator(x, -diag.shift(x)); }

bool MixedOperator::equal_up_to_phase(const MixedOperator &o) const {
    return x == o.x && diag.without_constant() == o.diag.without_constant();
}

std::optional<Pauli> MixedOperator::to_pauli() const {
    Pauli P(size());
    P.x = x;
    for (const auto &[m, c] : diag.terms()) {
        if (m.empty()) {
            if (c % 2) {
                return std::nullopt;
            }
            P.phase = static_cast<uint8_t>(c / 2);
        } else if (m.size() == 1 && c == 4) {
            P.z.set(m[0]);
        } else {
            return std::nullopt;
        }
    }
    return P;
}

std::optional<uint32_t> MixedOperator::global_phase() const {
    if (!x.is_zero() || !diag.is_constant()) {
        return std::nullopt;
    }
    return diag.constant();
}

std::string MixedOperator::str() const {
    std::ostringstream os;
    os << "X{";
    bool first = true;
    for (size_t j : x.ones()) {
        os << (first ? "" : ",") << j;
        first = false;
    }
    os << "} diag[" << diag.str() << "]";
    return os.str();
}

MixedOperator group_commutator(const MixedOperator &U, const MixedOperator &V) {
    return U * V * U.adjoint() * V.adjoint();
}

MixedOperator pauli_commutator(const PhasePolynomial &D, const Pauli &P) {
    return group_commutator(MixedOperator::from_diagonal(D), MixedOperator::from_pauli(P));
}

Codespace::Codespace(const ColorCode &code)
    : code_(&code),
      gens_(x_generators(code)),
      logicals_(logical_x_representatives(code)),
      span_(gens_.G),
      row_basis_(code.n, std::max<size_t>(gens_.r, 1)) {
    for (const BinVec &l : logicals_.rows()) {
        span_.push_row(l);
    }
    for (size_t i = 0; i < gens_.r; i++) {
        row_basis_.add(gens_.G.row(i), i);
    }
}

bool Codespace::in_x_rowspace(const BinVec &x) const { return x.is_zero() || row_basis_.reduce(x); }

std::optional<uint32_t> scalar_on_codespace(const Codespace &cs, const MixedOperator &M) {
    if (!cs.in_x_rowspace(M.x)) {
        return std::nullopt;
    }
    PhasePolynomial q = M.diag.substitute(cs.span_matrix());
    if (!q.is_constant()) {
        return std::nullopt;
    }
    return q.constant();
}

ScalarOrOperator sequential_commutator(const std::vector<MixedOperator> &ops, const Codespace *cs) {
    if (ops.size() < 2) {
        throw std::invalid_argument("sequential_commutator needs at least two operators");
    }
    MixedOperator acc = group_commutator(ops[0], ops[1]);
    for (size_t i = 2; i < ops.size(); i++) {
        acc = group_commutator(acc, ops[i]);
    }
    ScalarOrOperator out;
    out.op = acc;
    std::optional<uint32_t> phase = cs ? scalar_on_codespace(*cs, acc) : acc.global_phase();
    if (phase) {
        out.is_scalar = true;
        out.phase8 = *phase;
    }
    return out;
}

namespace {

struct MaskTerm {
    uint32_t mask;
    uint32_t coeff;
};

std::vector<MaskTerm> mask_terms(const PhasePolynomial &P) {
    if (P.num_vars() > 30) {
        throw ResourceError("phase histogram over " + std::to_string(P.num_vars()) + " variables");
    }
    std::vector<MaskTerm> t;
    for (const auto &[m, c] : P.terms()) {
        uint32_t mask = 0;
        for (uint32_t j : m) {
            mask |= 1u << j;
        }
        t.push_back({mask, c});
    }
    return t;
}

uint32_t eval_masks(const std::vector<MaskTerm> &terms, uint32_t u, uint32_t mod_mask) {
    uint32_t s = 0;
    for (const MaskTerm &t : terms) {
        if ((u & t.mask) == t.mask) {
            s += t.coeff;
        }
    }
    return s & mod_mask;
}

}  // namespace

std::vector<uint64_t> phase_histogram_serial(const PhasePolynomial &P) {
    auto terms = mask_terms(P);
    std::vector<uint64_t> counts(P.modulus(), 0);
    const uint64_t total = uint64_t{1} << P.num_vars();
    for (uint64_t u = 0; u < total; u++) {
        counts[eval_masks(terms, static_cast<uint32_t>(u), P.modulus() - 1)]++;
    }
    return counts;
}

std::vector<uint64_t> phase_histogram(const PhasePolynomial &P) {
    auto terms = mask_terms(P);
    const uint32_t mod = P.modulus();
    const int64_t total = int64_t{1} << P.num_vars();
    std::vector<uint64_t> counts(mod, 0);
#pragma omp parallel
    {
        std::vector<uint64_t> local(mod, 0);
#pragma omp for schedule(static)
        for (int64_t u = 0; u < total; u++) {
            local[eval_masks(terms, static_cast<uint32_t>(u), mod - 1)]++;
        }
#pragma omp critical
        for (uint32_t c = 0; c < mod; c++) {
            counts[c] += local[c];
        }
    }
    return counts;
}

bool preserves_codespace(const Codespace &cs, const PhasePolynomial &D, Method method) {
    const size_t r = cs.generators().r;
    if (method == Method::kEnumerate) {
        if (cs.k() != 0) {
            throw std::domain_error("enumeration check needs a code without logical qubits");
        }
        if (r > 20) {
            throw ResourceError("enumeration over 2^" + std::to_string(r) + " stabilizer elements");
        }
        auto counts = phase_histogram(D.substitute(cs.generators().G));
        return std::count_if(counts.begin(), counts.end(), [](uint64_t c) { return c != 0; }) == 1;
    }
    PhasePolynomial q = D.substitute(cs.span_matrix());
    for (const auto &[m, c] : q.terms()) {
        if (!m.empty() && m.front() < r) {
            return false;
        }
    }
    return true;
}

Cyclo ground_expectation(const Codespace &cs, const MixedOperator &M) {
    if (cs.k() != 0) {
        throw std::domain_error("ground_expectation needs a unique ground state (k = 0)");
    }
    if (!cs.in_x_rowspace(M.x)) {
        return Cyclo(0);
    }
    const size_t r = cs.generators().r;
    PhasePolynomial q = M.diag.substitute(cs.generators().G);
    // Variables that appear only in linear terms factor out: sum_{u_i} w^{c u_i} = 1 + w^c.
    std::vector<int> in_higher(r, 0);
    for (const auto &[m, c] : q.terms()) {
        if (m.size() > 1) {
            for (uint32_t j : m) {
                in_higher[j] = 1;
            }
        }
    }
    Cyclo factor = Cyclo::omega(static_cast<int>(q.constant())) * Cyclo::inv_sqrt2_pow(static_cast<int>(2 * r));
    std::vector<uint32_t> rest;
    for (uint32_t j = 0; j < r; j++) {
        if (in_higher[j]) {
            rest.push_back(j);
        } else {
            factor *= Cyclo(1) + Cyclo::omega(static_cast<int>(q.coefficient({j})));
        }
    }
    if (factor.is_zero() || rest.empty()) {
        return factor;
    }
    if (rest.size() > 20) {
        throw ResourceError("ground_expectation: " + std::to_string(rest.size()) +
                            " coupled variables remain after factoring");
    }
    std::vector<uint32_t> pos(r, 0);
    for (size_t i = 0; i < rest.size(); i++) {
        pos[rest[i]] = static_cast<uint32_t>(i);
    }
    PhasePolynomial sub(rest.size(), 3);
    for (const auto &[m, c] : q.terms()) {
        if (!m.empty() && in_higher[m[0]]) {
            PhasePolynomial::Monomial mm;
            for (uint32_t j : m) {
                mm.push_back(pos[j]);
            }
            sub.add_term(mm, c);
        }
    }
    auto counts = phase_histogram(sub);
    Cyclo sum(0);
    for (uint32_t c = 0; c < 8; c++) {
        if (counts[c]) {
            sum += Cyclo(static_cast<int64_t>(counts[c])) * Cyclo::omega(static_cast<int>(c));
        }
    }
    return factor * sum;
}

}  // namespace tcc
