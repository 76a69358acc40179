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

#ifndef TCC_PHASEPOLY_H
#define TCC_PHASEPOLY_H

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tcc/code.h"
#include "tcc/cyclo.h"

namespace tcc {

/// theta(v) = sum_S c_S prod_{j in S} v_j  (mod 2^level), v in F_2^n.
/// The operator is diag(w_k^theta(v)) with w_k = exp(i pi / 2^(level-1)).
class PhasePolynomial {
   public:
    using Monomial = std::vector<uint32_t>;  // sorted, distinct; empty = constant term

    PhasePolynomial() = default;
    PhasePolynomial(size_t num_vars, int level);

    size_t num_vars() const { return n_; }
    int level() const { return level_; }
    uint32_t modulus() const { return 1u << level_; }

    /// Adds c * prod_{j in m} v_j; repeated indices collapse (v_j^2 = v_j).
    void add_term(Monomial m, int64_t c);
    int64_t coefficient(const Monomial &m) const;
    const std::map<Monomial, uint32_t> &terms() const { return terms_; }
    uint32_t constant() const { return coefficient({}); }
    PhasePolynomial without_constant() const;

    bool is_constant() const;
    /// Largest monomial size among non-constant terms (0 for a constant).
    int degree() const;
    /// Smallest m with the diagonal in the m-th level of the Clifford hierarchy (0 for a
    /// global phase): max over terms of |S| + level - 1 - v2(c_S).
    int clifford_level() const;

    uint32_t evaluate(const BinVec &v) const;
    /// theta(v xor x).
    PhasePolynomial shift(const BinVec &x) const;
    /// Same operator expressed at a higher level (coefficients scaled by 2^(k - level)).
    PhasePolynomial at_level(int k) const;
    /// theta(u M) as a polynomial in u (one variable per row of M).
    PhasePolynomial substitute(const BinMat &M) const;

    PhasePolynomial operator+(const PhasePolynomial &o) const;
    PhasePolynomial operator-(const PhasePolynomial &o) const;
    PhasePolynomial operator-() const;
    bool operator==(const PhasePolynomial &o) const {
        return n_ == o.n_ && level_ == o.level_ && terms_ == o.terms_;
    }
    /// e.g. "k=3: 1*v0 + 7*v1 + 4*v0v2".
    std::string str() const;

   private:
    void check_compatible(const PhasePolynomial &o) const;
    size_t n_ = 0;
    int level_ = 1;
    std::map<Monomial, uint32_t> terms_;
};

/// sum_{j in T cap V} v_j - sum_{j in T^c cap V} v_j at the given level (2 or 3).
/// `region` may be empty-length to mean all qubits.
PhasePolynomial transversal_phase_poly(const ColorCode &code, int level, const BinVec &region = BinVec());

/// Level-3 diagonal of one CZ: 4 v_a v_b.
PhasePolynomial cz_poly(size_t n, uint32_t a, uint32_t b);

/// X^x * diag(w8^theta(v)) with theta at level 3; the global phase lives in the constant term.
struct MixedOperator {
    BinVec x;
    PhasePolynomial diag;

    MixedOperator() = default;
    MixedOperator(BinVec x_, PhasePolynomial diag_);
    static MixedOperator identity(size_t n);
    static MixedOperator from_pauli(const Pauli &P);
    static MixedOperator from_diagonal(const PhasePolynomial &D);

    size_t size() const { return x.size(); }
    MixedOperator operator*(const MixedOperator &o) const;
    MixedOperator adjoint() const;
    bool operator==(const MixedOperator &o) const { return x == o.x && diag == o.diag; }
    bool equal_up_to_phase(const MixedOperator &o) const;
    /// Pauli form when the diagonal is Pauli-Z-like (linear terms in {0,4}, even constant).
    std::optional<Pauli> to_pauli() const;
    /// Acts as a global phase w8^k on all states; returns k.
    std::optional<uint32_t> global_phase() const;
    std::string str() const;
};

/// K(U, V) = U V U^dag V^dag.
MixedOperator group_commutator(const MixedOperator &U, const MixedOperator &V);
/// K(D, P); its diagonal is theta(v) - theta(v xor x_P).
MixedOperator pauli_commutator(const PhasePolynomial &D, const Pauli &P);

/// Cached data for codespace questions: X generators, logical X representatives and
/// the row-space test.
class Codespace {
   public:
    explicit Codespace(const ColorCode &code);
    const ColorCode &code() const { return *code_; }
    const GroundState &generators() const { return gens_; }
    const BinMat &logicals() const { return logicals_; }
    size_t k() const { return logicals_.num_rows(); }
    /// True iff x is a product of X checks.
    bool in_x_rowspace(const BinVec &x) const;
    /// Rows of G followed by rows of L.
    const BinMat &span_matrix() const { return span_; }

   private:
    const ColorCode *code_;
    GroundState gens_;
    BinMat logicals_;
    BinMat span_;
    F2Basis row_basis_;
};

/// Exact result of a commutator: a phase w8^k on the codespace, or an operator.
struct ScalarOrOperator {
    bool is_scalar = false;
    uint32_t phase8 = 0;  // valid when is_scalar
    MixedOperator op;
    Cyclo value() const { return Cyclo::omega(static_cast<int>(phase8)); }
};

/// w8^k if M acts as that phase on every codespace state; decided symbolically.
std::optional<uint32_t> scalar_on_codespace(const Codespace &cs, const MixedOperator &M);

/// K(...K(K(o1, o2), o3)..., om). Reduced to a scalar when `cs` is given and the result is
/// a phase on the codespace (or, without `cs`, a global phase).
ScalarOrOperator sequential_commutator(const std::vector<MixedOperator> &ops, const Codespace *cs = nullptr);

enum class Method { kAuto, kSymbolic, kEnumerate };

/// True iff D maps the codespace to itself. Symbolic: theta(u G + w L) has no monomial that
/// involves a u variable. Enumeration (k = 0, r <= 20): theta(u G) constant over u.
bool preserves_codespace(const Codespace &cs, const PhasePolynomial &D, Method method = Method::kAuto);

/// Thrown when an exact evaluation would need more than 2^20 terms.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// counts[c] = #{u in F_2^m : P(u) = c} for a polynomial in m <= 30 variables.
std::vector<uint64_t> phase_histogram(const PhasePolynomial &P);
/// Single-threaded reference for phase_histogram.
std::vector<uint64_t> phase_histogram_serial(const PhasePolynomial &P);

/// <gs|M|gs> exactly. Requires k = 0. Enumerates u when r <= 20; otherwise factors out
/// variables occurring only in linear terms and enumerates the rest (ResourceError if > 20).
Cyclo ground_expectation(const Codespace &cs, const MixedOperator &M);

}  // namespace tcc

#endif
