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

#include "tcc/phasepoly.h"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace tcc {

PhasePolynomial::PhasePolynomial(size_t num_vars, int level) : n_(num_vars), level_(level) {
    if (level < 1 || level > 3) {
        throw std::invalid_argument("phase polynomial level must be 1, 2 or 3, got " + std::to_string(level));
    }
}

void PhasePolynomial::add_term(Monomial m, int64_t c) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    if (!m.empty() && m.back() >= n_) {
        throw std::invalid_argument("monomial variable " + std::to_string(m.back()) + " out of range");
    }
    const int64_t mod = modulus();
    int64_t r = c % mod;
    if (r < 0) {
        r += mod;
    }
    if (r == 0) {
        return;
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), static_cast<uint32_t>(r));
        return;
    }
    it->second = static_cast<uint32_t>((it->second + r) % mod);
    if (it->second == 0) {
        terms_.erase(it);
    }
}

int64_t PhasePolynomial::coefficient(const Monomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

PhasePolynomial PhasePolynomial::without_constant() const {
    PhasePolynomial p = *this;
    p.terms_.erase(Monomial{});
    return p;
}

bool PhasePolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

int PhasePolynomial::degree() const {
    int d = 0;
    for (const auto &[m, c] : terms_) {
        d = std::max(d, static_cast<int>(m.size()));
    }
    return d;
}

int PhasePolynomial::clifford_level() const {
    int best = 0;
    for (const auto &[m, c] : terms_) {
        if (m.empty()) {
            continue;
        }
        best = std::max(best, static_cast<int>(m.size()) + level_ - 1 - std::countr_zero(c));
    }
    return best;
}

uint32_t PhasePolynomial::evaluate(const BinVec &v) const {
    if (v.size() != n_) {
        throw std::invalid_argument("evaluate: expected " + std::to_string(n_) + " bits");
    }
    uint32_t s = 0;
    for (const auto &[m, c] : terms_) {
        if (std::all_of(m.begin(), m.end(), [&](uint32_t j) { return v.get(j); })) {
            s += c;
        }
    }
    return s % modulus();
}

PhasePolynomial PhasePolynomial::shift(const BinVec &x) const {
    if (x.size() != n_) {
        throw std::invalid_argument("shift: expected " + std::to_string(n_) + " bits");
    }
    PhasePolynomial out(n_, level_);
    for (const auto &[m, c] : terms_) {
        Monomial fixed, flipped;
        for (uint32_t j : m) {
            (x.get(j) ? flipped : fixed).push_back(j);
        }
        // prod_{j in flipped} (1 - v_j) = sum_R (-1)^|R| v_R.
        const size_t f = flipped.size();
        for (uint64_t mask = 0; mask < (uint64_t{1} << f); mask++) {
            Monomial mono = fixed;
            for (size_t b = 0; b < f; b++) {
                if ((mask >> b) & 1) {
                    mono.push_back(flipped[b]);
                }
            }
            out.add_term(std::move(mono), (std::popcount(mask) & 1) ? -int64_t(c) : int64_t(c));
        }
    }
    return out;
}

PhasePolynomial PhasePolynomial::at_level(int k) const {
    PhasePolynomial out(n_, k);
    if (k >= level_) {
        for (const auto &[m, c] : terms_) {
            out.add_term(m, int64_t(c) << (k - level_));
        }
        return out;
    }
    const uint32_t div = 1u << (level_ - k);
    for (const auto &[m, c] : terms_) {
        if (c % div) {
            throw std::domain_error("at_level: coefficient " + std::to_string(c) + " not representable at level " +
                                    std::to_string(k));
        }
        out.add_term(m, c / div);
    }
    return out;
}

PhasePolynomial PhasePolynomial::substitute(const BinMat &M) const {
    if (M.num_cols() != n_) {
        throw std::invalid_argument("substitute: matrix has " + std::to_string(M.num_cols()) + " columns, expected " +
                                    std::to_string(n_));
    }
    const size_t r = M.num_rows();
    const int64_t mod = modulus();
    // v_j = xor_{i in col_j} u_i = sum_{T nonempty} (-2)^{|T|-1} u_T, truncated mod 2^level.
    std::vector<std::vector<size_t>> col(n_);
    for (size_t i = 0; i < r; i++) {
        for (size_t j : M.row(i).ones()) {
            col[j].push_back(i);
        }
    }
    using Poly = std::map<Monomial, int64_t>;
    std::map<uint32_t, Poly> cache;
    auto expand_var = [&](uint32_t j) -> const Poly & {
        auto it = cache.find(j);
        if (it != cache.end()) {
            return it->second;
        }
        Poly p;
        const auto &rows = col[j];
        // Subsets up to size `level_`; larger ones carry a factor 2^level.
        std::vector<size_t> pick;
        auto rec = [&](auto &&self, size_t start) -> void {
            if (!pick.empty()) {
                int64_t c = 1;
                for (size_t s = 1; s < pick.size(); s++) {
                    c *= -2;
                }
                Monomial m(pick.begin(), pick.end());
                p[m] = ((p[m] + c) % mod + mod) % mod;
            }
            if (static_cast<int>(pick.size()) == level_) {
                return;
            }
            for (size_t s = start; s < rows.size(); s++) {
                pick.push_back(rows[s]);
                self(self, s + 1);
                pick.pop_back();
            }
        };
        rec(rec, 0);
        return cache.emplace(j, std::move(p)).first->second;
    };
    auto multiply = [&](const Poly &a, const Poly &b) {
        Poly out;
        for (const auto &[ma, ca] : a) {
            for (const auto &[mb, cb] : b) {
                Monomial m;
                std::set_union(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
                int64_t &slot = out[m];
                slot = (slot + ca * cb) % mod;
            }
        }
        for (auto it = out.begin(); it != out.end();) {
            it = (it->second == 0) ? out.erase(it) : std::next(it);
        }
        return out;
    };
    PhasePolynomial out(r, level_);
    for (const auto &[m, c] : terms_) {
        Poly acc{{Monomial{}, int64_t(c)}};
        for (uint32_t j : m) {
            acc = multiply(acc, expand_var(j));
            if (acc.empty()) {
                break;
            }
        }
        for (const auto &[mm, cc] : acc) {
            out.add_term(mm, cc);
        }
    }
    return out;
}

void PhasePolynomial::check_compatible(const PhasePolynomial &o) const {
    if (n_ != o.n_ || level_ != o.level_) {
        throw std::invalid_argument("phase polynomials differ in size or level");
    }
}

PhasePolynomial PhasePolynomial::operator+(const PhasePolynomial &o) const {
    check_compatible(o);
    PhasePolynomial out = *this;
    for (const auto &[m, c] : o.terms_) {
        out.add_term(m, c);
    }
    return out;
}

PhasePolynomial PhasePolynomial::operator-() const {
    PhasePolynomial out(n_, level_);
    for (const auto &[m, c] : terms_) {
        out.add_term(m, -int64_t(c));
    }
    return out;
}

PhasePolynomial PhasePolynomial::operator-(const PhasePolynomial &o) const { return *this + (-o); }

std::string PhasePolynomial::str() const {
    std::ostringstream os;
    os << "k=" << level_ << ":";
    if (terms_.empty()) {
        os << " 0";
    }
    bool first = true;
    for (const auto &[m, c] : terms_) {
        os << (first ? " " : " + ") << c;
        first = false;
        for (uint32_t j : m) {
            os << "*v" << j;
        }
    }
    return os.str();
}

PhasePolynomial transversal_phase_poly(const ColorCode &code, int level, const BinVec &region) {
    if (level < 2 || level > 3) {
        throw std::invalid_argument("transversal phase gates are modelled at levels 2 and 3 only");
    }
    if (region.size() != 0 && region.size() != code.n) {
        throw std::invalid_argument("region length does not match the code");
    }
    PhasePolynomial p(code.n, level);
    const auto &in_T = code.colex->in_T;
    for (uint32_t j = 0; j < code.n; j++) {
        if (region.size() == 0 || region.get(j)) {
            p.add_term({j}, in_T[j] ? 1 : -1);
        }
    }
    return p;
}

PhasePolynomial cz_poly(size_t n, uint32_t a, uint32_t b) {
    PhasePolynomial p(n, 3);
    p.add_term({a, b}, 4);
    return p;
}

}  // namespace tcc
