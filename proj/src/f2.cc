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

#include "tcc/f2.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tcc {

BinVec::BinVec(size_t n) : n_(n), words_((n + 63) / 64, 0) {}

BinVec BinVec::from_indices(size_t n, const std::vector<size_t> &indices) {
    BinVec v(n);
    for (size_t k : indices) {
        if (k >= n) {
            throw std::invalid_argument("BinVec index out of range");
        }
        v.flip(k);
    }
    return v;
}

BinVec BinVec::from_string(const std::string &bits) {
    BinVec v(bits.size());
    for (size_t k = 0; k < bits.size(); k++) {
        if (bits[k] == '1') {
            v.set(k);
        } else if (bits[k] != '0') {
            throw std::invalid_argument("bad bit character in '" + bits + "'");
        }
    }
    return v;
}

void BinVec::set(size_t k, bool v) {
    uint64_t m = uint64_t{1} << (k & 63);
    if (v) {
        words_[k >> 6] |= m;
    } else {
        words_[k >> 6] &= ~m;
    }
}

void BinVec::check_same(const BinVec &other) const {
    if (n_ != other.n_) {
        throw std::invalid_argument(
            "binary vector length mismatch: " + std::to_string(n_) + " vs " + std::to_string(other.n_));
    }
}

BinVec &BinVec::operator^=(const BinVec &other) {
    check_same(other);
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

BinVec BinVec::operator^(const BinVec &other) const {
    BinVec r = *this;
    r ^= other;
    return r;
}

BinVec BinVec::operator&(const BinVec &other) const {
    check_same(other);
    BinVec r = *this;
    for (size_t w = 0; w < words_.size(); w++) {
        r.words_[w] &= other.words_[w];
    }
    return r;
}

bool BinVec::operator<(const BinVec &other) const {
    if (n_ != other.n_) {
        return n_ < other.n_;
    }
    return words_ < other.words_;
}

bool BinVec::dot(const BinVec &other) const {
    check_same(other);
    uint64_t acc = 0;
    for (size_t w = 0; w < words_.size(); w++) {
        acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1;
}

size_t BinVec::popcount() const {
    size_t c = 0;
    for (uint64_t w : words_) {
        c += std::popcount(w);
    }
    return c;
}

bool BinVec::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

size_t BinVec::first_one() const {
    for (size_t w = 0; w < words_.size(); w++) {
        if (words_[w]) {
            return w * 64 + std::countr_zero(words_[w]);
        }
    }
    return n_;
}

std::vector<size_t> BinVec::ones() const {
    std::vector<size_t> out;
    for (size_t w = 0; w < words_.size(); w++) {
        uint64_t x = words_[w];
        while (x) {
            out.push_back(w * 64 + std::countr_zero(x));
            x &= x - 1;
        }
    }
    return out;
}

std::string BinVec::str() const {
    std::string s(n_, '0');
    for (size_t k = 0; k < n_; k++) {
        if (get(k)) {
            s[k] = '1';
        }
    }
    return s;
}

size_t BinVecHash::operator()(const BinVec &v) const {
    uint64_t h = 1469598103934665603ull ^ v.size();
    for (uint64_t w : v.words()) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

BinMat::BinMat(size_t rows, size_t cols) : cols_(cols), rows_(rows, BinVec(cols)) {}

BinMat::BinMat(std::vector<BinVec> rows, size_t cols) : cols_(cols), rows_(std::move(rows)) {
    for (const auto &r : rows_) {
        if (r.size() != cols_) {
            throw std::invalid_argument("BinMat row length mismatch");
        }
    }
}

void BinMat::push_row(BinVec r) {
    if (r.size() != cols_) {
        throw std::invalid_argument("BinMat row length mismatch");
    }
    rows_.push_back(std::move(r));
}

BinVec BinMat::column(size_t j) const {
    BinVec c(rows_.size());
    for (size_t i = 0; i < rows_.size(); i++) {
        if (rows_[i].get(j)) {
            c.set(i);
        }
    }
    return c;
}

BinVec BinMat::apply(const BinVec &x) const {
    BinVec y(rows_.size());
    for (size_t i = 0; i < rows_.size(); i++) {
        if (rows_[i].dot(x)) {
            y.set(i);
        }
    }
    return y;
}

BinVec BinMat::combine(const BinVec &u) const {
    if (u.size() != rows_.size()) {
        throw std::invalid_argument("combination vector length mismatch");
    }
    BinVec y(cols_);
    for (size_t i : u.ones()) {
        y ^= rows_[i];
    }
    return y;
}

RankSolve f2_rank_solve(const BinMat &A, const std::optional<BinVec> &b) {
    if (A.num_rows() == 0 || A.num_cols() == 0) {
        throw std::invalid_argument("f2_rank_solve: empty matrix");
    }
    if (b && b->size() != A.num_cols()) {
        throw std::invalid_argument("f2_rank_solve: right-hand side has length " + std::to_string(b->size()) +
                                    ", expected " + std::to_string(A.num_cols()));
    }
    size_t m = A.num_rows();
    size_t n = A.num_cols();
    std::vector<BinVec> rows = A.rows();
    std::vector<BinVec> tags;
    tags.reserve(m);
    for (size_t i = 0; i < m; i++) {
        tags.push_back(BinVec::from_indices(m, {i}));
    }
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < n && r < m; c++) {
        size_t p = r;
        while (p < m && !rows[p].get(c)) {
            p++;
        }
        if (p == m) {
            continue;
        }
        std::swap(rows[p], rows[r]);
        std::swap(tags[p], tags[r]);
        for (size_t i = 0; i < m; i++) {
            if (i != r && rows[i].get(c)) {
                rows[i] ^= rows[r];
                tags[i] ^= tags[r];
            }
        }
        pivot_col.push_back(c);
        r++;
    }
    RankSolve out;
    out.rank = r;
    if (b) {
        BinVec rem = *b;
        BinVec x(m);
        for (size_t i = 0; i < r; i++) {
            if (rem.get(pivot_col[i])) {
                rem ^= rows[i];
                x ^= tags[i];
            }
        }
        if (rem.is_zero()) {
            out.solution = x;
        }
    }
    return out;
}

size_t f2_rank_naive(const BinMat &A) {
    std::vector<std::vector<int>> a(A.num_rows(), std::vector<int>(A.num_cols()));
    for (size_t i = 0; i < A.num_rows(); i++) {
        for (size_t j = 0; j < A.num_cols(); j++) {
            a[i][j] = A.row(i).get(j);
        }
    }
    size_t rank = 0;
    for (size_t j = 0; j < A.num_cols() && rank < a.size(); j++) {
        size_t p = rank;
        while (p < a.size() && a[p][j] == 0) {
            p++;
        }
        if (p == a.size()) {
            continue;
        }
        std::swap(a[p], a[rank]);
        for (size_t i = rank + 1; i < a.size(); i++) {
            if (a[i][j]) {
                for (size_t k = 0; k < A.num_cols(); k++) {
                    a[i][k] = (a[i][k] + a[rank][k]) % 2;
                }
            }
        }
        rank++;
    }
    return rank;
}

F2Basis::F2Basis(size_t n, size_t num_labels) : n_(n), num_labels_(num_labels) {}

bool F2Basis::add(const BinVec &v, size_t label) {
    if (v.size() != n_ || label >= num_labels_) {
        throw std::invalid_argument("F2Basis: length or label out of range");
    }
    BinVec r = v;
    BinVec combo = BinVec::from_indices(num_labels_, {label});
    for (size_t i = 0; i < rows_.size(); i++) {
        if (r.get(pivots_[i])) {
            r ^= rows_[i];
            combo ^= combos_[i];
        }
    }
    size_t p = r.first_one();
    if (p == n_) {
        return false;
    }
    // Keep earlier rows clear of the new pivot so reduce() is a single pass.
    for (size_t i = 0; i < rows_.size(); i++) {
        if (rows_[i].get(p)) {
            rows_[i] ^= r;
            combos_[i] ^= combo;
        }
    }
    rows_.push_back(r);
    pivots_.push_back(p);
    combos_.push_back(combo);
    return true;
}

bool F2Basis::reduce(const BinVec &v, BinVec *combo) const {
    if (v.size() != n_) {
        throw std::invalid_argument("F2Basis: length mismatch");
    }
    BinVec r = v;
    BinVec acc(num_labels_);
    for (size_t i = 0; i < rows_.size(); i++) {
        if (r.get(pivots_[i])) {
            r ^= rows_[i];
            acc ^= combos_[i];
        }
    }
    if (!r.is_zero()) {
        return false;
    }
    if (combo) {
        *combo = acc;
    }
    return true;
}

std::vector<size_t> independent_rows(const BinMat &A) {
    F2Basis basis(A.num_cols(), A.num_rows());
    std::vector<size_t> out;
    for (size_t i = 0; i < A.num_rows(); i++) {
        if (basis.add(A.row(i), i)) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<BinVec> f2_kernel(const BinMat &A) {
    size_t n = A.num_cols();
    std::vector<BinVec> rows = A.rows();
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < n && r < rows.size(); c++) {
        size_t p = r;
        while (p < rows.size() && !rows[p].get(c)) {
            p++;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[p], rows[r]);
        for (size_t i = 0; i < rows.size(); i++) {
            if (i != r && rows[i].get(c)) {
                rows[i] ^= rows[r];
            }
        }
        pivot_col.push_back(c);
        r++;
    }
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivot_col) {
        is_pivot[c] = true;
    }
    std::vector<BinVec> out;
    for (size_t f = 0; f < n; f++) {
        if (is_pivot[f]) {
            continue;
        }
        BinVec v(n);
        v.set(f);
        for (size_t i = 0; i < r; i++) {
            if (rows[i].get(f)) {
                v.set(pivot_col[i]);
            }
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace tcc
