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

#ifndef TCC_F2_H
#define TCC_F2_H

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tcc {

/// Packed binary vector of fixed length.
class BinVec {
   public:
    BinVec() = default;
    explicit BinVec(size_t n);
    static BinVec from_indices(size_t n, const std::vector<size_t> &indices);
    /// Parses a string of '0'/'1' characters.
    static BinVec from_string(const std::string &bits);

    size_t size() const { return n_; }
    bool get(size_t k) const { return (words_[k >> 6] >> (k & 63)) & 1; }
    void set(size_t k, bool v = true);
    void flip(size_t k) { words_[k >> 6] ^= uint64_t{1} << (k & 63); }

    BinVec &operator^=(const BinVec &other);
    BinVec operator^(const BinVec &other) const;
    BinVec operator&(const BinVec &other) const;
    bool operator==(const BinVec &other) const { return n_ == other.n_ && words_ == other.words_; }
    bool operator!=(const BinVec &other) const { return !(*this == other); }
    bool operator<(const BinVec &other) const;

    /// Parity of the overlap with another vector.
    bool dot(const BinVec &other) const;
    size_t popcount() const;
    bool is_zero() const;
    /// Index of the lowest set bit, or size() if none.
    size_t first_one() const;
    std::vector<size_t> ones() const;
    std::string str() const;

    const std::vector<uint64_t> &words() const { return words_; }
    uint64_t *data() { return words_.data(); }

   private:
    void check_same(const BinVec &other) const;
    size_t n_ = 0;
    std::vector<uint64_t> words_;
};

struct BinVecHash {
    size_t operator()(const BinVec &v) const;
};

/// Dense matrix over GF(2), stored row-wise.
class BinMat {
   public:
    BinMat() = default;
    BinMat(size_t rows, size_t cols);
    explicit BinMat(std::vector<BinVec> rows, size_t cols);

    size_t num_rows() const { return rows_.size(); }
    size_t num_cols() const { return cols_; }
    const BinVec &row(size_t i) const { return rows_[i]; }
    BinVec &row(size_t i) { return rows_[i]; }
    const std::vector<BinVec> &rows() const { return rows_; }
    void push_row(BinVec r);
    BinVec column(size_t j) const;
    /// y = A x (one bit per row).
    BinVec apply(const BinVec &x) const;
    /// y = u A (combination of rows selected by u).
    BinVec combine(const BinVec &u) const;

   private:
    size_t cols_ = 0;
    std::vector<BinVec> rows_;
};

/// Result of f2_rank_solve.
struct RankSolve {
    size_t rank = 0;
    std::optional<BinVec> solution;
};

/// Rank of A and, when b is given, some x with x A = b (absent if inconsistent).
/// Throws std::invalid_argument on empty A or length mismatch.
RankSolve f2_rank_solve(const BinMat &A, const std::optional<BinVec> &b = std::nullopt);

/// Textbook rank by row reduction on a copy; used to cross-check the packed kernel.
size_t f2_rank_naive(const BinMat &A);

/// Incremental row-echelon basis that remembers how each pivot row was formed.
class F2Basis {
   public:
    F2Basis(size_t n, size_t num_labels);
    /// Adds v under a label in [0, num_labels); returns false if v was dependent.
    bool add(const BinVec &v, size_t label);
    /// True if v lies in the span; `combo` receives the set of labels summing to v.
    bool reduce(const BinVec &v, BinVec *combo = nullptr) const;
    size_t rank() const { return pivots_.size(); }
    size_t dim() const { return n_; }

   private:
    size_t n_;
    size_t num_labels_;
    std::vector<BinVec> rows_;
    std::vector<size_t> pivots_;
    std::vector<BinVec> combos_;
};

/// Indices of a maximal independent subset of the rows, chosen greedily in order.
std::vector<size_t> independent_rows(const BinMat &A);

/// Basis of {v : A v = 0}.
std::vector<BinVec> f2_kernel(const BinMat &A);

}  // namespace tcc

#endif
