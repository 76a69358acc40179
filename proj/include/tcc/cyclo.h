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

#ifndef TCC_CYCLO_H
#define TCC_CYCLO_H

#include <array>
#include <complex>
#include <cstdint>
#include <string>

namespace tcc {

/// Exact element a * 2^{-t/2} with a = a0 + a1 w + a2 w^2 + a3 w^3, w = exp(i pi/4).
/// Kept reduced: t is minimal, and zero is stored as (0,0,0,0; t = 0).
class Cyclo {
   public:
    Cyclo() = default;
    Cyclo(int64_t integer) : a_{integer, 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
    Cyclo(std::array<int64_t, 4> a, int t);

    /// w^k for any integer k.
    static Cyclo omega(int k);
    /// 1/sqrt(2)^t.
    static Cyclo inv_sqrt2_pow(int t);

    const std::array<int64_t, 4> &coeffs() const { return a_; }
    int t() const { return t_; }

    Cyclo operator+(const Cyclo &o) const;
    Cyclo operator-(const Cyclo &o) const;
    Cyclo operator-() const;
    Cyclo operator*(const Cyclo &o) const;
    Cyclo &operator+=(const Cyclo &o) { return *this = *this + o; }
    Cyclo &operator*=(const Cyclo &o) { return *this = *this * o; }
    bool operator==(const Cyclo &o) const { return a_ == o.a_ && t_ == o.t_; }
    bool operator!=(const Cyclo &o) const { return !(*this == o); }

    Cyclo conj() const;
    /// |z|^2.
    Cyclo norm2() const { return *this * conj(); }
    bool is_zero() const { return a_ == std::array<int64_t, 4>{0, 0, 0, 0}; }
    /// k in 0..7 if this equals w^k, else -1.
    int omega_exponent() const;
    std::complex<double> to_complex() const;
    /// e.g. "(1+w^2)/2^(3/2)".
    std::string str() const;

   private:
    void reduce();
    std::array<int64_t, 4> a_{0, 0, 0, 0};
    int t_ = 0;
};

}  // namespace tcc

#endif
