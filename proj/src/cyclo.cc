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

#include "tcc/cyclo.h"

#include <cmath>
#include <sstream>

namespace tcc {

namespace {

using Coeffs = std::array<int64_t, 4>;

Coeffs mul(const Coeffs &x, const Coeffs &y) {
    Coeffs r{0, 0, 0, 0};
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            int64_t p = x[i] * y[j];
            int k = i + j;
            if (k >= 4) {
                r[k - 4] -= p;
            } else {
                r[k] += p;
            }
        }
    }
    return r;
}

// sqrt(2) = w - w^3.
Coeffs times_sqrt2(const Coeffs &x) { return mul(x, Coeffs{0, 1, 0, -1}); }

}  // namespace

Cyclo::Cyclo(std::array<int64_t, 4> a, int t) : a_(a), t_(t) {
    while (t_ < 0) {
        a_ = times_sqrt2(a_);
        t_++;
    }
    reduce();
}

void Cyclo::reduce() {
    if (is_zero()) {
        t_ = 0;
        return;
    }
    while (t_ > 0) {
        Coeffs b = times_sqrt2(a_);
        if ((b[0] | b[1] | b[2] | b[3]) & 1) {
            break;
        }
        for (auto &c : b) {
            c /= 2;
        }
        a_ = b;
        t_--;
    }
}

Cyclo Cyclo::omega(int k) {
    k = ((k % 8) + 8) % 8;
    Coeffs a{0, 0, 0, 0};
    a[k % 4] = k < 4 ? 1 : -1;
    return Cyclo(a, 0);
}

Cyclo Cyclo::inv_sqrt2_pow(int t) { return Cyclo(Coeffs{1, 0, 0, 0}, t); }

Cyclo Cyclo::operator+(const Cyclo &o) const {
    Coeffs x = a_, y = o.a_;
    int t = std::max(t_, o.t_);
    for (int s = t_; s < t; s++) {
        x = times_sqrt2(x);
    }
    for (int s = o.t_; s < t; s++) {
        y = times_sqrt2(y);
    }
    for (int i = 0; i < 4; i++) {
        x[i] += y[i];
    }
    return Cyclo(x, t);
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto &c : r.a_) {
        c = -c;
    }
    return r;
}

Cyclo Cyclo::operator-(const Cyclo &o) const { return *this + (-o); }

Cyclo Cyclo::operator*(const Cyclo &o) const { return Cyclo(mul(a_, o.a_), t_ + o.t_); }

Cyclo Cyclo::conj() const {
    // conj(w^k) = w^{-k} = -w^{4-k}.
    return Cyclo(Coeffs{a_[0], -a_[3], -a_[2], -a_[1]}, t_);
}

int Cyclo::omega_exponent() const {
    for (int k = 0; k < 8; k++) {
        if (*this == omega(k)) {
            return k;
        }
    }
    return -1;
}

std::complex<double> Cyclo::to_complex() const {
    std::complex<double> z = 0;
    for (int k = 0; k < 4; k++) {
        z += static_cast<double>(a_[k]) * std::polar(1.0, M_PI * k / 4);
    }
    return z * std::pow(2.0, -0.5 * t_);
}

std::string Cyclo::str() const {
    std::ostringstream os;
    os << "(" << a_[0] << "," << a_[1] << "," << a_[2] << "," << a_[3] << ")";
    if (t_) {
        os << "/2^(" << t_ << "/2)";
    }
    return os.str();
}

}  // namespace tcc
