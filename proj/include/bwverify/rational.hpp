// Copyright 2026 The bwverify Authors
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

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bwv {

/// Exact rational on int64 with __int128 intermediates. The probabilities
/// handled here are dyadic with small denominators, so this never gets near
/// overflow; the guard throws rather than silently wrapping.
class Rational {
  public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(int64_t n) : num_(n), den_(1) {}
    Rational(int64_t n, int64_t d) : num_(n), den_(d) { normalize(); }

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }

    Rational operator+(const Rational &o) const {
        return make(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational operator-(const Rational &o) const {
        return make(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational operator*(const Rational &o) const {
        return make(i128(num_) * o.num_, i128(den_) * o.den_);
    }
    Rational operator/(const Rational &o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        return make(i128(num_) * o.den_, i128(den_) * o.num_);
    }
    Rational &operator+=(const Rational &o) { return *this = *this + o; }
    Rational &operator*=(const Rational &o) { return *this = *this * o; }

    bool operator==(const Rational &o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator<(const Rational &o) const { return i128(num_) * o.den_ < i128(o.num_) * den_; }
    bool operator<=(const Rational &o) const { return i128(num_) * o.den_ <= i128(o.num_) * den_; }
    bool operator>(const Rational &o) const { return o < *this; }
    bool operator>=(const Rational &o) const { return o <= *this; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    using i128 = __int128;

    static Rational make(i128 n, i128 d) {
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX) {
            throw std::overflow_error("rational overflow");
        }
        Rational r;
        r.num_ = static_cast<int64_t>(n);
        r.den_ = static_cast<int64_t>(d);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("zero denominator");
        *this = make(num_, den_);
    }

    int64_t num_;
    int64_t den_;
};

} // namespace bwv
