// Copyright 2026 The forcing-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FORCING_LAB_RATIONAL_HPP_
#define FORCING_LAB_RATIONAL_HPP_

#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace forcing_lab {

/// Exact fraction with a positive denominator in lowest terms. Magnitudes in
/// this code base stay far below 2^31, products are formed in 128 bits.
class Rational {
 public:
  constexpr Rational(long long num = 0, long long den = 1) : num_(num), den_(den) {  // NOLINT
    if (den_ == 0) throw std::domain_error("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr long long num() const { return num_; }
  constexpr long long den() const { return den_; }
  constexpr bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Largest integer <= value.
  constexpr long long floor() const {
    return num_ >= 0 ? num_ / den_ : -((-num_ + den_ - 1) / den_);
  }

  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend constexpr Rational operator+(Rational a, Rational b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Rational operator-(Rational a, Rational b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Rational operator*(Rational a, Rational b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend constexpr Rational operator/(Rational a, Rational b) {
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  constexpr Rational operator-() const { return {-num_, den_}; }

  friend constexpr bool operator==(Rational a, Rational b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr std::strong_ordering operator<=>(Rational a, Rational b) {
    const __int128 l = static_cast<__int128>(a.num_) * b.den_;
    const __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less
                 : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  constexpr int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

 private:
  long long num_;
  long long den_;
};

/// a + b * sqrt(radicand) with rational a, b and a non-negative integer
/// radicand, kept with square factors pulled out of the radicand.
class Surd {
 public:
  Surd(Rational a, Rational b, long long radicand) : a_(a), b_(b), r_(radicand) {
    if (r_ < 0) throw std::domain_error("negative radicand");
    for (long long f = 2; f * f <= r_; ++f) {
      while (r_ % (f * f) == 0) {
        r_ /= f * f;
        b_ = b_ * Rational(f);
      }
    }
    if (r_ == 0 || b_.sign() == 0) {
      r_ = 0;
      b_ = 0;
    } else if (r_ == 1) {
      a_ = a_ + b_;
      b_ = 0;
      r_ = 0;
    }
  }

  Surd(Rational a) : Surd(a, 0, 0) {}  // NOLINT

  Rational rational_part() const { return a_; }
  Rational surd_coefficient() const { return b_; }
  long long radicand() const { return r_; }
  bool is_rational() const { return r_ == 0; }

  double to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(r_));
  }

  std::string to_string() const {
    if (is_rational()) return a_.to_string();
    std::string s = a_.sign() == 0 ? "" : a_.to_string() + (b_.sign() > 0 ? " + " : " - ");
    const Rational mag = b_.sign() < 0 ? -b_ : b_;
    if (a_.sign() == 0 && b_.sign() < 0) s += "-";
    if (!(mag == Rational(1))) s += mag.to_string() + "*";
    return s + "sqrt(" + std::to_string(r_) + ")";
  }

  /// Sign of (this - x), decided without floating point.
  int compare(Rational x) const {
    const Rational c = a_ - x;
    if (r_ == 0) return c.sign();
    if (c.sign() == 0) return b_.sign();
    if (c.sign() == b_.sign()) return c.sign();
    // Opposite signs: compare c^2 with b^2 * r.
    const Rational lhs = c * c;
    const Rational rhs = b_ * b_ * Rational(r_);
    if (lhs == rhs) return 0;
    return lhs > rhs ? c.sign() : b_.sign();
  }

  int compare(long long x) const { return compare(Rational(x)); }

 private:
  Rational a_;
  Rational b_;
  long long r_;
};

}  // namespace forcing_lab

#endif  // FORCING_LAB_RATIONAL_HPP_
