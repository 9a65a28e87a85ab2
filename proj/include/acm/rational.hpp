/*
 * Copyright 2026 The acm-atlas Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "acm/error.hpp"

namespace acm {

using Int = std::int64_t;

/// Exact fraction over 64-bit integers, always reduced with a positive
/// denominator. Intermediates are 128-bit; a result that does not fit
/// throws std::overflow_error rather than wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(Int value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(Int num, Int den) { assign(num, den); }

  constexpr Int numerator() const noexcept { return num_; }
  constexpr Int denominator() const noexcept { return den_; }

  Rational operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

  Rational& operator+=(const Rational& o) {
    return *this = from_wide(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                             static_cast<__int128>(den_) * o.den_);
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    return *this = from_wide(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return *this = from_wide(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
    os << q.num_;
    if (q.den_ != 1) os << '/' << q.den_;
    return os;
  }

 private:
  static Rational from_wide(__int128 num, __int128 den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 a = num < 0 ? -num : num, b = den;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
    constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
    if (num < lo || num > hi || den > hi) throw std::overflow_error("rational overflow");
    Rational q;
    q.num_ = static_cast<Int>(num);
    q.den_ = static_cast<Int>(den);
    return q;
  }

  void assign(Int num, Int den) { *this = from_wide(num, den); }

  Int num_ = 0;
  Int den_ = 1;
};

inline bool is_integral(const Rational& q) noexcept { return q.denominator() == 1; }

/// Exact conversion; throws `kind` when q has a non-trivial denominator.
inline Int to_integer(const Rational& q, ErrorKind kind, const std::string& context) {
  if (!is_integral(q)) {
    throw Error(kind, context + " evaluates to " + std::to_string(q.numerator()) + "/" +
                          std::to_string(q.denominator()));
  }
  return q.numerator();
}

/// "p/q", or "p" when integral.
inline std::string to_string(const Rational& q) {
  if (is_integral(q)) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

/// Inclusive integer interval. Empty when lo > hi.
struct IntRange {
  Int lo = 0;
  Int hi = 0;

  bool empty() const noexcept { return lo > hi; }
  bool is_point() const noexcept { return lo == hi; }
  bool contains(Int v) const noexcept { return lo <= v && v <= hi; }
  Int size() const noexcept { return empty() ? 0 : hi - lo + 1; }

  friend bool operator==(const IntRange&, const IntRange&) = default;
};

}  // namespace acm
