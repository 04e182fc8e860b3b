// rational.hpp
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

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace melograph {

namespace detail {

using int128 = __int128;

inline int128 abs128(int128 v) { return v < 0 ? -v : v; }

inline int128 gcd128(int128 a, int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::string to_string128(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  std::string digits;
  for (int128 u = abs128(v); u != 0; u /= 10) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
  }
  if (neg) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

}  // namespace detail

/// Exact rational with 64-bit numerator and denominator, always stored in
/// lowest terms with a positive denominator. Arithmetic runs through 128-bit
/// intermediates; a result that no longer fits 64 bits throws
/// std::overflow_error instead of wrapping.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : num_(value) {}  // NOLINT: implicit by design
  Rational(long long num, long long den) { assign(num, den); }

  static Rational from128(detail::int128 num, detail::int128 den) {
    Rational r;
    r.assign(num, den);
    return r;
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
  bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Nearest integer, halves rounded away from zero.
  long long round_nearest() const {
    detail::int128 q = (2 * detail::abs128(num_) + den_) / (2 * static_cast<detail::int128>(den_));
    return static_cast<long long>(num_ < 0 ? -q : q);
  }

  Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    using detail::int128;
    return from128(static_cast<int128>(a.num_) * b.den_ + static_cast<int128>(b.num_) * a.den_,
                   static_cast<int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    using detail::int128;
    return from128(static_cast<int128>(a.num_) * b.den_ - static_cast<int128>(b.num_) * a.den_,
                   static_cast<int128>(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    using detail::int128;
    return from128(static_cast<int128>(a.num_) * b.num_, static_cast<int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    using detail::int128;
    if (b.num_ == 0) throw std::domain_error("rational: division by zero");
    return from128(static_cast<int128>(a.num_) * b.den_, static_cast<int128>(a.den_) * b.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    using detail::int128;
    int128 lhs = static_cast<int128>(a.num_) * b.den_;
    int128 rhs = static_cast<int128>(b.num_) * a.den_;
    return lhs < rhs ? std::strong_ordering::less
                     : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num_;
    if (r.den_ != 1) os << '/' << r.den_;
    return os;
  }

 private:
  void assign(detail::int128 num, detail::int128 den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    detail::int128 g = detail::gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr detail::int128 lo = std::numeric_limits<long long>::min();
    constexpr detail::int128 hi = std::numeric_limits<long long>::max();
    if (num < lo || num > hi || den > hi) {
      throw std::overflow_error("rational: value does not fit 64 bits");
    }
    num_ = static_cast<long long>(num);
    den_ = static_cast<long long>(den);
  }

  long long num_ = 0;
  long long den_ = 1;
};

inline std::string to_string(const Rational& r) {
  std::string s = std::to_string(r.num());
  if (r.den() != 1) {
    s += '/';
    s += std::to_string(r.den());
  }
  return s;
}

}  // namespace melograph
