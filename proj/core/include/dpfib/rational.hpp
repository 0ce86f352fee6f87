#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "dpfib/error.hpp"

namespace dpfib {

/// Exact rational over int64, always in lowest terms with positive
/// denominator. Intermediates run through __int128; anything that would
/// leave the int64 range after reduction throws Error(Overflow). There is
/// no floating point anywhere in the arithmetic.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) { assign(n, d); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
    __int128 d = i128(a.den_) * b.den_;
    return from_i128(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    __int128 n = i128(a.num_) * b.num_;
    __int128 d = i128(a.den_) * b.den_;
    return from_i128(n, d);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error(ErrorCode::InvalidArgument, "division by zero rational");
    __int128 n = i128(a.num_) * b.den_;
    __int128 d = i128(a.den_) * b.num_;
    return from_i128(n, d);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 lhs = i128(a.num_) * b.den_;
    __int128 rhs = i128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "p/q", or just "p" when integral.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static __int128 i128(long long v) { return static_cast<__int128>(v); }

  static Rational from_i128(__int128 n, __int128 d) {
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 kMax = INT64_MAX;
    constexpr __int128 kMin = INT64_MIN;
    if (n > kMax || n < kMin || d > kMax) throw Error(ErrorCode::Overflow, "rational out of range");
    Rational r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a < 0 ? -a : a;
  }

  void assign(long long n, long long d) { *this = from_i128(i128(n), i128(d)); }

  long long num_;
  long long den_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace dpfib
