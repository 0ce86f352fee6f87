#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "dpfib/rational.hpp"

namespace dpfib {

/// Variable slots for the multivariate polynomials used by the inequality
/// certificates (S0, S1, E, N plus the case parameters) and by the
/// term-rewriting oracles in the tests (M, L).
enum class Var : int {
  S0 = 0,
  S1 = 1,
  E = 2,
  N = 3,
  N1 = 4,
  N2 = 5,
  Beta = 6,
  A = 7,
  M = 8,
  L = 9,
};

inline constexpr int kVarCount = 10;

/// Sparse multivariate polynomial with exact rational coefficients over the
/// fixed variable set above. Small and slow on purpose: it only ever sees
/// certificate-sized expressions.
class Poly {
 public:
  using Monomial = std::array<uint16_t, kVarCount>;

  Poly() = default;
  Poly(const Rational& c) {  // NOLINT: implicit by design
    if (!c.is_zero()) terms_[Monomial{}] = c;
  }
  Poly(long long c) : Poly(Rational(c)) {}  // NOLINT

  static Poly var(Var v) {
    Poly p;
    Monomial m{};
    m[static_cast<int>(v)] = 1;
    p.terms_[m] = Rational(1);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
    return out;
  }
  Poly operator-() const { return Poly(0) - *this; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m{};
        for (int i = 0; i < kVarCount; ++i) m[i] = static_cast<uint16_t>(ma[i] + mb[i]);
        out.add_term(m, ca * cb);
      }
    }
    return out;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly pow(unsigned e) const {
    Poly out(1);
    for (unsigned i = 0; i < e; ++i) out *= *this;
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Substitutes one variable by an exact rational value.
  Poly substitute(Var v, const Rational& value) const {
    const int idx = static_cast<int>(v);
    Poly out;
    for (const auto& [m, c] : terms_) {
      Rational coeff = c;
      for (uint16_t i = 0; i < m[idx]; ++i) coeff *= value;
      Monomial reduced = m;
      reduced[idx] = 0;
      out.add_term(reduced, coeff);
    }
    return out;
  }

  /// Value of a constant polynomial; throws if variables remain.
  Rational constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() != 1 || terms_.begin()->first != Monomial{})
      throw Error(ErrorCode::Internal, "polynomial is not constant");
    return terms_.begin()->second;
  }

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<Monomial, Rational> terms_;
};

}  // namespace dpfib
