#pragma once

#include <vector>

#include "dpfib/rational.hpp"

namespace dpfib::chow {

/// A split rank-r bundle over the projective line, described by its
/// normalized twist sequence (first twist 0, non-decreasing). The total
/// space P(E) carries the intersection ring generated by the tautological
/// class M and the fiber class L with relations L^2 = 0 and
/// M^r = b * M^(r-1) L, where b is the sum of the twists.
class BundleSpec {
 public:
  /// Sorts the twists, shifts them so the smallest is 0, and records the
  /// shift. rank must be >= 2 and match the twist count.
  static BundleSpec make(int rank, std::vector<long long> twists);

  int rank() const { return rank_; }
  const std::vector<long long>& twists() const { return twists_; }
  long long degree() const { return degree_; }  // b
  long long shift() const { return shift_; }    // normalization offset applied

  friend bool operator==(const BundleSpec&, const BundleSpec&) = default;

 private:
  BundleSpec() = default;
  int rank_ = 0;
  std::vector<long long> twists_;
  long long degree_ = 0;
  long long shift_ = 0;
};

struct CurveClassX;

/// Homogeneous cycle class of codimension d on P(E), stored reduced as
/// coeff_m * M^d + coeff_ml * M^(d-1) L. Codimension-0 classes have no L
/// part; codimension-r classes are pure point-class multiples (coeff_m = 0
/// after folding M^r = b M^(r-1) L).
class ChowClass {
 public:
  ChowClass(BundleSpec bundle, int codim, Rational coeff_m, Rational coeff_ml);

  static ChowClass unit(const BundleSpec& b) { return {b, 0, 1, 0}; }
  static ChowClass hyperplane(const BundleSpec& b) { return {b, 1, 1, 0}; }  // M
  static ChowClass fiber(const BundleSpec& b) { return {b, 1, 0, 1}; }       // L
  static ChowClass m_power(const BundleSpec& b, int d);
  static ChowClass zero(const BundleSpec& b, int codim) { return {b, codim, 0, 0}; }

  const BundleSpec& bundle() const { return bundle_; }
  int codim() const { return codim_; }
  const Rational& coeff_m() const { return coeff_m_; }
  const Rational& coeff_ml() const { return coeff_ml_; }
  bool is_zero() const { return coeff_m_.is_zero() && coeff_ml_.is_zero(); }

  friend bool operator==(const ChowClass&, const ChowClass&) = default;

 private:
  BundleSpec bundle_;
  int codim_;
  Rational coeff_m_;
  Rational coeff_ml_;
};

/// Curve class in the (t0, l) basis, where t0 = M^(r-1) - b M^(r-2) L is the
/// distinguished section class and l = M^(r-2) L the line-in-fiber class.
/// Pairings: M.t0 = 0, M.l = 1, L.t0 = 1, L.l = 0.
struct CurveClassX {
  BundleSpec bundle;
  Rational t0;
  Rational l;

  friend bool operator==(const CurveClassX&, const CurveClassX&) = default;
};

/// Ring product, reduced modulo L^2 = 0 and M^r = b M^(r-1) L. A product of
/// total codimension > r is zero by dimension and comes back as the zero
/// class of codimension r.
ChowClass mul(const ChowClass& c1, const ChowClass& c2);

/// Coefficient of the point class M^(r-1) L; defined for codimension-r
/// classes only.
Rational degree(const ChowClass& c);

/// Rewrites a codimension-(r-1) class in the (t0, l) basis.
CurveClassX curve_convert(const ChowClass& c);

/// Pairing of a codimension-1 class a*M + c*L with a curve x*t0 + y*l:
/// a*y + c*x.
Rational pair_divisor_curve(const ChowClass& divisor, const CurveClassX& curve);

}  // namespace dpfib::chow
