#include "dpfib/chow.hpp"

#include <algorithm>

namespace dpfib::chow {

BundleSpec BundleSpec::make(int rank, std::vector<long long> twists) {
  if (rank < 2) throw Error(ErrorCode::InvalidRank, "bundle rank must be at least 2");
  if (static_cast<size_t>(rank) != twists.size())
    throw Error(ErrorCode::InvalidRank, "rank does not match the twist count");
  std::sort(twists.begin(), twists.end());
  const long long shift = twists.front();
  long long degree = 0;
  for (auto& t : twists) {
    t -= shift;
    degree += t;
  }
  BundleSpec spec;
  spec.rank_ = rank;
  spec.twists_ = std::move(twists);
  spec.degree_ = degree;
  spec.shift_ = shift;
  return spec;
}

ChowClass::ChowClass(BundleSpec bundle, int codim, Rational coeff_m, Rational coeff_ml)
    : bundle_(std::move(bundle)), codim_(codim), coeff_m_(coeff_m), coeff_ml_(coeff_ml) {
  const int r = bundle_.rank();
  if (codim_ < 0 || codim_ > r)
    throw Error(ErrorCode::InvalidArgument, "codimension outside [0, rank]");
  if (codim_ == 0 && !coeff_ml_.is_zero())
    throw Error(ErrorCode::InvalidArgument, "codimension-0 class cannot have an L part");
  if (codim_ == r && !coeff_m_.is_zero()) {
    // Fold M^r = b M^(r-1) L into the point-class coefficient.
    coeff_ml_ += coeff_m_ * Rational(bundle_.degree());
    coeff_m_ = 0;
  }
}

ChowClass ChowClass::m_power(const BundleSpec& b, int d) { return {b, d, 1, 0}; }

ChowClass mul(const ChowClass& c1, const ChowClass& c2) {
  if (!(c1.bundle() == c2.bundle()))
    throw Error(ErrorCode::MixedBundles, "classes live on different bundles");
  const int r = c1.bundle().rank();
  const int d = c1.codim() + c2.codim();
  if (d > r) return ChowClass::zero(c1.bundle(), r);  // vanishes by dimension
  // (a1 M^d1 + b1 M^(d1-1)L)(a2 M^d2 + b2 M^(d2-1)L), with L^2 = 0.
  Rational m = c1.coeff_m() * c2.coeff_m();
  Rational ml = c1.coeff_m() * c2.coeff_ml() + c1.coeff_ml() * c2.coeff_m();
  return {c1.bundle(), d, m, ml};  // constructor applies M^r = b M^(r-1)L at d == r
}

Rational degree(const ChowClass& c) {
  if (c.codim() != c.bundle().rank())
    throw Error(ErrorCode::InvalidArgument, "degree is defined for codimension-rank classes");
  return c.coeff_ml();
}

CurveClassX curve_convert(const ChowClass& c) {
  const int r = c.bundle().rank();
  if (c.codim() != r - 1)
    throw Error(ErrorCode::NotACurveClass, "curve conversion needs codimension rank-1");
  // a M^(r-1) + c M^(r-2) L  =  a t0 + (a b + c) l.
  Rational t0 = c.coeff_m();
  Rational l = c.coeff_m() * Rational(c.bundle().degree()) + c.coeff_ml();
  return CurveClassX{c.bundle(), t0, l};
}

Rational pair_divisor_curve(const ChowClass& divisor, const CurveClassX& curve) {
  if (!(divisor.bundle() == curve.bundle))
    throw Error(ErrorCode::MixedBundles, "divisor and curve live on different bundles");
  if (divisor.codim() != 1)
    throw Error(ErrorCode::InvalidArgument, "pairing needs a codimension-1 class");
  return divisor.coeff_m() * curve.l + divisor.coeff_ml() * curve.t0;
}

}  // namespace dpfib::chow
