#pragma once

#include <optional>

#include "dpfib/dp_models.hpp"
#include "dpfib/rational.hpp"

namespace dpfib::dp {

/// Divisor class on the fibration total space V, in the degree-uniform
/// (-K_V, F) basis: D = k (-K_V) + m F. The (G_V, F) basis (degree 1) and
/// (H, F) basis (degree 2) are conversion views.
struct DivisorClassV {
  Rational k;  // coefficient of -K_V
  Rational m;  // coefficient of F

  friend bool operator==(const DivisorClassV&, const DivisorClassV&) = default;
};

/// Curve class on V in the (s0, f) basis of the cone of effective curves;
/// a class is effective exactly when both coordinates are non-negative.
struct CurveClassV {
  Rational s0;
  Rational f;

  bool effective() const { return s0 >= Rational(0) && f >= Rational(0); }
  friend bool operator==(const CurveClassV&, const CurveClassV&) = default;
};

/// The model's intersection data. Divisor/curve pairings are generated by
///   degree 1:  s0.F = f.G_V = 1,  s0.G_V = -n3/2,  f.F = 0,
///   degree 2:  H.s0 = F.f = 0,    H.f = F.s0 = 1,
/// together with the expression of -K_V in the corresponding basis.
/// anti_k_fpart is the c in -K_V = G_V + c F (degree 1) or -K_V = H + c F
/// (degree 2); it makes the basis conversions one-liners.
struct IntersectionTable {
  int degree = 0;

  // Pairings of the (-K, F) basis against the curve generators.
  Rational antiK_s0, antiK_f;  // (-K_V).s0, (-K_V).f
  Rational F_s0, F_f;          // F.s0, F.f

  // Degree-1 named entries.
  Rational s0_F, f_G, s0_G, f_F;
  // Degree-2 named entries and triple products.
  Rational H_s0, H_f, Fd_s0, Fd_f;
  Rational h3, h2f, hf2, fff;

  CurveClassV anti_k_square;  // (-K_V)^2 = K_V^2 as a curve class
  Rational anti_k_cube;       // (-K_V)^3

  Rational anti_k_fpart;  // c with -K = G_V + cF resp. H + cF
  // The very-ample pull-back class in the (-K, F) basis: 2G_V + n3 F
  // (EpsZero), 2(G_V + n2 F) (EpsPos), H itself (degree 2).
  DivisorClassV h_class;
  std::optional<CurveClassV> s_b;  // special section s_B = s0 + (n1/2) f (EpsPos only)
};

IntersectionTable intersection_table(const DegreeOneModel& model);
IntersectionTable intersection_table(const DegreeTwoModel& model);
IntersectionTable intersection_table(const Model& model);

/// Bilinear pairing of a divisor class with a curve class via the model's
/// table.
Rational pair(const Model& model, const DivisorClassV& d, const CurveClassV& c);

/// Coordinates of D in the (G_V, F) basis of a degree-1 model.
std::pair<Rational, Rational> gv_f_coords(const DegreeOneModel& model, const DivisorClassV& d);
/// Inverse conversion.
DivisorClassV divisor_from_gv_f(const DegreeOneModel& model, const Rational& gv,
                                const Rational& f);

/// Coordinates of D in the (H, F) basis of a degree-2 model.
std::pair<Rational, Rational> h_f_coords(const DegreeTwoModel& model, const DivisorClassV& d);
DivisorClassV divisor_from_h_f(const DegreeTwoModel& model, const Rational& h, const Rational& f);

/// Integer 2x2 lattice map on the (-K, F) basis. Columns are the images of
/// -K and F, so coordinates (k, m) of k(-K)+mF map to
/// (a00 k + a01 m, a10 k + a11 m).
struct PicMap {
  long long a00, a01, a10, a11;

  DivisorClassV apply(const DivisorClassV& d) const {
    return {Rational(a00) * d.k + Rational(a01) * d.m, Rational(a10) * d.k + Rational(a11) * d.m};
  }
  PicMap compose(const PicMap& o) const {
    return {a00 * o.a00 + a01 * o.a10, a00 * o.a01 + a01 * o.a11,
            a10 * o.a00 + a11 * o.a10, a10 * o.a01 + a11 * o.a11};
  }
  bool is_identity() const { return a00 == 1 && a01 == 0 && a10 == 0 && a11 == 1; }
};

/// Lattice action of the flop of the (eps=0; 2,2,2) model: -K is fixed and
/// F maps to -K - F, so n(-K) - lF goes to (n-l)(-K) + lF. Any other model
/// throws NotApplicable.
PicMap flop_transform_222(const DegreeOneModel& model);

/// Restriction of D = n(-K) + mF to the ruled surface G_V of a degree-1
/// model, in the (section, fiber) basis of G_V. The section has
/// self-intersection -n1/2, so the surface type is n1/2 (over an elliptic
/// base when EpsZero with n1 = 0). Effective means both coordinates >= 0.
struct RestrictionToG {
  long long ruled_type;  // n1/2
  Rational section_coeff;
  Rational fiber_coeff;
  bool effective;
};
RestrictionToG restrict_to_G(const Model& model, const DivisorClassV& d);

}  // namespace dpfib::dp
