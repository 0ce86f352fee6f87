#include "dpfib/intersection.hpp"

namespace dpfib::dp {

namespace {

// c in -K_V = G_V + c F (degree 1) resp. -K_V = H + c F (degree 2).
Rational anti_k_fpart_dp1(const DegreeOneModel& m) {
  if (m.case_tag() == Dp1Case::EpsZero) return Rational(2) - Rational(m.n1(), 2);
  return Rational(2) + Rational(m.n1(), 2);
}

Rational anti_k_fpart_dp2(const DegreeTwoModel& m) { return Rational(2 - m.a() - m.b()); }

}  // namespace

IntersectionTable intersection_table(const DegreeOneModel& model) {
  IntersectionTable t;
  t.degree = 1;
  t.s0_F = 1;
  t.f_G = 1;
  t.s0_G = Rational(-model.n3(), 2);
  t.f_F = 0;
  t.anti_k_fpart = anti_k_fpart_dp1(model);

  // -K = G_V + cF paired against (s0, f): G_V.s0 = -n3/2, G_V.f = 1,
  // F.s0 = 1, F.f = 0.
  t.antiK_s0 = t.s0_G + t.anti_k_fpart;
  t.antiK_f = t.f_G;
  t.F_s0 = t.s0_F;
  t.F_f = t.f_F;

  if (model.case_tag() == Dp1Case::EpsZero) {
    t.anti_k_square = CurveClassV{Rational(1), Rational(4 - model.n2())};
    t.h_class = divisor_from_gv_f(model, Rational(2), Rational(model.n3()));
  } else {
    t.anti_k_square =
        CurveClassV{Rational(1), Rational(4) + Rational(3 * model.n1(), 2) - Rational(model.n2())};
    t.s_b = CurveClassV{Rational(1), Rational(model.n1(), 2)};
    t.h_class = divisor_from_gv_f(model, Rational(2), Rational(2 * model.n2()));
  }
  t.anti_k_cube =
      t.antiK_s0 * t.anti_k_square.s0 + t.antiK_f * t.anti_k_square.f;
  return t;
}

IntersectionTable intersection_table(const DegreeTwoModel& model) {
  IntersectionTable t;
  t.degree = 2;
  t.H_s0 = 0;
  t.H_f = 1;
  t.Fd_s0 = 1;
  t.Fd_f = 0;
  t.h3 = Rational(2 * model.b());
  t.h2f = 2;
  t.hf2 = 0;
  t.fff = 0;
  t.anti_k_fpart = anti_k_fpart_dp2(model);

  t.antiK_s0 = t.H_s0 + t.anti_k_fpart * t.Fd_s0;  // = 2 - a - b
  t.antiK_f = t.H_f;                               // = 1
  t.F_s0 = t.Fd_s0;
  t.F_f = t.Fd_f;

  t.anti_k_square = CurveClassV{Rational(2), Rational(model.beta())};
  t.anti_k_cube = Rational(12 - 6 * model.a() - 4 * model.b());
  t.h_class = divisor_from_h_f(model, Rational(1), Rational(0));
  return t;
}

IntersectionTable intersection_table(const Model& model) {
  return std::visit([](const auto& m) { return intersection_table(m); }, model);
}

Rational pair(const Model& model, const DivisorClassV& d, const CurveClassV& c) {
  const IntersectionTable t = intersection_table(model);
  const Rational d_s0 = d.k * t.antiK_s0 + d.m * t.F_s0;
  const Rational d_f = d.k * t.antiK_f + d.m * t.F_f;
  return d_s0 * c.s0 + d_f * c.f;
}

std::pair<Rational, Rational> gv_f_coords(const DegreeOneModel& model, const DivisorClassV& d) {
  // k(-K) + mF = k G_V + (k c + m) F.
  return {d.k, d.k * anti_k_fpart_dp1(model) + d.m};
}

DivisorClassV divisor_from_gv_f(const DegreeOneModel& model, const Rational& gv,
                                const Rational& f) {
  return {gv, f - gv * anti_k_fpart_dp1(model)};
}

std::pair<Rational, Rational> h_f_coords(const DegreeTwoModel& model, const DivisorClassV& d) {
  return {d.k, d.k * anti_k_fpart_dp2(model) + d.m};
}

DivisorClassV divisor_from_h_f(const DegreeTwoModel& model, const Rational& h, const Rational& f) {
  return {h, f - h * anti_k_fpart_dp2(model)};
}

PicMap flop_transform_222(const DegreeOneModel& model) {
  if (!(model.case_tag() == Dp1Case::EpsZero && model.n1() == 2 && model.n2() == 2 &&
        model.n3() == 2))
    throw Error(ErrorCode::NotApplicable, "the flop transform is defined for (0; 2,2,2) only");
  // -K is fixed, F maps to -K - F.
  return PicMap{1, 1, 0, -1};
}

RestrictionToG restrict_to_G(const Model& model, const DivisorClassV& d) {
  const auto* m1 = std::get_if<DegreeOneModel>(&model);
  if (m1 == nullptr)
    throw Error(ErrorCode::NotApplicable, "restriction to G_V is a degree-1 operation");
  // D = n(-K) + mF restricts to n s0 + (m - n(n1/2 + n3 - n2 - 2)) f when
  // eps = 0, and to n s0 + (m + n(n1 - n2 + 2)) f when eps = n1 > 0.
  Rational fiber;
  if (m1->case_tag() == Dp1Case::EpsZero) {
    fiber = d.m - d.k * (Rational(m1->n1(), 2) + Rational(m1->n3() - m1->n2() - 2));
  } else {
    fiber = d.m + d.k * Rational(m1->n1() - m1->n2() + 2);
  }
  const bool eff = d.k >= Rational(0) && fiber >= Rational(0);
  return RestrictionToG{m1->n1() / 2, d.k, fiber, eff};
}

}  // namespace dpfib::dp
