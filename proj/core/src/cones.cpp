#include "dpfib/cones.hpp"

namespace dpfib::cones {

namespace {

// Slope of the second effective-cone coordinate: D = k(-K)+mF has
// generator coordinates (k, k*c + m) with c as below.
Rational cone_slope(const dp::Model& model) {
  if (const auto* m1 = std::get_if<dp::DegreeOneModel>(&model)) {
    // -K = G_V + (2 -+ n1/2) F; generators {G_V, F}.
    if (m1->case_tag() == dp::Dp1Case::EpsZero) return Rational(2) - Rational(m1->n1(), 2);
    return Rational(2) + Rational(m1->n1(), 2);
  }
  // Generators {H - n2 F, F}: k(-K)+mF = k(H - n2 F) + (k(n2+2-a-b)+m)F.
  // TODO: replace {H - n2 F, F} with the exact pseudo-effective cone for
  // a < 0 once it is known; thresholds flag those models as heuristic.
  const auto& m2 = std::get<dp::DegreeTwoModel>(model);
  return Rational(m2.n2() + 2 - m2.a() - m2.b());
}

bool degree2_negative_a(const dp::Model& model) {
  const auto* m2 = std::get_if<dp::DegreeTwoModel>(&model);
  return m2 != nullptr && m2->a() < 0;
}

}  // namespace

bool effective_divisor_test(const dp::Model& model, const dp::DivisorClassV& d) {
  const Rational second = d.k * cone_slope(model) + d.m;
  return d.k >= Rational(0) && second >= Rational(0);
}

NefResult nef_and_m0(const dp::Model& model, const dp::DivisorClassV& d) {
  const dp::IntersectionTable t = dp::intersection_table(model);
  const Rational d_s0 = d.k * t.antiK_s0 + d.m * t.F_s0;
  const Rational d_f = d.k * t.antiK_f + d.m * t.F_f;
  // ((-K) + rF).f = 1 > 0 always, so only the s0 pairing constrains r:
  // (-K).s0 + r >= 0.
  return NefResult{d_s0 >= Rational(0) && d_f >= Rational(0), -t.antiK_s0};
}

ThresholdResult thresholds(const dp::Model& model, const dp::DivisorClassV& d) {
  if (!(d.k > Rational(0)))
    throw Error(ErrorCode::InvalidSystem, "thresholds need D = n(-K) + mF with n > 0");
  const Rational n = d.k;
  const Rational m = d.m;
  // q D + p K = (qn - p)(-K) + qm F stays effective iff (with t = p/q)
  // t <= n and (n - t) c + m >= 0.
  Rational alpha;
  if (m >= Rational(0)) {
    alpha = n;
  } else {
    const Rational c = cone_slope(model);
    if (c > Rational(0)) {
      alpha = n + m / c;
      if (alpha < Rational(0)) alpha = 0;
    } else {
      alpha = 0;  // every adjoint system leaves the cone immediately
    }
  }
  return ThresholdResult{n, alpha, alpha == n, degree2_negative_a(model)};
}

bool k2_condition(const dp::Model& model) {
  return dp::intersection_table(model).anti_k_square.f <= Rational(0);
}

FixedComponentBound no_fixed_components_bound(const dp::Model& model) {
  if (const auto* m1 = std::get_if<dp::DegreeOneModel>(&model)) {
    return m1->case_tag() == dp::Dp1Case::EpsZero
               ? FixedComponentBound::mPositiveAllowedOnlyIfN3Eq2
               : FixedComponentBound::mPositiveForced;
  }
  const auto& m2 = std::get<dp::DegreeTwoModel>(model);
  if (m2.beta() <= 2) return FixedComponentBound::mNonNegativeForced;
  throw Error(ErrorCode::Undetermined,
              "no fixed-component bound is established for degree 2 with beta in {4, 6}");
}

ConditionReport condition_report(const dp::Model& model) {
  const dp::IntersectionTable t = dp::intersection_table(model);
  const Rational m0 = -t.antiK_s0;
  const Rational isk = t.anti_k_cube + m0 + Rational(1);
  return ConditionReport{k2_condition(model), isk, isk <= Rational(2), m0};
}

}  // namespace dpfib::cones
