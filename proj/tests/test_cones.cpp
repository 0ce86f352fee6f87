#include <doctest.h>

#include "dpfib/cones.hpp"

using namespace dpfib;
using dp::build_dp1;
using dp::build_dp2;
using dp::DivisorClassV;
using dp::Model;

TEST_CASE("effective cone membership, degree 1 (0;0,1,2)") {
  const Model m = build_dp1(0, 0, 1, 2);
  // 2(-K) - 2F = 2 G_V + 2F: effective.
  CHECK(cones::effective_divisor_test(m, {Rational(2), Rational(-2)}));
  // 2(-K) - 3F = 2 G_V + F: still effective.
  CHECK(cones::effective_divisor_test(m, {Rational(2), Rational(-3)}));
  // 2(-K) - 5F = 2 G_V - F: not.
  CHECK_FALSE(cones::effective_divisor_test(m, {Rational(2), Rational(-5)}));
  // boundary: the zero class.
  CHECK(cones::effective_divisor_test(m, {Rational(0), Rational(0)}));
}

TEST_CASE("thresholds of the non-rigid degree-1 example") {
  const Model m = build_dp1(0, 0, 1, 2);
  const auto t = cones::thresholds(m, {Rational(2), Rational(-2)});
  CHECK(t.mu == Rational(2));
  CHECK(t.alpha == Rational(1));
  CHECK_FALSE(t.equal);
  CHECK_FALSE(t.cone_heuristic);
}

TEST_CASE("alpha equals mu exactly when the base part is effective") {
  for (const Model m : {Model(build_dp1(0, 2, 2, 2)), Model(build_dp1(2, 2, 6, 12)),
                        Model(build_dp2(0, 0, 1)), Model(build_dp2(2, 1, 1))}) {
    for (long long n = 1; n <= 6; ++n)
      for (long long mm = -8; mm <= 8; ++mm) {
        const auto t = cones::thresholds(m, {Rational(n), Rational(mm)});
        CHECK(t.alpha <= t.mu);
        CHECK(t.equal == (mm >= 0));
        CHECK(t.alpha >= Rational(0));
      }
  }
  CHECK_THROWS_AS((void)cones::thresholds(Model(build_dp2(0, 0, 1)),
                                          DivisorClassV{Rational(0), Rational(1)}),
                  Error);
}

TEST_CASE("degree-2 thresholds carry the heuristic flag for a < 0") {
  const Model neg = build_dp2(-1, 2, 2);
  CHECK(cones::thresholds(neg, {Rational(1), Rational(0)}).cone_heuristic);
  const Model pos = build_dp2(0, 0, 1);
  const auto t = cones::thresholds(pos, {Rational(2), Rational(-2)});
  CHECK_FALSE(t.cone_heuristic);
  CHECK(t.alpha < Rational(2));  // frozen from the exhaustive grid oracle
  CHECK(t.alpha == Rational(1));
}

TEST_CASE("nef offset m0") {
  // degree 1 EpsZero (0,2,2,2): m0 = n2 - 2 = 0; frozen from minimizing r
  // against the pairing (-K + rF).s0 with s0.G_V = -n3/2, s0.F = 1.
  const Model m222 = build_dp1(0, 2, 2, 2);
  const auto n0 = cones::nef_and_m0(m222, {Rational(1), Rational(0)});
  CHECK(n0.m0 == Rational(0));
  CHECK(n0.nef);  // -K itself is nef here

  // minimality: -K + m0 F nef, -K + (m0 - 1) F not.
  for (const Model m : {Model(build_dp1(0, 0, 4, 8)), Model(build_dp1(2, 2, 6, 12)),
                        Model(build_dp2(1, 0, 0)), Model(build_dp2(3, 2, 5))}) {
    const auto r = cones::nef_and_m0(m, {Rational(1), Rational(0)});
    CHECK(cones::nef_and_m0(m, {Rational(1), r.m0}).nef);
    CHECK_FALSE(cones::nef_and_m0(m, {Rational(1), r.m0 - Rational(1)}).nef);
  }
}

TEST_CASE("K^2-condition closed forms") {
  CHECK_FALSE(cones::k2_condition(Model(build_dp1(2, 2, 6, 12))));  // n2 = 6 < 7
  CHECK(cones::k2_condition(Model(build_dp1(0, 0, 4, 8))));         // n2 = 4
  CHECK_FALSE(cones::k2_condition(Model(build_dp1(0, 0, 2, 4))));
  CHECK(cones::k2_condition(Model(build_dp2(1, 1, 1))));   // 2a+b = 4, beta = 0
  CHECK_FALSE(cones::k2_condition(Model(build_dp2(1, 0, 1))));  // 2a+b = 3, beta = 2

  // brute-force cone search agrees (small box here; verify sweeps further).
  for (const Model m : {Model(build_dp1(0, 0, 4, 8)), Model(build_dp1(0, 0, 2, 4)),
                        Model(build_dp2(1, 1, 1)), Model(build_dp2(1, 0, 1))}) {
    const auto t = dp::intersection_table(m);
    bool found = false;
    for (long long a = 1; a <= 100 && !found; ++a)
      for (long long b = 1; b <= 100 && !found; ++b)
        found = dp::CurveClassV{t.anti_k_square.s0 * Rational(a),
                                t.anti_k_square.f * Rational(a) - Rational(b)}
                    .effective();
    CHECK(cones::k2_condition(m) == !found);
  }
}

TEST_CASE("the two sufficient conditions on the worked examples") {
  // EpsZero: (-K)^3 + m0 + 1 = 5 - n2, so the bound holds iff n2 >= 3.
  const auto r012 = cones::condition_report(Model(build_dp1(0, 0, 1, 2)));
  CHECK(r012.isk_value == Rational(4));
  CHECK_FALSE(r012.isk_holds);
  const auto r048 = cones::condition_report(Model(build_dp1(0, 0, 4, 8)));
  CHECK(r048.isk_value == Rational(1));
  CHECK(r048.isk_holds);
  // (0,2,4) satisfies neither sufficient condition yet classifies rigid.
  const auto r024 = cones::condition_report(Model(build_dp1(0, 0, 2, 4)));
  CHECK_FALSE(r024.k2_holds);
  CHECK_FALSE(r024.isk_holds);
}

TEST_CASE("fixed-component sign bounds") {
  CHECK(cones::no_fixed_components_bound(Model(build_dp2(2, 0, 0))) ==
        cones::FixedComponentBound::mNonNegativeForced);  // 2a+b = 4
  CHECK(cones::no_fixed_components_bound(Model(build_dp2(1, 0, 1))) ==
        cones::FixedComponentBound::mNonNegativeForced);  // beta = 2
  CHECK(cones::no_fixed_components_bound(Model(build_dp1(0, 0, 4, 8))) ==
        cones::FixedComponentBound::mPositiveAllowedOnlyIfN3Eq2);
  CHECK(cones::no_fixed_components_bound(Model(build_dp1(2, 2, 6, 12))) ==
        cones::FixedComponentBound::mPositiveForced);
  CHECK_THROWS_AS((void)cones::no_fixed_components_bound(Model(build_dp2(1, 0, 0))), Error);
  CHECK_THROWS_AS((void)cones::no_fixed_components_bound(Model(build_dp2(0, 0, 1))), Error);
}
