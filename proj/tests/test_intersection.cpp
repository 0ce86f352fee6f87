#include <doctest.h>

#include "dpfib/intersection.hpp"

using namespace dpfib;
using dp::build_dp1;
using dp::build_dp2;
using dp::CurveClassV;
using dp::DivisorClassV;
using dp::Model;

TEST_CASE("degree-1 table entries") {
  const auto m = build_dp1(0, 2, 2, 2);
  const auto t = dp::intersection_table(m);
  CHECK(t.s0_G == Rational(-1));      // -n3/2
  CHECK(t.s0_F == Rational(1));
  CHECK(t.f_G == Rational(1));
  CHECK(t.f_F == Rational(0));
  CHECK(t.anti_k_square == CurveClassV{Rational(1), Rational(2)});  // K^2 = s0 + 2f
  CHECK(t.anti_k_cube == Rational(2));                              // 6 - 2 n2
  CHECK(t.anti_k_fpart == Rational(1));                             // -K = G_V + (2 - n1/2) F

  const auto pos = build_dp1(2, 2, 6, 12);
  const auto tp = dp::intersection_table(pos);
  CHECK(tp.s0_G == Rational(-6));  // -n3/2 = -n2
  CHECK(tp.anti_k_square == CurveClassV{Rational(1), Rational(1)});  // 4 + 3 - 6
  CHECK(tp.anti_k_cube == Rational(6 + 4 - 12));
  REQUIRE(tp.s_b.has_value());
  CHECK(*tp.s_b == CurveClassV{Rational(1), Rational(1)});  // s_B = s0 + (n1/2) f
  CHECK(tp.h_class == DivisorClassV{Rational(2), Rational(6)});  // 2(G_V + n2 F)
}

TEST_CASE("the very-ample class in the (-K, F) basis") {
  // (0;0,1,2): H = 2G_V + n3 F = 2(-K) - 2F.
  const auto t012 = dp::intersection_table(build_dp1(0, 0, 1, 2));
  CHECK(t012.h_class == DivisorClassV{Rational(2), Rational(-2)});
  // (0;2,2,2): H = 2(-K).
  const auto t222 = dp::intersection_table(build_dp1(0, 2, 2, 2));
  CHECK(t222.h_class == DivisorClassV{Rational(2), Rational(0)});
  // degree 2: H = -K + (a+b-2) F.
  const auto t2 = dp::intersection_table(build_dp2(0, 0, 1));
  CHECK(t2.h_class == DivisorClassV{Rational(1), Rational(-1)});
}

TEST_CASE("degree-2 table entries") {
  const auto m = build_dp2(0, 0, 1);
  const auto t = dp::intersection_table(m);
  CHECK(t.h3 == Rational(2));  // 2b
  CHECK(t.h2f == Rational(2));
  CHECK(t.hf2 == Rational(0));
  CHECK(t.anti_k_cube == Rational(8));  // 12 - 0 - 4
  CHECK(t.anti_k_square == CurveClassV{Rational(2), Rational(6)});  // beta = 6
}

TEST_CASE("pairing through the table") {
  // degree 2: H.(s0 + f) = 1.
  const Model m2 = build_dp2(0, 0, 1);
  const auto& mm2 = std::get<dp::DegreeTwoModel>(m2);
  const DivisorClassV h = dp::divisor_from_h_f(mm2, Rational(1), Rational(0));
  CHECK(dp::pair(m2, h, CurveClassV{Rational(1), Rational(1)}) == Rational(1));

  // the zero class pairs to zero everywhere.
  CHECK(dp::pair(m2, DivisorClassV{Rational(0), Rational(0)},
                 CurveClassV{Rational(5), Rational(-7)}) == Rational(0));

  // degree 1 EpsPos (2,2,6,12): G_V . s_B = -n2 + n1/2 = -5.
  const Model m1 = build_dp1(2, 2, 6, 12);
  const auto& mm1 = std::get<dp::DegreeOneModel>(m1);
  const auto t = dp::intersection_table(mm1);
  const DivisorClassV gv = dp::divisor_from_gv_f(mm1, Rational(1), Rational(0));
  CHECK(dp::pair(m1, gv, *t.s_b) == Rational(-5));
}

TEST_CASE("basis conversions invert each other") {
  const auto m1 = build_dp1(0, 0, 2, 4);
  for (long long k = -3; k <= 3; ++k)
    for (long long m = -3; m <= 3; ++m) {
      const DivisorClassV d{Rational(k), Rational(m)};
      const auto [gv, f] = dp::gv_f_coords(m1, d);
      CHECK(dp::divisor_from_gv_f(m1, gv, f) == d);
    }
  const auto m2 = build_dp2(-1, 2, 2);
  for (long long k = -3; k <= 3; ++k)
    for (long long m = -3; m <= 3; ++m) {
      const DivisorClassV d{Rational(k), Rational(m)};
      const auto [h, f] = dp::h_f_coords(m2, d);
      CHECK(dp::divisor_from_h_f(m2, h, f) == d);
    }
}

TEST_CASE("flop lattice map of (0;2,2,2)") {
  const auto flop = dp::flop_transform_222(build_dp1(0, 2, 2, 2));
  // -K fixed, F -> -K - F.
  CHECK(flop.apply(DivisorClassV{Rational(1), Rational(0)}) ==
        DivisorClassV{Rational(1), Rational(0)});
  CHECK(flop.apply(DivisorClassV{Rational(0), Rational(1)}) ==
        DivisorClassV{Rational(1), Rational(-1)});
  // n(-K) - lF -> (n-l)(-K) + lF.
  CHECK(flop.apply(DivisorClassV{Rational(5), Rational(-2)}) ==
        DivisorClassV{Rational(3), Rational(2)});
  CHECK(flop.compose(flop).is_identity());
  CHECK_THROWS_AS((void)dp::flop_transform_222(build_dp1(0, 2, 3, 4)), Error);
  CHECK_THROWS_AS((void)dp::flop_transform_222(build_dp1(0, 0, 1, 2)), Error);
}

TEST_CASE("restriction to the ruled surface") {
  // EpsZero: D = n(-K) + mF restricts to n s0 + (m - n(n1/2 + n3 - n2 - 2)) f.
  const Model m048 = build_dp1(0, 0, 4, 8);
  const auto r = dp::restrict_to_G(m048, DivisorClassV{Rational(2), Rational(-2)});
  CHECK(r.ruled_type == 0);
  CHECK(r.section_coeff == Rational(2));
  CHECK(r.fiber_coeff == Rational(-2 - 2 * (0 + 8 - 4 - 2)));
  CHECK_FALSE(r.effective);

  // n3 = 2: m > 0 in |n(-K) - mF| can restrict effectively (m/n <= 2 - n3/2).
  const Model m012 = build_dp1(0, 0, 1, 2);
  const auto r2 = dp::restrict_to_G(m012, DivisorClassV{Rational(2), Rational(-2)});
  CHECK(r2.fiber_coeff == Rational(-2 - 2 * (0 + 2 - 1 - 2)));
  CHECK(r2.effective);

  // EpsPos: fiber coefficient m + n(n1 - n2 + 2); effectivity needs m > 0.
  const Model mpos = build_dp1(2, 2, 6, 12);
  const auto r3 = dp::restrict_to_G(mpos, DivisorClassV{Rational(1), Rational(0)});
  CHECK(r3.ruled_type == 1);
  CHECK(r3.fiber_coeff == Rational(0 + 1 * (2 - 6 + 2)));
  CHECK_FALSE(r3.effective);
  const auto r4 = dp::restrict_to_G(mpos, DivisorClassV{Rational(1), Rational(5)});
  CHECK(r4.effective);

  // zero class restricts to zero, effectively.
  const auto r0 = dp::restrict_to_G(m048, DivisorClassV{Rational(0), Rational(0)});
  CHECK(r0.effective);
  CHECK(r0.section_coeff == Rational(0));
  CHECK(r0.fiber_coeff == Rational(0));

  CHECK_THROWS_AS((void)dp::restrict_to_G(Model(build_dp2(1, 0, 0)),
                                          DivisorClassV{Rational(1), Rational(0)}),
                  Error);
}
