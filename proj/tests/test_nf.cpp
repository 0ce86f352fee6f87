#include <doctest.h>

#include <random>

#include "dpfib/nf.hpp"

using namespace dpfib;
using nf::CaseParams;
using nf::NFCase;

TEST_CASE("all four reduction certificates verify symbolically") {
  for (const NFCase c :
       {NFCase::Dp1EpsPos, NFCase::Dp1EpsZero, NFCase::Dp1EpsZeroWithA, NFCase::Dp2}) {
    const auto cert = nf::reduce_to_quadratic(c);
    CHECK(cert.identity_verified);
    CHECK(cert.residual == (Poly::var(Var::N) * Poly::var(Var::S1) - Poly::var(Var::E)).pow(2));
  }
  CHECK(nf::reduce_to_quadratic(NFCase::Dp1EpsPos).coefficient_formula == "2*n2-3*n1-5");
  CHECK(nf::reduce_to_quadratic(NFCase::Dp1EpsZero).coefficient_formula == "2*n2-5");
  CHECK(nf::reduce_to_quadratic(NFCase::Dp1EpsZeroWithA).coefficient_formula == "A");
  CHECK(nf::reduce_to_quadratic(NFCase::Dp2).coefficient_formula == "(2-beta)*n^2");
}

TEST_CASE("certificates evaluated at concrete parameters") {
  const auto beta2 = nf::reduce_to_quadratic(NFCase::Dp2, {.beta = 2});
  REQUIRE(beta2.coefficient_value.has_value());
  CHECK(*beta2.coefficient_value == Rational(0));
  CHECK(*beta2.infeasible);

  const auto n2_3 = nf::reduce_to_quadratic(NFCase::Dp1EpsZero, {.n2 = 3});
  CHECK(*n2_3.coefficient_value == Rational(1));
  CHECK(*n2_3.infeasible);
  CHECK_FALSE(*nf::reduce_to_quadratic(NFCase::Dp1EpsZero, {.n2 = 2}).infeasible);
  CHECK_FALSE(*nf::reduce_to_quadratic(NFCase::Dp1EpsZero, {.n2 = 1}).infeasible);

  // n2 = 3 n1 gives coefficient 3 n1 - 5 >= 0 once n1 >= 2.
  const auto tight = nf::reduce_to_quadratic(NFCase::Dp1EpsPos, {.n1 = 2, .n2 = 6});
  CHECK(*tight.coefficient_value == Rational(1));
  CHECK(*tight.infeasible);
  // Without parameters the EpsPos case is still infeasible under validity.
  CHECK(*nf::reduce_to_quadratic(NFCase::Dp1EpsPos).infeasible);
  CHECK(*nf::reduce_to_quadratic(NFCase::Dp1EpsZeroWithA).infeasible);
}

TEST_CASE("numeric spot-check of the certificate identity") {
  // Independent of the symbolic engine: plug 60 random rational tuples into
  // both sides of the identity for each case.
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long long> num(1, 40);
  std::uniform_int_distribution<long long> den(1, 8);
  std::uniform_int_distribution<long long> par(0, 9);
  for (const NFCase c :
       {NFCase::Dp1EpsPos, NFCase::Dp1EpsZero, NFCase::Dp1EpsZeroWithA, NFCase::Dp2}) {
    const auto cert = nf::reduce_to_quadratic(c);
    for (int i = 0; i < 60; ++i) {
      const Rational s0(num(rng), den(rng)), s1(num(rng), den(rng)), e(num(rng), den(rng));
      const Rational n(1 + par(rng)), n1(par(rng)), n2(par(rng)), beta(par(rng) - 4),
          a(par(rng));
      auto eval = [&](const Poly& p) {
        return p.substitute(Var::S0, s0)
            .substitute(Var::S1, s1)
            .substitute(Var::E, e)
            .substitute(Var::N, n)
            .substitute(Var::N1, n1)
            .substitute(Var::N2, n2)
            .substitute(Var::Beta, beta)
            .substitute(Var::A, a)
            .constant_value();
      };
      // Rebuild the capped sides numerically.
      Rational bracket;
      switch (c) {
        case NFCase::Dp1EpsPos:
          bracket = n * n * s0 +
                    ((Rational(8) + Rational(3) * n1 - Rational(2) * n2) * n * n * s0 +
                     Rational(4) * n * e);
          break;
        case NFCase::Dp1EpsZero:
          bracket = n * n * s0 +
                    ((Rational(8) - Rational(2) * n2) * n * n * s0 + Rational(4) * n * e);
          break;
        case NFCase::Dp1EpsZeroWithA:
          bracket = a * s0 + ((Rational(4) * n * n - Rational(2) * a) * s0 + Rational(4) * n * e);
          break;
        case NFCase::Dp2:
          bracket = Rational(2) * n * n * s0 + (beta * n * n * s0 + Rational(4) * n * e);
          break;
      }
      const Rational lhs = (s0 + s1) * bracket;
      const Rational two_n = Rational(2) * n;
      const Rational rhs_root = two_n * s0 + n * s1 + e;
      const Rational rhs = rhs_root * rhs_root;
      const Rational claimed =
          eval(cert.coefficient) * eval(cert.quad_scale) * s0 * (s0 + s1) +
          (n * s1 - e) * (n * s1 - e);
      CHECK(rhs - lhs == claimed);
    }
  }
}

TEST_CASE("witness search finds the feasible EpsZero values") {
  for (long long n2 : {1LL, 2LL}) {
    const auto res = nf::feasibility_search_sweep(NFCase::Dp1EpsZero, {.n2 = n2}, {}, 1000000, 1);
    REQUIRE(res.witness.has_value());
    const auto sys = nf::make_system(NFCase::Dp1EpsZero, {.n2 = n2}, res.witness->n);
    CHECK(nf::verify_witness(sys, *res.witness));
    // Soundness re-check from scratch, not through verify_witness.
    const auto& w = *res.witness;
    const Rational lhs = (w.s0 + w.s1) * (w.mh * w.s0 + w.mv * w.s0p);
    const Rational root = Rational(2 * w.n) * w.s0 + Rational(w.n) * w.s1 + w.e;
    CHECK(lhs > root * root);
    CHECK(w.mv * w.s0p < sys.v_sigma * w.s0 + sys.v_excess * w.e);
    CHECK(w.e > Rational(0));
    CHECK(w.s0p <= w.s0);
  }
}

TEST_CASE("certified-infeasible systems yield no witness") {
  const auto beta2 =
      nf::feasibility_search_sweep(NFCase::Dp2, {.beta = 2}, {.n_max = 6}, 30000, 1);
  CHECK_FALSE(beta2.witness.has_value());
  CHECK(beta2.samples_used == 30000);

  // beta <= 0 uses the tighter vertical cap and stays infeasible.
  const auto beta0 =
      nf::feasibility_search_sweep(NFCase::Dp2, {.beta = 0}, {.n_max = 4}, 10000, 1);
  CHECK_FALSE(beta0.witness.has_value());

  const auto n2_3 =
      nf::feasibility_search_sweep(NFCase::Dp1EpsZero, {.n2 = 3}, {.n_max = 6}, 20000, 1);
  CHECK_FALSE(n2_3.witness.has_value());

  const auto with_a = nf::feasibility_search_sweep(NFCase::Dp1EpsZeroWithA, {}, {.n_max = 4},
                                                   20000, 1);
  CHECK_FALSE(with_a.witness.has_value());
}

TEST_CASE("search respects the sigma constraints") {
  // A witness with S1 = 0 or S0' > S0 must never verify.
  const auto sys = nf::make_system(NFCase::Dp1EpsZero, {.n2 = 1}, 1);
  nf::Witness w{1, Rational(1), Rational(1), Rational(1), Rational(1), sys.cap_h, Rational(9),
                std::nullopt};
  CHECK(nf::verify_witness(sys, w));
  w.s1 = Rational(0);
  CHECK_FALSE(nf::verify_witness(sys, w));
  w.s1 = Rational(1);
  w.s0p = Rational(2);
  CHECK_FALSE(nf::verify_witness(sys, w));
  w.s0p = Rational(1);
  w.e = Rational(0);
  CHECK_FALSE(nf::verify_witness(sys, w));
}

TEST_CASE("horizontal cap monotonicity") {
  const auto sys = nf::make_system(NFCase::Dp1EpsZero, {.n2 = 2}, 1);
  const auto res = nf::feasibility_search(sys, {}, 5000, 1);
  REQUIRE(res.witness.has_value());
  nf::NFSystem wider = sys;
  wider.cap_h = sys.cap_h * Rational(2);
  CHECK(nf::verify_witness(wider, *res.witness));
}

TEST_CASE("flop exclusion thresholds") {
  CHECK(nf::flop_exclusion_threshold(8, nf::FlopBranch::FiberMet) == Rational(0));
  CHECK(nf::flop_exclusion_threshold(2, nf::FlopBranch::FiberMissed) == Rational(0));
  for (long long n = 1; n <= 200; ++n) {
    const auto missed = nf::flop_exclusion_threshold(n, nf::FlopBranch::FiberMissed);
    const auto met = nf::flop_exclusion_threshold(n, nf::FlopBranch::FiberMet);
    CHECK(missed == Rational(1, 2) - Rational(1, n));
    CHECK(met == Rational(1, 8) - Rational(1, n));
    CHECK(met <= missed);
    CHECK(nf::flop_exclusion_threshold_combined(n) == met);
  }
  CHECK_THROWS_AS((void)nf::flop_exclusion_threshold(0, nf::FlopBranch::FiberMet), Error);
}

TEST_CASE("search argument validation") {
  const auto sys = nf::make_system(NFCase::Dp2, {.beta = 2}, 1);
  CHECK_THROWS_AS((void)nf::feasibility_search(sys, {.sigma_max = Rational(0)}, 10, 1), Error);
  CHECK_THROWS_AS((void)nf::feasibility_search(sys, {}, 0, 1), Error);
  CHECK_THROWS_AS((void)nf::make_system(NFCase::Dp2, {.beta = 2}, 0), Error);
  CHECK_THROWS_AS((void)nf::make_system(NFCase::Dp2, {}, 1), Error);
  CHECK_THROWS_AS((void)nf::make_system(NFCase::Dp1EpsZeroWithA, {}, 1), Error);
  CHECK_THROWS_AS((void)nf::make_system(NFCase::Dp1EpsZeroWithA, {}, 1, Rational(-1)), Error);
}
