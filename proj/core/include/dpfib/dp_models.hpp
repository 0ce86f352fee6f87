#pragma once

#include <variant>
#include <vector>

#include "dpfib/chow.hpp"
#include "dpfib/rational.hpp"

namespace dpfib::dp {

/// The two structural cases of a degree-1 fibration: either the excess
/// epsilon vanishes (with 2 n2 = n1 + n3 and n1, n3 even), or
/// epsilon = n1 > 0 (with n3 = 2 n2, n1 even, n2 >= 3 n1).
enum class Dp1Case { EpsZero, EpsPos };

/// Validated parameter tuple (epsilon; n1, n2, n3) of a smooth degree-1
/// del Pezzo fibration over the line, plus the invariants derived from it.
/// Instances only come out of build_dp1, so every accessor is trustworthy.
class DegreeOneModel {
 public:
  long long epsilon() const { return epsilon_; }
  long long n1() const { return n1_; }
  long long n2() const { return n2_; }
  long long n3() const { return n3_; }
  Dp1Case case_tag() const { return case_; }

  long long b() const { return n1_ + n2_ + n3_; }
  long long a_prime() const { return (epsilon_ - b()) / 3; }  // always -n2
  long long a() const { return 2 * a_prime(); }
  Rational q_coeff() const { return Rational(-2 * (b() - epsilon_), 3); }  // L part of Q
  long long r_coeff() const { return -3 * epsilon_; }                      // L part of R

 private:
  DegreeOneModel(long long e, long long n1, long long n2, long long n3, Dp1Case c)
      : epsilon_(e), n1_(n1), n2_(n2), n3_(n3), case_(c) {}
  friend DegreeOneModel build_dp1(long long, long long, long long, long long);

  long long epsilon_, n1_, n2_, n3_;
  Dp1Case case_;
};

/// Validated parameter tuple (a; n1, n2) of a smooth degree-2 del Pezzo
/// fibration over the line. 2a+b <= 0 never validates; for 2a+b in {1,2}
/// membership in the known finite lists is enforced; for 2a+b >= 3 the
/// tuple is accepted without an existence proof for a smooth branch divisor
/// of class 4M+2aL, and existence_verified() reports false.
class DegreeTwoModel {
 public:
  long long a() const { return a_; }
  long long n1() const { return n1_; }
  long long n2() const { return n2_; }

  long long b() const { return n1_ + n2_; }
  long long beta() const { return 8 - 4 * a_ - 2 * b(); }
  long long sum2ab() const { return 2 * a_ + b(); }
  bool existence_verified() const { return existence_verified_; }

 private:
  DegreeTwoModel(long long a, long long n1, long long n2, bool verified)
      : a_(a), n1_(n1), n2_(n2), existence_verified_(verified) {}
  friend DegreeTwoModel build_dp2(long long, long long, long long);

  long long a_, n1_, n2_;
  bool existence_verified_;
};

using Model = std::variant<DegreeOneModel, DegreeTwoModel>;

inline int model_degree(const Model& m) {
  return std::holds_alternative<DegreeOneModel>(m) ? 1 : 2;
}

/// Validates (epsilon; n1, n2, n3). Throws ProductCase when b = 0 (the
/// total space splits off the base and is not a Mori fibration) and
/// NotRealizable with the violated clause named otherwise.
DegreeOneModel build_dp1(long long epsilon, long long n1, long long n2, long long n3);

/// Validates (a; n1, n2). See DegreeTwoModel for the acceptance policy.
DegreeTwoModel build_dp2(long long a, long long n1, long long n2);

/// Branch-locus data on the rank-4 ambient bundle: Q = 2M - (2/3)(b-eps) L,
/// t_B = t0 + eps l, R = 3M - 3 eps L.
struct BranchData {
  chow::BundleSpec bundle;
  chow::ChowClass q;
  chow::CurveClassX t_b;
  chow::ChowClass r;
};
BranchData branch_data_dp1(const DegreeOneModel& model);

/// All valid degree-1 tuples with n3 <= max_n3, ascending in (n1, n2, n3).
std::vector<DegreeOneModel> enumerate_dp1(long long max_n3);

/// All valid degree-2 tuples with the given 2a+b in {1, 2}, ascending in
/// (b, n2). The a >= 0 tuples are unconstrained beyond the sum; for a < 0
/// the smoothness constraints apply: n1 > 0, the class t_E + (2a+n2) l_E on
/// the exceptional surface of the section blow-up must be effective
/// irreducible (2a+n2 = 0 or 2a+n2 >= n2-n1), and R.(t0+n1 l) = 4n1+2a >= 0.
std::vector<DegreeTwoModel> enumerate_dp2_sum(long long sum2ab);

/// All valid degree-2 tuples with |a| <= max_abs_a and n2 <= max_n2,
/// ascending in (b, n2, a).
std::vector<DegreeTwoModel> enumerate_dp2_box(long long max_abs_a, long long max_n2);

/// Conic-bundle degeneration count and the construction identities for a
/// degree-1 model, at ample offset beta_h (H ~ M + beta_h L). The checks
/// cannot fail on a validated model; a mismatch throws Internal.
struct ConstructionReport {
  long long beta_h;
  long long degenerations;  // N = t_B . H = beta_h + epsilon
  long long a_prime;
  long long a;
  bool identities_hold;  // N = b + beta_h + (3/2)a, eps = b + 3a', R coeff = -3 eps
};
ConstructionReport construction_identities_dp1(const DegreeOneModel& model, long long beta_h);

}  // namespace dpfib::dp
