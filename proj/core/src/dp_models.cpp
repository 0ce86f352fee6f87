#include "dpfib/dp_models.hpp"

#include <algorithm>
#include <string>

namespace dpfib::dp {

namespace {

void require_sorted_nonneg(long long n1, long long n2, long long n3) {
  if (n1 < 0 || n1 > n2 || n2 > n3)
    throw Error(ErrorCode::InvalidArgument, "twists must satisfy 0 <= n1 <= n2 <= n3");
}

// Smoothness constraints for degree-2 tuples with a < 0 and 2a+b in {1,2}:
//  - the section class t0 lies on the branch divisor, forcing n1 > 0;
//  - on the exceptional surface of the section blow-up the branch restricts
//    to t_E + (2a+n2) l_E, which must be effective irreducible:
//    2a+n2 = 0 or 2a+n2 >= n2-n1;
//  - the branch meets the sweeping family t0 + n1 l non-negatively:
//    4n1 + 2a >= 0.
// Returns the violated clause, or nullptr when all hold.
const char* dp2_negative_a_violation(long long a, long long n1, long long n2) {
  if (n1 <= 0) return "a < 0 forces n1 > 0 (the section lies on an irreducible branch divisor)";
  const long long t = 2 * a + n2;
  if (!(t == 0 || t >= n2 - n1))
    return "branch restriction t_E + (2a+n2) l_E to the exceptional surface is not "
           "effective irreducible";
  if (4 * n1 + 2 * a < 0) return "branch meets the sweeping class t0 + n1 l negatively";
  return nullptr;
}

bool dp2_small_sum_ok(long long a, long long n1, long long n2) {
  if (a >= 0) return true;
  return dp2_negative_a_violation(a, n1, n2) == nullptr;
}

}  // namespace

DegreeOneModel build_dp1(long long epsilon, long long n1, long long n2, long long n3) {
  require_sorted_nonneg(n1, n2, n3);
  if (epsilon < 0) throw Error(ErrorCode::InvalidArgument, "epsilon must be non-negative");
  const long long b = n1 + n2 + n3;
  if (b == 0)
    throw Error(ErrorCode::ProductCase,
                "b = 0 gives a product with the base, not a Mori fibration");
  if (epsilon == 0) {
    if (2 * n2 != n1 + n3)
      throw Error(ErrorCode::NotRealizable, "eps = 0 requires 2 n2 = n1 + n3");
    if (n1 % 2 != 0) throw Error(ErrorCode::NotRealizable, "eps = 0 requires n1 even");
    if (n3 % 2 != 0) throw Error(ErrorCode::NotRealizable, "eps = 0 requires n3 even");
    return DegreeOneModel(0, n1, n2, n3, Dp1Case::EpsZero);
  }
  if (epsilon != n1)
    throw Error(ErrorCode::NotRealizable, "eps > 0 requires eps = n1");
  if (n1 % 2 != 0) throw Error(ErrorCode::NotRealizable, "eps = n1 > 0 requires n1 even");
  if (n3 != 2 * n2) throw Error(ErrorCode::NotRealizable, "eps = n1 > 0 requires n3 = 2 n2");
  if (n2 < 3 * n1) throw Error(ErrorCode::NotRealizable, "eps = n1 > 0 requires n2 >= 3 n1");
  return DegreeOneModel(epsilon, n1, n2, n3, Dp1Case::EpsPos);
}

DegreeTwoModel build_dp2(long long a, long long n1, long long n2) {
  if (n1 < 0 || n1 > n2)
    throw Error(ErrorCode::InvalidArgument, "twists must satisfy 0 <= n1 <= n2");
  const long long sum = 2 * a + n1 + n2;
  if (sum <= 0) throw Error(ErrorCode::NotRealizable, "2a+b <= 0 cannot occur");
  if (sum == 1 || sum == 2) {
    if (const char* clause = (a < 0) ? dp2_negative_a_violation(a, n1, n2) : nullptr)
      throw Error(ErrorCode::NotRealizable, clause);
    return DegreeTwoModel(a, n1, n2, /*verified=*/true);
  }
  // 2a+b >= 3: accepted without an existence certificate for a smooth
  // branch divisor; the rigidity statement only needs beta <= 2.
  return DegreeTwoModel(a, n1, n2, /*verified=*/false);
}

BranchData branch_data_dp1(const DegreeOneModel& model) {
  auto bundle = chow::BundleSpec::make(4, {0, model.n1(), model.n2(), model.n3()});
  chow::ChowClass q(bundle, 1, Rational(2), model.q_coeff());
  chow::CurveClassX t_b{bundle, Rational(1), Rational(model.epsilon())};
  chow::ChowClass r(bundle, 1, Rational(3), Rational(model.r_coeff()));
  return BranchData{std::move(bundle), std::move(q), std::move(t_b), std::move(r)};
}

std::vector<DegreeOneModel> enumerate_dp1(long long max_n3) {
  if (max_n3 < 0) throw Error(ErrorCode::InvalidArgument, "bound must be non-negative");
  std::vector<DegreeOneModel> out;
  for (long long n1 = 0; n1 <= max_n3; ++n1) {
    for (long long n2 = n1; n2 <= max_n3; ++n2) {
      for (long long n3 = n2; n3 <= max_n3; ++n3) {
        if (n1 + n2 + n3 == 0) continue;
        if (2 * n2 == n1 + n3 && n1 % 2 == 0 && n3 % 2 == 0)
          out.push_back(build_dp1(0, n1, n2, n3));
        if (n1 > 0 && n1 % 2 == 0 && n3 == 2 * n2 && n2 >= 3 * n1)
          out.push_back(build_dp1(n1, n1, n2, n3));
      }
    }
  }
  return out;  // loop order is already ascending (n1, n2, n3)
}

std::vector<DegreeTwoModel> enumerate_dp2_sum(long long sum2ab) {
  if (sum2ab != 1 && sum2ab != 2)
    throw Error(ErrorCode::InvalidArgument, "sum enumeration is defined for 2a+b in {1, 2}");
  std::vector<DegreeTwoModel> out;
  // b runs over the sum parity; a = (sum - b) / 2. The list is finite:
  // 2a + n2 = sum - n1, so the branch-restriction constraint leaves either
  // n1 = sum (and then 4n1 + 2a >= 0 gives b <= 5 sum) or n2 <= sum
  // (b <= 2 sum).
  for (long long b = (sum2ab % 2 == 0) ? 0 : 1; b <= 5 * sum2ab; b += 2) {
    const long long a = (sum2ab - b) / 2;
    for (long long n2 = (b + 1) / 2; n2 <= b; ++n2) {
      const long long n1 = b - n2;
      if (n1 < 0 || n1 > n2) continue;
      if (dp2_small_sum_ok(a, n1, n2)) out.push_back(build_dp2(a, n1, n2));
    }
  }
  std::sort(out.begin(), out.end(), [](const DegreeTwoModel& x, const DegreeTwoModel& y) {
    return std::tuple(x.b(), x.n2(), x.a()) < std::tuple(y.b(), y.n2(), y.a());
  });
  return out;
}

std::vector<DegreeTwoModel> enumerate_dp2_box(long long max_abs_a, long long max_n2) {
  if (max_abs_a < 0 || max_n2 < 0)
    throw Error(ErrorCode::InvalidArgument, "box bounds must be non-negative");
  std::vector<DegreeTwoModel> out;
  for (long long a = -max_abs_a; a <= max_abs_a; ++a) {
    for (long long n1 = 0; n1 <= max_n2; ++n1) {
      for (long long n2 = n1; n2 <= max_n2; ++n2) {
        const long long sum = 2 * a + n1 + n2;
        if (sum <= 0) continue;
        if ((sum == 1 || sum == 2) && !dp2_small_sum_ok(a, n1, n2)) continue;
        out.push_back(build_dp2(a, n1, n2));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const DegreeTwoModel& x, const DegreeTwoModel& y) {
    return std::tuple(x.b(), x.n2(), x.a()) < std::tuple(y.b(), y.n2(), y.a());
  });
  return out;
}

ConstructionReport construction_identities_dp1(const DegreeOneModel& model, long long beta_h) {
  if (beta_h <= 0) throw Error(ErrorCode::InvalidArgument, "beta_h must be positive");
  const BranchData data = branch_data_dp1(model);
  // N = t_B . H for H = M + beta_h L, evaluated through the chow pairing.
  chow::ChowClass h(data.bundle, 1, Rational(1), Rational(beta_h));
  const Rational n_pairs = chow::pair_divisor_curve(h, data.t_b);
  const long long a_prime = model.a_prime();
  const long long a = 2 * a_prime;

  bool ok = n_pairs == Rational(beta_h + model.epsilon());
  // N = b + beta_h + (3/2) a   with a = 2a'.
  ok = ok && n_pairs == Rational(model.b() + beta_h) + Rational(3 * a, 2);
  // eps = b + 3a'.
  ok = ok && model.epsilon() == model.b() + 3 * a_prime;
  // R coefficient is -3 eps.
  ok = ok && model.r_coeff() == -3 * model.epsilon();
  // The branch divisor misses the special section: R . t_B = 0.
  ok = ok && chow::pair_divisor_curve(data.r, data.t_b).is_zero();
  if (!ok)
    throw Error(ErrorCode::Internal, "construction identities failed on a validated model");

  return ConstructionReport{beta_h, beta_h + model.epsilon(), a_prime, a, true};
}

}  // namespace dpfib::dp
