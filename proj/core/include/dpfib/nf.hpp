#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dpfib/poly.hpp"
#include "dpfib/rational.hpp"

namespace dpfib::nf {

/// The four cap regimes of the supermaximal-singularity inequality.
enum class NFCase { Dp1EpsPos, Dp1EpsZero, Dp1EpsZeroWithA, Dp2 };

const char* to_string(NFCase c);

/// Concrete parameters a case may need: (n1, n2) for Dp1EpsPos, n2 for
/// Dp1EpsZero, beta for Dp2. Dp1EpsZeroWithA needs none (A is a system
/// variable constrained to A >= 0).
struct CaseParams {
  std::optional<long long> n1;
  std::optional<long long> n2;
  std::optional<long long> beta;
};

/// Reduction of the capped target inequality
///   (S0+S1)(m^h S0 + m^v S0') > (2n S0 + n S1 + e)^2
/// to the quadratic normal form
///   coefficient * quad_scale * S0 (S0+S1) + (n S1 - e)^2 < 0.
/// coefficient takes the per-case form (2n2-3n1-5, 2n2-5, A,
/// (2-beta)n^2); quad_scale is n^2 for the first two and 1 otherwise.
/// identity_verified is the result of the exact symbolic expansion check;
/// construction throws Internal if it ever fails. Since quad_scale > 0 and
/// the residual is a square, the system is infeasible exactly when the
/// coefficient is >= 0 over the admissible parameters.
struct ReductionCertificate {
  NFCase nf_case;
  std::string coefficient_formula;
  Poly coefficient;
  Poly quad_scale;
  Poly residual;
  bool identity_verified;
  /// Evaluated coefficient when the case parameters are supplied; reported
  /// at n = 1 for Dp2 (the n^2 factor never changes the sign).
  std::optional<Rational> coefficient_value;
  std::optional<bool> infeasible;
};

ReductionCertificate reduce_to_quadratic(NFCase nf_case, const CaseParams& params = {});

/// A concrete inequality system at fixed n. The vertical multiplicity bound
/// is enforced in product form,
///   m^v * S0' < v_sigma * S0 + v_excess * e,
/// which is the shape the cap substitution actually uses (S0' <= S0 on the
/// degree term, S0' <= nu(F_t) with nu(F_t) = 1 worst case on the excess
/// term). Constraints: S0 >= S0' > 0, S1 > 0, e > 0, 0 <= m^h <= cap_h,
/// m^v >= 0, plus S0' <= S0/2 when half_sigma is set.
struct NFSystem {
  NFCase nf_case;
  long long n;
  Rational cap_h;     // horizontal multiplicity cap
  Rational v_sigma;   // coefficient of S0 in the vertical product bound
  Rational v_excess;  // coefficient of e in the vertical product bound
  bool half_sigma = false;
  std::optional<Rational> a_param;  // Dp1EpsZeroWithA only
};

/// Builds the system for a case at degree n. Dp1EpsZeroWithA requires the
/// sampled A; Dp2 with beta <= 0 drops the beta n^2 term from the vertical
/// bound (the cap is tighter on that range).
NFSystem make_system(NFCase nf_case, const CaseParams& params, long long n,
                     std::optional<Rational> a_param = std::nullopt);

struct Witness {
  long long n;
  Rational s0, s0p, s1, e, mh, mv;
  std::optional<Rational> a_param;
};

/// Exact re-check of every constraint and the strict target inequality.
bool verify_witness(const NFSystem& sys, const Witness& w);

/// Search ranges: Sigma coordinates in (0, sigma_max], excess in
/// (0, excess_per_n * n], degree up to n_max (sweep only), sampled
/// denominators up to denom_bound.
struct SearchBox {
  Rational sigma_max = 10;
  Rational excess_per_n = 5;
  long long n_max = 50;
  long long denom_bound = 64;
};

struct SearchResult {
  std::optional<Witness> witness;
  uint64_t samples_used = 0;
  uint64_t seed = 0;
};

/// Bounded witness search for a fixed system: a deterministic geometric
/// grid pass first, then seeded uniform rational fill. A returned witness
/// always re-verifies exactly; no witness is a bounded-search statement,
/// not a proof.
SearchResult feasibility_search(const NFSystem& sys, const SearchBox& box, uint64_t budget,
                                uint64_t seed);

/// Same search sweeping n = 1..box.n_max with the budget split evenly.
SearchResult feasibility_search_sweep(NFCase nf_case, const CaseParams& params,
                                      const SearchBox& box, uint64_t budget, uint64_t seed);

/// The two exclusion branches for maps to a fibration with nef -K: either
/// the second blow-up center misses the fiber strict transform or it meets
/// it.
enum class FlopBranch { FiberMissed, FiberMet };

/// Lower bound on m'/n: 1/2 - 1/n (FiberMissed, via S0' <= S0/2) or
/// 1/8 - 1/n (FiberMet, via the two-blow-up cap nu1 + nu2 <= 3n).
Rational flop_exclusion_threshold(long long n, FlopBranch branch);

/// min of the two branches, i.e. 1/8 - 1/n; this is the bound that holds
/// unconditionally and drives the limiting argument.
Rational flop_exclusion_threshold_combined(long long n);

}  // namespace dpfib::nf
