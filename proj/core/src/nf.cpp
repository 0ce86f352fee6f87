#include "dpfib/nf.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace dpfib::nf {

namespace {

Poly pv(Var v) { return Poly::var(v); }

struct CaseShape {
  Poly lhs_bracket;   // capped m^h S0 + m^v S0' bound, in S0, e, n, params
  Poly coefficient;   // reduction coefficient per case
  Poly quad_scale;    // n^2 or 1
  const char* formula;
};

// Capped left side per case. The bracket is the bound on
// m^h S0 + m^v S0' after substituting the caps: horizontal term + vertical
// product bound.
CaseShape case_shape(NFCase c) {
  const Poly s0 = pv(Var::S0), e = pv(Var::E), n = pv(Var::N);
  const Poly n1 = pv(Var::N1), n2 = pv(Var::N2), beta = pv(Var::Beta), aa = pv(Var::A);
  const Poly n2sq = n * n;
  switch (c) {
    case NFCase::Dp1EpsPos:
      // m^h <= n^2; m^v S0' <= (8 + 3n1 - 2n2) n^2 S0 + 4ne.
      return {n2sq * s0 + ((Poly(8) + Poly(3) * n1 - Poly(2) * n2) * n2sq * s0 + Poly(4) * n * e),
              Poly(2) * n2 - Poly(3) * n1 - Poly(5), n2sq, "2*n2-3*n1-5"};
    case NFCase::Dp1EpsZero:
      // m^h <= n^2; m^v S0' <= (8 - 2n2) n^2 S0 + 4ne.
      return {n2sq * s0 + ((Poly(8) - Poly(2) * n2) * n2sq * s0 + Poly(4) * n * e),
              Poly(2) * n2 - Poly(5), n2sq, "2*n2-5"};
    case NFCase::Dp1EpsZeroWithA:
      // m^h <= A; m^v S0' <= (4n^2 - 2A) S0 + 4ne.
      return {aa * s0 + ((Poly(4) * n2sq - Poly(2) * aa) * s0 + Poly(4) * n * e), aa, Poly(1),
              "A"};
    case NFCase::Dp2:
      // m^h <= 2n^2; m^v S0' <= beta n^2 S0 + 4ne.
      return {Poly(2) * n2sq * s0 + (beta * n2sq * s0 + Poly(4) * n * e),
              (Poly(2) - beta) * n2sq, Poly(1), "(2-beta)*n^2"};
  }
  throw Error(ErrorCode::Internal, "unknown case");
}

}  // namespace

const char* to_string(NFCase c) {
  switch (c) {
    case NFCase::Dp1EpsPos: return "dp1-eps-pos";
    case NFCase::Dp1EpsZero: return "dp1-eps-zero";
    case NFCase::Dp1EpsZeroWithA: return "dp1-eps-zero-A";
    case NFCase::Dp2: return "dp2";
  }
  return "?";
}

ReductionCertificate reduce_to_quadratic(NFCase nf_case, const CaseParams& params) {
  const CaseShape shape = case_shape(nf_case);
  const Poly s0 = pv(Var::S0), s1 = pv(Var::S1), e = pv(Var::E), n = pv(Var::N);

  const Poly rhs = (Poly(2) * n * s0 + n * s1 + e).pow(2);
  const Poly lhs = (s0 + s1) * shape.lhs_bracket;
  const Poly residual = (n * s1 - e).pow(2);
  const Poly claimed = shape.coefficient * shape.quad_scale * s0 * (s0 + s1) + residual;
  const bool verified = (rhs - lhs) == claimed;
  if (!verified)
    throw Error(ErrorCode::Internal, "reduction certificate failed its expansion check");

  ReductionCertificate cert{nf_case,        shape.formula, shape.coefficient, shape.quad_scale,
                            residual,       verified,      std::nullopt,      std::nullopt};

  // Evaluate the coefficient when enough parameters are pinned down.
  Poly value = shape.coefficient;
  if (params.n1) value = value.substitute(Var::N1, Rational(*params.n1));
  if (params.n2) value = value.substitute(Var::N2, Rational(*params.n2));
  if (params.beta) value = value.substitute(Var::Beta, Rational(*params.beta));
  if (nf_case == NFCase::Dp2) value = value.substitute(Var::N, Rational(1));
  switch (nf_case) {
    case NFCase::Dp1EpsPos:
      if (params.n1 && params.n2) {
        cert.coefficient_value = value.constant_value();
        cert.infeasible = *cert.coefficient_value >= Rational(0);
      } else {
        // Model validity (n2 >= 3n1, n1 >= 2 even) forces 2n2-3n1-5 >= 1.
        cert.infeasible = true;
      }
      break;
    case NFCase::Dp1EpsZero:
      if (params.n2) {
        cert.coefficient_value = value.constant_value();
        cert.infeasible = *cert.coefficient_value >= Rational(0);
      }
      break;
    case NFCase::Dp1EpsZeroWithA:
      cert.infeasible = true;  // the A >= 0 constraint is the coefficient sign
      break;
    case NFCase::Dp2:
      if (params.beta) {
        cert.coefficient_value = value.constant_value();
        cert.infeasible = *cert.coefficient_value >= Rational(0);
      }
      break;
  }
  return cert;
}

NFSystem make_system(NFCase nf_case, const CaseParams& params, long long n,
                     std::optional<Rational> a_param) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "system degree n must be positive");
  const Rational nn(n);
  const Rational nsq = nn * nn;
  NFSystem sys{nf_case, n, 0, 0, Rational(4) * nn, false, std::nullopt};
  switch (nf_case) {
    case NFCase::Dp1EpsPos: {
      if (!params.n1 || !params.n2)
        throw Error(ErrorCode::InvalidArgument, "dp1-eps-pos needs n1 and n2");
      sys.cap_h = nsq;
      sys.v_sigma = Rational(8 + 3 * *params.n1 - 2 * *params.n2) * nsq;
      break;
    }
    case NFCase::Dp1EpsZero: {
      if (!params.n2) throw Error(ErrorCode::InvalidArgument, "dp1-eps-zero needs n2");
      sys.cap_h = nsq;
      sys.v_sigma = Rational(8 - 2 * *params.n2) * nsq;
      break;
    }
    case NFCase::Dp1EpsZeroWithA: {
      if (!a_param) throw Error(ErrorCode::InvalidArgument, "dp1-eps-zero-A needs A");
      if (*a_param < Rational(0))
        throw Error(ErrorCode::InvalidArgument, "A must be non-negative");
      sys.cap_h = *a_param;
      sys.v_sigma = Rational(4) * nsq - Rational(2) * *a_param;
      sys.a_param = a_param;
      break;
    }
    case NFCase::Dp2: {
      if (!params.beta) throw Error(ErrorCode::InvalidArgument, "dp2 needs beta");
      sys.cap_h = Rational(2) * nsq;
      sys.v_sigma = (*params.beta > 0) ? Rational(*params.beta) * nsq : Rational(0);
      break;
    }
  }
  return sys;
}

bool verify_witness(const NFSystem& sys, const Witness& w) {
  if (w.n != sys.n) return false;
  const Rational zero(0);
  if (!(w.s0 > zero && w.s0p > zero && w.s1 > zero && w.e > zero)) return false;
  if (!(w.s0p <= w.s0)) return false;
  if (sys.half_sigma && !(w.s0p * Rational(2) <= w.s0)) return false;
  if (!(w.mh >= zero && w.mh <= sys.cap_h)) return false;
  if (!(w.mv >= zero)) return false;
  // Vertical product bound, strict.
  if (!(w.mv * w.s0p < sys.v_sigma * w.s0 + sys.v_excess * w.e)) return false;
  const Rational n(sys.n);
  const Rational lhs = (w.s0 + w.s1) * (w.mh * w.s0 + w.mv * w.s0p);
  const Rational rhs_root = Rational(2) * n * w.s0 + n * w.s1 + w.e;
  return lhs > rhs_root * rhs_root;
}

namespace {

// Largest admissible m^v for the sampled Sigma/e values, backed off from
// the strict bound by 1/denom_bound.
std::optional<Rational> near_cap_mv(const NFSystem& sys, const Rational& s0, const Rational& s0p,
                                    const Rational& e, long long denom_bound) {
  const Rational bound = sys.v_sigma * s0 + sys.v_excess * e;
  if (!(bound > Rational(0))) return std::nullopt;
  return (bound / s0p) * Rational(denom_bound - 1, denom_bound);
}

std::optional<Witness> probe(const NFSystem& sys, const Rational& s0, const Rational& s0p,
                             const Rational& s1, const Rational& e, long long denom_bound) {
  const auto mv = near_cap_mv(sys, s0, s0p, e, denom_bound);
  if (!mv || *mv < Rational(0)) return std::nullopt;
  Witness w{sys.n, s0, s0p, s1, e, sys.cap_h, *mv, sys.a_param};
  if (verify_witness(sys, w)) return w;
  return std::nullopt;
}

std::vector<Rational> geometric_grid(const Rational& max) {
  std::vector<Rational> grid;
  for (const Rational g : {Rational(1, 8), Rational(1, 4), Rational(1, 2), Rational(1),
                           Rational(2), Rational(4), Rational(8)}) {
    if (g <= max) grid.push_back(g);
  }
  if (grid.empty()) grid.push_back(max);
  return grid;
}

Rational clamp_pos(const Rational& v, const Rational& max, long long denom_bound) {
  if (v > max) return max;
  if (!(v > Rational(0))) {
    const Rational floor(1, denom_bound);
    return floor < max ? floor : max;
  }
  return v;
}

}  // namespace

SearchResult feasibility_search(const NFSystem& sys, const SearchBox& box, uint64_t budget,
                                uint64_t seed) {
  if (!(box.sigma_max > Rational(0)) || !(box.excess_per_n > Rational(0)) || box.n_max < 1 ||
      box.denom_bound < 2)
    throw Error(ErrorCode::InvalidArgument, "search box is empty");
  if (budget < 1) throw Error(ErrorCode::InvalidArgument, "budget must be at least 1");

  SearchResult result;
  result.seed = seed;
  const Rational n(sys.n);
  const Rational e_max = box.excess_per_n * n;

  // Deterministic pass: geometric grid, with e = n S1 (residual-zero line)
  // and the box edges as excess candidates.
  const auto grid = geometric_grid(box.sigma_max);
  for (const auto& s0 : grid) {
    for (const auto& s1 : grid) {
      for (const auto& ratio : {Rational(1), Rational(1, 2)}) {
        if (result.samples_used >= budget) return result;
        const Rational s0p = s0 * ratio;
        for (const Rational& e_cand :
             {n * s1, e_max, e_max * Rational(1, 2), Rational(1)}) {
          if (result.samples_used >= budget) return result;
          ++result.samples_used;
          const Rational e = clamp_pos(e_cand, e_max, box.denom_bound);
          if (sys.half_sigma && !(s0p * Rational(2) <= s0)) continue;
          if (auto w = probe(sys, s0, s0p, s1, e, box.denom_bound)) {
            result.witness = std::move(w);
            return result;
          }
        }
      }
    }
  }

  // Random fill: uniform rationals with denominators up to the box bound.
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ull + static_cast<uint64_t>(sys.n)));
  std::uniform_int_distribution<long long> den_dist(1, box.denom_bound);
  auto draw = [&](const Rational& max) {
    const long long den = den_dist(rng);
    const Rational scaled = max * Rational(den);
    const long long hi = std::max<long long>(1, scaled.num() / scaled.den());
    std::uniform_int_distribution<long long> num_dist(1, hi);
    return clamp_pos(Rational(num_dist(rng), den), max, box.denom_bound);
  };
  while (result.samples_used < budget) {
    ++result.samples_used;
    const Rational s0 = draw(box.sigma_max);
    Rational s0p = draw(s0);
    if (sys.half_sigma) s0p = s0 * Rational(1, 2);
    const Rational s1 = draw(box.sigma_max);
    const Rational e = draw(e_max);
    if (auto w = probe(sys, s0, s0p, s1, e, box.denom_bound)) {
      result.witness = std::move(w);
      return result;
    }
  }
  return result;
}

SearchResult feasibility_search_sweep(NFCase nf_case, const CaseParams& params,
                                      const SearchBox& box, uint64_t budget, uint64_t seed) {
  if (box.n_max < 1) throw Error(ErrorCode::InvalidArgument, "search box is empty");
  SearchResult total;
  total.seed = seed;
  const uint64_t per_n = std::max<uint64_t>(1, budget / static_cast<uint64_t>(box.n_max));
  for (long long n = 1; n <= box.n_max && total.samples_used < budget; ++n) {
    const uint64_t slice = std::min<uint64_t>(per_n, budget - total.samples_used);
    if (nf_case == NFCase::Dp1EpsZeroWithA) {
      // A is a sampled system parameter; try a small ladder per degree.
      const Rational nsq = Rational(n) * Rational(n);
      const uint64_t per_a = std::max<uint64_t>(1, slice / 5);
      for (const Rational& a :
           {Rational(0), nsq * Rational(1, 2), nsq, nsq * Rational(3, 2), nsq * Rational(2)}) {
        const NFSystem sys = make_system(nf_case, params, n, a);
        SearchResult r = feasibility_search(sys, box, per_a, seed);
        total.samples_used += r.samples_used;
        if (r.witness) {
          total.witness = r.witness;
          return total;
        }
      }
    } else {
      const NFSystem sys = make_system(nf_case, params, n);
      SearchResult r = feasibility_search(sys, box, slice, seed);
      total.samples_used += r.samples_used;
      if (r.witness) {
        total.witness = r.witness;
        return total;
      }
    }
  }
  return total;
}

Rational flop_exclusion_threshold(long long n, FlopBranch branch) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  const Rational one_over_n(1, n);
  return (branch == FlopBranch::FiberMissed ? Rational(1, 2) : Rational(1, 8)) - one_over_n;
}

Rational flop_exclusion_threshold_combined(long long n) {
  const Rational a = flop_exclusion_threshold(n, FlopBranch::FiberMissed);
  const Rational b = flop_exclusion_threshold(n, FlopBranch::FiberMet);
  return a < b ? a : b;
}

}  // namespace dpfib::nf
