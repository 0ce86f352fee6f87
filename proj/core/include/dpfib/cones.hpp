#pragma once

#include "dpfib/intersection.hpp"

namespace dpfib::cones {

/// Quasi-effective threshold mu and adjunction threshold alpha for a linear
/// system D = n(-K) + mF with n > 0. alpha <= mu always, with equality
/// exactly when m >= 0. cone_heuristic marks degree-2 models with a < 0,
/// where the effective-cone generators are a documented heuristic.
struct ThresholdResult {
  Rational mu;
  Rational alpha;
  bool equal;
  bool cone_heuristic;
};

/// Aggregate of the two sufficient rigidity criteria: the condition that no
/// cycle a K^2 - b f with a, b > 0 is effective, and the bound
/// (-K)^3 + m0 + 1 <= 2 with m0 the nef offset of -K.
struct ConditionReport {
  bool k2_holds;
  Rational isk_value;  // (-K)^3 + m0 + 1
  bool isk_holds;      // isk_value <= 2
  Rational m0;
};

struct NefResult {
  bool nef;
  Rational m0;  // least r with (-K) + rF nef
};

enum class FixedComponentBound {
  mNonNegativeForced,            // |n(-K)+mF| without fixed components forces m >= 0
  mPositiveForced,               // ... forces m > 0
  mPositiveAllowedOnlyIfN3Eq2,   // m > 0 in |n(-K)-mF| is possible only when n3 = 2
};

/// Membership of D in the model's effective divisor cone, spanned by
/// {G_V, F} (degree 1) resp. {H - n2 F, F} (degree 2; heuristic for a < 0:
/// the pull-back of the extremal effective class upstairs).
bool effective_divisor_test(const dp::Model& model, const dp::DivisorClassV& d);

/// Nefness of D against the curve-cone generators s0 and f, plus the least
/// r making (-K) + rF nef (closed form: n2 - 2 for EpsZero,
/// n2 - n1/2 - 2 for EpsPos, a + b - 2 for degree 2).
NefResult nef_and_m0(const dp::Model& model, const dp::DivisorClassV& d);

/// Thresholds of D = n(-K) + mF, n > 0 (throws InvalidSystem otherwise).
/// alpha is the exact supremum of p/q over systems |qD + pK| that stay in
/// the effective cone, computed by two-generator cone arithmetic.
ThresholdResult thresholds(const dp::Model& model, const dp::DivisorClassV& d);

/// True when the f-coefficient of K_V^2 is <= 0. Closed forms: n2 >= 4
/// (EpsZero), n2 >= 4 + (3/2) n1 (EpsPos), beta <= 0 (degree 2).
bool k2_condition(const dp::Model& model);

/// What fixed-component-free systems force on the sign of m. Degree-2
/// models with beta in {4, 6} throw Undetermined: neither direction is
/// established there.
FixedComponentBound no_fixed_components_bound(const dp::Model& model);

ConditionReport condition_report(const dp::Model& model);

}  // namespace dpfib::cones
