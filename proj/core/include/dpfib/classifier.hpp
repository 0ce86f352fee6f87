#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dpfib/dp_models.hpp"

namespace dpfib::rigidity {

enum class Status { Rigid, NonRigid, Unknown };

const char* to_string(Status s);

/// The known non-rigid mechanisms, determined by the model parameters alone.
enum class NonRigidTag {
  Dp1Flop222,
  Dp1VeroneseCone,
  Dp2ConicBundle,
  Dp2AntiflipToDp1,
  Dp2FlopSelf,
  Dp2BlowupDoubleSpace,
  Dp2SingularVeroneseCone,
};

const char* to_string(NonRigidTag t);

struct NonRigidKind {
  NonRigidTag tag;
  std::string description;
};

/// Classification outcome. Rigid and NonRigid always cite a registered
/// statement tag; Unknown cites the remark that leaves the case open. Notes
/// carry conjecture references and caveats as plain strings.
struct Verdict {
  Status status;
  std::string justification;
  std::optional<NonRigidKind> witness;
  std::vector<std::string> notes;
};

/// Tags a verdict may cite. Fixed registry: no free-text citations.
const std::vector<std::string>& citation_anchors();
bool is_registered_anchor(const std::string& tag);

Verdict classify(const dp::Model& model);

std::vector<std::pair<dp::Model, Verdict>> classify_dp1_upto(long long max_n3);
std::vector<std::pair<dp::Model, Verdict>> classify_dp2_sum(long long sum2ab);
std::vector<std::pair<dp::Model, Verdict>> classify_dp2_box(long long max_abs_a,
                                                            long long max_n2);

}  // namespace dpfib::rigidity
