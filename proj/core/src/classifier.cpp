#include "dpfib/classifier.hpp"

#include <algorithm>

namespace dpfib::rigidity {

const char* to_string(Status s) {
  switch (s) {
    case Status::Rigid: return "Rigid";
    case Status::NonRigid: return "NonRigid";
    case Status::Unknown: return "Unknown";
  }
  return "?";
}

const char* to_string(NonRigidTag t) {
  switch (t) {
    case NonRigidTag::Dp1Flop222: return "Dp1Flop222";
    case NonRigidTag::Dp1VeroneseCone: return "Dp1VeroneseCone";
    case NonRigidTag::Dp2ConicBundle: return "Dp2ConicBundle";
    case NonRigidTag::Dp2AntiflipToDp1: return "Dp2AntiflipToDp1";
    case NonRigidTag::Dp2FlopSelf: return "Dp2FlopSelf";
    case NonRigidTag::Dp2BlowupDoubleSpace: return "Dp2BlowupDoubleSpace";
    case NonRigidTag::Dp2SingularVeroneseCone: return "Dp2SingularVeroneseCone";
  }
  return "?";
}

const std::vector<std::string>& citation_anchors() {
  static const std::vector<std::string> anchors = {
      "main_conj",   "easy_lemma", "struct_lemma", "lem_1",
      "lem_2",       "dp1_th",     "prop1",        "spec_lemma",
      "rem_1",       "dp1_cor",    "k2_remark",    "isk_remark",
      "conj_1",      "prop_flop",  "dp2_th",       "dp2_lem",
      "lem_17",      "rem_after_lem_17",           "sum1_lemma",
      "rem_after_sum1_lemma",      "sum0_lemma",
  };
  return anchors;
}

bool is_registered_anchor(const std::string& tag) {
  const auto& a = citation_anchors();
  return std::find(a.begin(), a.end(), tag) != a.end();
}

namespace {

Verdict classify_dp1(const dp::DegreeOneModel& m) {
  if (m.case_tag() == dp::Dp1Case::EpsPos)
    return {Status::Rigid, "dp1_cor", std::nullopt, {}};
  if (m.n1() == 2 && m.n2() == 2 && m.n3() == 2) {
    return {Status::NonRigid,
            "prop_flop",
            NonRigidKind{NonRigidTag::Dp1Flop222,
                         "flop over the base onto a second smooth model with the same "
                         "structure parameters"},
            {"Bir(V)=Aut(V)",
             "exactly two smooth Mori models exist in the birational class"}};
  }
  if (m.n1() == 0 && m.n2() == 1 && m.n3() == 2) {
    return {Status::NonRigid,
            "dp1_cor",
            NonRigidKind{NonRigidTag::Dp1VeroneseCone,
                         "contraction onto a Fano variety U of index 2 and degree 5, the "
                         "double cone over the Veronese surface"},
            {"conj_1: every smooth Mori fibration birational to U is expected to be U or "
             "one of the contractions V_l",
             "rem_1: the exclusion argument for this case is more complicated and is "
             "not carried out"}};
  }
  return {Status::Rigid, "dp1_cor", std::nullopt, {}};
}

Verdict classify_dp2(const dp::DegreeTwoModel& m) {
  if (m.beta() <= 2) return {Status::Rigid, "dp2_th", std::nullopt, {}};
  if (m.sum2ab() == 2) {
    if (m.a() == 1 && m.n1() == 0 && m.n2() == 0)
      return {Status::NonRigid,
              "lem_17",
              NonRigidKind{NonRigidTag::Dp2ConicBundle, "V is a conic bundle"},
              {"the conic-bundle projection is given by |-K_V - F|, base point free"}};
    if (m.a() == -1 && m.n1() == 2 && m.n2() == 2)
      return {Status::NonRigid,
              "lem_17",
              NonRigidKind{NonRigidTag::Dp2AntiflipToDp1,
                           "the anti-flip centered at the negative section yields a "
                           "degree-1 fibration with one terminal singular point"},
              {"|-K_V - F| has no fixed components"}};
    if (m.a() == 0 && m.n1() == 1 && m.n2() == 1)
      return {Status::NonRigid,
              "lem_17",
              NonRigidKind{NonRigidTag::Dp2FlopSelf,
                           "a flop centered at the negative-section curves gives another "
                           "structure of a smooth Mori fibration of the same degree"},
              {"|-K_V - F| has no fixed components"}};
    return {Status::Unknown,
            "rem_after_lem_17",
            std::nullopt,
            {"likely rigid; excluding infinitely near singularities over special "
             "rational curves remains open"}};
  }
  if (m.sum2ab() == 1) {
    if (m.a() == 0 && m.n1() == 0 && m.n2() == 1)
      return {Status::NonRigid,
              "sum1_lemma",
              NonRigidKind{NonRigidTag::Dp2BlowupDoubleSpace,
                           "blow-down to the double space of index 2 (double cover of "
                           "projective 3-space branched in a quartic)"},
              {"the contraction is given by |-2K_V - 2F|"}};
    if (m.a() == -1 && m.n1() == 1 && m.n2() == 2)
      return {Status::NonRigid,
              "sum1_lemma",
              NonRigidKind{NonRigidTag::Dp2SingularVeroneseCone,
                           "flop then contraction onto a double Veronese cone with one "
                           "quadratic singularity"},
              {"|-K_V - F| has no fixed components",
               "the target carries degree-1 del Pezzo fibration structures"}};
    return {Status::Unknown,
            "rem_after_sum1_lemma",
            std::nullopt,
            {"likely rigid; no proof is available"}};
  }
  // sum2ab >= 3 always lands in beta <= 2 above; anything else is
  // unreachable on validated models.
  throw Error(ErrorCode::Internal, "unclassifiable validated degree-2 model");
}

}  // namespace

Verdict classify(const dp::Model& model) {
  if (const auto* m1 = std::get_if<dp::DegreeOneModel>(&model)) return classify_dp1(*m1);
  return classify_dp2(std::get<dp::DegreeTwoModel>(model));
}

std::vector<std::pair<dp::Model, Verdict>> classify_dp1_upto(long long max_n3) {
  std::vector<std::pair<dp::Model, Verdict>> out;
  for (const auto& m : dp::enumerate_dp1(max_n3)) out.emplace_back(m, classify(m));
  return out;
}

std::vector<std::pair<dp::Model, Verdict>> classify_dp2_sum(long long sum2ab) {
  std::vector<std::pair<dp::Model, Verdict>> out;
  for (const auto& m : dp::enumerate_dp2_sum(sum2ab)) out.emplace_back(m, classify(m));
  return out;
}

std::vector<std::pair<dp::Model, Verdict>> classify_dp2_box(long long max_abs_a,
                                                            long long max_n2) {
  std::vector<std::pair<dp::Model, Verdict>> out;
  for (const auto& m : dp::enumerate_dp2_box(max_abs_a, max_n2)) out.emplace_back(m, classify(m));
  return out;
}

}  // namespace dpfib::rigidity
