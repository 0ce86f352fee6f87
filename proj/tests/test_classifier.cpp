#include <doctest.h>

#include "dpfib/classifier.hpp"

using namespace dpfib;
using dp::build_dp1;
using dp::build_dp2;
using dp::Model;
using rigidity::classify;
using rigidity::Status;

TEST_CASE("degree-1 verdicts") {
  const auto flop = classify(Model(build_dp1(0, 2, 2, 2)));
  CHECK(flop.status == Status::NonRigid);
  CHECK(flop.justification == "prop_flop");
  REQUIRE(flop.witness.has_value());
  CHECK(flop.witness->tag == rigidity::NonRigidTag::Dp1Flop222);

  const auto veronese = classify(Model(build_dp1(0, 0, 1, 2)));
  CHECK(veronese.status == Status::NonRigid);
  REQUIRE(veronese.witness.has_value());
  CHECK(veronese.witness->tag == rigidity::NonRigidTag::Dp1VeroneseCone);
  // carries the conjecture reference and the caveat about the omitted proof
  bool has_conj = false, has_caveat = false;
  for (const auto& n : veronese.notes) {
    has_conj = has_conj || n.find("conj_1") != std::string::npos;
    has_caveat = has_caveat || n.find("rem_1") != std::string::npos;
  }
  CHECK(has_conj);
  CHECK(has_caveat);

  CHECK(classify(Model(build_dp1(0, 0, 2, 4))).status == Status::Rigid);
  CHECK(classify(Model(build_dp1(0, 0, 4, 8))).status == Status::Rigid);
  CHECK(classify(Model(build_dp1(2, 2, 6, 12))).status == Status::Rigid);
  CHECK(classify(Model(build_dp1(2, 2, 6, 12))).justification == "dp1_cor");
}

TEST_CASE("degree-2 verdicts") {
  CHECK(classify(Model(build_dp2(1, 0, 1))).status == Status::Rigid);  // beta = 2
  CHECK(classify(Model(build_dp2(1, 0, 1))).justification == "dp2_th");
  CHECK(classify(Model(build_dp2(5, 0, 0))).status == Status::Rigid);  // beta = -12

  const auto conic = classify(Model(build_dp2(1, 0, 0)));
  CHECK(conic.status == Status::NonRigid);
  CHECK(conic.witness->tag == rigidity::NonRigidTag::Dp2ConicBundle);
  CHECK(conic.witness->description == "V is a conic bundle");

  CHECK(classify(Model(build_dp2(-1, 2, 2))).witness->tag ==
        rigidity::NonRigidTag::Dp2AntiflipToDp1);
  CHECK(classify(Model(build_dp2(0, 1, 1))).witness->tag == rigidity::NonRigidTag::Dp2FlopSelf);
  CHECK(classify(Model(build_dp2(-3, 2, 6))).status == Status::Unknown);
  CHECK(classify(Model(build_dp2(0, 0, 2))).status == Status::Unknown);

  CHECK(classify(Model(build_dp2(0, 0, 1))).witness->tag ==
        rigidity::NonRigidTag::Dp2BlowupDoubleSpace);
  CHECK(classify(Model(build_dp2(-1, 1, 2))).witness->tag ==
        rigidity::NonRigidTag::Dp2SingularVeroneseCone);
  CHECK(classify(Model(build_dp2(-2, 1, 4))).status == Status::Unknown);
}

TEST_CASE("verdict tables") {
  const auto v2 = rigidity::classify_dp2_sum(2);
  REQUIRE(v2.size() == 7);
  int nonrigid = 0, unknown = 0;
  for (const auto& [m, v] : v2) {
    nonrigid += v.status == Status::NonRigid;
    unknown += v.status == Status::Unknown;
  }
  CHECK(nonrigid == 3);
  CHECK(unknown == 4);

  const auto v1 = rigidity::classify_dp2_sum(1);
  REQUIRE(v1.size() == 3);
  nonrigid = unknown = 0;
  for (const auto& [m, v] : v1) {
    nonrigid += v.status == Status::NonRigid;
    unknown += v.status == Status::Unknown;
  }
  CHECK(nonrigid == 2);
  CHECK(unknown == 1);

  // Exactly two non-rigid rows across the whole degree-1 table.
  const auto d1 = rigidity::classify_dp1_upto(12);
  int d1_nonrigid = 0;
  for (const auto& [m, v] : d1) d1_nonrigid += v.status == Status::NonRigid;
  CHECK(d1_nonrigid == 2);
}

TEST_CASE("citations always come from the registry") {
  for (const auto& [m, v] : rigidity::classify_dp1_upto(20))
    CHECK(rigidity::is_registered_anchor(v.justification));
  for (const auto& [m, v] : rigidity::classify_dp2_box(6, 12))
    CHECK(rigidity::is_registered_anchor(v.justification));
  for (long long sum : {1LL, 2LL})
    for (const auto& [m, v] : rigidity::classify_dp2_sum(sum))
      CHECK(rigidity::is_registered_anchor(v.justification));
  CHECK_FALSE(rigidity::is_registered_anchor("made-up"));
}

TEST_CASE("rigid iff beta <= 2 over a box") {
  for (const auto& [model, verdict] : rigidity::classify_dp2_box(8, 16)) {
    const auto& m = std::get<dp::DegreeTwoModel>(model);
    if (m.beta() <= 2) {
      CHECK(verdict.status == Status::Rigid);
    } else {
      CHECK(verdict.status != Status::Rigid);
    }
  }
}
