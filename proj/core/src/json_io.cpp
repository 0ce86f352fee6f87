#include "dpfib/json_io.hpp"

namespace dpfib::io {

namespace {

json rational_to_json(const Rational& r) {
  if (r.is_integer()) return r.num();
  return r.str();
}

}  // namespace

json model_to_json(const dp::Model& model) {
  if (const auto* m1 = std::get_if<dp::DegreeOneModel>(&model)) {
    return json{{"degree", 1},
                {"epsilon", m1->epsilon()},
                {"n", {m1->n1(), m1->n2(), m1->n3()}}};
  }
  const auto& m2 = std::get<dp::DegreeTwoModel>(model);
  return json{{"degree", 2}, {"a", m2.a()}, {"n", {m2.n1(), m2.n2()}}};
}

dp::Model model_from_json(const json& j) {
  const int degree = j.at("degree").get<int>();
  const auto& n = j.at("n");
  if (degree == 1) {
    if (n.size() != 3) throw Error(ErrorCode::InvalidArgument, "degree 1 needs n = [n1,n2,n3]");
    return dp::build_dp1(j.at("epsilon").get<long long>(), n[0].get<long long>(),
                         n[1].get<long long>(), n[2].get<long long>());
  }
  if (degree == 2) {
    if (n.size() != 2) throw Error(ErrorCode::InvalidArgument, "degree 2 needs n = [n1,n2]");
    return dp::build_dp2(j.at("a").get<long long>(), n[0].get<long long>(),
                         n[1].get<long long>());
  }
  throw Error(ErrorCode::InvalidArgument, "degree must be 1 or 2");
}

json verdict_to_json(const dp::Model& model, const rigidity::Verdict& verdict) {
  json j{{"schema", 1},
         {"model", model_to_json(model)},
         {"status", rigidity::to_string(verdict.status)},
         {"justification", verdict.justification},
         {"notes", verdict.notes}};
  if (verdict.witness) {
    j["witness"] = json{{"tag", rigidity::to_string(verdict.witness->tag)},
                        {"description", verdict.witness->description}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json thresholds_to_json(const dp::Model& model, const dp::DivisorClassV& d,
                        const cones::ThresholdResult& t) {
  return json{{"schema", 1},
              {"model", model_to_json(model)},
              {"system", {{"k", rational_to_json(d.k)}, {"m", rational_to_json(d.m)}}},
              {"mu", rational_to_json(t.mu)},
              {"alpha", rational_to_json(t.alpha)},
              {"equal", t.equal},
              {"cone_heuristic", t.cone_heuristic}};
}

json conditions_to_json(const cones::ConditionReport& r) {
  return json{{"k2_holds", r.k2_holds},
              {"isk_value", rational_to_json(r.isk_value)},
              {"isk_holds", r.isk_holds},
              {"m0", rational_to_json(r.m0)}};
}

json feasibility_to_json(const nf::ReductionCertificate& cert,
                         const std::optional<nf::Witness>& witness, uint64_t samples,
                         uint64_t seed) {
  json j{{"case", nf::to_string(cert.nf_case)},
         {"coefficient", cert.coefficient_formula},
         {"identity_verified", cert.identity_verified},
         {"samples", samples},
         {"seed", seed}};
  if (cert.coefficient_value) j["coefficient_value"] = rational_to_json(*cert.coefficient_value);
  if (cert.infeasible) j["infeasible"] = *cert.infeasible;
  if (witness) {
    json w{{"n", witness->n},
           {"Sigma0", witness->s0.str()},
           {"Sigma0p", witness->s0p.str()},
           {"Sigma1", witness->s1.str()},
           {"e", witness->e.str()},
           {"mh", witness->mh.str()},
           {"mv", witness->mv.str()}};
    if (witness->a_param) w["A"] = witness->a_param->str();
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json report_to_json(const verify::Report& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    const char* status = c.status == verify::CheckStatus::Pass
                             ? "PASS"
                             : (c.status == verify::CheckStatus::Fail ? "FAIL" : "NOTE");
    checks.push_back(json{{"name", c.name}, {"status", status}, {"detail", c.detail}});
  }
  return json{{"schema", 1},
              {"checks", checks},
              {"passed", report.count(verify::CheckStatus::Pass)},
              {"failed", report.count(verify::CheckStatus::Fail)},
              {"notes", report.count(verify::CheckStatus::Note)}};
}

std::string model_display(const dp::Model& model) {
  if (const auto* m1 = std::get_if<dp::DegreeOneModel>(&model)) {
    return "(" + std::to_string(m1->epsilon()) + ";" + std::to_string(m1->n1()) + "," +
           std::to_string(m1->n2()) + "," + std::to_string(m1->n3()) + ")";
  }
  const auto& m2 = std::get<dp::DegreeTwoModel>(model);
  return "(" + std::to_string(m2.a()) + "," + std::to_string(m2.n1()) + "," +
         std::to_string(m2.n2()) + ")";
}

}  // namespace dpfib::io
