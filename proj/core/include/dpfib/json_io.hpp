#pragma once

#include <nlohmann/json.hpp>

#include "dpfib/classifier.hpp"
#include "dpfib/cones.hpp"
#include "dpfib/nf.hpp"
#include "dpfib/verify.hpp"

namespace dpfib::io {

using json = nlohmann::json;

/// {"degree":1,"epsilon":e,"n":[n1,n2,n3]} resp. {"degree":2,"a":a,"n":[n1,n2]}.
json model_to_json(const dp::Model& model);
dp::Model model_from_json(const json& j);

/// Versioned verdict record: {"schema":1,"model":...,"status":...,
/// "justification":...,"witness":{...}|null,"notes":[...]}.
json verdict_to_json(const dp::Model& model, const rigidity::Verdict& verdict);

json thresholds_to_json(const dp::Model& model, const dp::DivisorClassV& d,
                        const cones::ThresholdResult& t);

json conditions_to_json(const cones::ConditionReport& r);

/// {"case":...,"coefficient":...,"infeasible":...,"witness":{...}|null,"seed":...}.
json feasibility_to_json(const nf::ReductionCertificate& cert,
                         const std::optional<nf::Witness>& witness, uint64_t samples,
                         uint64_t seed);

json report_to_json(const verify::Report& report);

/// Compact model display: "(0;2,2,2)" resp. "(1,0,0)".
std::string model_display(const dp::Model& model);

}  // namespace dpfib::io
