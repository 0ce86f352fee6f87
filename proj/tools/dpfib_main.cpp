// Command-line front end: classify del Pezzo fibration models, enumerate
// parameter families, run the self-verification suite, and probe the
// inequality engine.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dpfib/classifier.hpp"
#include "dpfib/json_io.hpp"
#include "dpfib/nf.hpp"
#include "dpfib/verify.hpp"

namespace {

using dpfib::Rational;
namespace dp = dpfib::dp;
namespace io = dpfib::io;
namespace rigidity = dpfib::rigidity;
namespace nf = dpfib::nf;
namespace verify_ns = dpfib::verify;

struct Options {
  std::string format = "text";

  int cls_degree = 0;
  std::vector<long long> cls_params;

  int enum_degree = 0;
  long long enum_sum = 0;
  long long enum_max = 0;
  bool enum_classify = false;

  std::string verify_box;

  std::string feas_case;
  long long feas_beta = 0;
  long long feas_n1 = 0;
  long long feas_n2 = 0;
  uint64_t feas_budget = 1000000;
  uint64_t feas_seed = 1;
  long long feas_n_max = 50;
};

dp::Model parse_model(int degree, const std::vector<long long>& params) {
  if (degree == 1) {
    if (params.size() != 4)
      throw dpfib::Error(dpfib::ErrorCode::InvalidArgument,
                         "degree 1 takes --params epsilon,n1,n2,n3");
    return dp::build_dp1(params[0], params[1], params[2], params[3]);
  }
  if (degree == 2) {
    if (params.size() != 3)
      throw dpfib::Error(dpfib::ErrorCode::InvalidArgument, "degree 2 takes --params a,n1,n2");
    return dp::build_dp2(params[0], params[1], params[2]);
  }
  throw dpfib::Error(dpfib::ErrorCode::InvalidArgument, "degree must be 1 or 2");
}

std::string case_line(const dp::Model& model) {
  if (const auto* m1 = std::get_if<dp::DegreeOneModel>(&model)) {
    return std::string("degree 1, case ") +
           (m1->case_tag() == dp::Dp1Case::EpsZero ? "eps-zero" : "eps-pos") +
           ", b=" + std::to_string(m1->b());
  }
  const auto& m2 = std::get<dp::DegreeTwoModel>(model);
  return "degree 2, 2a+b=" + std::to_string(m2.sum2ab()) + ", beta=" +
         std::to_string(m2.beta()) +
         (m2.existence_verified() ? "" : " (existence not certified)");
}

void print_verdict_text(const dp::Model& model, const rigidity::Verdict& verdict) {
  std::cout << "model " << io::model_display(model) << ": " << case_line(model) << "\n";
  std::cout << "status: " << rigidity::to_string(verdict.status) << "\n";
  std::cout << "justification: " << verdict.justification << "\n";
  if (verdict.witness) {
    std::cout << "witness: " << rigidity::to_string(verdict.witness->tag) << " ("
              << verdict.witness->description << ")\n";
  }
  for (const auto& note : verdict.notes) std::cout << "note: " << note << "\n";
}

int run_classify(const Options& opt) {
  const dp::Model model = parse_model(opt.cls_degree, opt.cls_params);
  const rigidity::Verdict verdict = rigidity::classify(model);
  if (opt.format == "json") {
    std::cout << io::verdict_to_json(model, verdict).dump() << "\n";
  } else {
    print_verdict_text(model, verdict);
  }
  return 0;
}

int run_enumerate(const Options& opt, bool have_sum, bool have_max) {
  if (have_sum == have_max)
    throw dpfib::Error(dpfib::ErrorCode::InvalidArgument,
                       "enumerate needs exactly one of --sum or --max");
  std::vector<dp::Model> models;
  if (opt.enum_degree == 1) {
    if (have_sum)
      throw dpfib::Error(dpfib::ErrorCode::InvalidArgument, "--sum applies to degree 2 only");
    for (const auto& m : dp::enumerate_dp1(opt.enum_max)) models.push_back(m);
  } else if (opt.enum_degree == 2) {
    if (have_sum)
      for (const auto& m : dp::enumerate_dp2_sum(opt.enum_sum)) models.push_back(m);
    else
      for (const auto& m : dp::enumerate_dp2_box(opt.enum_max, opt.enum_max)) models.push_back(m);
  } else {
    throw dpfib::Error(dpfib::ErrorCode::InvalidArgument, "degree must be 1 or 2");
  }

  for (const auto& model : models) {
    if (opt.enum_classify) {
      const auto verdict = rigidity::classify(model);
      if (opt.format == "json") {
        std::cout << io::verdict_to_json(model, verdict).dump() << "\n";
      } else {
        std::cout << io::model_display(model) << "  " << rigidity::to_string(verdict.status)
                  << "  " << verdict.justification;
        if (verdict.witness) std::cout << "  " << rigidity::to_string(verdict.witness->tag);
        std::cout << "\n";
      }
    } else {
      if (opt.format == "json")
        std::cout << io::model_to_json(model).dump() << "\n";
      else
        std::cout << io::model_display(model) << "\n";
    }
  }
  return 0;
}

int run_verify(const Options& opt) {
  const verify_ns::VerifyBox box = opt.verify_box.empty()
                                       ? verify_ns::VerifyBox{}
                                       : verify_ns::parse_box_spec(opt.verify_box);
  const verify_ns::Report report = verify_ns::run(box);
  if (opt.format == "json") {
    std::cout << io::report_to_json(report).dump() << "\n";
  } else {
    for (const auto& c : report.checks) {
      const char* status = c.status == verify_ns::CheckStatus::Pass
                               ? "PASS"
                               : (c.status == verify_ns::CheckStatus::Fail ? "FAIL" : "NOTE");
      std::cout << "[" << status << "] " << c.name;
      if (!c.detail.empty()) std::cout << " — " << c.detail;
      std::cout << "\n";
    }
    std::cout << report.count(verify_ns::CheckStatus::Pass) << " passed, "
              << report.count(verify_ns::CheckStatus::Fail) << " failed, "
              << report.count(verify_ns::CheckStatus::Note) << " notes\n";
  }
  return report.all_passed() ? 0 : 2;
}

int run_feasibility(const Options& opt, bool have_beta, bool have_n1, bool have_n2) {
  nf::NFCase nf_case;
  nf::CaseParams params;
  if (opt.feas_case == "dp1-eps-pos") {
    nf_case = nf::NFCase::Dp1EpsPos;
    if (!have_n1 || !have_n2)
      throw dpfib::Error(dpfib::ErrorCode::InvalidArgument, "dp1-eps-pos needs --n1 and --n2");
    params.n1 = opt.feas_n1;
    params.n2 = opt.feas_n2;
  } else if (opt.feas_case == "dp1-eps-zero") {
    nf_case = nf::NFCase::Dp1EpsZero;
    if (!have_n2)
      throw dpfib::Error(dpfib::ErrorCode::InvalidArgument, "dp1-eps-zero needs --n2");
    params.n2 = opt.feas_n2;
  } else if (opt.feas_case == "dp1-eps-zero-A") {
    nf_case = nf::NFCase::Dp1EpsZeroWithA;
  } else if (opt.feas_case == "dp2") {
    nf_case = nf::NFCase::Dp2;
    if (!have_beta) throw dpfib::Error(dpfib::ErrorCode::InvalidArgument, "dp2 needs --beta");
    params.beta = opt.feas_beta;
  } else {
    throw dpfib::Error(dpfib::ErrorCode::InvalidArgument,
                       "--case must be dp1-eps-pos, dp1-eps-zero, dp1-eps-zero-A or dp2");
  }

  const auto cert = nf::reduce_to_quadratic(nf_case, params);
  nf::SearchBox box;
  box.n_max = opt.feas_n_max;
  const auto result =
      nf::feasibility_search_sweep(nf_case, params, box, opt.feas_budget, opt.feas_seed);

  if (opt.format == "json") {
    std::cout << io::feasibility_to_json(cert, result.witness, result.samples_used, result.seed)
                     .dump()
              << "\n";
  } else {
    std::cout << "case: " << nf::to_string(nf_case) << "\n";
    std::cout << "coefficient: " << cert.coefficient_formula;
    if (cert.coefficient_value) std::cout << " = " << cert.coefficient_value->str();
    std::cout << "\n";
    if (cert.infeasible)
      std::cout << "certified infeasible: " << (*cert.infeasible ? "yes" : "no") << "\n";
    if (result.witness) {
      const auto& w = *result.witness;
      std::cout << "witness: n=" << w.n << " Sigma0=" << w.s0.str() << " Sigma0'=" << w.s0p.str()
                << " Sigma1=" << w.s1.str() << " e=" << w.e.str() << " mh=" << w.mh.str()
                << " mv=" << w.mv.str();
      if (w.a_param) std::cout << " A=" << w.a_param->str();
      std::cout << "\n";
    } else {
      std::cout << "witness: none found (" << result.samples_used << " samples, seed "
                << result.seed << ")\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigidity classifier for del Pezzo fibrations of degree 1 and 2 over the line"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file");

  Options opt;

  auto* cls = app.add_subcommand("classify", "classify one model");
  cls->add_option("--degree", opt.cls_degree, "fiber degree (1 or 2)")->required();
  cls->add_option("--params", opt.cls_params,
                  "model tuple: epsilon,n1,n2,n3 (degree 1) or a,n1,n2 (degree 2)")
      ->required()
      ->delimiter(',');
  cls->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* enm = app.add_subcommand("enumerate", "list valid models");
  enm->add_option("--degree", opt.enum_degree, "fiber degree (1 or 2)")->required();
  auto* sum_opt = enm->add_option("--sum", opt.enum_sum, "degree 2: fix 2a+b (1 or 2)");
  auto* max_opt =
      enm->add_option("--max", opt.enum_max, "degree 1: max n3; degree 2: |a|,n2 bound");
  enm->add_flag("--classify", opt.enum_classify, "attach verdicts");
  enm->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* ver = app.add_subcommand("verify", "run the full self-verification suite");
  ver->add_option("--box", opt.verify_box,
                  "ranges, e.g. d1=40,d2a=10,d2n=20,tn=10,tm=20,chow=10000,k2=100,seed=1");
  ver->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* feas = app.add_subcommand("feasibility", "probe one inequality case");
  feas->add_option("--case", opt.feas_case,
                   "dp1-eps-pos | dp1-eps-zero | dp1-eps-zero-A | dp2")
      ->required();
  auto* beta_opt = feas->add_option("--beta", opt.feas_beta, "dp2 beta value");
  auto* n1_opt = feas->add_option("--n1", opt.feas_n1, "dp1 n1 value");
  auto* n2_opt = feas->add_option("--n2", opt.feas_n2, "dp1 n2 value");
  feas->add_option("--budget", opt.feas_budget, "sample budget");
  feas->add_option("--seed", opt.feas_seed, "search seed");
  feas->add_option("--n-max", opt.feas_n_max, "largest system degree to sweep");
  feas->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (cls->parsed()) return run_classify(opt);
    if (enm->parsed()) return run_enumerate(opt, sum_opt->count() > 0, max_opt->count() > 0);
    if (ver->parsed()) return run_verify(opt);
    if (feas->parsed())
      return run_feasibility(opt, beta_opt->count() > 0, n1_opt->count() > 0,
                             n2_opt->count() > 0);
  } catch (const dpfib::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_usage_error() ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
