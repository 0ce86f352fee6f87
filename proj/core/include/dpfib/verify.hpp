#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dpfib::verify {

/// Parameter ranges for the self-verification suite.
struct VerifyBox {
  long long d1_max_n3 = 40;        // degree-1 enumeration bound
  long long d2_max_abs_a = 10;     // degree-2 box
  long long d2_max_n2 = 20;
  long long threshold_max_n = 10;  // threshold sweep |n(-K)+mF|
  long long threshold_max_m = 20;
  long long chow_cases = 10000;    // randomized ring checks
  long long k2_brute = 100;        // brute-force cone search bound
  uint64_t seed = 1;
  uint64_t feasibility_budget = 1000000;
};

VerifyBox parse_box_spec(const std::string& spec);  // "d1=40,d2a=10,d2n=20,..."

enum class CheckStatus { Pass, Fail, Note };

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct Report {
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return true;
  }
  int count(CheckStatus s) const {
    int n = 0;
    for (const auto& c : checks)
      if (c.status == s) ++n;
    return n;
  }
};

/// Runs every module's invariant suite over the box. Notes are reported
/// observations (documented divergences), not failures.
Report run(const VerifyBox& box);

}  // namespace dpfib::verify
