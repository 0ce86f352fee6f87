#include "dpfib/poly.hpp"

namespace dpfib {

namespace {
const char* var_name(int idx) {
  switch (static_cast<Var>(idx)) {
    case Var::S0: return "S0";
    case Var::S1: return "S1";
    case Var::E: return "e";
    case Var::N: return "n";
    case Var::N1: return "n1";
    case Var::N2: return "n2";
    case Var::Beta: return "beta";
    case Var::A: return "A";
    case Var::M: return "M";
    case Var::L: return "L";
  }
  return "?";
}
}  // namespace

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.str();
    for (int i = 0; i < kVarCount; ++i) {
      if (m[i] == 0) continue;
      out += "*";
      out += var_name(i);
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
  }
  return out;
}

}  // namespace dpfib
