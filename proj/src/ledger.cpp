#include "regpair/ledger.hpp"

namespace regpair {

const char* const kLedgerSignNote =
    "eta boundary taken as (mC-nD)xp + px(mC-nD); the opposite sign convention "
    "nD-mC does not cancel against the f_C/f_D/f_Delta boundaries";

std::string FormalCycle::to_string() const {
  if (coeff.empty()) return "0";
  std::string out;
  for (auto& [g, n] : coeff) {
    std::string term;
    if (n == 1)
      term = g;
    else if (n == -1)
      term = "-" + g;
    else
      term = std::to_string(n) + "*" + g;
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += term;
    else
      out += "+" + term;
  }
  return out;
}

FormalCycle precycle_div(const std::vector<LedgerTerm>& terms) {
  FormalCycle total;
  for (const LedgerTerm& t : terms) total = total + t.boundary;
  return total;
}

std::vector<LedgerTerm> ledger_template(const std::string& name, long m, long n) {
  if (m < 1 || n < 1) throw PreconditionError("ledger_template: m, n must be >= 1");
  std::vector<LedgerTerm> terms;
  if (name == "single-K3") {
    LedgerTerm fc{"(f_C, CxC)", {}};
    fc.boundary.add("Delta_C", m);
    fc.boundary.add("pxC", -m);
    fc.boundary.add("Cxp", -m);
    LedgerTerm fd{"(f_D, DxD)", {}};
    fd.boundary.add("pxD", n);
    fd.boundary.add("Dxp", n);
    fd.boundary.add("Delta_D", -n);
    LedgerTerm fdelta{"(f_Delta, Delta_X)", {}};
    fdelta.boundary.add("Delta_D", n);
    fdelta.boundary.add("Delta_C", -m);
    LedgerTerm eta{"eta = (pi1* g, Xxp) + (pi2* g, pxX)", {}};
    eta.boundary.add("Cxp", m);
    eta.boundary.add("Dxp", -n);
    eta.boundary.add("pxC", m);
    eta.boundary.add("pxD", -n);
    terms = {fc, fd, fdelta, eta};
  } else if (name == "family") {
    if (m != n) throw PreconditionError("ledger_template: family requires m = n");
    LedgerTerm fc{"(f_C, CxC)", {}};
    fc.boundary.add("Delta_C", m);
    fc.boundary.add("PxC", -m);
    fc.boundary.add("CxP", -m);
    fc.boundary.add("NxN", m);
    LedgerTerm fd{"(f_D, DxD)", {}};
    fd.boundary.add("PxD", n);
    fd.boundary.add("DxP", n);
    fd.boundary.add("Delta_D", -n);
    fd.boundary.add("NxN", -n);
    LedgerTerm fdelta{"(f_Delta, Delta_W)", {}};
    fdelta.boundary.add("Delta_D", n);
    fdelta.boundary.add("Delta_C", -m);
    LedgerTerm eta{"eta (family)", {}};
    eta.boundary.add("CxP", m);
    eta.boundary.add("PxC", m);
    eta.boundary.add("DxP", -n);
    eta.boundary.add("PxD", -n);
    terms = {fc, fd, fdelta, eta};
  } else {
    throw PreconditionError("ledger_template: unknown template '" + name + "'");
  }
  return terms;
}

}  // namespace regpair
