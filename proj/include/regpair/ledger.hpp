#pragma once

#include <map>
#include <string>
#include <vector>

#include "regpair/errors.hpp"

namespace regpair {

// Integer combination of named codimension-2 generators. Purely formal: the
// ledger validates divisor bookkeeping on symbolic ambient varieties and
// never computes a divisor itself.
struct FormalCycle {
  std::map<std::string, long> coeff;

  void add(const std::string& gen, long n) {
    if (n == 0) return;
    auto it = coeff.find(gen);
    if (it == coeff.end()) {
      coeff.emplace(gen, n);
    } else {
      it->second += n;
      if (it->second == 0) coeff.erase(it);
    }
  }
  bool is_zero() const { return coeff.empty(); }
  friend FormalCycle operator+(FormalCycle a, const FormalCycle& b) {
    for (auto& [g, n] : b.coeff) a.add(g, n);
    return a;
  }
  friend bool operator==(const FormalCycle& a, const FormalCycle& b) {
    return a.coeff == b.coeff;
  }
  std::string to_string() const;
};

// One (function, support) pair with its boundary supplied by the scenario.
struct LedgerTerm {
  std::string label;
  FormalCycle boundary;
};

// Coefficientwise sum of all boundaries: DIV of the precycle.
FormalCycle precycle_div(const std::vector<LedgerTerm>& terms);

// Built-in term lists. "single-K3" takes independent m, n >= 1; "family"
// requires m = n and carries the +/-(NxN) pair that must cancel.
//
// Note: the single-K3 eta boundary is (mC - nD) x p + p x (mC - nD); with the
// opposite sign, nD - mC, the four off-diagonal generators fail to cancel.
// Reports surface this sign convention rather than hiding it.
std::vector<LedgerTerm> ledger_template(const std::string& name, long m, long n);

// The convention note attached to reports that use the built-in templates.
extern const char* const kLedgerSignNote;

}  // namespace regpair
