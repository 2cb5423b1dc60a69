#pragma once

#include <map>
#include <string>
#include <vector>

#include "regpair/gaussian.hpp"

namespace regpair {

// Exact formal sum  sum_k n_k log|alpha_k|  with Gaussian-rational alpha_k,
// stored as integer weights on squared-modulus keys. The zero test is exact:
// the sum vanishes iff  prod (|alpha_k|^2)^{n_k} = 1  in Q. Doubles are only
// a rendering of the value.
struct LogSum {
  std::map<Rat, long> terms;                  // |alpha|^2 -> weight
  std::vector<GaussianRational> witnesses;    // the alphas, in insertion order

  void add_log_abs(const GaussianRational& alpha, long weight) {
    if (alpha.is_zero())
      throw PreconditionError("log|0| in an exact log sum");
    if (weight == 0) return;
    witnesses.push_back(alpha);
    Rat key = alpha.norm2();
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms.emplace(std::move(key), weight);
    } else {
      it->second += weight;
      if (it->second == 0) terms.erase(it);
    }
  }

  LogSum& operator+=(const LogSum& o) {
    for (auto& [k, n] : o.terms) {
      auto it = terms.find(k);
      if (it == terms.end()) {
        terms.emplace(k, n);
      } else {
        it->second += n;
        if (it->second == 0) terms.erase(it);
      }
    }
    witnesses.insert(witnesses.end(), o.witnesses.begin(), o.witnesses.end());
    return *this;
  }
  friend LogSum operator+(LogSum a, const LogSum& b) { return a += b; }
  friend LogSum operator-(const LogSum& a) { return a.scaled(-1); }
  friend LogSum operator-(LogSum a, const LogSum& b) { return a += -b; }

  LogSum scaled(long k) const {
    LogSum out;
    if (k == 0) return out;
    for (auto& [key, n] : terms) out.terms.emplace(key, k * n);
    out.witnesses = witnesses;
    return out;
  }

  // prod key^weight, the exact rational whose log is twice this sum.
  Rat modulus_product() const {
    Rat prod(1);
    for (auto& [key, n] : terms) {
      Rat p;
      long e = n < 0 ? -n : n;
      mpz_pow_ui(p.get_num_mpz_t(), key.get_num().get_mpz_t(), static_cast<unsigned long>(e));
      mpz_pow_ui(p.get_den_mpz_t(), key.get_den().get_mpz_t(), static_cast<unsigned long>(e));
      p.canonicalize();
      if (n < 0) p = 1 / p;
      prod *= p;
    }
    return prod;
  }

  bool is_zero() const { return modulus_product() == 1; }
  bool equals(const LogSum& o) const { return (*this - o).is_zero(); }

  // floating rendering: 1/2 sum n log(key)
  double value() const {
    double acc = 0.0;
    for (auto& [key, n] : terms) acc += 0.5 * static_cast<double>(n) * rat_log(key);
    return acc;
  }

  std::string exact_string() const {
    return "1/2*log(" + rat_to_string(modulus_product()) + ")";
  }
};

}  // namespace regpair
