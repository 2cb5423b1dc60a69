#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace regpair {

using Rat = mpq_class;
using Int = mpz_class;

// Exact square root of a nonnegative rational, when one exists in Q.
std::optional<Rat> rat_sqrt(const Rat& x);

// log of a positive rational, accurate for values far outside double range.
double rat_log(const Rat& x);

double rat_to_double(const Rat& x);

// "a" or "a/b", reduced, sign on the numerator.
std::string rat_to_string(const Rat& x);

// Accepts "a", "a/b" and decimal literals such as "-0.25".
Rat parse_rat(const std::string& s);

// SplitMix64. Distributions in <random> are implementation-defined, so seeded
// test data goes through this to stay identical across toolchains.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi].
  int64_t range(int64_t lo, int64_t hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(next() % span);
  }

  double real01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace regpair
