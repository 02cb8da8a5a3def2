#pragma once

#include <cstdint>
#include <random>

namespace hmv {

// Seeded generator with a fixed bits-to-double mapping. std::mt19937_64 output
// is pinned by the standard and the (x >> 11) * 2^-53 mapping sidesteps the
// implementation-defined std::uniform_real_distribution, so draws reproduce
// bit-for-bit everywhere.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * unit(); }
  // symmetric around zero, handy for coefficients and test matrices
  double sym(double s = 1.0) { return uniform(-s, s); }
  uint64_t raw() { return gen_(); }
  int index(int n) { return static_cast<int>(gen_() % static_cast<uint64_t>(n)); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace hmv
