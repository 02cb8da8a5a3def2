#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hmv {

// Chart dimension is at most 5 (einstein_cone), surface dimension at most 4;
// tests go up to 6. Capped Eigen types keep everything on the stack.
constexpr int kMaxDim = 8;

using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxDim, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxDim, kMaxDim>;

// ---------------------------------------------------------------------------
// Errors (names follow the operation contracts)

struct DomainViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotPositiveDefinite : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RankDeficient : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SymmetryDefectTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAPositionField : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IndexOutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GateViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Guard constants (below all test tolerances).
constexpr double kEpsPd = 1e-12;   // positive definiteness
constexpr double kEpsDom = 1e-9;   // chart domain margin
constexpr double kEpsRank = 1e-12; // induced-metric rank guard

// ---------------------------------------------------------------------------
// Dense rank-3 / rank-4 tensors with uniform extent per index.

class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int d) : d_(d), a_(static_cast<size_t>(d) * d * d, 0.0) {}
  double& operator()(int i, int j, int k) { return a_[(static_cast<size_t>(i) * d_ + j) * d_ + k]; }
  double operator()(int i, int j, int k) const { return a_[(static_cast<size_t>(i) * d_ + j) * d_ + k]; }
  int dim() const { return d_; }

 private:
  int d_ = 0;
  std::vector<double> a_;
};

class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(int d) : d_(d), a_(static_cast<size_t>(d) * d * d * d, 0.0) {}
  double& operator()(int i, int j, int k, int l) {
    return a_[((static_cast<size_t>(i) * d_ + j) * d_ + k) * d_ + l];
  }
  double operator()(int i, int j, int k, int l) const {
    return a_[((static_cast<size_t>(i) * d_ + j) * d_ + k) * d_ + l];
  }
  int dim() const { return d_; }
  double max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  int d_ = 0;
  std::vector<double> a_;
};

// ---------------------------------------------------------------------------

inline double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int j = 0; j < k; ++j) r = r * (n - j) / (j + 1);
  return r;
}

// Fixed-shape pairwise tree sum. The reduction order depends only on the
// element order, never on thread scheduling, so reports are reproducible
// across worker counts.
inline double pairwise_sum(std::span<const double> a) {
  if (a.size() <= 8) {
    double s = 0.0;
    for (double v : a) s += v;
    return s;
  }
  size_t half = a.size() / 2;
  return pairwise_sum(a.subspan(0, half)) + pairwise_sum(a.subspan(half));
}

}  // namespace hmv
