#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hmv/common.hpp"
#include "hmv/jet.hpp"
#include "hmv/params.hpp"
#include "hmv/rng.hpp"

namespace hmv {

// Metric value with two orders of chart derivatives at a point.
// dg(k,i,j) = d_k g_ij, d2g(l,k,i,j) = d_l d_k g_ij.
struct MetricJet {
  int dim = 0;
  Mat g;
  Tensor3 dg;
  Tensor4 d2g;
};

// How sphere-like immersions attach to the chart.
enum class ChartKind {
  Cartesian,    // geodesic spheres are chart spheres x = r * w(u)
  RadialFiber,  // coordinates (r, angles); graphs r = r(angles) over the fiber
  Other,        // curvature tests only (product_spheres)
};

// Angle structure of the fiber for RadialFiber charts.
struct FiberSpec {
  int angles = 0;
  std::vector<bool> periodic;
  int wdim = 0;  // components of the unit-direction map used by perturbation profiles
  std::function<void(std::span<const Jet2>, std::span<Jet2>)> dirs;
};

struct Manifold {
  int dim = 0;
  std::string id;
  ParamMap params;

  // g entries row-major, evaluated in second-order jets
  std::function<void(std::span<const Jet2>, std::span<Jet2>)> metric;
  std::function<bool(const Vec&)> inside;
  Vec sample_lo, sample_hi;  // admissible sampling region for randomized tests

  bool has_position = false;
  std::function<void(std::span<const Jet2>, std::span<Jet2>)> position;

  std::optional<double> spaceform_c;  // exact c for space-form entries
  ChartKind chart = ChartKind::Cartesian;
  FiberSpec fiber;
};

// Catalog: euclidean, spaceform_conformal, warped, product_spheres,
// einstein_cone, expression.
Manifold make_manifold(const std::string& id, const ParamMap& params);
std::vector<std::string> manifold_catalog_ids();

MetricJet metric_eval(const Manifold& m, const Vec& x);
Vec random_admissible_point(const Manifold& m, Rng& rng);

// Unit-direction map of the standard spherical chart of S^m (m = ang.size(),
// w.size() = m+1). First m-1 angles polar in (0,pi), last angle periodic.
template <class T>
void sphere_dirs(std::span<const T> ang, std::span<T> w) {
  const int m = static_cast<int>(ang.size());
  using std::cos;
  using std::sin;
  w[0] = cos(ang[0]);
  T prefix = sin(ang[0]);
  for (int i = 1; i < m; ++i) {
    w[i] = prefix * cos(ang[i]);
    prefix = prefix * sin(ang[i]);
  }
  w[m] = prefix;
}

}  // namespace hmv
