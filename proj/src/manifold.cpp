#include "hmv/manifold.hpp"

#include <cmath>

#include "hmv/expr.hpp"

namespace hmv {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<std::string> coord_names(int d) {
  std::vector<std::string> names;
  for (int i = 0; i < d; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

FiberSpec sphere_fiber(int m) {
  FiberSpec f;
  f.angles = m;
  f.periodic.assign(m, false);
  f.periodic[m - 1] = true;
  f.wdim = m + 1;
  f.dirs = [](std::span<const Jet2> a, std::span<Jet2> w) { sphere_dirs(a, w); };
  return f;
}

FiberSpec two_sphere_product_fiber() {
  FiberSpec f;
  f.angles = 4;
  f.periodic = {false, true, false, true};
  f.wdim = 6;
  f.dirs = [](std::span<const Jet2> a, std::span<Jet2> w) {
    sphere_dirs(a.subspan(0, 2), w.subspan(0, 3));
    sphere_dirs(a.subspan(2, 2), w.subspan(3, 3));
  };
  return f;
}

void zero_metric(std::span<const Jet2> x, std::span<Jet2> g) {
  const int d = static_cast<int>(x.size());
  for (int i = 0; i < d * d; ++i) g[i] = Jet2::constant(0.0, x[0].vars());
}

Manifold base(const std::string& id, int dim, const ParamMap& params) {
  Manifold m;
  m.id = id;
  m.dim = dim;
  m.params = params;
  m.inside = [](const Vec&) { return true; };
  m.sample_lo = Vec::Constant(dim, -2.0);
  m.sample_hi = Vec::Constant(dim, 2.0);
  return m;
}

Manifold make_euclidean(const ParamMap& p) {
  p.expect_only({"dim"});
  int d = static_cast<int>(p.get_num("dim"));
  if (d < 2) throw ConfigError("euclidean: dim must be >= 2");
  Manifold m = base("euclidean", d, p);
  m.metric = [d](std::span<const Jet2> x, std::span<Jet2> g) {
    zero_metric(x, g);
    for (int i = 0; i < d; ++i) g[i * d + i] = Jet2::constant(1.0, x[0].vars());
  };
  m.has_position = true;
  m.position = [d](std::span<const Jet2> x, std::span<Jet2> P) {
    for (int i = 0; i < d; ++i) P[i] = x[i];
  };
  m.spaceform_c = 0.0;
  return m;
}

// g = lambda^2 delta with lambda = 2/(1 + c|x|^2): sphere for c > 0 (chart
// misses one point), hyperbolic ball for c < 0.
Manifold make_spaceform_conformal(const ParamMap& p) {
  p.expect_only({"dim", "c"});
  int d = static_cast<int>(p.get_num("dim"));
  double c = p.get_num("c");
  if (d < 2) throw ConfigError("spaceform_conformal: dim must be >= 2");
  Manifold m = base("spaceform_conformal", d, p);
  m.metric = [d, c](std::span<const Jet2> x, std::span<Jet2> g) {
    Jet2 r2 = x[0] * x[0];
    for (int i = 1; i < d; ++i) r2 = r2 + x[i] * x[i];
    Jet2 lam = 2.0 / (1.0 + c * r2);
    Jet2 lam2 = lam * lam;
    zero_metric(x, g);
    for (int i = 0; i < d; ++i) g[i * d + i] = lam2;
  };
  m.inside = [c](const Vec& x) { return 1.0 + c * x.squaredNorm() > kEpsDom; };
  double box = c < 0 ? 0.4 / std::sqrt(-c) : 1.5;
  m.sample_lo = Vec::Constant(d, -box);
  m.sample_hi = Vec::Constant(d, box);
  m.has_position = true;
  m.position = [d](std::span<const Jet2> x, std::span<Jet2> P) {
    for (int i = 0; i < d; ++i) P[i] = x[i];
  };
  m.spaceform_c = c;
  return m;
}

// g = dr^2 + phi(r)^2 * round(S^{d-1}) in coordinates (r, angles).
Manifold make_warped(const ParamMap& p) {
  p.expect_only({"dim", "phi"});
  int d = static_cast<int>(p.get_num("dim"));
  if (d < 2) throw ConfigError("warped: dim must be >= 2");
  Expr phi = Expr::parse(p.get_str("phi"), {"r"});
  Manifold m = base("warped", d, p);
  m.chart = ChartKind::RadialFiber;
  m.fiber = sphere_fiber(d - 1);
  m.metric = [d, phi](std::span<const Jet2> x, std::span<Jet2> g) {
    zero_metric(x, g);
    std::vector<Jet2> rv = {x[0]};
    Jet2 f = phi.eval(std::span<const Jet2>(rv));
    Jet2 f2 = f * f;
    g[0] = Jet2::constant(1.0, x[0].vars());
    Jet2 scale = f2;
    for (int i = 1; i < d; ++i) {
      g[i * d + i] = scale;
      if (i + 1 < d) {
        Jet2 s = sin(x[i]);
        scale = scale * (s * s);
      }
    }
  };
  m.inside = [](const Vec& x) { return x[0] > kEpsDom; };
  m.sample_lo = Vec::Zero(d);
  m.sample_hi = Vec::Zero(d);
  m.sample_lo[0] = 0.3;
  m.sample_hi[0] = 2.2;
  for (int i = 1; i < d; ++i) {
    bool per = m.fiber.periodic[i - 1];
    m.sample_lo[i] = per ? 0.0 : 0.35;
    m.sample_hi[i] = per ? 2.0 * kPi : kPi - 0.35;
  }
  m.has_position = true;
  m.position = [d, phi](std::span<const Jet2> x, std::span<Jet2> P) {
    std::vector<Jet2> rv = {x[0]};
    P[0] = phi.eval(std::span<const Jet2>(rv));
    for (int i = 1; i < d; ++i) P[i] = Jet2::constant(0.0, x[0].vars());
  };
  return m;
}

// S^2(a) x S^2(a) in angles (t1, p1, t2, p2); curvature tests only.
Manifold make_product_spheres(const ParamMap& p) {
  p.expect_only({"a"});
  double a = p.get_num("a", 1.0);
  Manifold m = base("product_spheres", 4, p);
  m.chart = ChartKind::Other;
  double a2 = a * a;
  m.metric = [a2](std::span<const Jet2> x, std::span<Jet2> g) {
    zero_metric(x, g);
    const int d = 4;
    Jet2 s1 = sin(x[0]);
    Jet2 s2 = sin(x[2]);
    g[0 * d + 0] = Jet2::constant(a2, x[0].vars());
    g[1 * d + 1] = a2 * s1 * s1;
    g[2 * d + 2] = Jet2::constant(a2, x[0].vars());
    g[3 * d + 3] = a2 * s2 * s2;
  };
  m.sample_lo = Vec::Zero(4);
  m.sample_hi = Vec::Zero(4);
  for (int i : {0, 2}) {
    m.sample_lo[i] = 0.35;
    m.sample_hi[i] = kPi - 0.35;
  }
  for (int i : {1, 3}) {
    m.sample_lo[i] = 0.0;
    m.sample_hi[i] = 2.0 * kPi;
  }
  return m;
}

// Ricci-flat cone dr^2 + r^2 g_N over N = S^2(a) x S^2(a), a^2 = 1/3.
Manifold make_einstein_cone(const ParamMap& p) {
  p.expect_only({});
  ParamMap q;
  Manifold m = base("einstein_cone", 5, q);
  m.chart = ChartKind::RadialFiber;
  m.fiber = two_sphere_product_fiber();
  const double a2 = 1.0 / 3.0;
  m.metric = [a2](std::span<const Jet2> x, std::span<Jet2> g) {
    zero_metric(x, g);
    const int d = 5;
    Jet2 r2 = x[0] * x[0];
    Jet2 s1 = sin(x[1]);
    Jet2 s2 = sin(x[3]);
    g[0 * d + 0] = Jet2::constant(1.0, x[0].vars());
    g[1 * d + 1] = r2 * a2;
    g[2 * d + 2] = r2 * a2 * s1 * s1;
    g[3 * d + 3] = r2 * a2;
    g[4 * d + 4] = r2 * a2 * s2 * s2;
  };
  m.inside = [](const Vec& x) { return x[0] > kEpsDom; };
  m.sample_lo = Vec::Zero(5);
  m.sample_hi = Vec::Zero(5);
  m.sample_lo[0] = 0.4;
  m.sample_hi[0] = 2.0;
  for (int i = 1; i < 5; ++i) {
    bool per = m.fiber.periodic[i - 1];
    m.sample_lo[i] = per ? 0.0 : 0.35;
    m.sample_hi[i] = per ? 2.0 * kPi : kPi - 0.35;
  }
  m.has_position = true;
  m.position = [](std::span<const Jet2> x, std::span<Jet2> P) {
    P[0] = x[0];
    for (int i = 1; i < 5; ++i) P[i] = Jet2::constant(0.0, x[0].vars());
  };
  return m;
}

// User metric: d*d expression entries in x1..xd, row-major.
Manifold make_expression_metric(const ParamMap& p) {
  p.expect_only({"dim", "g"});
  int d = static_cast<int>(p.get_num("dim"));
  auto it = p.strlist.find("g");
  if (it == p.strlist.end()) throw ConfigError("expression metric: missing entry list 'g'");
  const auto& entries = it->second;
  if (static_cast<int>(entries.size()) != d * d)
    throw ConfigError("expression metric: need dim*dim entries");
  auto names = coord_names(d);
  auto exprs = std::make_shared<std::vector<Expr>>();
  for (const auto& e : entries) exprs->push_back(Expr::parse(e, names));
  Manifold m = base("expression", d, p);
  m.metric = [d, exprs](std::span<const Jet2> x, std::span<Jet2> g) {
    for (int i = 0; i < d * d; ++i) g[i] = (*exprs)[i].eval(x);
    // enforce exact symmetry; reject clearly asymmetric input
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        double diff = std::abs(g[i * d + j].v - g[j * d + i].v);
        double scale = std::abs(g[i * d + j].v) + std::abs(g[j * d + i].v) + 1.0;
        if (diff > 1e-10 * scale) throw ConfigError("expression metric: entries not symmetric");
        Jet2 avg = (g[i * d + j] + g[j * d + i]) * 0.5;
        g[i * d + j] = avg;
        g[j * d + i] = avg;
      }
  };
  return m;
}

}  // namespace

std::vector<std::string> manifold_catalog_ids() {
  return {"euclidean", "spaceform_conformal", "warped", "product_spheres", "einstein_cone",
          "expression"};
}

Manifold make_manifold(const std::string& id, const ParamMap& params) {
  if (id == "euclidean") return make_euclidean(params);
  if (id == "spaceform_conformal") return make_spaceform_conformal(params);
  if (id == "warped") return make_warped(params);
  if (id == "product_spheres") return make_product_spheres(params);
  if (id == "einstein_cone") return make_einstein_cone(params);
  if (id == "expression") return make_expression_metric(params);
  throw ConfigError("unknown manifold id '" + id + "'");
}

MetricJet metric_eval(const Manifold& m, const Vec& x) {
  const int d = m.dim;
  if (x.size() != d) throw DomainViolation("point dimension mismatch");
  if (!m.inside(x)) throw DomainViolation("point outside chart domain of '" + m.id + "'");

  std::vector<Jet2> xj(d);
  for (int i = 0; i < d; ++i) xj[i] = Jet2::variable(x[i], i, d);
  std::vector<Jet2> gj(d * d);
  m.metric(xj, gj);

  MetricJet out;
  out.dim = d;
  out.g = Mat::Zero(d, d);
  out.dg = Tensor3(d);
  out.d2g = Tensor4(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Jet2& e = gj[i * d + j];
      out.g(i, j) = e.v;
      for (int k = 0; k < d; ++k) {
        out.dg(k, i, j) = e.g[k];
        for (int l = 0; l < d; ++l) out.d2g(l, k, i, j) = e.h(l, k);
      }
    }

  Eigen::SelfAdjointEigenSolver<Mat> es(out.g, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() <= kEpsPd)
    throw NotPositiveDefinite("metric not positive definite at sampled point (min eig " +
                              std::to_string(es.eigenvalues().minCoeff()) + ")");
  return out;
}

Vec random_admissible_point(const Manifold& m, Rng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Vec x(m.dim);
    for (int i = 0; i < m.dim; ++i) x[i] = rng.uniform(m.sample_lo[i], m.sample_hi[i]);
    if (m.inside(x)) return x;
  }
  throw DomainViolation("could not sample admissible point for '" + m.id + "'");
}

}  // namespace hmv
