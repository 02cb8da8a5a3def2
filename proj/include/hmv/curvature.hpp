#pragma once

#include "hmv/common.hpp"
#include "hmv/manifold.hpp"

namespace hmv {

// Curvature of the Levi-Civita connection at a chart point, in the convention
// R(X,Y) = nabla_X nabla_Y - nabla_Y nabla_X - nabla_[X,Y] and
// riem(l,k,i,j) = <R(d_i, d_j) d_k, d_l>. Ricci is arranged so that
// Ric(X,Y) = sum_q <R(E_q, X) Y, E_q> over an orthonormal frame, which makes
// Ric positive on round spheres.
struct CurvatureData {
  int dim = 0;
  Mat g, ginv;
  Tensor3 gamma;    // gamma(a,b,c) = Gamma^a_bc
  Tensor4 dgamma;   // dgamma(e,a,b,c) = d_e Gamma^a_bc
  Tensor4 riem_up;  // riem_up(a,k,i,j) = R^a_kij
  Tensor4 riem;     // lowered
  Mat ricci;

  // <R(X,Y)Z, W>
  double rm(const Vec& X, const Vec& Y, const Vec& Z, const Vec& W) const;
  // R(X,Y)Z as a contravariant chart vector
  Vec r_op(const Vec& X, const Vec& Y, const Vec& Z) const;
  double ric(const Vec& X, const Vec& Y) const;
  double inner(const Vec& X, const Vec& Y) const { return X.dot(g * Y); }
};

// Christoffel symbols and their chart derivatives from a metric jet.
void christoffel(const MetricJet& mj, Tensor3& gamma, Tensor4& dgamma);

CurvatureData curvature_from_jet(const MetricJet& mj);
CurvatureData curvature_at(const Manifold& m, const Vec& x);

// Max componentwise deviation of riem from c * (g_li g_kj - g_lj g_ki).
double curvature_model_residual(const CurvatureData& c, double model_c);
double scalar_curvature(const CurvatureData& c);
// Max-abs of the traceless Ricci part, measured in an orthonormal frame.
double einstein_defect(const CurvatureData& c);
// Relative defects of the four Riemann symmetries and the first Bianchi sum.
double riemann_symmetry_defect(const CurvatureData& c);
double bianchi_defect(const CurvatureData& c);

}  // namespace hmv
