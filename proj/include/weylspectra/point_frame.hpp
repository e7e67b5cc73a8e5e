#pragma once

#include <utility>
#include <vector>

#include <weylspectra/contractions.hpp>
#include <weylspectra/metric_field.hpp>
#include <weylspectra/tensor.hpp>

namespace weylspectra {

/// Christoffel symbols of the second kind at a point, Gamma^k_ij, symmetric
/// in the lower pair.
struct ChristoffelSymbols {
  int m = 0;
  std::vector<double> c;  // index k*m*m + i*m + j

  double operator()(int k, int i, int j) const { return c[idx(k, i, j)]; }
  double& at(int k, int i, int j) { return c[idx(k, i, j)]; }
  double max_abs() const {
    double s = 0.0;
    for (double v : c) s = std::max(s, std::abs(v));
    return s;
  }

 private:
  std::size_t idx(int k, int i, int j) const {
    return (static_cast<std::size_t>(k) * m + i) * m + j;
  }
};

/// Everything the probes need at one chart point: the Gram matrix as a
/// checked inner product, Christoffels, and the lowered curvature tensors.
struct PointFrame {
  Eigen::VectorXd point;
  InnerProduct space;
  ChristoffelSymbols christoffel;
  CurvatureTensor riemann;
  CurvatureTensor weyl;
};

namespace detail {

struct MetricJets {
  Eigen::MatrixXd G;
  Eigen::MatrixXd Ginv;
  std::vector<Jet2> jets;  // row-major m*m

  double dg(int k, int i, int j) const { return jets[i * m + j].grad()[k]; }
  double ddg(int a, int b, int i, int j) const { return jets[i * m + j].hess()(a, b); }
  int m = 0;
};

inline MetricJets evaluate_metric_jets(const MetricField& g, const Eigen::VectorXd& P) {
  MetricJets out;
  out.m = g.dim();
  out.jets = g.gram_jets_at(P);
  out.G.resize(out.m, out.m);
  for (int i = 0; i < out.m; ++i)
    for (int j = 0; j < out.m; ++j) out.G(i, j) = out.jets[i * out.m + j].value();
  out.G = 0.5 * (out.G + out.G.transpose());
  // The signature check lives in InnerProduct; here we only need the inverse.
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(out.G);
  out.Ginv = lu.inverse();
  const double residual =
      (out.G * out.Ginv - Eigen::MatrixXd::Identity(out.m, out.m)).cwiseAbs().maxCoeff();
  if (!(residual < 1e-8))
    throw InvalidArgument("metric is numerically degenerate at the evaluation point");
  return out;
}

inline ChristoffelSymbols christoffel_from_jets(const MetricJets& mj) {
  const int m = mj.m;
  // First kind: Gamma_kij = (dg_jk/dx_i + dg_ik/dx_j - dg_ij/dx_k) / 2.
  std::vector<double> first(static_cast<std::size_t>(m) * m * m);
  auto f = [&](int k, int i, int j) -> double& {
    return first[(static_cast<std::size_t>(k) * m + i) * m + j];
  };
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        f(k, i, j) = 0.5 * (mj.dg(i, j, k) + mj.dg(j, i, k) - mj.dg(k, i, j));

  ChristoffelSymbols out;
  out.m = m;
  out.c.assign(static_cast<std::size_t>(m) * m * m, 0.0);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        double acc = 0.0;
        for (int c = 0; c < m; ++c) acc += mj.Ginv(k, c) * f(c, i, j);
        out.at(k, i, j) = acc;
      }
  return out;
}

}  // namespace detail

inline ChristoffelSymbols christoffel_at(const MetricField& g, const Eigen::VectorXd& P) {
  return detail::christoffel_from_jets(detail::evaluate_metric_jets(g, P));
}

/// Evaluates the Levi-Civita connection and lowered curvature of g at P.
///
/// The lowered Riemann tensor is assembled directly from second metric
/// derivatives plus a Christoffel-squared correction, and the slot order is
/// fixed so that the constant-curvature model yields exactly
/// constant_curvature_tensor(K): A(x,y,z,w) agrees with
/// lambda (g(x,w)g(y,z) - g(x,z)g(y,w)) on spaces of constant curvature
/// lambda.  The Weyl member is the Ricci-flat projection of the curvature.
inline PointFrame frame_at(const MetricField& g, const Eigen::VectorXd& P) {
  const auto mj = detail::evaluate_metric_jets(g, P);
  const int m = mj.m;

  PointFrame out{P, InnerProduct(mj.G, g.signature()), detail::christoffel_from_jets(mj),
                 CurvatureTensor(InnerProduct(mj.G, g.signature())),
                 CurvatureTensor(InnerProduct(mj.G, g.signature()))};

  // Christoffel of the first kind, reused for the quadratic term.
  std::vector<double> first(static_cast<std::size_t>(m) * m * m);
  auto f1 = [&](int k, int i, int j) -> double& {
    return first[(static_cast<std::size_t>(k) * m + i) * m + j];
  };
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        f1(k, i, j) = 0.5 * (mj.dg(i, j, k) + mj.dg(j, i, k) - mj.dg(k, i, j));

  // Lowered curvature, second-derivative part plus Gamma*Gamma part:
  //   L_iklm = (dd_kl g_im + dd_im g_kl - dd_km g_il - dd_il g_km) / 2
  //            + sum_p [ Gamma1_p,kl Gamma2_p,im - Gamma1_p,km Gamma2_p,il ]
  // and the library's slot convention is A_iklm = -L_iklm.
  const auto& c2 = out.christoffel;
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k)
      for (int l = 0; l < m; ++l)
        for (int mm = 0; mm < m; ++mm) {
          double v = 0.5 * (mj.ddg(k, l, i, mm) + mj.ddg(i, mm, k, l) -
                            mj.ddg(k, mm, i, l) - mj.ddg(i, l, k, mm));
          for (int p = 0; p < m; ++p)
            v += f1(p, k, l) * c2(p, i, mm) - f1(p, k, mm) * c2(p, i, l);
          out.riemann.at(i, k, l, mm) = -v;
        }

  out.weyl = weyl_projection(out.riemann);
  return out;
}

}  // namespace weylspectra
