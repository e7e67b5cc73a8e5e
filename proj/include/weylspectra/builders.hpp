#pragma once

#include <weylspectra/tensor.hpp>

namespace weylspectra {

/// Curvature tensor of a g-self-adjoint endomorphism phi:
///   A(x,y,z,w) = g(phi x, w) g(phi y, z) - g(phi x, z) g(phi y, w).
/// Throws if phi fails the self-adjointness check at tolerance
/// selfadj_tol * max(1, ||G*phi||).
template <typename Scalar>
CurvatureTensorT<Scalar> a_phi_tensor(
    const InnerProductT<Scalar>& g,
    const typename InnerProductT<Scalar>::Matrix& phi,
    double selfadj_tol = 1e-10) {
  const int m = g.dim();
  if (phi.rows() != m || phi.cols() != m)
    throw InvalidArgument("phi dimension does not match space");
  if (self_adjoint_violation(g, phi) > selfadj_tol * adjoint_scale(g, phi))
    throw InvalidArgument("phi is not g-self-adjoint");

  // P(i,l) = g(phi e_i, e_l); symmetric for self-adjoint phi.
  typename InnerProductT<Scalar>::Matrix P = phi.transpose() * g.gram();
  CurvatureTensorT<Scalar> A(g);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          A.at(i, j, k, l) = P(i, l) * P(j, k) - P(i, k) * P(j, l);
  return A;
}

/// Constant-curvature tensor lambda * A_Id:
///   A(x,y,z,w) = lambda (g(x,w) g(y,z) - g(x,z) g(y,w)).
template <typename Scalar>
CurvatureTensorT<Scalar> constant_curvature_tensor(const InnerProductT<Scalar>& g,
                                                   Scalar lambda) {
  const int m = g.dim();
  const auto& G = g.gram();
  CurvatureTensorT<Scalar> A(g);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          A.at(i, j, k, l) = lambda * (G(i, l) * G(j, k) - G(i, k) * G(j, l));
  return A;
}

inline CurvatureTensor constant_curvature_tensor(const InnerProduct& g, double lambda) {
  return constant_curvature_tensor<double>(g, lambda);
}

/// The exceptional 4-dimensional family of curvature operators of rank 2:
/// in a positive-definite orthonormal basis the only components (up to the
/// forced symmetries) are
///   W_1212 = W_1423 = W_2314 = W_3434 = a1,  W_1324 = W_2413 = -a1,
///   W_1234 = W_1313 = W_1414 = W_2323 = W_2424 = W_3412 = a2.
/// The first Bianchi identity holds iff a2 + 2*a1 = 0; the builder emits the
/// listed components verbatim and leaves that choice to the caller (validate
/// reports the violation otherwise).  Its Ricci trace is (-a1 - 2*a2) * g.
inline CurvatureTensor exceptional_ip4_tensor(const InnerProduct& g, double a1,
                                              double a2) {
  if (g.dim() != 4) throw InvalidArgument("exceptional family needs dimension 4");
  if (!g.signature().riemannian())
    throw InvalidArgument("exceptional family needs a definite space");
  if ((g.gram() - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() > 1e-12)
    throw InvalidArgument("exceptional family needs an orthonormal gram");

  CurvatureTensor W(g);
  // 0-based entries; the full orbit of each under the curvature symmetries.
  const struct { int i, j, k, l; double v; } rows[] = {
      {0, 1, 0, 1, a1}, {0, 1, 2, 3, a2}, {0, 2, 0, 2, a2}, {0, 2, 1, 3, -a1},
      {0, 3, 0, 3, a2}, {0, 3, 1, 2, a1}, {1, 2, 1, 2, a2}, {1, 2, 0, 3, a1},
      {1, 3, 1, 3, a2}, {1, 3, 0, 2, -a1}, {2, 3, 2, 3, a1}, {2, 3, 0, 1, a2},
  };
  auto set_orbit = [&W](int i, int j, int k, int l, double v) {
    W.at(i, j, k, l) = v;
    W.at(j, i, k, l) = -v;
    W.at(i, j, l, k) = -v;
    W.at(j, i, l, k) = v;
    W.at(k, l, i, j) = v;
    W.at(l, k, i, j) = -v;
    W.at(k, l, j, i) = -v;
    W.at(l, k, j, i) = v;
  };
  for (const auto& r : rows) set_orbit(r.i, r.j, r.k, r.l, r.v);
  return W;
}

}  // namespace weylspectra
