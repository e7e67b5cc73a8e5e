#pragma once

#include <weylspectra/tensor.hpp>

namespace weylspectra {

/// Ricci contraction of A: rho(x,y) = sum_ij g^ij A(x, e_i, e_j, y),
/// returned as the m x m component matrix (symmetric for valid tensors).
template <typename Scalar>
typename InnerProductT<Scalar>::Matrix ricci(const CurvatureTensorT<Scalar>& A) {
  const int m = A.dim();
  const auto& Ginv = A.space().gram_inverse();
  typename InnerProductT<Scalar>::Matrix rho(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Scalar acc(0);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          if (Ginv(i, j) == Scalar(0)) continue;
          acc += Ginv(i, j) * A(a, i, j, b);
        }
      rho(a, b) = acc;
    }
  return rho;
}

/// Scalar curvature tau = sum_ij g^ij rho_ij.
template <typename Scalar>
Scalar scalar_curvature(const CurvatureTensorT<Scalar>& A) {
  return (A.space().gram_inverse() * ricci(A)).trace();
}

/// Orthogonal projection onto the space of Weyl tensors (Ricci-flat
/// algebraic curvature tensors):
///   pi_W(A) = A - 1/(m-2) [rho(x,w)g(y,z) + g(x,w)rho(y,z)]
///               + 1/(m-2) [rho(x,z)g(y,w) + g(x,z)rho(y,w)]
///               + tau/((m-1)(m-2)) [g(x,w)g(y,z) - g(x,z)g(y,w)].
/// The output has vanishing Ricci contraction and the projection is
/// idempotent; constant-curvature tensors are annihilated.
template <typename Scalar>
CurvatureTensorT<Scalar> weyl_projection(const CurvatureTensorT<Scalar>& A) {
  const int m = A.dim();
  const auto& G = A.space().gram();
  const auto rho = ricci(A);
  const Scalar tau = (A.space().gram_inverse() * rho).trace();
  const Scalar c1 = Scalar(1) / Scalar(m - 2);
  const Scalar c2 = tau / Scalar((m - 1) * (m - 2));

  CurvatureTensorT<Scalar> W(A.space());
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        for (int w = 0; w < m; ++w) {
          Scalar v = A(x, y, z, w);
          v -= c1 * (rho(x, w) * G(y, z) + G(x, w) * rho(y, z));
          v += c1 * (rho(x, z) * G(y, w) + G(x, z) * rho(y, w));
          v += c2 * (G(x, w) * G(y, z) - G(x, z) * G(y, w));
          W.at(x, y, z, w) = v;
        }
  return W;
}

/// Conformal rescaling by a constant alpha > 0: returns alpha * A living on
/// the space with gram alpha * g (same signature).
inline CurvatureTensor conformal_rescaling(const CurvatureTensor& A, double alpha) {
  if (!(alpha > 0.0)) throw InvalidArgument("conformal factor must be positive");
  InnerProduct scaled(alpha * A.space().gram(), A.space().signature());
  CurvatureTensor out(scaled);
  const int m = A.dim();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) out.at(i, j, k, l) = alpha * A(i, j, k, l);
  return out;
}

}  // namespace weylspectra
