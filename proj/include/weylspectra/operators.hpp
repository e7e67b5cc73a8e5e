#pragma once

#include <cmath>
#include <utility>

#include <weylspectra/tensor.hpp>

namespace weylspectra {

/// An endomorphism of an inner-product space, kept together with the space
/// so g-adjointness and traces stay checkable.
struct Endomorphism {
  Eigen::MatrixXd matrix;
  InnerProduct space;
};

/// Ordered g-orthonormal pair spanning a non-degenerate plane whose induced
/// form is definite: timelike means g(e1,e1) = g(e2,e2) = -1, spacelike +1.
struct OrientedPlane {
  Eigen::VectorXd e1;
  Eigen::VectorXd e2;
  CausalType kind = CausalType::Spacelike;
};

/// Largest deviation of the pair from the orthonormality contract.
inline double plane_violation(const InnerProduct& g, const OrientedPlane& pi) {
  if (pi.kind == CausalType::Null) return 1.0;
  const double unit = pi.kind == CausalType::Timelike ? -1.0 : 1.0;
  double v = std::abs(g.inner(pi.e1, pi.e2));
  v = std::max(v, std::abs(g.inner(pi.e1, pi.e1) - unit));
  v = std::max(v, std::abs(g.inner(pi.e2, pi.e2) - unit));
  return v;
}

/// Builds an oriented plane of the requested kind from two spanning vectors
/// by Gram-Schmidt in g.  Throws InvalidArgument if the span is degenerate
/// or the induced form does not have the requested definite kind.
inline OrientedPlane make_plane(const InnerProduct& g, const Eigen::VectorXd& u,
                                const Eigen::VectorXd& v, CausalType kind,
                                double tau_null = 1e-9) {
  if (kind == CausalType::Null) throw InvalidArgument("plane kind must be spacelike or timelike");
  const double unit = kind == CausalType::Timelike ? -1.0 : 1.0;
  const double uu = g.inner(u, u);
  if (!(unit * uu > tau_null * u.squaredNorm()))
    throw InvalidArgument("first spanning vector has the wrong causal type");
  Eigen::VectorXd e1 = u / std::sqrt(std::abs(uu));
  Eigen::VectorXd w = v - (g.inner(v, e1) / g.inner(e1, e1)) * e1;
  const double ww = g.inner(w, w);
  if (w.norm() == 0.0 || !(unit * ww > tau_null * w.squaredNorm()))
    throw InvalidArgument("spanning pair is degenerate or of mixed type");
  OrientedPlane pi;
  pi.e1 = std::move(e1);
  pi.e2 = w / std::sqrt(std::abs(ww));
  pi.kind = kind;
  return pi;
}

namespace detail {

/// Raises the first index of a bilinear form B(x,y) = x^T B y against g:
/// g(Tx,y) = x^T T^T G y for all x,y forces T^T G = B, i.e. T = G^{-1} B^T.
template <typename Scalar>
typename InnerProductT<Scalar>::Matrix raise_first_index(
    const InnerProductT<Scalar>& g,
    const typename InnerProductT<Scalar>::Matrix& B) {
  return g.gram_inverse() * B.transpose();
}

}  // namespace detail

/// Jacobi operator J_A(x): the endomorphism with g(J_A(x)y, z) = A(y,x,x,z).
/// J_A(x) is g-self-adjoint, kills x, and its range lies in x-perp.
template <typename Scalar>
typename InnerProductT<Scalar>::Matrix jacobi_matrix(
    const CurvatureTensorT<Scalar>& A,
    const typename InnerProductT<Scalar>::Vector& x) {
  const int m = A.dim();
  if (x.size() != m) throw InvalidArgument("vector dimension does not match tensor");
  typename InnerProductT<Scalar>::Matrix M(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Scalar acc(0);
      for (int j = 0; j < m; ++j) {
        if (x[j] == Scalar(0)) continue;
        for (int k = 0; k < m; ++k) {
          if (x[k] == Scalar(0)) continue;
          acc += x[j] * x[k] * A(a, j, k, b);
        }
      }
      M(a, b) = acc;  // B(y,z) = A(y,x,x,z)
    }
  return detail::raise_first_index(A.space(), M);
}

inline Endomorphism jacobi_operator(const CurvatureTensor& A, const Eigen::VectorXd& x) {
  return Endomorphism{jacobi_matrix(A, x), A.space()};
}

/// Skew-symmetric curvature operator of an oriented plane:
/// g(A(pi)x, y) = A(e1, e2, x, y).  Anti-self-adjoint with respect to g;
/// invariant under rotations of the oriented orthonormal basis of pi.
inline Endomorphism skew_curvature_operator(const CurvatureTensor& A,
                                            const OrientedPlane& pi,
                                            double tol = 1e-8) {
  const int m = A.dim();
  if (pi.e1.size() != m || pi.e2.size() != m)
    throw InvalidArgument("plane dimension does not match tensor");
  if (plane_violation(A.space(), pi) > tol)
    throw InvalidArgument("plane basis is not g-orthonormal of a definite kind");
  Eigen::MatrixXd N(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      double acc = 0.0;
      for (int i = 0; i < m; ++i) {
        if (pi.e1[i] == 0.0) continue;
        for (int j = 0; j < m; ++j) {
          if (pi.e2[j] == 0.0) continue;
          acc += pi.e1[i] * pi.e2[j] * A(i, j, a, b);
        }
      }
      N(a, b) = acc;
    }
  return Endomorphism{detail::raise_first_index(A.space(), N), A.space()};
}

}  // namespace weylspectra
