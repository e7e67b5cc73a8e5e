#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>

#include <weylspectra/signature.hpp>

namespace weylspectra {

/// Non-degenerate symmetric bilinear form of a declared signature.
///
/// The scalar type is double for actual pseudo-Euclidean spaces and
/// std::complex<double> for complex-bilinear extensions (the form stays
/// bilinear, never Hermitian: inner(x,y) = x^T G y with no conjugation).
/// Signature sign counts are verified for real scalars only.
template <typename Scalar>
class InnerProductT {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  InnerProductT(Matrix gram, Signature sig)
      : sig_(sig), gram_(std::move(gram)) {
    const int m = sig_.dim();
    if (gram_.rows() != m || gram_.cols() != m)
      throw InvalidArgument("gram matrix does not match signature dimension");
    if ((gram_ - gram_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale())
      throw InvalidArgument("gram matrix is not symmetric");
    if constexpr (std::is_same_v<Scalar, double>) {
      Eigen::SelfAdjointEigenSolver<Matrix> es(gram_);
      if (es.info() != Eigen::Success)
        throw EigenSolverError("gram eigendecomposition failed");
      int neg = 0, pos = 0;
      const double floor = 1e-12 * (1.0 + es.eigenvalues().cwiseAbs().maxCoeff());
      for (int i = 0; i < m; ++i) {
        if (es.eigenvalues()[i] < -floor) ++neg;
        else if (es.eigenvalues()[i] > floor) ++pos;
      }
      if (neg + pos < m) throw InvalidArgument("gram matrix is degenerate");
      if (neg != sig_.p || pos != sig_.q)
        throw InvalidArgument("gram matrix signature does not match declared (p,q)");
    }
    Eigen::PartialPivLU<Matrix> lu(gram_);
    gram_inv_ = lu.inverse();
    const double residual =
        (gram_ * gram_inv_ - Matrix::Identity(m, m)).cwiseAbs().maxCoeff();
    if (!(residual < 1e-8)) throw InvalidArgument("gram matrix is numerically singular");
  }

  int dim() const { return sig_.dim(); }
  const Signature& signature() const { return sig_; }
  const Matrix& gram() const { return gram_; }
  const Matrix& gram_inverse() const { return gram_inv_; }

  Scalar inner(const Vector& x, const Vector& y) const {
    if (x.size() != dim() || y.size() != dim())
      throw InvalidArgument("vector dimension does not match space");
    return x.transpose() * gram_ * y;
  }

  /// Standard form of the given signature: diag(-1,...,-1,+1,...,+1).
  static InnerProductT standard(Signature sig) {
    Matrix g = Matrix::Identity(sig.dim(), sig.dim());
    for (int i = 0; i < sig.p; ++i) g(i, i) = Scalar(-1);
    return InnerProductT(std::move(g), sig);
  }

  static InnerProductT euclidean(int m) { return standard(Signature::euclidean(m)); }

 private:
  double scale() const {
    const double s = gram_.cwiseAbs().maxCoeff();
    return s > 1.0 ? s : 1.0;
  }

  Signature sig_;
  Matrix gram_;
  Matrix gram_inv_;
};

using InnerProduct = InnerProductT<double>;
using ComplexInnerProduct = InnerProductT<std::complex<double>>;

/// Classifies v by the sign of g(v,v); |g(v,v)| <= tau_null counts as null.
/// The zero vector has no causal class.
inline CausalType causal_type(const InnerProduct& g, const Eigen::VectorXd& v,
                              double tau_null = 1e-9) {
  if (v.norm() == 0.0) throw InvalidArgument("causal_type of the zero vector");
  const double s = g.inner(v, v);
  if (s > tau_null) return CausalType::Spacelike;
  if (s < -tau_null) return CausalType::Timelike;
  return CausalType::Null;
}

/// Max-norm violation of g-self-adjointness of T: g(Tx,y) = g(x,Ty) holds
/// iff G*T is symmetric.  Returns an absolute magnitude; callers threshold
/// against tol * max(1, ||G*T||_inf).
template <typename Scalar>
double self_adjoint_violation(const InnerProductT<Scalar>& g,
                              const typename InnerProductT<Scalar>::Matrix& T) {
  typename InnerProductT<Scalar>::Matrix GT = g.gram() * T;
  return (GT - GT.transpose()).cwiseAbs().maxCoeff();
}

/// Max-norm violation of g-skew-adjointness: G*T + (G*T)^T.
template <typename Scalar>
double skew_adjoint_violation(const InnerProductT<Scalar>& g,
                              const typename InnerProductT<Scalar>::Matrix& T) {
  typename InnerProductT<Scalar>::Matrix GT = g.gram() * T;
  return (GT + GT.transpose()).cwiseAbs().maxCoeff();
}

template <typename Scalar>
double adjoint_scale(const InnerProductT<Scalar>& g,
                     const typename InnerProductT<Scalar>::Matrix& T) {
  const double s = (g.gram() * T).cwiseAbs().maxCoeff();
  return s > 1.0 ? s : 1.0;
}

}  // namespace weylspectra
