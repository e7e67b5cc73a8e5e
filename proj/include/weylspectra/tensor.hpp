#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <weylspectra/inner_product.hpp>

namespace weylspectra {

/// Dense (0,4) algebraic curvature tensor over an inner-product space.
/// Storage is all m^4 components; validity (pair symmetry, antisymmetry,
/// first Bianchi) is report-style via validate(), never enforced on write,
/// so perturbed fixtures and partially-loaded data stay representable.
template <typename Scalar>
class CurvatureTensorT {
 public:
  using Vector = typename InnerProductT<Scalar>::Vector;

  explicit CurvatureTensorT(InnerProductT<Scalar> space)
      : space_(std::move(space)),
        m_(space_.dim()),
        c_(static_cast<std::size_t>(m_) * m_ * m_ * m_, Scalar(0)) {}

  int dim() const { return m_; }
  const InnerProductT<Scalar>& space() const { return space_; }

  Scalar operator()(int i, int j, int k, int l) const { return c_[idx(i, j, k, l)]; }
  Scalar& at(int i, int j, int k, int l) { return c_[idx(i, j, k, l)]; }

  /// Multilinear evaluation A(x,y,z,w).
  Scalar value(const Vector& x, const Vector& y, const Vector& z, const Vector& w) const {
    Scalar acc(0);
    for (int i = 0; i < m_; ++i) {
      if (x[i] == Scalar(0)) continue;
      for (int j = 0; j < m_; ++j) {
        if (y[j] == Scalar(0)) continue;
        for (int k = 0; k < m_; ++k) {
          if (z[k] == Scalar(0)) continue;
          for (int l = 0; l < m_; ++l)
            acc += x[i] * y[j] * z[k] * w[l] * (*this)(i, j, k, l);
        }
      }
    }
    return acc;
  }

  double max_abs() const {
    double s = 0.0;
    for (const auto& v : c_) s = std::max(s, std::abs(v));
    return s;
  }

  CurvatureTensorT& operator+=(const CurvatureTensorT& o) {
    require_same_space(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  CurvatureTensorT& operator-=(const CurvatureTensorT& o) {
    require_same_space(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  CurvatureTensorT& operator*=(Scalar s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  friend CurvatureTensorT operator+(CurvatureTensorT a, const CurvatureTensorT& b) { return a += b; }
  friend CurvatureTensorT operator-(CurvatureTensorT a, const CurvatureTensorT& b) { return a -= b; }
  friend CurvatureTensorT operator*(CurvatureTensorT a, Scalar s) { return a *= s; }
  friend CurvatureTensorT operator*(Scalar s, CurvatureTensorT a) { return a *= s; }

 private:
  std::size_t idx(int i, int j, int k, int l) const {
    if (static_cast<unsigned>(i) >= static_cast<unsigned>(m_) ||
        static_cast<unsigned>(j) >= static_cast<unsigned>(m_) ||
        static_cast<unsigned>(k) >= static_cast<unsigned>(m_) ||
        static_cast<unsigned>(l) >= static_cast<unsigned>(m_))
      throw InvalidArgument("tensor index out of range");
    return ((static_cast<std::size_t>(i) * m_ + j) * m_ + k) * m_ + l;
  }

  void require_same_space(const CurvatureTensorT& o) const {
    if (o.m_ != m_ || !(o.space_.signature() == space_.signature()))
      throw InvalidArgument("tensors live on different spaces");
    if ((o.space_.gram() - space_.gram()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + space_.gram().cwiseAbs().maxCoeff()))
      throw InvalidArgument("tensors live on different spaces");
  }

  InnerProductT<Scalar> space_;
  int m_;
  std::vector<Scalar> c_;
};

using CurvatureTensor = CurvatureTensorT<double>;
using ComplexCurvatureTensor = CurvatureTensorT<std::complex<double>>;

/// Maximum violation of each curvature symmetry over all index tuples.
struct SymmetryReport {
  double pair_symmetry = 0.0;   // |A_ijkl - A_klij|
  double antisymmetry = 0.0;    // |A_ijkl + A_jikl| and |A_ijkl + A_ijlk|
  double first_bianchi = 0.0;   // |A_ijkl + A_jkil + A_kijl|

  double max_violation() const {
    return std::max(pair_symmetry, std::max(antisymmetry, first_bianchi));
  }
  bool passes(double tol = 1e-10) const { return max_violation() < tol; }
};

template <typename Scalar>
SymmetryReport validate(const CurvatureTensorT<Scalar>& A) {
  SymmetryReport r;
  const int m = A.dim();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          const Scalar v = A(i, j, k, l);
          r.pair_symmetry = std::max(r.pair_symmetry, std::abs(v - A(k, l, i, j)));
          r.antisymmetry = std::max(r.antisymmetry, std::abs(v + A(j, i, k, l)));
          r.antisymmetry = std::max(r.antisymmetry, std::abs(v + A(i, j, l, k)));
          r.first_bianchi = std::max(
              r.first_bianchi, std::abs(v + A(j, k, i, l) + A(k, i, j, l)));
        }
  return r;
}

}  // namespace weylspectra
