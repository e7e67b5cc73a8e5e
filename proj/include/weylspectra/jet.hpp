#pragma once

#include <Eigen/Dense>
#include <cmath>

#include <weylspectra/errors.hpp>

namespace weylspectra {

/// Second-order forward-mode jet: value, gradient and (symmetric) Hessian of
/// a scalar expression with respect to m chart coordinates.  Arithmetic is
/// truncated Taylor arithmetic, so evaluating a closed-form expression on
/// coordinate jets yields its exact first and second partials up to roundoff.
class Jet2 {
 public:
  Jet2() : value_(0.0) {}

  static Jet2 constant(int dim, double c) {
    Jet2 j;
    j.value_ = c;
    j.grad_ = Eigen::VectorXd::Zero(dim);
    j.hess_ = Eigen::MatrixXd::Zero(dim, dim);
    return j;
  }

  /// The i-th coordinate function evaluated at x_i = value.
  static Jet2 variable(int dim, int i, double value) {
    if (i < 0 || i >= dim) throw InvalidArgument("jet variable index out of range");
    Jet2 j = constant(dim, value);
    j.grad_[i] = 1.0;
    return j;
  }

  int dim() const { return static_cast<int>(grad_.size()); }
  double value() const { return value_; }
  const Eigen::VectorXd& grad() const { return grad_; }
  const Eigen::MatrixXd& hess() const { return hess_; }

  Jet2 operator-() const {
    Jet2 r(*this);
    r.value_ = -r.value_;
    r.grad_ = -r.grad_;
    r.hess_ = -r.hess_;
    return r;
  }

  Jet2& operator+=(const Jet2& o) {
    check(o);
    value_ += o.value_;
    grad_ += o.grad_;
    hess_ += o.hess_;
    return *this;
  }
  Jet2& operator-=(const Jet2& o) {
    check(o);
    value_ -= o.value_;
    grad_ -= o.grad_;
    hess_ -= o.hess_;
    return *this;
  }
  Jet2& operator*=(const Jet2& o) {
    check(o);
    Eigen::MatrixXd h = value_ * o.hess_ + o.value_ * hess_ +
                        grad_ * o.grad_.transpose() + o.grad_ * grad_.transpose();
    grad_ = value_ * o.grad_ + o.value_ * grad_;
    value_ *= o.value_;
    hess_ = std::move(h);
    return *this;
  }

  Jet2& operator+=(double c) { value_ += c; return *this; }
  Jet2& operator-=(double c) { value_ -= c; return *this; }
  Jet2& operator*=(double c) {
    value_ *= c;
    grad_ *= c;
    hess_ *= c;
    return *this;
  }
  Jet2& operator/=(double c) { return *this *= 1.0 / c; }

  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
  friend Jet2 operator*(Jet2 a, const Jet2& b) { return a *= b; }
  friend Jet2 operator+(Jet2 a, double c) { return a += c; }
  friend Jet2 operator+(double c, Jet2 a) { return a += c; }
  friend Jet2 operator-(Jet2 a, double c) { return a -= c; }
  friend Jet2 operator-(double c, const Jet2& a) { return -a + c; }
  friend Jet2 operator*(Jet2 a, double c) { return a *= c; }
  friend Jet2 operator*(double c, Jet2 a) { return a *= c; }
  friend Jet2 operator/(Jet2 a, double c) { return a /= c; }

  /// Chain rule for a scalar function with known value and first two
  /// derivatives at this jet's value.
  friend Jet2 compose(const Jet2& u, double f, double fp, double fpp) {
    Jet2 r;
    r.value_ = f;
    r.grad_ = fp * u.grad_;
    r.hess_ = fp * u.hess_ + fpp * (u.grad_ * u.grad_.transpose());
    return r;
  }

  friend Jet2 inverse(const Jet2& u) {
    if (u.value_ == 0.0) throw InvalidArgument("division by zero-value jet");
    const double v = 1.0 / u.value_;
    return compose(u, v, -v * v, 2.0 * v * v * v);
  }

  friend Jet2 operator/(const Jet2& a, const Jet2& b) { return a * inverse(b); }
  friend Jet2 operator/(double c, const Jet2& b) { return inverse(b) * c; }

 private:
  void check(const Jet2& o) const {
    if (o.dim() != dim()) throw InvalidArgument("jet dimension mismatch");
  }

  double value_;
  Eigen::VectorXd grad_;
  Eigen::MatrixXd hess_;
};

inline Jet2 exp(const Jet2& u) {
  const double e = std::exp(u.value());
  return compose(u, e, e, e);
}

inline Jet2 log(const Jet2& u) {
  if (!(u.value() > 0.0)) throw InvalidArgument("log of non-positive jet");
  const double v = 1.0 / u.value();
  return compose(u, std::log(u.value()), v, -v * v);
}

inline Jet2 sqrt(const Jet2& u) {
  if (!(u.value() > 0.0)) throw InvalidArgument("sqrt of non-positive jet");
  const double s = std::sqrt(u.value());
  return compose(u, s, 0.5 / s, -0.25 / (s * u.value()));
}

inline Jet2 sin(const Jet2& u) {
  return compose(u, std::sin(u.value()), std::cos(u.value()), -std::sin(u.value()));
}

inline Jet2 cos(const Jet2& u) {
  return compose(u, std::cos(u.value()), -std::sin(u.value()), -std::cos(u.value()));
}

/// Integer power; exponent may be negative if the value is non-zero.
inline Jet2 pow(const Jet2& u, int n) {
  if (n == 0) return Jet2::constant(u.dim(), 1.0);
  if (n == 1) return u;
  if (n < 0) return pow(inverse(u), -n);
  const double v = u.value();
  const double f = std::pow(v, n);
  const double fp = n * std::pow(v, n - 1);
  const double fpp = n > 1 ? double(n) * (n - 1) * std::pow(v, n - 2) : 0.0;
  return compose(u, f, fp, fpp);
}

/// Uniform "constant like this scalar" helper for code generic over
/// double and Jet2.
inline double constant_like(const double&, double c) { return c; }
inline Jet2 constant_like(const Jet2& proto, double c) {
  return Jet2::constant(proto.dim(), c);
}

inline double pow(double v, int n) { return std::pow(v, n); }

}  // namespace weylspectra
