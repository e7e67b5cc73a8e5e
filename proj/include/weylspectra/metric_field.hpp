#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <weylspectra/inner_product.hpp>
#include <weylspectra/scalar_field.hpp>

namespace weylspectra {

/// A chart-level pseudo-Riemannian metric: a symmetric Gram matrix field over
/// R^m of a fixed declared signature.  The defining functor is evaluated both
/// on plain coordinates and on coordinate jets, so first and second metric
/// derivatives come out exactly (truncated Taylor arithmetic), with finite
/// differences kept only as an independent test oracle.
class MetricField {
 public:
  /// Family-published candidate directions at a chart point where operator
  /// fingerprints may degenerate (rank drops live on measure-zero sets, so
  /// random draws alone would never exhibit them).  Candidates are raw
  /// tangent vectors; probes normalize them against the passed inner product
  /// and keep those of the kind under test.
  using HintFn = std::function<std::vector<Eigen::VectorXd>(const Eigen::VectorXd&,
                                                            const InnerProduct&)>;

  /// F must be callable as std::vector<T>(const std::vector<T>&) for
  /// T in {double, Jet2}, returning the row-major m*m Gram entries.
  template <typename F>
  static MetricField from_functor(std::string name, Signature sig, double point_box, F f) {
    MetricField g(std::move(name), sig, point_box);
    g.fd_ = [f](const std::vector<double>& x) { return f(x); };
    g.fj_ = [f](const std::vector<Jet2>& x) { return f(x); };
    return g;
  }

  MetricField& with_hints(HintFn fn) {
    hints_ = std::move(fn);
    return *this;
  }

  const HintFn& hints() const { return hints_; }

  int dim() const { return sig_.dim(); }
  const Signature& signature() const { return sig_; }
  const std::string& name() const { return name_; }

  /// Recommended chart sampling radius (families with chart singularities
  /// shrink it below the default 1).
  double point_box() const { return point_box_; }

  Eigen::MatrixXd gram_at(const Eigen::VectorXd& point) const {
    const int m = dim();
    check_point(point);
    std::vector<double> x(point.data(), point.data() + m);
    const std::vector<double> vals = fd_(x);
    if (static_cast<int>(vals.size()) != m * m)
      throw InvalidArgument("metric functor returned wrong entry count");
    Eigen::MatrixXd G(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) G(i, j) = vals[i * m + j];
    return G;
  }

  /// Row-major m*m Gram entries as jets in the chart coordinates at point.
  std::vector<Jet2> gram_jets_at(const Eigen::VectorXd& point) const {
    const int m = dim();
    check_point(point);
    std::vector<Jet2> x;
    x.reserve(m);
    for (int i = 0; i < m; ++i) x.push_back(Jet2::variable(m, i, point[i]));
    std::vector<Jet2> vals = fj_(x);
    if (static_cast<int>(vals.size()) != m * m)
      throw InvalidArgument("metric functor returned wrong entry count");
    return vals;
  }

  /// Gram at the point as a checked inner product (throws if the metric is
  /// degenerate there or the signature does not match the declaration).
  InnerProduct inner_product_at(const Eigen::VectorXd& point) const {
    Eigen::MatrixXd G = gram_at(point);
    G = 0.5 * (G + G.transpose());  // symmetrize roundoff
    return InnerProduct(std::move(G), sig_);
  }

 private:
  MetricField(std::string name, Signature sig, double point_box)
      : name_(std::move(name)), sig_(sig), point_box_(point_box) {
    if (!(point_box_ > 0.0)) throw InvalidArgument("point box must be positive");
  }

  void check_point(const Eigen::VectorXd& point) const {
    if (point.size() != dim())
      throw InvalidArgument("point dimension does not match metric");
  }

  std::string name_;
  Signature sig_;
  double point_box_;
  std::function<std::vector<double>(const std::vector<double>&)> fd_;
  std::function<std::vector<Jet2>(const std::vector<Jet2>&)> fj_;
  HintFn hints_;
};

/// Pointwise conformal rescaling alpha * g.  alpha must be strictly positive
/// wherever evaluated; violations throw at evaluation time.
inline MetricField rescale_field(const MetricField& base, const ScalarField& alpha) {
  if (alpha.arity() != base.dim())
    throw InvalidArgument("conformal factor arity does not match metric dimension");
  const std::string name = "rescale:alpha=" + alpha.name() + ",base=(" + base.name() + ")";
  // Capture by value: MetricField is a self-contained value type.
  auto f = [base, alpha]<typename T>(const std::vector<T>& x) {
    T a = alpha(x);
    double value;
    if constexpr (std::is_same_v<T, Jet2>)
      value = a.value();
    else
      value = a;
    if (!(value > 0.0))
      throw InvalidArgument("conformal factor is not positive at the evaluation point");
    std::vector<T> vals = [&] {
      if constexpr (std::is_same_v<T, Jet2>) {
        Eigen::VectorXd p(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) p[static_cast<int>(i)] = x[i].value();
        return base.gram_jets_at(p);
      } else {
        Eigen::VectorXd p(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) p[static_cast<int>(i)] = x[i];
        Eigen::MatrixXd G = base.gram_at(p);
        return std::vector<double>(G.data(), G.data() + G.size());
      }
    }();
    for (auto& v : vals) v *= a;
    return vals;
  };
  MetricField out = MetricField::from_functor(name, base.signature(), base.point_box(), f);
  // Degeneracy candidates are structural; they survive conformal rescaling
  // because hint functions renormalize against whatever gram they are given.
  out.with_hints(base.hints());
  return out;
}

}  // namespace weylspectra
