#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <weylspectra/jet.hpp>
#include <weylspectra/polynomial.hpp>

namespace weylspectra {

/// Type-erased scalar field evaluable both on plain coordinates and on
/// second-order jets (for exact derivatives through the metric engine).
class ScalarField {
 public:
  /// F must be callable as T(const std::vector<T>&) for T in {double, Jet2}.
  template <typename F>
  static ScalarField from_functor(std::string name, int arity, F f) {
    ScalarField s;
    s.name_ = std::move(name);
    s.arity_ = arity;
    s.fd_ = [f](const std::vector<double>& x) { return f(x); };
    s.fj_ = [f](const std::vector<Jet2>& x) { return f(x); };
    return s;
  }

  static ScalarField from_polynomial(std::string name, Polynomial p) {
    const int arity = p.nvars();
    return from_functor(std::move(name), arity,
                        [p]<typename T>(const std::vector<T>& x) { return p(x); });
  }

  const std::string& name() const { return name_; }
  int arity() const { return arity_; }

  double operator()(const std::vector<double>& x) const {
    check(x.size());
    return fd_(x);
  }
  Jet2 operator()(const std::vector<Jet2>& x) const {
    check(x.size());
    return fj_(x);
  }

 private:
  void check(std::size_t n) const {
    if (static_cast<int>(n) != arity_)
      throw InvalidArgument("scalar field argument count mismatch");
  }

  std::string name_;
  int arity_ = 0;
  std::function<double(const std::vector<double>&)> fd_;
  std::function<Jet2(const std::vector<Jet2>&)> fj_;
};

}  // namespace weylspectra
