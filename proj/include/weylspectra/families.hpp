#pragma once

#include <cctype>
#include <cmath>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <weylspectra/metric_field.hpp>
#include <weylspectra/polynomial.hpp>

namespace weylspectra {

/// Flat space: the standard definite metric on R^m.
inline MetricField flat_metric(int m) {
  if (m < 3) throw InvalidArgument("flat metric needs dimension >= 3");
  auto f = [m]<typename T>(const std::vector<T>& x) {
    std::vector<T> vals(static_cast<std::size_t>(m) * m, constant_like(x[0], 0.0));
    for (int i = 0; i < m; ++i) vals[i * m + i] = constant_like(x[0], 1.0);
    return vals;
  };
  return MetricField::from_functor("flat:m=" + std::to_string(m),
                                   Signature::euclidean(m), 1.0, f);
}

namespace detail {
inline double inverse_square(double v) { return 1.0 / (v * v); }
inline Jet2 inverse_square(const Jet2& v) {
  Jet2 iv = inverse(v);
  return iv * iv;
}
}  // namespace detail

/// Constant-curvature model g = 4 (1 + K |x|^2)^{-2} delta on R^m.  The
/// curvature tensor at every chart point equals K * (g wedge g), i.e. the
/// constant-curvature tensor with lambda = K.  For K < 0 the chart is
/// singular on |x|^2 = -1/K, so the recommended point box shrinks.
inline MetricField constant_curvature_model(int m, double K) {
  if (m < 3) throw InvalidArgument("constant-curvature model needs dimension >= 3");
  auto f = [m, K]<typename T>(const std::vector<T>& x) {
    T s = constant_like(x[0], 0.0);
    for (int i = 0; i < m; ++i) s += x[i] * x[i];
    T conf = 4.0 * detail::inverse_square(1.0 + K * s);
    std::vector<T> vals(static_cast<std::size_t>(m) * m, constant_like(x[0], 0.0));
    for (int i = 0; i < m; ++i) vals[i * m + i] = conf;
    return vals;
  };
  const double box = K < 0.0 ? 0.5 / std::sqrt(m * -K) : 1.0;
  std::string name = "constcurv:K=" + std::to_string(K) + ",m=" + std::to_string(m);
  return MetricField::from_functor(std::move(name), Signature::euclidean(m), box, f);
}

/// Neutral-signature family on R^{2p}, coordinates (x_1..x_p, y_1..y_p):
///   g(dx_i, dx_j) = d_i f * d_j f,   g(dx_i, dy_j) = delta_ij,
///   g(dy_i, dy_j) = 0,
/// with f a polynomial in the x-block only.  Ricci-flat; the conformal
/// Osserman/IP behaviour is controlled by the Hessian of f.
inline MetricField family_gf(int p, const Polynomial& f, std::string f_label = "") {
  if (p < 2) throw InvalidArgument("family gf needs p >= 2");
  if (f.nvars() != p)
    throw InvalidArgument("family gf needs f in exactly the p x-variables");
  std::vector<Polynomial> df;
  df.reserve(p);
  for (int i = 0; i < p; ++i) df.push_back(f.derivative(i));

  const int m = 2 * p;
  auto fn = [p, m, df]<typename T>(const std::vector<T>& coords) {
    const std::vector<T> x(coords.begin(), coords.begin() + p);
    std::vector<T> d;
    d.reserve(p);
    for (int i = 0; i < p; ++i) d.push_back(df[i](x));
    std::vector<T> vals(static_cast<std::size_t>(m) * m, constant_like(coords[0], 0.0));
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < p; ++j) vals[i * m + j] = d[i] * d[j];
      vals[i * m + (p + i)] = constant_like(coords[0], 1.0);
      vals[(p + i) * m + i] = constant_like(coords[0], 1.0);
    }
    return vals;
  };
  std::string name =
      "gf:p=" + std::to_string(p) + ",f=" + (f_label.empty() ? f.to_string() : f_label);
  MetricField out =
      MetricField::from_functor(std::move(name), Signature::neutral(p), 1.0, fn);
  // Degeneracy candidates: lifts of x-block directions e_i and e_i +- e_j
  // with the y-part solved so that g(x, x) lands exactly on +-1.  Jacobi
  // rank drops exactly where the Hessian form vanishes on the x-part, a
  // measure-zero cone random draws cannot hit.
  out.with_hints([p, m](const Eigen::VectorXd&, const InnerProduct& g) {
    std::vector<Eigen::VectorXd> hints;
    auto emit = [&](const Eigen::VectorXd& xbar) {
      Eigen::VectorXd u = Eigen::VectorXd::Zero(m), v = Eigen::VectorXd::Zero(m);
      u.head(p) = xbar;
      v.tail(p) = xbar;
      const double q = g.inner(u, u);
      const double cross = g.inner(u, v);
      if (std::abs(cross) < 1e-12) return;
      for (const double want : {1.0, -1.0})
        hints.push_back(u + ((want - q) / (2.0 * cross)) * v);
    };
    for (int i = 0; i < p; ++i) {
      Eigen::VectorXd e = Eigen::VectorXd::Unit(p, i);
      emit(e);
      for (int j = i + 1; j < p; ++j)
        for (const double s : {1.0, -1.0}) emit(e + s * Eigen::VectorXd::Unit(p, j));
    }
    return hints;
  });
  return out;
}

/// Signature (2s, s) family on R^{3s}, coordinates (u_1..u_s, t_1..t_s,
/// v_1..v_s):
///   g(du_i, du_j) = -2 delta_ij (F(u) + sum_k u_k t_k),
///   g(du_i, dv_j) = delta_ij,  g(dt_i, dt_j) = -delta_ij,  rest 0,
/// with F(u) = f_1(u_1) + ... + f_s(u_s).  Ricci-flat; Jacobi and
/// skew-symmetric curvature operators are nilpotent of order 3.
inline MetricField family_gF(int s, const std::vector<Polynomial>& fi,
                             std::string f_label = "") {
  if (s < 1) throw InvalidArgument("family gF needs s >= 1");
  if (static_cast<int>(fi.size()) != s)
    throw InvalidArgument("family gF needs one f_i per u-coordinate");
  for (const auto& f : fi)
    if (f.nvars() != 1) throw InvalidArgument("family gF needs single-variable f_i");

  const int m = 3 * s;
  auto fn = [s, m, fi]<typename T>(const std::vector<T>& c) {
    // F(u) + sum_k u_k t_k
    T a = constant_like(c[0], 0.0);
    for (int k = 0; k < s; ++k) {
      a += fi[k](std::vector<T>{c[k]});
      a += c[k] * c[s + k];
    }
    std::vector<T> vals(static_cast<std::size_t>(m) * m, constant_like(c[0], 0.0));
    const T uu = -2.0 * a;
    for (int i = 0; i < s; ++i) {
      vals[i * m + i] = uu;
      vals[i * m + (2 * s + i)] = constant_like(c[0], 1.0);
      vals[(2 * s + i) * m + i] = constant_like(c[0], 1.0);
      vals[(s + i) * m + (s + i)] = constant_like(c[0], -1.0);
    }
    return vals;
  };
  std::string label = f_label;
  if (label.empty()) {
    for (std::size_t i = 0; i < fi.size(); ++i)
      label += (i ? ";" : "") + fi[i].to_string();
  }
  std::string name = "gF:s=" + std::to_string(s) + ",f=" + label;
  MetricField out =
      MetricField::from_functor(std::move(name), Signature(2 * s, s), 1.0, fn);
  // Degeneracy candidates: the t-block directions (and their pairs), where
  // the Jacobi and skew operators collapse, plus u-directions with the
  // v-part solved so g(x, x) = +-1 exactly (these stay generic and guard
  // the spacelike claims against false alarms).
  out.with_hints([s, m](const Eigen::VectorXd&, const InnerProduct& g) {
    std::vector<Eigen::VectorXd> hints;
    for (int i = 0; i < s; ++i) {
      hints.push_back(Eigen::VectorXd::Unit(m, s + i));
      for (int j = i + 1; j < s; ++j)
        for (const double sg : {1.0, -1.0})
          hints.push_back(Eigen::VectorXd::Unit(m, s + i) +
                          sg * Eigen::VectorXd::Unit(m, s + j));
    }
    for (int i = 0; i < s; ++i) {
      const Eigen::VectorXd u = Eigen::VectorXd::Unit(m, i);
      const Eigen::VectorXd v = Eigen::VectorXd::Unit(m, 2 * s + i);
      const double q = g.inner(u, u);
      const double cross = g.inner(u, v);
      if (std::abs(cross) < 1e-12) continue;
      for (const double want : {1.0, -1.0})
        hints.push_back(u + ((want - q) / (2.0 * cross)) * v);
    }
    return hints;
  });
  return out;
}

namespace detail {

inline std::vector<std::pair<std::string, std::string>> split_params(std::string_view s) {
  std::vector<std::pair<std::string, std::string>> out;
  int depth = 0;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    const auto eq = cur.find('=');
    if (eq == std::string::npos) throw ParseError("family parameter without '=': " + cur);
    out.emplace_back(cur.substr(0, eq), cur.substr(eq + 1));
    cur.clear();
  };
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced ')' in family spec");
    if (c == ',' && depth == 0) {
      flush();
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) cur += c;
  }
  if (depth != 0) throw ParseError("unbalanced '(' in family spec");
  flush();
  return out;
}

inline int param_int(const std::string& v, const std::string& key) {
  try {
    std::size_t used = 0;
    const int n = std::stoi(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return n;
  } catch (const std::exception&) {
    throw ParseError("family parameter " + key + " is not an integer: " + v);
  }
}

inline double param_double(const std::string& v, const std::string& key) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ParseError("family parameter " + key + " is not a number: " + v);
  }
}

/// Named polynomial profiles for family f-parameters.
inline Polynomial named_gf_field(const std::string& name, int p) {
  if (name == "sum_sq") {
    std::vector<Polynomial::Monomial> terms;
    for (int i = 0; i < p; ++i) {
      std::vector<int> e(p, 0);
      e[i] = 2;
      terms.push_back({1.0, std::move(e)});
    }
    return Polynomial(p, std::move(terms));
  }
  if (name == "indef") {
    if (p < 2) throw ParseError("field 'indef' needs p >= 2");
    std::vector<Polynomial::Monomial> terms;
    for (int i = 0; i < p; ++i) {
      std::vector<int> e(p, 0);
      e[i] = 2;
      terms.push_back({i == 1 ? -1.0 : 1.0, std::move(e)});
    }
    return Polynomial(p, std::move(terms));
  }
  if (name.rfind("expr:", 0) == 0) return Polynomial::parse(name.substr(5), p);
  try {
    return Polynomial::parse(name, p);
  } catch (const ParseError&) {
    throw ParseError("unknown field '" + name +
                     "' (expected sum_sq, indef or expr:<polynomial>)");
  }
}

inline Polynomial named_gF_field(const std::string& name) {
  if (name == "quartic") return Polynomial::parse("x1^4", 1);
  if (name == "cubic") return Polynomial::parse("x1^3", 1);
  if (name.rfind("expr:", 0) == 0) return Polynomial::parse(name.substr(5), 1);
  try {
    return Polynomial::parse(name, 1);
  } catch (const ParseError&) {
    throw ParseError("unknown field '" + name +
                     "' (expected quartic, cubic or expr:<polynomial in x1>)");
  }
}

inline ScalarField named_conformal_factor(const std::string& name, int dim) {
  if (name == "exp_x1") {
    auto f = []<typename T>(const std::vector<T>& x) {
      using std::exp;
      return exp(x[0]);
    };
    return ScalarField::from_functor("exp_x1", dim, f);
  }
  if (name == "one") {
    auto f = []<typename T>(const std::vector<T>& x) { return constant_like(x[0], 1.0); };
    return ScalarField::from_functor("one", dim, f);
  }
  const std::string body = name.rfind("expr:", 0) == 0 ? name.substr(5) : name;
  try {
    Polynomial p = Polynomial::parse(body, dim);
    return ScalarField::from_polynomial(name, std::move(p));
  } catch (const ParseError&) {
    throw ParseError("unknown conformal factor '" + name +
                     "' (expected exp_x1, one or expr:<polynomial>)");
  }
}

}  // namespace detail

/// Parses a family specification string into a metric field.  Forms:
///   gf:p=3,f=sum_sq            gf:p=3,f=indef        gf:p=3,f=expr:x1^2*x2
///   gF:s=2,f=quartic           gF:s=2,f=expr:x1^3
///   constcurv:K=1,m=3          flat:m=4
///   rescale:alpha=exp_x1,base=(gf:p=3,f=sum_sq)
inline MetricField parse_family(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string head = std::string(spec.substr(0, colon));
  const auto params = colon == std::string_view::npos
                          ? std::vector<std::pair<std::string, std::string>>{}
                          : detail::split_params(spec.substr(colon + 1));
  auto get = [&](const std::string& key) -> const std::string* {
    for (const auto& [k, v] : params)
      if (k == key) return &v;
    return nullptr;
  };
  auto require = [&](const std::string& key) -> const std::string& {
    const std::string* v = get(key);
    if (!v) throw ParseError("family " + head + " needs parameter " + key);
    return *v;
  };

  if (head == "gf") {
    const int p = detail::param_int(require("p"), "p");
    if (p < 2) throw ParseError("family gf needs p >= 2");
    const std::string& fname = require("f");
    return family_gf(p, detail::named_gf_field(fname, p), fname);
  }
  if (head == "gF") {
    const int s = detail::param_int(require("s"), "s");
    if (s < 1) throw ParseError("family gF needs s >= 1");
    const std::string& fname = require("f");
    const Polynomial f = detail::named_gF_field(fname);
    return family_gF(s, std::vector<Polynomial>(s, f), fname);
  }
  if (head == "constcurv") {
    const double K = detail::param_double(require("K"), "K");
    const int m = detail::param_int(require("m"), "m");
    return constant_curvature_model(m, K);
  }
  if (head == "flat") {
    return flat_metric(detail::param_int(require("m"), "m"));
  }
  if (head == "rescale") {
    const std::string& base_spec = require("base");
    if (base_spec.size() < 2 || base_spec.front() != '(' || base_spec.back() != ')')
      throw ParseError("rescale base must be parenthesized: base=(<family>)");
    MetricField base = parse_family(std::string_view(base_spec).substr(1, base_spec.size() - 2));
    ScalarField alpha = detail::named_conformal_factor(require("alpha"), base.dim());
    return rescale_field(base, alpha);
  }
  throw ParseError("unknown family '" + head +
                   "' (expected gf, gF, constcurv, flat or rescale)");
}

}  // namespace weylspectra
