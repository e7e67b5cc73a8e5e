#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <functional>
#include <vector>

#include <weylspectra/jet.hpp>

using namespace weylspectra;

namespace {

// Second-order central differences of a scalar callable, as an oracle
// independent of the jet arithmetic.
double fd_grad(const std::function<double(const Eigen::VectorXd&)>& f,
               Eigen::VectorXd x, int i, double h = 1e-5) {
  x[i] += h;
  const double fp = f(x);
  x[i] -= 2 * h;
  const double fm = f(x);
  return (fp - fm) / (2 * h);
}

double fd_hess(const std::function<double(const Eigen::VectorXd&)>& f,
               Eigen::VectorXd x, int i, int j, double h = 1e-4) {
  if (i == j) {
    const double f0 = f(x);
    x[i] += h;
    const double fp = f(x);
    x[i] -= 2 * h;
    const double fm = f(x);
    return (fp - 2 * f0 + fm) / (h * h);
  }
  Eigen::VectorXd y = x;
  y[i] += h; y[j] += h;
  double s = f(y);
  y = x; y[i] += h; y[j] -= h;
  s -= f(y);
  y = x; y[i] -= h; y[j] += h;
  s -= f(y);
  y = x; y[i] -= h; y[j] -= h;
  s += f(y);
  return s / (4 * h * h);
}

void check_against_fd(const std::function<Jet2(const std::vector<Jet2>&)>& jf,
                      const std::function<double(const Eigen::VectorXd&)>& f,
                      const Eigen::VectorXd& x, double tol = 1e-6) {
  const int m = static_cast<int>(x.size());
  std::vector<Jet2> vars;
  for (int i = 0; i < m; ++i) vars.push_back(Jet2::variable(m, i, x[i]));
  const Jet2 j = jf(vars);
  CHECK(j.value() == Catch::Approx(f(x)).margin(1e-12));
  for (int i = 0; i < m; ++i) {
    CHECK(j.grad()[i] == Catch::Approx(fd_grad(f, x, i)).margin(tol));
    for (int k = 0; k <= i; ++k) {
      CHECK(j.hess()(i, k) == Catch::Approx(fd_hess(f, x, i, k)).margin(tol));
      CHECK(j.hess()(i, k) == Catch::Approx(j.hess()(k, i)).margin(1e-12));
    }
  }
}

}  // namespace

TEST_CASE("jet product has exact derivatives") {
  // f(x, y) = x * y at (3, 5).
  auto x = Jet2::variable(2, 0, 3.0);
  auto y = Jet2::variable(2, 1, 5.0);
  auto f = x * y;
  CHECK(f.value() == 15.0);
  CHECK(f.grad()[0] == 5.0);
  CHECK(f.grad()[1] == 3.0);
  CHECK(f.hess()(0, 0) == 0.0);
  CHECK(f.hess()(0, 1) == 1.0);
  CHECK(f.hess()(1, 0) == 1.0);
}

TEST_CASE("jet polynomial expression") {
  // f = x^2 y + 2x - 7 at (2, -1): value -7, fx = 2xy+2 = -2, fy = x^2 = 4,
  // fxx = 2y = -2, fxy = 2x = 4, fyy = 0.
  auto x = Jet2::variable(2, 0, 2.0);
  auto y = Jet2::variable(2, 1, -1.0);
  auto f = pow(x, 2) * y + 2.0 * x - 7.0;
  CHECK(f.value() == Catch::Approx(-7.0));
  CHECK(f.grad()[0] == Catch::Approx(-2.0));
  CHECK(f.grad()[1] == Catch::Approx(4.0));
  CHECK(f.hess()(0, 0) == Catch::Approx(-2.0));
  CHECK(f.hess()(0, 1) == Catch::Approx(4.0));
  CHECK(f.hess()(1, 1) == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("jet transcendental functions match finite differences") {
  Eigen::VectorXd x(3);
  x << 0.7, -0.3, 1.9;

  SECTION("exp of a quadratic") {
    check_against_fd(
        [](const std::vector<Jet2>& v) { return exp(v[0] * v[0] + v[1] * v[2]); },
        [](const Eigen::VectorXd& p) { return std::exp(p[0] * p[0] + p[1] * p[2]); },
        x);
  }
  SECTION("log sqrt combination") {
    check_against_fd(
        [](const std::vector<Jet2>& v) {
          return log(v[2] + 2.0) * sqrt(v[0] + v[2]);
        },
        [](const Eigen::VectorXd& p) {
          return std::log(p[2] + 2.0) * std::sqrt(p[0] + p[2]);
        },
        x);
  }
  SECTION("trig product") {
    check_against_fd(
        [](const std::vector<Jet2>& v) { return sin(v[0]) * cos(v[1] * v[2]); },
        [](const Eigen::VectorXd& p) {
          return std::sin(p[0]) * std::cos(p[1] * p[2]);
        },
        x);
  }
  SECTION("quotient") {
    check_against_fd(
        [](const std::vector<Jet2>& v) { return v[0] / (v[2] * v[2] + 1.0); },
        [](const Eigen::VectorXd& p) { return p[0] / (p[2] * p[2] + 1.0); },
        x);
  }
  SECTION("negative integer power") {
    check_against_fd(
        [](const std::vector<Jet2>& v) { return pow(v[2], -2); },
        [](const Eigen::VectorXd& p) { return std::pow(p[2], -2); },
        x);
  }
}

TEST_CASE("jet guards") {
  auto x = Jet2::variable(2, 0, 0.0);
  auto y = Jet2::variable(2, 1, -1.0);
  CHECK_THROWS_AS(1.0 / x, InvalidArgument);
  CHECK_THROWS_AS(y / x, InvalidArgument);
  CHECK_THROWS_AS(log(x), InvalidArgument);
  CHECK_THROWS_AS(log(y), InvalidArgument);
  CHECK_THROWS_AS(sqrt(y), InvalidArgument);
  CHECK_THROWS_AS(pow(x, -1), InvalidArgument);
  CHECK_THROWS_AS(Jet2::variable(2, 2, 0.0), InvalidArgument);
  CHECK_THROWS_AS(Jet2::variable(2, 0, 0.0) + Jet2::variable(3, 0, 0.0),
                  InvalidArgument);
}

TEST_CASE("jet constants") {
  auto c = Jet2::constant(3, 4.5);
  CHECK(c.value() == 4.5);
  CHECK(c.grad().cwiseAbs().maxCoeff() == 0.0);
  CHECK(c.hess().cwiseAbs().maxCoeff() == 0.0);
  CHECK(pow(c, 0).value() == 1.0);

  // constant_like dispatches on the prototype's type.
  CHECK(constant_like(2.0, 7.0) == 7.0);
  Jet2 k = constant_like(c, 7.0);
  CHECK(k.value() == 7.0);
  CHECK(k.dim() == 3);
}
