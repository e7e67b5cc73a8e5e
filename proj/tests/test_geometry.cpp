#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include <weylspectra/builders.hpp>
#include <weylspectra/families.hpp>
#include <weylspectra/point_frame.hpp>

#include "fd_oracle.hpp"

using namespace weylspectra;

namespace {

fd_oracle::Field as_field(const MetricField& g) {
  return [g](const Eigen::VectorXd& x) { return g.gram_at(x); };
}

double tensor_distance(const CurvatureTensor& A, const CurvatureTensor& B) {
  const int m = A.dim();
  double d = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          d = std::max(d, std::abs(A(i, j, k, l) - B(i, j, k, l)));
  return d;
}

std::vector<Eigen::VectorXd> test_points(int m, double box, int n) {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> u(-box, box);
  std::vector<Eigen::VectorXd> out;
  for (int t = 0; t < n; ++t)
    out.push_back(Eigen::VectorXd::NullaryExpr(m, [&](int) { return u(rng); }));
  return out;
}

void cross_check_against_fd(const MetricField& g, const Eigen::VectorXd& P,
                            double tol = 1e-6) {
  auto field = as_field(g);
  const int m = g.dim();
  auto frame = frame_at(g, P);

  auto fd_gamma = fd_oracle::christoffel(field, P);
  double gscale = 1.0;
  for (int k = 0; k < m; ++k)
    gscale = std::max(gscale, fd_gamma[k].cwiseAbs().maxCoeff());
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        CHECK(frame.christoffel(k, i, j) ==
              Catch::Approx(fd_gamma[k](i, j)).margin(tol * gscale));

  const double rscale = std::max(1.0, frame.riemann.max_abs());
  // Full component sweeps are O(m^4) FD stencils; a fixed index sample keeps
  // the oracle cross-check meaningful and the suite fast.
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<int> pick(0, m - 1);
  for (int t = 0; t < 12; ++t) {
    const int i = pick(rng), k = pick(rng), l = pick(rng), w = pick(rng);
    CHECK(frame.riemann(i, k, l, w) ==
          Catch::Approx(fd_oracle::riemann_component(field, P, i, k, l, w))
              .margin(tol * rscale));
  }
}

}  // namespace

TEST_CASE("flat metric has vanishing connection and curvature") {
  auto g = flat_metric(4);
  for (const auto& P : test_points(4, 1.0, 3)) {
    auto frame = frame_at(g, P);
    CHECK(frame.christoffel.max_abs() == 0.0);
    CHECK(frame.riemann.max_abs() == 0.0);
    CHECK(frame.weyl.max_abs() == 0.0);
    CHECK(frame.space.signature().riemannian());
  }
}

TEST_CASE("conformally flat christoffels match the hand formula") {
  // g = e^{2 x1} delta on R^3: Gamma^k_ij = d_i s d^k_j + d_j s d^k_i
  // - delta_ij d^k s with s = x1.
  auto alpha = ScalarField::from_functor("exp_2x1", 3, []<typename T>(const std::vector<T>& x) {
    using std::exp;
    return exp(2.0 * x[0]);
  });
  auto g = rescale_field(flat_metric(3), alpha);
  Eigen::VectorXd P(3);
  P << 0.3, -0.8, 0.5;
  auto gamma = christoffel_at(g, P);
  CHECK(gamma(0, 0, 0) == Catch::Approx(1.0));
  CHECK(gamma(0, 1, 1) == Catch::Approx(-1.0));
  CHECK(gamma(0, 2, 2) == Catch::Approx(-1.0));
  CHECK(gamma(1, 0, 1) == Catch::Approx(1.0));
  CHECK(gamma(1, 1, 0) == Catch::Approx(1.0));
  CHECK(gamma(2, 0, 2) == Catch::Approx(1.0));
  CHECK(gamma(0, 0, 1) == Catch::Approx(0.0).margin(1e-13));
  CHECK(gamma(1, 1, 1) == Catch::Approx(0.0).margin(1e-13));
}

TEST_CASE("constant curvature model matches the algebraic builder") {
  for (double K : {1.0, -1.0}) {
    auto g = constant_curvature_model(3, K);
    for (const auto& P : test_points(3, 0.3 * g.point_box(), 3)) {
      auto frame = frame_at(g, P);
      auto model = constant_curvature_tensor(frame.space, K);
      CHECK(tensor_distance(frame.riemann, model) <
            1e-8 * std::max(1.0, model.max_abs()));
      CHECK(frame.weyl.max_abs() < 1e-8 * std::max(1.0, model.max_abs()));
    }
  }
}

TEST_CASE("jet geometry agrees with the finite-difference oracle") {
  SECTION("conformally flat") {
    auto g = constant_curvature_model(3, 0.7);
    Eigen::VectorXd P(3);
    P << 0.4, -0.2, 0.6;
    cross_check_against_fd(g, P);
  }
  SECTION("neutral polynomial family") {
    auto g = parse_family("gf:p=2,f=expr:x1^2*x2 + x2^3");
    Eigen::VectorXd P(4);
    P << 0.5, -0.7, 0.2, 0.9;
    cross_check_against_fd(g, P);
  }
  SECTION("higher-signature family") {
    auto g = parse_family("gF:s=2,f=quartic");
    Eigen::VectorXd P(6);
    P << 0.8, -0.3, 0.4, 0.1, -0.6, 0.2;
    cross_check_against_fd(g, P);
  }
  SECTION("rescaled base") {
    auto g = parse_family("rescale:alpha=exp_x1,base=(gf:p=2,f=sum_sq)");
    Eigen::VectorXd P(4);
    P << 0.3, 0.2, -0.4, 0.6;
    cross_check_against_fd(g, P);
  }
}

TEST_CASE("neutral family gram structure") {
  auto f = Polynomial::parse("x1^2 + x2^2 + x3^2", 3);
  auto g = family_gf(3, f);
  CHECK(g.dim() == 6);
  CHECK(g.signature() == Signature(3, 3));
  Eigen::VectorXd P(6);
  P << 0.5, -1.0, 0.25, 2.0, 0.0, -0.5;
  Eigen::MatrixXd G = g.gram_at(P);
  // dx-dx block is (grad f)(grad f)^T, dx-dy is the identity, dy-dy is zero.
  Eigen::Vector3d df(2 * 0.5, 2 * -1.0, 2 * 0.25);
  CHECK((G.topLeftCorner(3, 3) - df * df.transpose()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((G.topRightCorner(3, 3) - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);
  CHECK(G.bottomRightCorner(3, 3).cwiseAbs().maxCoeff() == 0.0);
  CHECK((G - G.transpose()).cwiseAbs().maxCoeff() == 0.0);

  for (const auto& P2 : test_points(6, 1.0, 4)) {
    auto frame = frame_at(g, P2);
    CHECK(ricci(frame.riemann).cwiseAbs().maxCoeff() <
          1e-9 * std::max(1.0, frame.riemann.max_abs()));
    CHECK(tensor_distance(frame.weyl, frame.riemann) <
          1e-9 * std::max(1.0, frame.riemann.max_abs()));
  }

  CHECK_THROWS_AS(family_gf(1, Polynomial::parse("x1^2", 1)), InvalidArgument);
  CHECK_THROWS_AS(family_gf(3, Polynomial::parse("x1^2", 2)), InvalidArgument);
}

TEST_CASE("triple-block family gram structure") {
  auto g = parse_family("gF:s=2,f=quartic");
  CHECK(g.dim() == 6);
  CHECK(g.signature() == Signature(4, 2));
  Eigen::VectorXd P(6);
  P << 1.0, -0.5, 0.3, 0.7, 0.2, -0.1;
  Eigen::MatrixXd G = g.gram_at(P);
  // g(du_i, du_i) = -2 (F(u) + sum u_k t_k) with F = u1^4 + u2^4.
  const double a = std::pow(1.0, 4) + std::pow(-0.5, 4) + 1.0 * 0.3 + (-0.5) * 0.7;
  CHECK(G(0, 0) == Catch::Approx(-2 * a));
  CHECK(G(1, 1) == Catch::Approx(-2 * a));
  CHECK(G(0, 1) == 0.0);
  CHECK(G(0, 4) == 1.0);  // du_1 . dv_1
  CHECK(G(1, 5) == 1.0);
  CHECK(G(2, 2) == -1.0);  // dt-block
  CHECK(G(3, 3) == -1.0);
  CHECK(G(4, 4) == 0.0);

  for (const auto& P2 : test_points(6, 1.0, 4)) {
    auto frame = frame_at(g, P2);
    CHECK(ricci(frame.riemann).cwiseAbs().maxCoeff() <
          1e-9 * std::max(1.0, frame.riemann.max_abs()));
  }
}

TEST_CASE("conformal rescaling of fields") {
  auto base = parse_family("gf:p=2,f=sum_sq");
  auto g = parse_family("rescale:alpha=exp_x1,base=(gf:p=2,f=sum_sq)");
  Eigen::VectorXd P(4);
  P << 0.4, -0.3, 0.8, 0.1;
  CHECK((g.gram_at(P) - std::exp(0.4) * base.gram_at(P)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(g.signature() == base.signature());

  // Degeneracy candidates survive the rescaling wrapper.
  REQUIRE(base.hints());
  REQUIRE(g.hints());
  auto ip = g.inner_product_at(P);
  CHECK(g.hints()(P, ip).size() == base.hints()(P, ip).size());

  // A factor that goes non-positive inside the box throws at evaluation.
  auto bad = rescale_field(flat_metric(3),
                           ScalarField::from_polynomial("x1", Polynomial::parse("x1", 3)));
  Eigen::VectorXd Q(3);
  Q << -0.5, 0.0, 0.0;
  CHECK_THROWS_AS(bad.gram_at(Q), InvalidArgument);

  CHECK_THROWS_AS(
      rescale_field(flat_metric(3),
                    ScalarField::from_polynomial("x1", Polynomial::parse("x1", 4))),
      InvalidArgument);
}

TEST_CASE("family string parsing") {
  CHECK(parse_family("flat:m=5").dim() == 5);
  CHECK(parse_family("constcurv:K=-1,m=3").point_box() < 1.0);
  CHECK(parse_family("gf:p=3,f=sum_sq").name() == "gf:p=3,f=sum_sq");
  CHECK(parse_family("gf:p=3,f=indef").signature() == Signature(3, 3));
  CHECK(parse_family("gF:s=1,f=cubic").signature() == Signature(2, 1));
  CHECK(parse_family("rescale:alpha=one,base=(flat:m=3)").dim() == 3);
  CHECK(parse_family("rescale:alpha=expr:1/2x1^2+1,base=(flat:m=3)").dim() == 3);

  CHECK_THROWS_AS(parse_family("nope:m=3"), ParseError);
  CHECK_THROWS_AS(parse_family("gf:p=3"), ParseError);
  CHECK_THROWS_AS(parse_family("gf:p=x,f=sum_sq"), ParseError);
  CHECK_THROWS_AS(parse_family("gf:p=3,f=mystery"), ParseError);
  CHECK_THROWS_AS(parse_family("gF:s=0,f=quartic"), ParseError);
  CHECK_THROWS_AS(parse_family("rescale:alpha=exp_x1,base=flat:m=3"), ParseError);
  CHECK_THROWS_AS(parse_family("rescale:alpha=exp_x1,base=(flat:m=3"), ParseError);
  CHECK_THROWS_AS(parse_family("gf:p=3,f"), ParseError);
}

TEST_CASE("metric field evaluation guards") {
  auto g = flat_metric(3);
  CHECK_THROWS_AS(g.gram_at(Eigen::VectorXd::Zero(4)), InvalidArgument);
  CHECK_THROWS_AS(g.gram_jets_at(Eigen::VectorXd::Zero(2)), InvalidArgument);
  CHECK(g.inner_product_at(Eigen::VectorXd::Zero(3)).dim() == 3);

  // Jets carry the exact first metric derivatives.
  auto cc = constant_curvature_model(3, 1.0);
  Eigen::VectorXd P(3);
  P << 0.2, 0.1, -0.3;
  auto jets = cc.gram_jets_at(P);
  auto field = as_field(cc);
  auto d0 = fd_oracle::d1(field, P, 0);
  CHECK(jets[0].grad()[0] == Catch::Approx(d0(0, 0)).margin(1e-8));
  CHECK(jets[4].grad()[0] == Catch::Approx(d0(1, 1)).margin(1e-8));
}
