#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

#include <weylspectra/inner_product.hpp>
#include <weylspectra/rank.hpp>

using namespace weylspectra;

TEST_CASE("signature basics") {
  Signature s(2, 3);
  CHECK(s.dim() == 5);
  CHECK(!s.riemannian());
  CHECK(!s.lorentzian());
  CHECK(Signature::euclidean(4).riemannian());
  CHECK(Signature(1, 3).lorentzian());
  CHECK(Signature::neutral(2) == Signature(2, 2));
  CHECK_THROWS_AS(Signature(-1, 4), InvalidArgument);
  CHECK_THROWS_AS(Signature(1, 1), InvalidArgument);
}

TEST_CASE("standard inner product") {
  auto g = InnerProduct::standard(Signature(1, 2));
  CHECK(g.dim() == 3);
  CHECK(g.gram()(0, 0) == -1.0);
  CHECK(g.gram()(1, 1) == 1.0);
  CHECK(g.gram()(2, 2) == 1.0);
  CHECK((g.gram() * g.gram_inverse() - Eigen::MatrixXd::Identity(3, 3))
            .cwiseAbs()
            .maxCoeff() < 1e-14);

  Eigen::VectorXd x(3), y(3);
  x << 1, 2, 0;
  y << 3, 1, 4;
  // -1*3 + 2*1 + 0*4
  CHECK(g.inner(x, y) == Catch::Approx(-1.0));
  CHECK(g.inner(x, y) == Catch::Approx(g.inner(y, x)));

  Eigen::VectorXd bad(4);
  bad.setOnes();
  CHECK_THROWS_AS(g.inner(x, bad), InvalidArgument);
}

TEST_CASE("inner product is bilinear") {
  auto g = InnerProduct::standard(Signature(2, 2));
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int t = 0; t < 20; ++t) {
    Eigen::VectorXd x = Eigen::VectorXd::NullaryExpr(4, [&](int) { return u(rng); });
    Eigen::VectorXd y = Eigen::VectorXd::NullaryExpr(4, [&](int) { return u(rng); });
    Eigen::VectorXd z = Eigen::VectorXd::NullaryExpr(4, [&](int) { return u(rng); });
    const double a = u(rng);
    CHECK(g.inner(x, a * y + z) ==
          Catch::Approx(a * g.inner(x, y) + g.inner(x, z)).margin(1e-12));
  }
}

TEST_CASE("gram validation") {
  SECTION("asymmetric gram rejected") {
    Eigen::MatrixXd G = Eigen::MatrixXd::Identity(3, 3);
    G(0, 1) = 0.5;
    CHECK_THROWS_AS(InnerProduct(G, Signature(0, 3)), InvalidArgument);
  }
  SECTION("wrong dimension rejected") {
    Eigen::MatrixXd G = Eigen::MatrixXd::Identity(4, 4);
    CHECK_THROWS_AS(InnerProduct(G, Signature(0, 3)), InvalidArgument);
  }
  SECTION("wrong signature rejected") {
    Eigen::MatrixXd G = Eigen::MatrixXd::Identity(3, 3);
    G(0, 0) = -1.0;
    CHECK_THROWS_AS(InnerProduct(G, Signature(0, 3)), InvalidArgument);
    CHECK_NOTHROW(InnerProduct(G, Signature(1, 2)));
  }
  SECTION("degenerate gram rejected") {
    Eigen::MatrixXd G = Eigen::MatrixXd::Identity(3, 3);
    G(2, 2) = 0.0;
    CHECK_THROWS_AS(InnerProduct(G, Signature(0, 3)), InvalidArgument);
  }
  SECTION("non-diagonal gram accepted with correct counts") {
    // Off-diagonal neutral plane plus a spacelike line: eigenvalues -1, 1, 1.
    Eigen::MatrixXd G(3, 3);
    G << 0, 1, 0,
         1, 0, 0,
         0, 0, 1;
    InnerProduct g(G, Signature(1, 2));
    Eigen::VectorXd e0 = Eigen::VectorXd::Unit(3, 0);
    Eigen::VectorXd e1 = Eigen::VectorXd::Unit(3, 1);
    CHECK(g.inner(e0, e0) == 0.0);
    CHECK(g.inner(e0, e1) == 1.0);
  }
}

TEST_CASE("causal classification") {
  auto g = InnerProduct::standard(Signature(1, 2));
  Eigen::VectorXd t = Eigen::VectorXd::Unit(3, 0);
  Eigen::VectorXd s = Eigen::VectorXd::Unit(3, 1);
  CHECK(causal_type(g, t) == CausalType::Timelike);
  CHECK(causal_type(g, s) == CausalType::Spacelike);
  CHECK(causal_type(g, t + s) == CausalType::Null);
  // Inside the null band.
  CHECK(causal_type(g, t + (1.0 + 1e-12) * s, 1e-9) == CausalType::Null);
  CHECK(causal_type(g, 2.0 * t + s) == CausalType::Timelike);
  CHECK_THROWS_AS(causal_type(g, Eigen::VectorXd::Zero(3)), InvalidArgument);
  CHECK(std::string(to_string(CausalType::Null)) == "null");
}

TEST_CASE("adjointness violations") {
  auto g = InnerProduct::standard(Signature(1, 2));
  SECTION("g-self-adjoint operator") {
    // G*T symmetric: T = G^{-1} * S for symmetric S.
    Eigen::MatrixXd S(3, 3);
    S << 2, 1, 0,
         1, -1, 3,
         0, 3, 5;
    Eigen::MatrixXd T = g.gram_inverse() * S;
    CHECK(self_adjoint_violation(g, T) < 1e-12);
    CHECK(skew_adjoint_violation(g, T) > 1.0);
  }
  SECTION("g-skew-adjoint operator") {
    Eigen::MatrixXd K(3, 3);
    K << 0, 2, -1,
         -2, 0, 4,
         1, -4, 0;
    Eigen::MatrixXd T = g.gram_inverse() * K;
    CHECK(skew_adjoint_violation(g, T) < 1e-12);
    CHECK(self_adjoint_violation(g, T) > 1.0);
  }
  SECTION("euclidean symmetric is self-adjoint") {
    auto e = InnerProduct::euclidean(3);
    Eigen::MatrixXd S(3, 3);
    S << 1, 2, 3,
         2, 4, 5,
         3, 5, 6;
    CHECK(self_adjoint_violation(e, S) == 0.0);
    CHECK(adjoint_scale(e, S) == 6.0);
  }
}

TEST_CASE("complex bilinear extension") {
  using C = std::complex<double>;
  Eigen::MatrixXcd G = Eigen::MatrixXcd::Identity(3, 3);
  ComplexInnerProduct g(G, Signature(0, 3));
  Eigen::VectorXcd v(3);
  v << C(0, 1), C(1, 0), C(0, 0);
  // Bilinear, not Hermitian: (i)^2 + 1 = 0.
  CHECK(std::abs(g.inner(v, v)) < 1e-15);
}

TEST_CASE("numerical rank") {
  Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(4, 4);
  CHECK(rank_tol(Z) == 0);
  CHECK(rank_tol(Eigen::MatrixXd(Eigen::MatrixXd::Identity(4, 4))) == 4);

  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(4, 4);
  M(0, 0) = 1.0;
  M(1, 1) = 1e-3;
  M(2, 2) = 1e-12;
  CHECK(rank_tol(M, 1e-8) == 2);
  CHECK(rank_tol(M, 1e-13) == 3);

  // Rank-one outer product.
  Eigen::VectorXd a(3), b(3);
  a << 1, 2, 3;
  b << -1, 0, 2;
  CHECK(rank_tol(Eigen::MatrixXd(a * b.transpose())) == 1);

  CHECK_THROWS_AS(rank_tol(Z, 0.0), InvalidArgument);
  CHECK_THROWS_AS(rank_tol(Z, -1.0), InvalidArgument);
}
