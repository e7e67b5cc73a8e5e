#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include <weylspectra/builders.hpp>
#include <weylspectra/contractions.hpp>
#include <weylspectra/operators.hpp>
#include <weylspectra/random_gen.hpp>
#include <weylspectra/rank.hpp>
#include <weylspectra/sampling.hpp>

using namespace weylspectra;

TEST_CASE("jacobi operator of a generator tensor has the closed form") {
  // J(x)y = g(phi x, x) phi y - g(phi x, y) phi x.
  std::mt19937_64 rng(7);
  for (Signature sig : {Signature(0, 4), Signature(1, 3), Signature(2, 2)}) {
    auto g = random_inner_product(rng, sig);
    Eigen::MatrixXd phi = random_self_adjoint(rng, g);
    auto A = a_phi_tensor(g, phi);
    std::normal_distribution<double> nd(0.0, 1.0);
    for (int t = 0; t < 5; ++t) {
      Eigen::VectorXd x(4), y(4);
      for (int i = 0; i < 4; ++i) { x[i] = nd(rng); y[i] = nd(rng); }
      Eigen::VectorXd lhs = jacobi_matrix(A, x) * y;
      Eigen::VectorXd px = phi * x;
      Eigen::VectorXd rhs = g.inner(px, x) * (phi * y) - g.inner(px, y) * px;
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() <
            1e-10 * (1.0 + rhs.cwiseAbs().maxCoeff()));
    }
  }
}

TEST_CASE("jacobi operator generic identities") {
  std::mt19937_64 rng(13);
  auto g = random_inner_product(rng, Signature(1, 3));
  auto A = random_curvature_tensor(rng, g);
  std::normal_distribution<double> nd(0.0, 1.0);
  for (int t = 0; t < 8; ++t) {
    Eigen::VectorXd x(4), y(4);
    for (int i = 0; i < 4; ++i) { x[i] = nd(rng); y[i] = nd(rng); }
    Eigen::MatrixXd J = jacobi_matrix(A, x);
    const double scale = 1.0 + J.cwiseAbs().maxCoeff();

    // Kills its own direction, is g-self-adjoint, range misses x.
    CHECK((J * x).cwiseAbs().maxCoeff() < 1e-10 * scale);
    CHECK(self_adjoint_violation(g, J) < 1e-10 * adjoint_scale(g, J));
    CHECK(std::abs(g.inner(x, J * y)) < 1e-9 * scale * (1.0 + y.norm() * x.norm()));

    // Trace contracts to the ricci form.
    CHECK(J.trace() == Catch::Approx(x.dot(ricci(A) * x)).margin(1e-9 * scale));

    // Quadratic in x.
    CHECK((jacobi_matrix(A, Eigen::VectorXd(2.0 * x)) - 4.0 * J)
              .cwiseAbs()
              .maxCoeff() < 1e-10 * scale);
  }
  CHECK_THROWS_AS(jacobi_matrix(A, Eigen::VectorXd::Zero(5)), InvalidArgument);
}

TEST_CASE("trace-free part has trace-free jacobi operators") {
  std::mt19937_64 rng(19);
  for (int m : {3, 5, 6}) {
    auto g = random_inner_product(rng, Signature(1, m - 1));
    auto W = weyl_projection(random_curvature_tensor(rng, g));
    std::normal_distribution<double> nd(0.0, 1.0);
    for (int t = 0; t < 4; ++t) {
      Eigen::VectorXd x = Eigen::VectorXd::NullaryExpr(m, [&](int) { return nd(rng); });
      CHECK(std::abs(jacobi_matrix(W, x).trace()) <
            1e-10 * (1.0 + W.max_abs()) * x.squaredNorm());
    }
  }
}

TEST_CASE("constant curvature jacobi spectrum") {
  // J(x) = lambda (g(x,x) Id - x g(x,.)): eigenvalue lambda*g(x,x) on x-perp.
  auto g = InnerProduct::standard(Signature(1, 2));
  const double lam = 2.0;
  auto A = constant_curvature_tensor(g, lam);
  Eigen::VectorXd x(3);
  x << 0.3, 1.2, -0.4;  // spacelike
  const double xx = g.inner(x, x);
  Eigen::MatrixXd J = jacobi_matrix(A, x);
  Eigen::MatrixXd expected =
      lam * (xx * Eigen::MatrixXd::Identity(3, 3) - x * (g.gram() * x).transpose());
  CHECK((J - expected).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(J.trace() == Catch::Approx(lam * (3 - 1) * xx));
}

TEST_CASE("oriented planes") {
  auto g = InnerProduct::standard(Signature(1, 2));
  Eigen::VectorXd t = Eigen::VectorXd::Unit(3, 0);
  Eigen::VectorXd s1 = Eigen::VectorXd::Unit(3, 1);
  Eigen::VectorXd s2 = Eigen::VectorXd::Unit(3, 2);

  SECTION("gram-schmidt produces orthonormal pairs") {
    auto pi = make_plane(g, s1, s1 + 3.0 * s2, CausalType::Spacelike);
    CHECK(plane_violation(g, pi) < 1e-12);
    CHECK(pi.kind == CausalType::Spacelike);
    CHECK((pi.e1 - s1).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((pi.e2 - s2).cwiseAbs().maxCoeff() < 1e-14);
  }
  SECTION("mixed and degenerate spans rejected") {
    CHECK_THROWS_AS(make_plane(g, t, s1, CausalType::Spacelike), InvalidArgument);
    CHECK_THROWS_AS(make_plane(g, s1, t, CausalType::Spacelike), InvalidArgument);
    CHECK_THROWS_AS(make_plane(g, s1, 2.0 * s1, CausalType::Spacelike),
                    InvalidArgument);
    CHECK_THROWS_AS(make_plane(g, t + s1, s2, CausalType::Spacelike),
                    InvalidArgument);
    CHECK_THROWS_AS(make_plane(g, s1, s2, CausalType::Null), InvalidArgument);
    // No timelike plane exists in Lorentz signature.
    CHECK_THROWS_AS(make_plane(g, t, s1, CausalType::Timelike), InvalidArgument);
  }
  SECTION("timelike planes in neutral signature") {
    auto h = InnerProduct::standard(Signature(2, 2));
    Eigen::VectorXd u = Eigen::VectorXd::Unit(4, 0);
    Eigen::VectorXd v = Eigen::VectorXd::Unit(4, 1);
    auto pi = make_plane(h, u, u + 0.5 * v, CausalType::Timelike);
    CHECK(plane_violation(h, pi) < 1e-12);
    CHECK(h.inner(pi.e1, pi.e1) == Catch::Approx(-1.0));
    CHECK(h.inner(pi.e2, pi.e2) == Catch::Approx(-1.0));
  }
  SECTION("violation measures the departure") {
    OrientedPlane pi{s1, s1 + s2, CausalType::Spacelike};
    CHECK(plane_violation(g, pi) == Catch::Approx(1.0));
    OrientedPlane null_pi{s1, s2, CausalType::Null};
    CHECK(plane_violation(g, null_pi) == 1.0);
  }
}

TEST_CASE("skew curvature operator") {
  auto g = InnerProduct::euclidean(4);
  auto A = constant_curvature_tensor(g, 1.0);
  Eigen::VectorXd e1 = Eigen::VectorXd::Unit(4, 0);
  Eigen::VectorXd e2 = Eigen::VectorXd::Unit(4, 1);
  auto pi = make_plane(g, e1, e2, CausalType::Spacelike);

  SECTION("identity generator rotates the plane") {
    auto op = skew_curvature_operator(A, pi);
    CHECK((op.matrix * e1 + e2).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((op.matrix * e2 - e1).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((op.matrix * Eigen::VectorXd::Unit(4, 2)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(rank_tol(op.matrix) == 2);
    CHECK(skew_adjoint_violation(g, op.matrix) < 1e-12);
  }
  SECTION("rotating the basis preserves the operator") {
    std::mt19937_64 rng(3);
    auto h = random_inner_product(rng, Signature(0, 4));
    auto B = random_curvature_tensor(rng, h);
    auto base = make_plane(h, Eigen::VectorXd::Random(4), Eigen::VectorXd::Random(4),
                           CausalType::Spacelike);
    auto op = skew_curvature_operator(B, base);
    for (double theta : {0.4, 1.9, 3.5}) {
      OrientedPlane rot;
      rot.e1 = std::cos(theta) * base.e1 + std::sin(theta) * base.e2;
      rot.e2 = -std::sin(theta) * base.e1 + std::cos(theta) * base.e2;
      rot.kind = base.kind;
      auto op2 = skew_curvature_operator(B, rot);
      CHECK((op.matrix - op2.matrix).cwiseAbs().maxCoeff() <
            1e-10 * (1.0 + op.matrix.cwiseAbs().maxCoeff()));
    }
    // Swapping orientation flips the sign.
    OrientedPlane swapped{base.e2, base.e1, base.kind};
    auto op3 = skew_curvature_operator(B, swapped);
    CHECK((op.matrix + op3.matrix).cwiseAbs().maxCoeff() <
          1e-10 * (1.0 + op.matrix.cwiseAbs().maxCoeff()));
  }
  SECTION("skew-adjointness on indefinite spaces") {
    std::mt19937_64 rng(29);
    auto h = random_inner_product(rng, Signature(2, 2));
    auto B = random_curvature_tensor(rng, h);
    ProbeConfig cfg;
    for (const auto& pl : sample_planes(h, CausalType::Timelike, cfg, 6)) {
      auto op = skew_curvature_operator(B, pl);
      CHECK(skew_adjoint_violation(h, op.matrix) <
            1e-9 * adjoint_scale(h, op.matrix));
    }
  }
  SECTION("bad plane rejected") {
    OrientedPlane crooked{e1, e1 + e2, CausalType::Spacelike};
    CHECK_THROWS_AS(skew_curvature_operator(A, crooked), InvalidArgument);
  }
}
