#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include <weylspectra/polynomial.hpp>

using namespace weylspectra;

namespace {

double eval(const Polynomial& p, std::initializer_list<double> xs) {
  return p(std::vector<double>(xs));
}

}  // namespace

TEST_CASE("polynomial parse and evaluate") {
  auto p = Polynomial::parse("x1^2 - x2^2 + x3^2", 3);
  CHECK(eval(p, {2, 3, 1}) == Catch::Approx(-4.0));
  CHECK(eval(p, {0, 0, 0}) == 0.0);

  auto q = Polynomial::parse("2x1^2 + 1/2*x1*x2", 2);
  CHECK(eval(q, {1, 4}) == Catch::Approx(4.0));
  CHECK(eval(q, {-2, 6}) == Catch::Approx(2.0));

  auto c = Polynomial::parse("3", 2);
  CHECK(eval(c, {10, -10}) == 3.0);

  // Juxtaposition and explicit '*' are the same product.
  CHECK(eval(Polynomial::parse("2x1x2", 2), {3, 5}) ==
        eval(Polynomial::parse("2*x1*x2", 2), {3, 5}));

  // Repeated variables multiply exponents up.
  CHECK(eval(Polynomial::parse("x1x1x1", 1), {2}) == 8.0);

  // Like terms merge; cancellation yields the zero polynomial.
  auto z = Polynomial::parse("x1 - x1", 1);
  CHECK(z.terms().empty());
  CHECK(z.to_string() == "0");
}

TEST_CASE("polynomial coefficients") {
  auto p = Polynomial::parse("1/4 x1^2 + 0.75 x2 - 2/8", 2);
  CHECK(eval(p, {2, 0}) == Catch::Approx(0.75));
  CHECK(eval(p, {0, 1}) == Catch::Approx(0.5));
  // Leading sign.
  CHECK(eval(Polynomial::parse("-x1 + 2", 1), {3}) == Catch::Approx(-1.0));
  CHECK(eval(Polynomial::parse("+x1", 1), {3}) == Catch::Approx(3.0));
}

TEST_CASE("polynomial derivative") {
  auto p = Polynomial::parse("x1^3*x2 - 2x2^2 + 5", 2);
  auto dx1 = p.derivative(0);
  auto dx2 = p.derivative(1);
  // d/dx1 = 3x1^2 x2, d/dx2 = x1^3 - 4x2.
  CHECK(eval(dx1, {2, 3}) == Catch::Approx(36.0));
  CHECK(eval(dx2, {2, 3}) == Catch::Approx(-4.0));
  // Second derivatives commute.
  CHECK(eval(p.derivative(0).derivative(1), {1.5, -2}) ==
        Catch::Approx(eval(p.derivative(1).derivative(0), {1.5, -2})));
  CHECK(p.derivative(1).derivative(1).derivative(1).terms().empty());
  CHECK_THROWS_AS(p.derivative(2), InvalidArgument);
}

TEST_CASE("polynomial on jets matches its exact derivatives") {
  auto p = Polynomial::parse("x1^2*x2 + 3x2", 2);
  std::vector<Jet2> xs = {Jet2::variable(2, 0, 2.0), Jet2::variable(2, 1, -1.0)};
  Jet2 j = p(xs);
  CHECK(j.value() == Catch::Approx(-7.0));
  CHECK(j.grad()[0] == Catch::Approx(eval(p.derivative(0), {2, -1})));
  CHECK(j.grad()[1] == Catch::Approx(eval(p.derivative(1), {2, -1})));
  CHECK(j.hess()(0, 0) ==
        Catch::Approx(eval(p.derivative(0).derivative(0), {2, -1})));
  CHECK(j.hess()(0, 1) ==
        Catch::Approx(eval(p.derivative(0).derivative(1), {2, -1})));
}

TEST_CASE("polynomial to_string round-trips") {
  for (const char* src : {"x1^2 - x2^2 + x3^2", "2x1^2 + 1/2*x1*x2 - 3",
                          "x1*x2*x3", "-x1 + 1"}) {
    auto p = Polynomial::parse(src, 3);
    auto q = Polynomial::parse(p.to_string(), 3);
    std::vector<double> at = {1.3, -0.7, 2.1};
    CHECK(p(at) == Catch::Approx(q(at)).margin(1e-12));
  }
}

TEST_CASE("polynomial parse errors carry offsets") {
  CHECK_THROWS_AS(Polynomial::parse("x1 +", 2), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("x1 * ", 2), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("x3", 2), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("x0", 2), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("x1^-2", 2), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("x1^", 2), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("1/0", 2), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("x", 2), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("", 2), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("x1 & x2", 2), ParseError);

  try {
    Polynomial::parse("x1 + y", 2);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("offset 5") != std::string::npos);
  }

  CHECK_THROWS_AS(Polynomial::parse("x1", 0), InvalidArgument);
}

TEST_CASE("polynomial guards") {
  CHECK_THROWS_AS(Polynomial(0, {}), InvalidArgument);
  CHECK_THROWS_AS(Polynomial(2, {{1.0, {1}}}), InvalidArgument);
  auto p = Polynomial::parse("x1", 2);
  CHECK_THROWS_AS(p(std::vector<double>{1.0}), InvalidArgument);
}
