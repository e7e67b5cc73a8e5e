#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <weylspectra/jet.hpp>

namespace weylspectra {

/// Polynomial in variables x1..xN with double coefficients, evaluable on any
/// scalar type supporting +, *, pow and constant_like (double, Jet2).
///
/// Surface syntax: sums of monomials with rational or decimal coefficients
/// and non-negative integer exponents, e.g. "x1^2 - x2^2 + x3^2",
/// "2x1^2 + 1/2*x1*x2", "3".  "*" between factors is optional.
class Polynomial {
 public:
  struct Monomial {
    double coeff;
    std::vector<int> exps;  // one exponent per variable
  };

  Polynomial(int nvars, std::vector<Monomial> terms)
      : nvars_(nvars), terms_(std::move(terms)) {
    if (nvars_ < 1) throw InvalidArgument("polynomial needs at least one variable");
    for (const auto& t : terms_)
      if (static_cast<int>(t.exps.size()) != nvars_)
        throw InvalidArgument("monomial exponent list does not match variable count");
  }

  static Polynomial zero(int nvars) { return Polynomial(nvars, {}); }

  static Polynomial parse(std::string_view src, int nvars);

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& terms() const { return terms_; }

  template <typename T>
  T operator()(const std::vector<T>& xs) const {
    if (static_cast<int>(xs.size()) != nvars_)
      throw InvalidArgument("polynomial argument count mismatch");
    T acc = constant_like(xs[0], 0.0);
    for (const auto& t : terms_) {
      T val = constant_like(xs[0], t.coeff);
      for (int i = 0; i < nvars_; ++i)
        if (t.exps[i] > 0) val *= pow(xs[i], t.exps[i]);
      acc += val;
    }
    return acc;
  }

  /// Exact partial derivative with respect to variable i (0-based).
  Polynomial derivative(int i) const {
    if (i < 0 || i >= nvars_) throw InvalidArgument("derivative index out of range");
    std::vector<Monomial> out;
    for (const auto& t : terms_) {
      if (t.exps[i] == 0) continue;
      Monomial d = t;
      d.coeff *= t.exps[i];
      d.exps[i] -= 1;
      out.push_back(std::move(d));
    }
    return Polynomial(nvars_, std::move(out));
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t n = 0; n < terms_.size(); ++n) {
      const auto& t = terms_[n];
      const double c = t.coeff;
      if (n == 0)
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      std::string body;
      for (int i = 0; i < nvars_; ++i) {
        if (t.exps[i] == 0) continue;
        if (!body.empty()) body += "*";
        body += "x" + std::to_string(i + 1);
        if (t.exps[i] > 1) body += "^" + std::to_string(t.exps[i]);
      }
      const double a = std::abs(c);
      if (body.empty())
        s += trimmed(a);
      else if (a == 1.0)
        s += body;
      else
        s += trimmed(a) + "*" + body;
    }
    return s;
  }

 private:
  static std::string trimmed(double v) {
    std::string s = std::to_string(v);
    while (s.find('.') != std::string::npos && (s.back() == '0' || s.back() == '.'))
      s.pop_back();
    return s;
  }

  int nvars_;
  std::vector<Monomial> terms_;
};

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view s, int nvars) : s_(s), nvars_(nvars) {}

  Polynomial run() {
    std::map<std::vector<int>, double> merged;
    skip_ws();
    double sign = 1.0;
    if (accept('+')) {
    } else if (accept('-')) {
      sign = -1.0;
    }
    while (true) {
      auto [coeff, exps] = parse_term();
      merged[exps] += sign * coeff;
      skip_ws();
      if (eof()) break;
      if (accept('+'))
        sign = 1.0;
      else if (accept('-'))
        sign = -1.0;
      else
        fail("expected '+' or '-'");
    }
    std::vector<Polynomial::Monomial> terms;
    for (auto& [exps, c] : merged)
      if (c != 0.0) terms.push_back({c, exps});
    return Polynomial(nvars_, std::move(terms));
  }

 private:
  std::pair<double, std::vector<int>> parse_term() {
    double coeff = 1.0;
    std::vector<int> exps(nvars_, 0);
    bool any = false;
    while (true) {
      skip_ws();
      if (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) {
        coeff *= parse_number();
        any = true;
      } else if (!eof() && peek() == 'x') {
        auto [idx, e] = parse_var_power();
        exps[idx] += e;
        any = true;
      } else {
        break;
      }
      skip_ws();
      if (accept('*')) {  // explicit product; juxtaposition also allowed
        skip_ws();
        if (eof() || !(std::isdigit(static_cast<unsigned char>(peek())) ||
                       peek() == '.' || peek() == 'x'))
          fail("expected a factor after '*'");
      }
    }
    if (!any) fail("expected a term");
    return {coeff, std::move(exps)};
  }

  double parse_number() {
    double num = parse_decimal();
    skip_ws();
    if (!eof() && peek() == '/') {
      const std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        pos_ = save;
        return num;
      }
      const double den = parse_decimal();
      if (den == 0.0) fail("zero denominator");
      return num / den;
    }
    return num;
  }

  double parse_decimal() {
    double v = 0.0;
    const char* begin = s_.data() + pos_;
    const char* end = s_.data() + s_.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }

  std::pair<int, int> parse_var_power() {
    expect('x');
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected variable index after 'x'");
    int idx = parse_int();
    if (idx < 1 || idx > nvars_)
      fail("variable index out of range (have x1..x" + std::to_string(nvars_) + ")");
    int e = 1;
    skip_ws();
    if (accept('^')) {
      skip_ws();
      if (!eof() && peek() == '-') fail("exponents must be non-negative integers");
      if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected exponent after '^'");
      e = parse_int();
    }
    return {idx - 1, e};
  }

  int parse_int() {
    int v = 0;
    const char* begin = s_.data() + pos_;
    const char* end = s_.data() + s_.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr == begin) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  bool accept(char c) {
    if (!eof() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("expression error at offset " + std::to_string(pos_) + ": " + msg +
                     " in \"" + std::string(s_) + "\"");
  }

  std::string_view s_;
  int nvars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial Polynomial::parse(std::string_view src, int nvars) {
  if (nvars < 1) throw InvalidArgument("polynomial needs at least one variable");
  return detail::PolyParser(src, nvars).run();
}

}  // namespace weylspectra
