#include <doctest.h>

#include <random>

#include "overcubic/congruence.hpp"
#include "overcubic/errors.hpp"
#include "overcubic/qexpr.hpp"
#include "overcubic/qfactory.hpp"

using namespace overcubic;

TEST_CASE("overpartitions and the overcubic function from text") {
  auto p = eval_expr(parse_expr("f2/f1^2"), {}, 4);
  CHECK(p.coeffs() == std::vector<Integer>{1, 2, 4, 8});
  const auto goc = parse_expr("f4^(c-1)/(f1^2*f2^(2*c-3))");
  CHECK(goc.parameters() == std::vector<std::string>{"c"});
  for (std::int64_t c = 1; c <= 4; ++c)
    CHECK(eval_expr(goc, {{"c", c}}, 60) == gen_overcubic(c, 60));
  CHECK(eval_expr(goc, {{"c", 2}}, 10).coeff(3) == 12);
}

TEST_CASE("atoms evaluate like their builders") {
  const std::size_t n = 120;
  CHECK(eval_expr(parse_expr("phi(-q)"), {}, n) == phi_neg(n));
  CHECK(eval_expr(parse_expr("phi(q^4)"), {}, n) == phi(4, false, n));
  CHECK(eval_expr(parse_expr("psi(q^p)"), {{"p", 3}}, n) == psi(3, n));
  CHECK(eval_expr(parse_expr("f(2*p)"), {{"p", 5}}, n) == eta(10, n));
  CHECK(eval_expr(parse_expr("D(q)"), {}, n) == quintic_quotient(n));
  CHECK(eval_expr(parse_expr("D(q^5)^-3"), {}, n) == stretch(power(quintic_quotient(24), -3), 5).truncated(n));
  CHECK(eval_expr(parse_expr("f1+f2"), {}, n) == eta(1, n) + eta(2, n));
  CHECK(eval_expr(parse_expr("-2*q^3*f1"), {}, n) == scale(shift(eta(1, n), 3), -2).truncated(n));
  CHECK(eval_expr(parse_expr("(q^2)^3"), {}, 10) == TruncatedSeries::monomial(1, 6, 10));
}

TEST_CASE("modular evaluation matches reduction") {
  const auto e = parse_expr("2*f4^3/phi(-q^4)^4*(phi(q^4)^3+2*q*phi(q^4)^2*psi(q^8))");
  CHECK(eval_expr(e, {}, 200, 8) == reduce_mod(eval_expr(e, {}, 200), 8));
}

TEST_CASE("parse errors carry offsets") {
  try {
    parse_expr("f1 * * f2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 5);
  }
  CHECK_THROWS_AS(parse_expr("f1*(f2"), ParseError);
  CHECK_THROWS_AS(parse_expr("g(q)"), ParseError);
  CHECK_THROWS_AS(parse_expr("f0"), ParseError);
  CHECK_THROWS_AS(parse_expr(""), ParseError);
  CHECK_THROWS_AS(parse_expr("f1 f2"), ParseError);
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS(eval_expr(parse_expr("f(k)"), {}, 10), EvalError);
  CHECK_THROWS_AS(eval_expr(parse_expr("f(k)"), {{"k", 0}}, 10), EvalError);
  CHECK_THROWS_AS(eval_expr(parse_expr("f1/2"), {}, 10), EvalError);
  CHECK_THROWS_AS(eval_expr(parse_expr("f1/q"), {}, 10), EvalError);
  CHECK_THROWS_AS(eval_expr(parse_expr("f1/2"), {}, 10, 8), EvalError);
  // 3 is a unit mod 8.
  CHECK(eval_expr(parse_expr("f1/3"), {}, 10, 8) == reduce_mod(scale(eta(1, 10), 3), 8));
}

TEST_CASE("format and parse round trip") {
  const char* samples[] = {
      "f1",
      "f4^(c-1)/(f1^2*f2^(2*c-3))",
      "2*f2^(2*m+2)*f8^2/(f1^(4*m+4)*f4)",
      "-f1*f2",
      "f4*f8^5/(f2^6*f16^2)+2*q*f4^3*f16^2/(f2^6*f8)",
      "phi(-q^4)^-4*psi(q^8)",
      "2*psi(q^p)",
      "D(q^5)^3-3*q*D(q^5)^2+5*q^3",
      "(q^2)^3",
      "f(2*p)*f(8*p)",
  };
  for (const char* text : samples) {
    CAPTURE(text);
    const auto e = parse_expr(text);
    const auto again = parse_expr(format_expr(e));
    CHECK(again == e);
    CHECK(format_expr(again) == format_expr(e));
  }
}

TEST_CASE("property: random expressions round trip") {
  const std::vector<std::string> atoms{"f1",        "f3^2",       "f(2*k+1)", "phi(-q^2)", "psi(q^k)", "D(q^5)^-3",
                                       "q^2",       "3",          "(f1+f2)",  "f16^(k)",   "-f2",      "phi(q)^(2*k)",
                                       "(f1-q*f4)", "psi(q^3)^2", "f(k)^-1"};
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    std::string text = atoms[rng() % atoms.size()];
    const int extra = static_cast<int>(rng() % 5);
    for (int i = 0; i < extra; ++i) {
      const char* ops[] = {"*", "/", "+", "-"};
      text += ops[rng() % 4];
      text += atoms[rng() % atoms.size()];
    }
    CAPTURE(text);
    const auto e = parse_expr(text);
    const auto formatted = format_expr(e);
    CHECK(parse_expr(formatted) == e);
    CHECK(format_expr(parse_expr(formatted)) == formatted);
  }
}

TEST_CASE("integer expressions") {
  const auto a = IntExpr::parse("8*p^(2*alpha+1)");
  CHECK(a.eval({{"p", 5}, {"alpha", 1}}) == 1000);
  CHECK(a.parameters() == std::vector<std::string>{"alpha", "p"});
  CHECK(IntExpr::parse("2^lambda*m+t").eval({{"lambda", 3}, {"m", 2}, {"t", 1}}) == 17);
  CHECK(IntExpr::parse("-(3-5)*2").eval({}) == 4);
  CHECK_THROWS_AS(IntExpr::parse("p").eval({}), EvalError);
  CHECK_THROWS_AS(IntExpr::parse("2^(-1)").eval({}), EvalError);
  CHECK_THROWS_AS(IntExpr::parse("10^30").eval({}), EvalError);
  CHECK_THROWS_AS(IntExpr::parse("2*"), ParseError);
  CHECK_THROWS_AS(IntExpr::parse("4/2"), ParseError);
}
