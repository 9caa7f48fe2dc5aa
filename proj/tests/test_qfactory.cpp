#include <doctest.h>

#include <random>

#include "overcubic/errors.hpp"
#include "overcubic/oracle.hpp"
#include "overcubic/qfactory.hpp"

using namespace overcubic;

namespace {

// (-q^x; q^s)_inf = (q^(2x); q^(2s)) / (q^x; q^s).
TruncatedSeries plus_pochhammer(std::int64_t x, std::int64_t s, std::size_t n) {
  return divide(pochhammer(2 * x, 2 * s, n), pochhammer(x, s, n));
}

}  // namespace

TEST_CASE("eta matches the naive product") {
  CHECK(eta(1, 8).coeffs() == std::vector<Integer>{1, -1, -1, 0, 0, 1, 0, 1});
  for (std::int64_t h : {1, 2, 3, 7})
    CHECK(eta(h, 120) == naive_product_series({{h, 1}}, 120));
  CHECK(pochhammer(1, 1, 100) == eta(1, 100));
  CHECK(pochhammer(3, 3, 100) == eta(3, 100));
}

TEST_CASE("eta_quotient agrees with the naive product on random terms") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<EtaTerm> terms;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i)
      terms.push_back({static_cast<std::int64_t>(1 + rng() % 16), static_cast<std::int64_t>(rng() % 9) - 4});
    const std::size_t n = 1 + rng() % 150;
    const auto fast = eta_quotient(std::span<const EtaTerm>(terms), n);
    CHECK(fast == naive_product_series(terms, n));
    CHECK(eta_quotient(std::span<const EtaTerm>(terms), n, 64) == reduce_mod(fast, 64));
  }
}

TEST_CASE("named thetas") {
  // phi(q) = sum q^(n^2), psi(q) = sum q^(n(n+1)/2).
  CHECK(phi(1, false, 10).coeffs() == std::vector<Integer>{1, 2, 0, 0, 2, 0, 0, 0, 0, 2});
  CHECK(psi(1, 7).coeffs() == std::vector<Integer>{1, 1, 0, 1, 0, 0, 1});
  CHECK(phi(1, true, 200) == phi_neg(200));
  CHECK(psi(1, 200) == eta_quotient({{2, 2}, {1, -1}}, 200));
  CHECK(phi(1, false, 200) == eta_quotient({{2, 5}, {1, -2}, {4, -2}}, 200));
  CHECK(phi(3, false, 60) == stretch(phi(1, false, 20), 3));
}

TEST_CASE("theta sum equals the triple product") {
  for (std::int64_t x = 1; x <= 5; ++x)
    for (std::int64_t y = 1; y <= 5; ++y) {
      const std::size_t n = 150;
      const std::int64_t s = x + y;
      const auto plus = theta_general({1, x, 1, y, 1}, n);
      CHECK(plus == plus_pochhammer(x, s, n) * plus_pochhammer(y, s, n) * pochhammer(s, s, n));
      const auto minus = theta_general({-1, x, -1, y, 1}, n);
      CHECK(minus == pochhammer(x, s, n) * pochhammer(y, s, n) * pochhammer(s, s, n));
    }
}

TEST_CASE("theta exponent checks") {
  // F(q^(3/2), q^(1/2)) would need half-integer exponents.
  CHECK_THROWS_AS(theta_general({1, 3, 1, 1, 2}, 20), EvalError);
  CHECK(theta_general({1, 6, 1, 2, 2}, 40) == theta_general({1, 3, 1, 1, 1}, 40));
  CHECK_THROWS_AS(theta_general({2, 1, 1, 1, 1}, 20), DomainError);
}

TEST_CASE("quintic quotient") {
  const std::size_t n = 100;
  const auto d = quintic_quotient(n);
  CHECK(d == divide(pochhammer(2, 5, n) * pochhammer(3, 5, n), pochhammer(1, 5, n) * pochhammer(4, 5, n)));
  CHECK(d.coeff(0) == 1);
  CHECK(d.coeff(1) == 1);
}

TEST_CASE("binomial congruences") {
  CHECK(binomial_congruence_check(2, 1, 1, 300));
  CHECK(binomial_congruence_check(2, 3, 1, 300));
  CHECK(binomial_congruence_check(3, 2, 2, 300));
  CHECK(binomial_congruence_check(5, 1, 1, 300));
  CHECK_THROWS_AS(binomial_congruence_check(4, 1, 1, 10), DomainError);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(eta(0, 10), DomainError);
  CHECK_THROWS_AS(eta_quotient({{0, 1}}, 10), DomainError);
  CHECK_THROWS_AS(pochhammer(0, 1, 10), DomainError);
  CHECK_THROWS_AS(psi(0, 10), DomainError);
}
