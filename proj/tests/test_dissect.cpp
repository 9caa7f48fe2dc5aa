#include <doctest.h>

#include <random>

#include "overcubic/arith.hpp"
#include "overcubic/congruence.hpp"
#include "overcubic/dissect.hpp"
#include "overcubic/errors.hpp"
#include "overcubic/qfactory.hpp"
#include "support.hpp"

using namespace overcubic;

TEST_CASE("extract_ap by hand") {
  auto a = TruncatedSeries::exact({0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  auto odd = extract_ap(a, {2, 1});
  CHECK(odd.coeffs() == std::vector<Integer>{1, 3, 5, 7, 9});
  auto thirds = extract_ap(a, {3, 2});
  CHECK(thirds.coeffs() == std::vector<Integer>{2, 5, 8});
  CHECK(extract_progression(a, 4, 5, 2).coeffs() == std::vector<Integer>{5, 9});
  CHECK_THROWS_AS(extract_progression(a, 4, 5, 3), PrecisionError);
  CHECK_THROWS_AS(extract_ap(a, {2, 2}), DomainError);
  CHECK_THROWS_AS(extract_ap(a, {1, 0}), DomainError);
}

TEST_CASE("property: dissection round trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 20 + rng() % 200;
    const std::size_t p = 2 + rng() % 12;
    auto a = testing::random_exact(rng, n, 100);
    std::vector<TruncatedSeries> parts;
    for (std::size_t r = 0; r < p; ++r) parts.push_back(extract_ap(a, {p, r}));
    auto back = reassemble(p, parts);
    CHECK(back.precision() == n);
    CHECK(back == a);
  }
}

TEST_CASE("nested extraction equals one-pass extraction") {
  // 2n+1, then 4n, then the two 5-steps used for the 5-adic tower.
  const auto a = gen_overcubic(1, 4000, 8);
  auto step = extract_ap(a, {2, 1});
  step = extract_ap(step, {4, 0});
  CHECK(compare(step, extract_progression(a, 8, 1, 400), 400).equal);
  step = extract_ap(step, {5, 3});
  CHECK(compare(step, extract_progression(a, 40, 25, 90), 90).equal);
  step = extract_ap(step, {5, 0});
  CHECK(compare(step, extract_progression(a, 200, 25, 18), 18).equal);
}

TEST_CASE("self-similarity of the 8n+1 tower") {
  for (std::int64_t m = 0; m <= 2; ++m) {
    const auto a = gen_overcubic(2 * m + 1, 20000, 8);
    const auto outer = extract_progression(a, 200, 25, 99);
    const auto inner = extract_progression(a, 8, 1, 99);
    CHECK(compare(outer, inner, 99).equal);
  }
}

TEST_CASE("lemma checks") {
  CHECK(verify_lemma(Lemma::InverseEtaSquared, 0, 300).passed());
  CHECK(verify_lemma(Lemma::InversePhi, 0, 300).passed());
  CHECK(verify_lemma(Lemma::EtaCubedQuintic, 0, 300).passed());
  for (std::int64_t p : {3, 5, 7, 11, 13}) CHECK(verify_lemma(Lemma::PsiDissection, p, 300).passed());
  for (std::int64_t p : {5, 7, 11, 13}) CHECK(verify_lemma(Lemma::EtaDissection, p, 300).passed());
  CHECK_THROWS_AS(verify_lemma(Lemma::EtaDissection, 4, 100), DomainError);
  CHECK_THROWS_AS(verify_lemma(Lemma::EtaDissection, 3, 100), DomainError);
  CHECK(parse_lemma_id("2.4") == Lemma::InversePhi);
  CHECK_THROWS_AS(parse_lemma_id("2.6"), DomainError);
}

TEST_CASE("quintic orientation: only the direct form equals f1^3") {
  const std::size_t n = 300;
  const auto f13 = eta_quotient({{1, 3}}, n);
  CHECK(eta_cubed_quintic_rhs(n, QuinticOrientation::Direct) == f13);
  const auto cmp = compare(eta_cubed_quintic_rhs(n, QuinticOrientation::Inverse), f13, n);
  CHECK_FALSE(cmp.equal);
  CHECK(cmp.first_mismatch.has_value());
}

TEST_CASE("side conditions hold for every prime up to 50") {
  for (auto p : primes_between(3, 50)) {
    CAPTURE(p);
    CHECK(dissection_side_condition(p, SideCondition::Psi));
    if (p >= 5) CHECK(dissection_side_condition(p, SideCondition::Eta));
  }
}
