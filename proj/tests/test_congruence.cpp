#include <doctest.h>

#include <sstream>

#include "overcubic/congruence.hpp"
#include "overcubic/errors.hpp"
#include "overcubic/oracle.hpp"
#include "overcubic/qfactory.hpp"

using namespace overcubic;

namespace {

std::vector<VerificationReport> run(std::string_view id, VerifyOptions options = {}) {
  const auto* claim = find_claim(claims_registry(), id);
  REQUIRE(claim != nullptr);
  return verify_claim(*claim, options);
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed()) return false;
  return !reports.empty();
}

}  // namespace

TEST_CASE("gen_overcubic worked values") {
  CHECK(gen_overcubic(1, 4).coeff(3) == 8);
  CHECK(gen_overcubic(2, 4).coeff(3) == 12);
  CHECK(gen_overcubic(3, 4).coeffs() == std::vector<Integer>{1, 2, 8, 16});
  CHECK(gen_overcubic(2, 4).coeffs() == std::vector<Integer>{1, 2, 6, 12});
  CHECK(gen_overcubic(5, 50, 16) == reduce_mod(gen_overcubic(5, 50), 16));
  CHECK_THROWS_AS(gen_overcubic(0, 5), DomainError);
}

TEST_CASE("legendre symbol") {
  for (std::int64_t p : {3, 5, 7, 11, 13, 97}) CHECK(legendre(1, p) == 1);
  CHECK(legendre(-2, 5) == -1);
  CHECK(legendre(-8, 7) == -1);
  CHECK(legendre(-2, 7) == -1);
  CHECK(legendre(-2, 11) == 1);
  CHECK(legendre(-2, 13) == -1);
  CHECK(legendre(10, 5) == 0);
  // Brute force against the squares mod p.
  for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
    for (std::int64_t a = -30; a <= 30; ++a) {
      const std::int64_t r = ((a % p) + p) % p;
      int expected = r == 0 ? 0 : -1;
      for (std::int64_t x = 1; x < p; ++x)
        if (x * x % p == r && r != 0) expected = 1;
      CHECK(legendre(a, p) == expected);
    }
  }
  CHECK_THROWS_AS(legendre(1, 2), DomainError);
  CHECK_THROWS_AS(legendre(1, 9), DomainError);
}

TEST_CASE("registry contents") {
  const auto& reg = claims_registry();
  const auto* t31 = find_claim(reg, "Thm3.1");
  REQUIRE(t31);
  CHECK(t31->rhs == CongruenceClaim::Rhs::Family);
  CHECK(t31->modulus.eval({{"lambda", 2}}) == 8);
  const auto* c36 = find_claim(reg, "Cor3.6");
  REQUIRE(c36);
  CHECK(c36->rhs == CongruenceClaim::Rhs::Zero);
  CHECK(c36->step.eval({{"z", 5}}) == 8);
  CHECK(c36->modulus.eval({}) == 8);
  const auto* id32c = find_claim(reg, "Id3.2c");
  REQUIRE(id32c);
  CHECK(id32c->modulus.eval({}) == 0);
  for (const char* id : {"Thm3.2.i", "Thm3.2.ii", "Thm3.2.iii", "Thm3.3", "Thm3.3.i", "Thm3.4", "Thm3.4.i", "Thm3.5",
                         "Thm3.5.i", "Cor3.8", "Id3.2d", "Id3.2e", "Id3.3c", "Id3.3g", "Id3.3h", "Id3.4e",
                         "Id3.5c", "Id3.5e"})
    CHECK_MESSAGE(find_claim(reg, id) != nullptr, id);
  // Built-in moduli are 0 (exact) or powers of two.
  for (const auto& c : reg) {
    for (std::int64_t lambda = 1; lambda <= 3; ++lambda) {
      ParamEnv env{{"lambda", lambda}};
      const auto m = c.modulus.eval(env);
      CHECK((m == 0 || (m & (m - 1)) == 0));
    }
  }
}

TEST_CASE("claim lines") {
  const auto c = parse_claim_line(
      "id=Mine family=2*m+2 A=8 B=z mod=8 rhs=0 domain=m=0..1;z=5,7 note=example");
  CHECK(c.id == "Mine");
  REQUIRE(c.domain.size() == 2);
  CHECK(c.domain[1].values == std::vector<std::int64_t>{5, 7});
  const auto p = parse_claim_line("id=P family=2 A=8 B=1 mod=8 rhs=2*f1*f2 domain=p=primes(5..20) legendre=-2");
  CHECK(p.domain[0].values == std::vector<std::int64_t>{5, 7, 11, 13, 17, 19});
  CHECK(p.legendre_filter == std::optional<std::int64_t>(-2));

  CHECK_THROWS_AS(parse_claim_line("id=X family=1 A=1 B=0"), ParseError);
  CHECK_THROWS_AS(parse_claim_line("id=X family=m A=1 B=0 mod=2"), ParseError);
  CHECK_THROWS_AS(parse_claim_line("id=X family=1 A=1 B=0 mod=2 colour=red"), ParseError);
  CHECK_THROWS_AS(parse_claim_line("id=X family=1 A=1 B=0 mod=2 rhs=f1*"), ParseError);
  CHECK_THROWS_AS(parse_claim_line("id=X family=1 A=1 B=0 mod=2 domain=m=3..1"), ParseError);

  std::istringstream file("# comment\n\nid=A1 family=1 A=1 B=0 mod=1\nid=A2 family=2 A=8 B=5 mod=8\n");
  const auto claims = parse_claim_file(file);
  REQUIRE(claims.size() == 2);
  CHECK(claims[1].id == "A2");
}

TEST_CASE("verify: theorem 3.1 on n <= 500") {
  VerifyOptions o;
  o.nmax = 500;
  const auto reports = run("Thm3.1", o);
  CHECK(reports.size() == 27);
  CHECK(all_passed(reports));
  for (const auto& r : reports) CHECK(r.checked_terms == 501);
}

TEST_CASE("verify: spec examples") {
  VerifyOptions o;
  o.nmax = 4000;
  o.domain_overrides = {{"m", {0}}, {"alpha", {0}}};
  const auto ii = run("Thm3.2.ii", o);
  REQUIRE(ii.size() == 1);
  CHECK(ii[0].passed());
  CHECK(ii[0].checked_terms == 100);

  VerifyOptions small;
  small.domain_overrides = {{"m", {0}}, {"alpha", {0}}, {"p", {3}}};
  small.min_terms = 300;
  CHECK(all_passed(run("Thm3.5", small)));
  small.min_terms = 100;
  const auto r = run("Thm3.5.i", small);
  REQUIRE(r.size() == 1);
  CHECK(r[0].passed());
  CHECK(r[0].checked_terms == 100);
}

TEST_CASE("verify: legendre filter") {
  VerifyOptions o;
  o.domain_overrides = {{"m", {0}}, {"alpha", {0}}, {"p", {7, 11}}};
  const auto reports = run("Thm3.3", o);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].params.at("p") == 7);
  CHECK(reports[0].status == Status::Pass);
  CHECK(reports[1].params.at("p") == 11);
  CHECK(reports[1].status == Status::Filtered);
}

TEST_CASE("verify: failures are reported with an index") {
  // abar_2(8n+1) is not 0 mod 8 (its q^0 coefficient is 2).
  const auto claim = parse_claim_line("id=Bogus family=2 A=8 B=1 mod=8 rhs=0");
  const auto reports = verify_claim(claim, {});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].status == Status::Fail);
  REQUIRE(reports[0].first_failure);
  CHECK(*reports[0].first_failure == 0);
  CHECK(*reports[0].first_failure < reports[0].precision);

  // 2*f1*f2 mod 16 is not what abar_2(8n+1) is.
  const auto wrong = parse_claim_line("id=Wrong family=2 A=8 B=1 mod=16 rhs=2*f1*f2");
  CHECK_FALSE(verify_claim(wrong, {})[0].passed());
}

TEST_CASE("verify: nmax too small is a precision error") {
  VerifyOptions o;
  o.nmax = 100;
  CHECK_THROWS_AS(run("Thm3.2.ii", o), PrecisionError);
}

TEST_CASE("verify: sieve skips multiples of p") {
  const auto claim = parse_claim_line(
      "id=S family=2*m+2 A=8*p^(2*alpha+1) B=p^(2*alpha+2) mod=8 domain=m=0;alpha=0;p=5 legendre=-2 sieve=p");
  VerifyOptions o;
  o.min_terms = 40;
  const auto r = verify_claim(claim, o);
  REQUIRE(r.size() == 1);
  CHECK(r[0].passed());
  CHECK(r[0].checked_terms == 40);
  // Without the sieve the q^0 term (index 25) is 2 mod 8.
  const auto plain = parse_claim_line("id=S family=2 A=40 B=25 mod=8");
  CHECK_FALSE(verify_claim(plain, o)[0].passed());
}

TEST_CASE("reports are sorted by claim then parameters") {
  std::vector<CongruenceClaim> claims{*find_claim(claims_registry(), "Cor3.8"),
                                      *find_claim(claims_registry(), "Cor3.6")};
  const auto reports = verify_claims(claims, {});
  REQUIRE(reports.size() == 15);
  CHECK(reports.front().claim == "Cor3.6");
  CHECK(reports.back().claim == "Cor3.8");
  for (std::size_t i = 1; i < reports.size(); ++i)
    CHECK(std::tie(reports[i - 1].claim, reports[i - 1].params) < std::tie(reports[i].claim, reports[i].params));
}

TEST_CASE("scan") {
  const auto c2 = scan_congruences(2, 8, {8}, 1000);
  auto has = [](const std::vector<ScanCandidate>& v, std::size_t a, std::size_t b, std::uint64_t m) {
    for (const auto& c : v)
      if (c.step == a && c.offset == b && c.modulus == m) return true;
    return false;
  };
  CHECK(has(c2, 8, 5, 8));
  CHECK(has(c2, 8, 7, 8));
  const auto c3 = scan_congruences(3, 8, {16}, 1000);
  CHECK(has(c3, 8, 3, 16));
  CHECK(has(c3, 8, 5, 16));
  CHECK(has(c3, 8, 7, 16));
  const auto trivial = scan_congruences(1, 4, {1}, 400);
  CHECK(trivial.size() == 10);
  CHECK(scan_congruences(1, 2, {1000000}, 1000).empty());
  for (const auto& c : c2) CHECK(c.checked_terms >= 100);
  CHECK_THROWS_AS(scan_congruences(2, 8, {8}, 500), PrecisionError);
}

TEST_CASE("classical sanity") {
  const auto r = classical_sanity(2000);
  CHECK(r.passed());
  CHECK(r.checked_terms == 400 + 285 + 182);
  const auto p = eta_quotient({{1, -1}}, 7);
  CHECK(p.coeff(4) == 5);
  CHECK(p.coeff(5) == 7);
  CHECK(p.coeff(6) == 11);
}
