#include "overcubic/qfactory.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "overcubic/arith.hpp"
#include "overcubic/errors.hpp"
#include "ring.hpp"

namespace overcubic {

namespace {

// Builds a series from a handful of (exponent -> small integer) entries.
TruncatedSeries from_sparse(const std::map<std::size_t, std::int64_t>& terms, std::size_t n, ModulusOpt modulus) {
  if (n == 0) throw DomainError("precision must be at least 1");
  if (!modulus) {
    std::vector<Integer> c(n);
    for (const auto& [e, v] : terms)
      if (e < n) c[e] = static_cast<long>(v);
    return TruncatedSeries::exact(std::move(c));
  }
  detail::ModRing ring(*modulus);
  std::vector<std::uint64_t> c(n, 0);
  for (const auto& [e, v] : terms)
    if (e < n) c[e] = ring.from_int(v);
  return TruncatedSeries::residues(std::move(c), *modulus);
}

template <class Ring>
std::vector<typename Ring::value_type> pochhammer_coeffs(const Ring& ring, std::int64_t a, std::int64_t b,
                                                         std::size_t n) {
  std::vector<typename Ring::value_type> c(n, ring.from_int(0));
  c[0] = ring.from_int(1);
  for (auto j = static_cast<std::size_t>(a); j < n; j += static_cast<std::size_t>(b)) {
    for (std::size_t k = n - 1; k >= j; --k) {
      c[k] = ring.sub(c[k], c[k - j]);
      if (k == j) break;
    }
  }
  return c;
}

TruncatedSeries apply_power(TruncatedSeries acc, const TruncatedSeries& factor, std::int64_t e) {
  for (std::int64_t i = 0; i < e; ++i) acc = multiply(acc, factor);
  for (std::int64_t i = 0; i > e; --i) acc = divide(acc, factor);
  return acc;
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace

TruncatedSeries pochhammer(std::int64_t a, std::int64_t b, std::size_t n, ModulusOpt modulus) {
  if (a < 1 || b < 1) throw DomainError("pochhammer needs a >= 1 and b >= 1");
  if (n == 0) throw DomainError("precision must be at least 1");
  if (!modulus) return TruncatedSeries::exact(pochhammer_coeffs(detail::ExactRing{}, a, b, n));
  detail::ModRing ring(*modulus);
  return TruncatedSeries::residues(pochhammer_coeffs(ring, a, b, n), *modulus);
}

TruncatedSeries eta(std::int64_t h, std::size_t n, ModulusOpt modulus) {
  if (h < 1) throw DomainError("eta scale must be positive, got " + std::to_string(h));
  const auto scale = static_cast<std::size_t>(h);
  std::map<std::size_t, std::int64_t> terms{{0, 1}};
  for (std::size_t k = 1;; ++k) {
    const std::size_t lo = scale * (k * (3 * k - 1) / 2);
    const std::size_t hi = scale * (k * (3 * k + 1) / 2);
    if (lo >= n) break;
    const std::int64_t sign = (k % 2 == 0) ? 1 : -1;
    terms[lo] += sign;
    if (hi < n) terms[hi] += sign;
  }
  return from_sparse(terms, n, modulus);
}

TruncatedSeries eta_quotient(std::span<const EtaTerm> terms, std::size_t n, ModulusOpt modulus) {
  if (terms.empty()) throw DomainError("eta quotient needs at least one term");
  if (n == 0) throw DomainError("precision must be at least 1");
  std::map<std::int64_t, std::int64_t, std::greater<>> merged;
  for (const auto& t : terms) {
    if (t.h < 1) throw DomainError("eta scale must be positive, got " + std::to_string(t.h));
    merged[t.h] += t.e;
  }
  std::erase_if(merged, [](const auto& kv) { return kv.second == 0; });
  if (merged.empty()) return TruncatedSeries::one(n, modulus);

  // Largest scales first. The running product is a series in q^d for
  // d = gcd of the scales seen so far, stored compressed at ceil(n/d) terms.
  std::size_t d = 0;
  std::optional<TruncatedSeries> acc;
  for (const auto& [h, e] : merged) {
    const auto next = std::gcd(d, static_cast<std::size_t>(h));
    const std::size_t len = ceil_div(n, next);
    TruncatedSeries base =
        acc ? stretch(*acc, d / next).truncated(len) : TruncatedSeries::one(len, modulus);
    const auto factor = eta(h / static_cast<std::int64_t>(next), len, modulus);
    acc = apply_power(std::move(base), factor, e);
    d = next;
  }
  return stretch(*acc, d).truncated(n);
}

TruncatedSeries theta_general(const ThetaSpec& spec, std::size_t n, ModulusOpt modulus) {
  if ((spec.sign_a != 1 && spec.sign_a != -1) || (spec.sign_b != 1 && spec.sign_b != -1))
    throw DomainError("theta argument signs must be +1 or -1");
  if (spec.denominator < 1) throw DomainError("theta exponent denominator must be positive");
  if (spec.pow_a < 0 || spec.pow_b < 0 || spec.pow_a + spec.pow_b < 1)
    throw DomainError("theta arguments need non-negative powers with a positive sum");

  std::map<std::size_t, std::int64_t> terms;
  // nu >= 0 and nu < 0 branches are each monotone in the exponent.
  auto walk = [&](std::int64_t start, std::int64_t step) {
    for (std::int64_t nu = start;; nu += step) {
      const std::int64_t ta = nu * (nu + 1) / 2;
      const std::int64_t tb = nu * (nu - 1) / 2;
      const std::int64_t num = spec.pow_a * ta + spec.pow_b * tb;
      const std::int64_t exponent = num / spec.denominator;
      if (exponent >= static_cast<std::int64_t>(n)) {
        if (nu != 0 && nu != -1 && nu != 1) break;
        continue;
      }
      if (num % spec.denominator != 0)
        throw EvalError("non-integral exponent " + std::to_string(num) + "/" + std::to_string(spec.denominator) +
                        " at nu = " + std::to_string(nu));
      const int sign = ((spec.sign_a < 0 && ta % 2 != 0) ? -1 : 1) * ((spec.sign_b < 0 && tb % 2 != 0) ? -1 : 1);
      terms[static_cast<std::size_t>(exponent)] += sign;
    }
  };
  walk(0, 1);
  walk(-1, -1);
  return from_sparse(terms, n, modulus);
}

TruncatedSeries phi(std::int64_t k, bool negated, std::size_t n, ModulusOpt modulus) {
  if (k < 1) throw DomainError("phi argument power must be positive");
  const int s = negated ? -1 : 1;
  return theta_general({s, k, s, k, 1}, n, modulus);
}

TruncatedSeries phi_neg(std::size_t n, ModulusOpt modulus) { return phi(1, true, n, modulus); }

TruncatedSeries psi(std::int64_t k, std::size_t n, ModulusOpt modulus) {
  if (k < 1) throw DomainError("psi argument power must be positive");
  return theta_general({1, k, 1, 3 * k, 1}, n, modulus);
}

TruncatedSeries quintic_quotient(std::size_t n, ModulusOpt modulus) {
  const auto num = multiply(pochhammer(2, 5, n, modulus), pochhammer(3, 5, n, modulus));
  return divide(divide(num, pochhammer(1, 5, n, modulus)), pochhammer(4, 5, n, modulus));
}

bool binomial_congruence_check(std::int64_t p, std::int64_t k, std::int64_t m, std::size_t n) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (k < 1 || m < 1) throw DomainError("binomial congruence needs k >= 1 and m >= 1");
  const auto mod = checked_pow(p, k);
  const auto inner = checked_pow(p, k - 1);
  if (!mod || !inner) throw DomainError("p^k overflows");
  const auto lhs = eta_quotient({EtaTerm{p * m, *inner}}, n, static_cast<std::uint64_t>(*mod));
  const auto rhs = eta_quotient({EtaTerm{m, *mod}}, n, static_cast<std::uint64_t>(*mod));
  return compare(lhs, rhs, n).equal;
}

}  // namespace overcubic
