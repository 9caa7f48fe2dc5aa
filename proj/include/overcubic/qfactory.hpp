#pragma once

// Builders for the named q-series: q-Pochhammer products, eta factors
// f_h = (q^h; q^h)_inf and their quotients, Ramanujan's general theta
// function F(a, b) with monomial arguments, and the quintic quotient D(q).

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "overcubic/series.hpp"

namespace overcubic {

using ModulusOpt = std::optional<std::uint64_t>;

/// f_h^e.
struct EtaTerm {
  std::int64_t h = 1;
  std::int64_t e = 1;

  bool operator==(const EtaTerm&) const = default;
};

/// F(a, b) with a = sign_a * q^(pow_a / denominator) and
/// b = sign_b * q^(pow_b / denominator).
///
/// The denominator lets callers pass exponents such as (p^2 + p) / 2 without
/// pre-dividing; every exponent that actually contributes must come out
/// integral or theta_general throws EvalError("non-integral exponent").
struct ThetaSpec {
  int sign_a = 1;
  std::int64_t pow_a = 1;
  int sign_b = 1;
  std::int64_t pow_b = 1;
  std::int64_t denominator = 1;
};

/// (q^a; q^b)_inf = prod_{n>=0} (1 - q^(a + n b)).
TruncatedSeries pochhammer(std::int64_t a, std::int64_t b, std::size_t n, ModulusOpt modulus = {});

/// f_h from the pentagonal number theorem, sum_k (-1)^k q^(h k (3k-1)/2).
TruncatedSeries eta(std::int64_t h, std::size_t n, ModulusOpt modulus = {});

/// prod f_h^e to precision n. Repeated h values are merged.
TruncatedSeries eta_quotient(std::span<const EtaTerm> terms, std::size_t n, ModulusOpt modulus = {});

inline TruncatedSeries eta_quotient(std::initializer_list<EtaTerm> terms, std::size_t n,
                                    ModulusOpt modulus = {}) {
  return eta_quotient(std::span<const EtaTerm>(terms.begin(), terms.size()), n, modulus);
}

/// Bilateral sum over nu in Z of a^(nu(nu+1)/2) b^(nu(nu-1)/2).
TruncatedSeries theta_general(const ThetaSpec& spec, std::size_t n, ModulusOpt modulus = {});

/// phi(+-q^k) = F(+-q^k, +-q^k).
TruncatedSeries phi(std::int64_t k, bool negated, std::size_t n, ModulusOpt modulus = {});

/// phi(-q) = f_1^2 / f_2.
TruncatedSeries phi_neg(std::size_t n, ModulusOpt modulus = {});

/// psi(q^k) = F(q^k, q^(3k)).
TruncatedSeries psi(std::int64_t k, std::size_t n, ModulusOpt modulus = {});

/// D(q) = (q^2;q^5)(q^3;q^5) / ((q;q^5)(q^4;q^5)).
TruncatedSeries quintic_quotient(std::size_t n, ModulusOpt modulus = {});

/// Checks f_{pm}^{p^(k-1)} == f_m^{p^k} (mod p^k) through q^(n-1).
bool binomial_congruence_check(std::int64_t p, std::int64_t k, std::int64_t m, std::size_t n);

}  // namespace overcubic
