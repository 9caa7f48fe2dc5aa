#pragma once

// Coefficient rings used by the series kernels. Internal header.

#include <cstdint>
#include <optional>

#include <gmpxx.h>

#include "overcubic/errors.hpp"

namespace overcubic::detail {

struct ExactRing {
  using value_type = mpz_class;

  bool is_zero(const mpz_class& x) const { return sgn(x) == 0; }
  mpz_class from_integer(const mpz_class& x) const { return x; }
  mpz_class from_int(std::int64_t x) const { return mpz_class(static_cast<long>(x)); }
  mpz_class add(const mpz_class& a, const mpz_class& b) const { return a + b; }
  mpz_class sub(const mpz_class& a, const mpz_class& b) const { return a - b; }
  mpz_class mul(const mpz_class& a, const mpz_class& b) const { return a * b; }
  void add_mul(mpz_class& acc, const mpz_class& a, const mpz_class& b) const {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  void sub_mul(mpz_class& acc, const mpz_class& a, const mpz_class& b) const {
    mpz_submul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  // Only +-1 are units of Z.
  std::optional<mpz_class> unit_inverse(const mpz_class& c) const {
    if (c == 1 || c == -1) return c;
    return std::nullopt;
  }
};

struct ModRing {
  using value_type = std::uint64_t;

  explicit ModRing(std::uint64_t modulus)
      : m(modulus), pow2((modulus & (modulus - 1)) == 0), mask(modulus - 1) {
    if (modulus == 0) throw DomainError("modulus must be positive");
  }

  std::uint64_t m;
  bool pow2;
  std::uint64_t mask;

  bool is_zero(std::uint64_t x) const { return x == 0; }

  std::uint64_t from_integer(const mpz_class& x) const {
    mpz_class r;
    mpz_class mm;
    mpz_import(mm.get_mpz_t(), 1, 1, sizeof(m), 0, 0, &m);
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), mm.get_mpz_t());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
    return out;
  }

  std::uint64_t from_int(std::int64_t x) const {
    if (x >= 0) return static_cast<std::uint64_t>(x) % m;
    std::uint64_t r = (0 - static_cast<std::uint64_t>(x)) % m;
    return r == 0 ? 0 : m - r;
  }

  std::uint64_t reduce(std::uint64_t x) const { return pow2 ? (x & mask) : x % m; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    if (pow2) return (a + b) & mask;
    std::uint64_t s = a + b;
    if (s < a || s >= m) s -= m;
    return s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    if (pow2) return (a - b) & mask;
    return a >= b ? a - b : a + (m - b);
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (pow2) return (a * b) & mask;
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
  }
  void add_mul(std::uint64_t& acc, std::uint64_t a, std::uint64_t b) const { acc = add(acc, mul(a, b)); }
  void sub_mul(std::uint64_t& acc, std::uint64_t a, std::uint64_t b) const { acc = sub(acc, mul(a, b)); }

  std::optional<std::uint64_t> unit_inverse(std::uint64_t c) const {
    if (m == 1) return 0;
    // Extended Euclid over signed 128-bit to cover moduli up to 2^64 - 1.
    __int128 r0 = m, r1 = c, s0 = 0, s1 = 1;
    while (r1 != 0) {
      __int128 quot = r0 / r1;
      __int128 tmp = r0 - quot * r1;
      r0 = r1;
      r1 = tmp;
      tmp = s0 - quot * s1;
      s0 = s1;
      s1 = tmp;
    }
    if (r0 != 1) return std::nullopt;
    __int128 mm = m;
    __int128 inv = s0 % mm;
    if (inv < 0) inv += mm;
    return static_cast<std::uint64_t>(inv);
  }
};

}  // namespace overcubic::detail
