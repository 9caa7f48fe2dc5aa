#pragma once

// Truncated formal power series in q, over the integers or over Z/MZ.
//
// A series of precision N knows exactly the coefficients of q^0 .. q^(N-1).
// Binary operations return the smaller of the two precisions, and every
// comparison must name the number of coefficients it inspects.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace overcubic {

using Integer = mpz_class;

class TruncatedSeries {
 public:
  /// Exact series from explicit coefficients; precision = coeffs.size() >= 1.
  static TruncatedSeries exact(std::vector<Integer> coeffs);

  /// Residue series; every entry must already lie in [0, modulus).
  static TruncatedSeries residues(std::vector<std::uint64_t> coeffs, std::uint64_t modulus);

  /// Exact coefficients, reduced into [0, M) when a modulus is given.
  static TruncatedSeries from_integers(const std::vector<Integer>& coeffs,
                                       std::optional<std::uint64_t> modulus);

  static TruncatedSeries zero(std::size_t precision, std::optional<std::uint64_t> modulus = {});
  static TruncatedSeries one(std::size_t precision, std::optional<std::uint64_t> modulus = {});
  static TruncatedSeries monomial(const Integer& coeff, std::size_t exponent, std::size_t precision,
                                  std::optional<std::uint64_t> modulus = {});

  std::size_t precision() const noexcept;
  std::optional<std::uint64_t> modulus() const noexcept;
  bool is_exact() const noexcept { return modulus_ == 0; }

  /// Coefficient of q^n as an integer (the residue in modular mode).
  Integer coeff(std::size_t n) const;
  bool coeff_is_zero(std::size_t n) const;
  std::vector<Integer> coeffs() const;

  /// Direct storage access; throws ModulusError on the wrong mode.
  const std::vector<Integer>& exact_coeffs() const;
  const std::vector<std::uint64_t>& residue_coeffs() const;

  std::size_t nonzero_count() const;

  /// First n coefficients; n must not exceed the precision.
  TruncatedSeries truncated(std::size_t n) const;

  bool operator==(const TruncatedSeries& other) const = default;

 private:
  TruncatedSeries() = default;

  std::variant<std::vector<Integer>, std::vector<std::uint64_t>> coeffs_;
  std::uint64_t modulus_ = 0;  // 0 means exact

  friend class SeriesAccess;
};

/// Coefficient-wise a + sign * b, sign in {+1, -1}.
TruncatedSeries combine(const TruncatedSeries& a, const TruncatedSeries& b, int sign);

/// Cauchy product. Uses a sparse kernel when one factor has few nonzero
/// terms; the result is always identical to multiply_schoolbook.
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

/// Reference O(N^2) convolution.
TruncatedSeries multiply_schoolbook(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries scale(const TruncatedSeries& a, const Integer& factor);

/// Multiplicative inverse. The constant term must be +-1 (exact mode) or
/// invertible mod M.
TruncatedSeries inverse(const TruncatedSeries& a);

/// Solves d * result = a by forward substitution; cost O(N * nnz(d)).
TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& d);

TruncatedSeries power(const TruncatedSeries& a, std::int64_t exponent);

/// Multiplies by q^k. The k new low coefficients are known zeros, so the
/// precision grows by k.
TruncatedSeries shift(const TruncatedSeries& a, std::size_t k);

/// a(q^k). Precision becomes k * precision(a).
TruncatedSeries stretch(const TruncatedSeries& a, std::size_t k);

/// Reduces into [0, M). `a` must be exact or carry a modulus divisible by M.
TruncatedSeries reduce_mod(const TruncatedSeries& a, std::uint64_t m);

struct Comparison {
  bool equal = true;
  std::optional<std::size_t> first_mismatch;

  explicit operator bool() const noexcept { return equal; }
};

/// Compares q^0 .. q^(n-1), after reduction mod M when given. Throws
/// PrecisionError if either side knows fewer than n coefficients.
Comparison compare(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t n,
                   std::optional<std::uint64_t> m = {});

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  return combine(a, b, +1);
}
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return combine(a, b, -1);
}
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  return multiply(a, b);
}

}  // namespace overcubic
