#include "overcubic/series.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "overcubic/errors.hpp"
#include "ring.hpp"

namespace overcubic {

using detail::ExactRing;
using detail::ModRing;

class SeriesAccess {
 public:
  static TruncatedSeries make_exact(std::vector<Integer> c) {
    TruncatedSeries s;
    s.coeffs_ = std::move(c);
    s.modulus_ = 0;
    return s;
  }
  static TruncatedSeries make_mod(std::vector<std::uint64_t> c, std::uint64_t m) {
    TruncatedSeries s;
    s.coeffs_ = std::move(c);
    s.modulus_ = m;
    return s;
  }
  static std::vector<Integer>& exact(TruncatedSeries& s) { return std::get<0>(s.coeffs_); }
  static std::vector<std::uint64_t>& mod(TruncatedSeries& s) { return std::get<1>(s.coeffs_); }
};

namespace {

template <class R>
using Vec = std::vector<typename R::value_type>;

TruncatedSeries wrap(std::vector<Integer> c, const ExactRing&) { return SeriesAccess::make_exact(std::move(c)); }
TruncatedSeries wrap(std::vector<std::uint64_t> c, const ModRing& r) {
  return SeriesAccess::make_mod(std::move(c), r.m);
}

// Calls f(ring, coeffs_a, coeffs_b) with the storage of matching mode.
template <class F>
decltype(auto) dispatch2(const TruncatedSeries& a, const TruncatedSeries& b, F&& f) {
  if (a.modulus() != b.modulus()) throw ModulusError("incompatible moduli");
  if (a.is_exact()) return f(ExactRing{}, a.exact_coeffs(), b.exact_coeffs());
  return f(ModRing(*a.modulus()), a.residue_coeffs(), b.residue_coeffs());
}

template <class F>
decltype(auto) dispatch1(const TruncatedSeries& a, F&& f) {
  if (a.is_exact()) return f(ExactRing{}, a.exact_coeffs());
  return f(ModRing(*a.modulus()), a.residue_coeffs());
}

template <class R>
Vec<R> schoolbook(const R& ring, const Vec<R>& a, const Vec<R>& b, std::size_t n) {
  Vec<R> out(n, typename R::value_type(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (ring.is_zero(a[i])) continue;
    for (std::size_t j = 0; i + j < n; ++j) ring.add_mul(out[i + j], a[i], b[j]);
  }
  return out;
}

// Residues below 2^32 have products below 2^64, so one output coefficient
// can be accumulated in 128 bits and reduced once.
template <>
Vec<ModRing> schoolbook<ModRing>(const ModRing& ring, const Vec<ModRing>& a, const Vec<ModRing>& b,
                                 std::size_t n) {
  Vec<ModRing> out(n, 0);
  if (ring.pow2) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t ai = a[i];
      if (ai == 0) continue;
      for (std::size_t j = 0; i + j < n; ++j) out[i + j] += ai * b[j];
    }
    for (auto& x : out) x &= ring.mask;
    return out;
  }
  if (ring.m <= (std::uint64_t{1} << 32)) {
    for (std::size_t k = 0; k < n; ++k) {
      unsigned __int128 acc = 0;
      for (std::size_t i = 0; i <= k; ++i) acc += static_cast<unsigned __int128>(a[i] * b[k - i]);
      out[k] = static_cast<std::uint64_t>(acc % ring.m);
    }
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) ring.add_mul(out[i + j], a[i], b[j]);
  }
  return out;
}

template <class T>
std::vector<std::pair<std::size_t, T>> nonzero_terms(const std::vector<T>& v, std::size_t n,
                                                     std::size_t from = 0) {
  std::vector<std::pair<std::size_t, T>> terms;
  for (std::size_t i = from; i < n; ++i)
    if (v[i] != 0) terms.emplace_back(i, v[i]);
  return terms;
}

template <class R>
Vec<R> sparse_multiply(const R& ring, const Vec<R>& sparse, const Vec<R>& dense, std::size_t n) {
  Vec<R> out(n, typename R::value_type(0));
  for (const auto& [shift, c] : nonzero_terms(sparse, n)) {
    for (std::size_t k = shift; k < n; ++k) ring.add_mul(out[k], c, dense[k - shift]);
  }
  return out;
}

template <>
Vec<ModRing> sparse_multiply<ModRing>(const ModRing& ring, const Vec<ModRing>& sparse,
                                      const Vec<ModRing>& dense, std::size_t n) {
  Vec<ModRing> out(n, 0);
  const std::uint64_t minus_one = ring.m - 1;
  for (const auto& [shift, c] : nonzero_terms(sparse, n)) {
    std::uint64_t* dst = out.data() + shift;
    const std::uint64_t* src = dense.data();
    const std::size_t len = n - shift;
    if (ring.pow2) {
      // Wrapping arithmetic is exact mod 2^64 and hence mod every 2^k.
      for (std::size_t k = 0; k < len; ++k) dst[k] += c * src[k];
    } else if (c == 1) {
      for (std::size_t k = 0; k < len; ++k) dst[k] = ring.add(dst[k], src[k]);
    } else if (c == minus_one) {
      for (std::size_t k = 0; k < len; ++k) dst[k] = ring.sub(dst[k], src[k]);
    } else {
      for (std::size_t k = 0; k < len; ++k) ring.add_mul(dst[k], c, src[k]);
    }
  }
  if (ring.pow2)
    for (auto& x : out) x &= ring.mask;
  return out;
}

template <class R>
Vec<R> forward_divide(const R& ring, const Vec<R>& num, const Vec<R>& den, std::size_t n) {
  auto inv0 = ring.unit_inverse(den[0]);
  if (!inv0) throw NotInvertibleError("series not invertible");
  const auto terms = nonzero_terms(den, n, 1);
  Vec<R> out(n, typename R::value_type(0));
  for (std::size_t k = 0; k < n; ++k) {
    typename R::value_type acc = num[k];
    for (const auto& [shift, c] : terms) {
      if (shift > k) break;
      ring.sub_mul(acc, c, out[k - shift]);
    }
    out[k] = ring.mul(acc, *inv0);
  }
  return out;
}

template <>
Vec<ModRing> forward_divide<ModRing>(const ModRing& ring, const Vec<ModRing>& num, const Vec<ModRing>& den,
                                     std::size_t n) {
  auto inv0 = ring.unit_inverse(den[0]);
  if (!inv0) throw NotInvertibleError("series not invertible");
  const auto terms = nonzero_terms(den, n, 1);
  Vec<ModRing> out(n, 0);
  if (ring.pow2) {
    for (std::size_t k = 0; k < n; ++k) {
      std::uint64_t acc = num[k];
      for (const auto& [shift, c] : terms) {
        if (shift > k) break;
        acc -= c * out[k - shift];
      }
      out[k] = (acc * *inv0) & ring.mask;
    }
    return out;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::uint64_t acc = num[k];
    for (const auto& [shift, c] : terms) {
      if (shift > k) break;
      ring.sub_mul(acc, c, out[k - shift]);
    }
    out[k] = ring.mul(acc, *inv0);
  }
  return out;
}

// Sparse path pays off once the sparser factor has few nonzero terms.
bool prefer_sparse(std::size_t nnz, std::size_t n) { return nnz * 8 < n; }

}  // namespace

// ---------------------------------------------------------------------------

TruncatedSeries TruncatedSeries::exact(std::vector<Integer> coeffs) {
  if (coeffs.empty()) throw DomainError("precision must be at least 1");
  return SeriesAccess::make_exact(std::move(coeffs));
}

TruncatedSeries TruncatedSeries::residues(std::vector<std::uint64_t> coeffs, std::uint64_t modulus) {
  if (coeffs.empty()) throw DomainError("precision must be at least 1");
  if (modulus == 0) throw DomainError("modulus must be positive");
  for (auto c : coeffs)
    if (c >= modulus) throw DomainError("residue out of range");
  return SeriesAccess::make_mod(std::move(coeffs), modulus);
}

TruncatedSeries TruncatedSeries::from_integers(const std::vector<Integer>& coeffs,
                                               std::optional<std::uint64_t> modulus) {
  if (!modulus) return exact(coeffs);
  ModRing ring(*modulus);
  std::vector<std::uint64_t> r;
  r.reserve(coeffs.size());
  for (const auto& c : coeffs) r.push_back(ring.from_integer(c));
  return residues(std::move(r), *modulus);
}

TruncatedSeries TruncatedSeries::zero(std::size_t precision, std::optional<std::uint64_t> modulus) {
  if (precision == 0) throw DomainError("precision must be at least 1");
  if (!modulus) return SeriesAccess::make_exact(std::vector<Integer>(precision));
  if (*modulus == 0) throw DomainError("modulus must be positive");
  return SeriesAccess::make_mod(std::vector<std::uint64_t>(precision, 0), *modulus);
}

TruncatedSeries TruncatedSeries::one(std::size_t precision, std::optional<std::uint64_t> modulus) {
  return monomial(1, 0, precision, modulus);
}

TruncatedSeries TruncatedSeries::monomial(const Integer& coeff, std::size_t exponent, std::size_t precision,
                                          std::optional<std::uint64_t> modulus) {
  TruncatedSeries s = zero(precision, modulus);
  if (exponent >= precision) return s;
  if (s.is_exact())
    SeriesAccess::exact(s)[exponent] = coeff;
  else
    SeriesAccess::mod(s)[exponent] = ModRing(*modulus).from_integer(coeff);
  return s;
}

std::size_t TruncatedSeries::precision() const noexcept {
  return std::visit([](const auto& v) { return v.size(); }, coeffs_);
}

std::optional<std::uint64_t> TruncatedSeries::modulus() const noexcept {
  if (modulus_ == 0) return std::nullopt;
  return modulus_;
}

Integer TruncatedSeries::coeff(std::size_t n) const {
  if (n >= precision())
    throw PrecisionError("coefficient " + std::to_string(n) + " beyond precision " + std::to_string(precision()));
  if (is_exact()) return std::get<0>(coeffs_)[n];
  Integer out;
  const std::uint64_t r = std::get<1>(coeffs_)[n];
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(r), 0, 0, &r);
  return out;
}

bool TruncatedSeries::coeff_is_zero(std::size_t n) const {
  if (n >= precision()) throw PrecisionError("coefficient beyond precision");
  if (is_exact()) return sgn(std::get<0>(coeffs_)[n]) == 0;
  return std::get<1>(coeffs_)[n] == 0;
}

std::vector<Integer> TruncatedSeries::coeffs() const {
  std::vector<Integer> out;
  out.reserve(precision());
  for (std::size_t i = 0; i < precision(); ++i) out.push_back(coeff(i));
  return out;
}

const std::vector<Integer>& TruncatedSeries::exact_coeffs() const {
  if (!is_exact()) throw ModulusError("series is modular");
  return std::get<0>(coeffs_);
}

const std::vector<std::uint64_t>& TruncatedSeries::residue_coeffs() const {
  if (is_exact()) throw ModulusError("series is exact");
  return std::get<1>(coeffs_);
}

std::size_t TruncatedSeries::nonzero_count() const {
  return std::visit(
      [](const auto& v) {
        return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const auto& x) { return x != 0; }));
      },
      coeffs_);
}

TruncatedSeries TruncatedSeries::truncated(std::size_t n) const {
  if (n == 0) throw DomainError("precision must be at least 1");
  if (n > precision()) throw PrecisionError("cannot extend precision by truncation");
  TruncatedSeries s = *this;
  std::visit([n](auto& v) { v.resize(n); }, s.coeffs_);
  return s;
}

// ---------------------------------------------------------------------------

TruncatedSeries combine(const TruncatedSeries& a, const TruncatedSeries& b, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  const std::size_t n = std::min(a.precision(), b.precision());
  return dispatch2(a, b, [&](const auto& ring, const auto& x, const auto& y) {
    std::remove_cvref_t<decltype(x)> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = sign > 0 ? ring.add(x[i], y[i]) : ring.sub(x[i], y[i]);
    return wrap(std::move(out), ring);
  });
}

TruncatedSeries multiply_schoolbook(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.precision(), b.precision());
  return dispatch2(a, b, [&](const auto& ring, const auto& x, const auto& y) {
    return wrap(schoolbook(ring, x, y, n), ring);
  });
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.precision(), b.precision());
  return dispatch2(a, b, [&](const auto& ring, const auto& x, const auto& y) {
    auto count = [n](const auto& v) {
      return static_cast<std::size_t>(std::count_if(v.begin(), v.begin() + n, [](const auto& c) { return c != 0; }));
    };
    const std::size_t nx = count(x);
    const std::size_t ny = count(y);
    if (prefer_sparse(std::min(nx, ny), n))
      return wrap(nx <= ny ? sparse_multiply(ring, x, y, n) : sparse_multiply(ring, y, x, n), ring);
    return wrap(schoolbook(ring, x, y, n), ring);
  });
}

TruncatedSeries scale(const TruncatedSeries& a, const Integer& factor) {
  return dispatch1(a, [&](const auto& ring, const auto& x) {
    const auto c = ring.from_integer(factor);
    std::remove_cvref_t<decltype(x)> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = ring.mul(c, x[i]);
    return wrap(std::move(out), ring);
  });
}

TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& d) {
  const std::size_t n = std::min(a.precision(), d.precision());
  return dispatch2(a, d, [&](const auto& ring, const auto& x, const auto& y) {
    return wrap(forward_divide(ring, x, y, n), ring);
  });
}

TruncatedSeries inverse(const TruncatedSeries& a) {
  return divide(TruncatedSeries::one(a.precision(), a.modulus()), a);
}

TruncatedSeries power(const TruncatedSeries& a, std::int64_t exponent) {
  const std::size_t n = a.precision();
  if (exponent == 0) return TruncatedSeries::one(n, a.modulus());
  const std::uint64_t e = exponent < 0 ? 0 - static_cast<std::uint64_t>(exponent) : exponent;

  // Sparse bases (eta and theta factors) are cheapest applied one factor at
  // a time; everything else goes through repeated squaring.
  const std::size_t nnz = a.nonzero_count();
  if (e * nnz <= static_cast<std::uint64_t>(std::bit_width(e)) * n || prefer_sparse(nnz, n)) {
    TruncatedSeries acc = TruncatedSeries::one(n, a.modulus());
    for (std::uint64_t i = 0; i < e; ++i) acc = exponent > 0 ? multiply(acc, a) : divide(acc, a);
    return acc;
  }
  TruncatedSeries base = exponent > 0 ? a : inverse(a);
  TruncatedSeries acc = TruncatedSeries::one(n, a.modulus());
  for (std::uint64_t k = e; k != 0; k >>= 1) {
    if (k & 1) acc = multiply(acc, base);
    if (k > 1) base = multiply(base, base);
  }
  return acc;
}

TruncatedSeries shift(const TruncatedSeries& a, std::size_t k) {
  if (k == 0) return a;
  return dispatch1(a, [&](const auto& ring, const auto& x) {
    std::remove_cvref_t<decltype(x)> out(x.size() + k);
    std::copy(x.begin(), x.end(), out.begin() + static_cast<std::ptrdiff_t>(k));
    return wrap(std::move(out), ring);
  });
}

TruncatedSeries stretch(const TruncatedSeries& a, std::size_t k) {
  if (k == 0) throw DomainError("stretch factor must be positive");
  if (k == 1) return a;
  return dispatch1(a, [&](const auto& ring, const auto& x) {
    std::remove_cvref_t<decltype(x)> out(x.size() * k);
    for (std::size_t i = 0; i < x.size(); ++i) out[i * k] = x[i];
    return wrap(std::move(out), ring);
  });
}

TruncatedSeries reduce_mod(const TruncatedSeries& a, std::uint64_t m) {
  if (m == 0) throw DomainError("modulus must be positive");
  if (a.is_exact()) return TruncatedSeries::from_integers(a.exact_coeffs(), m);
  if (*a.modulus() % m != 0)
    throw ModulusError("modulus " + std::to_string(m) + " does not divide " + std::to_string(*a.modulus()));
  std::vector<std::uint64_t> out(a.residue_coeffs());
  for (auto& x : out) x %= m;
  return TruncatedSeries::residues(std::move(out), m);
}

Comparison compare(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t n,
                   std::optional<std::uint64_t> m) {
  if (a.precision() < n || b.precision() < n)
    throw PrecisionError("comparison to " + std::to_string(n) + " terms needs precision " + std::to_string(n) +
                         ", have " + std::to_string(std::min(a.precision(), b.precision())));
  if (n == 0) return {};
  std::optional<std::uint64_t> mod = m;
  if (!mod) {
    if (a.modulus() != b.modulus() && !a.is_exact() && !b.is_exact())
      throw ModulusError("incompatible moduli");
    mod = a.modulus() ? a.modulus() : b.modulus();
  }
  const TruncatedSeries lhs = mod ? reduce_mod(a.truncated(n), *mod) : a.truncated(n);
  const TruncatedSeries rhs = mod ? reduce_mod(b.truncated(n), *mod) : b.truncated(n);
  Comparison result;
  for (std::size_t i = 0; i < n; ++i) {
    const bool same = lhs.is_exact() ? lhs.exact_coeffs()[i] == rhs.exact_coeffs()[i]
                                     : lhs.residue_coeffs()[i] == rhs.residue_coeffs()[i];
    if (!same) {
      result.equal = false;
      result.first_mismatch = i;
      break;
    }
  }
  return result;
}

}  // namespace overcubic
