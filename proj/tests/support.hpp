#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "overcubic/series.hpp"

namespace testing {

using overcubic::Integer;
using overcubic::TruncatedSeries;

// Coefficients in [-bound, bound]; a fraction `density` of them nonzero.
inline TruncatedSeries random_exact(std::mt19937_64& rng, std::size_t n, std::int64_t bound, double density = 1.0) {
  std::uniform_int_distribution<std::int64_t> coeff(-bound, bound);
  std::bernoulli_distribution keep(density);
  std::vector<Integer> c(n);
  for (auto& x : c)
    if (keep(rng)) x = static_cast<long>(coeff(rng));
  return TruncatedSeries::exact(std::move(c));
}

inline TruncatedSeries random_residues(std::mt19937_64& rng, std::size_t n, std::uint64_t m, double density = 1.0) {
  std::uniform_int_distribution<std::uint64_t> coeff(0, m - 1);
  std::bernoulli_distribution keep(density);
  std::vector<std::uint64_t> c(n);
  for (auto& x : c)
    if (keep(rng)) x = coeff(rng);
  return TruncatedSeries::residues(std::move(c), m);
}

// Same, but with constant term +-1 so the series is invertible.
inline TruncatedSeries random_unit(std::mt19937_64& rng, std::size_t n, std::int64_t bound, double density = 1.0) {
  auto s = random_exact(rng, n, bound, density);
  auto c = s.coeffs();
  c[0] = (rng() & 1) ? 1 : -1;
  return TruncatedSeries::exact(std::move(c));
}

}  // namespace testing
