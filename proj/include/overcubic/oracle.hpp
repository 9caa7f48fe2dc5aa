#pragma once

// Ground truth computed without the series engine: exhaustive enumeration
// of (generalized) overcubic partitions and a factor-by-factor product
// expansion.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "overcubic/qfactory.hpp"
#include "overcubic/series.hpp"

namespace overcubic {

inline constexpr std::size_t kOverpartitionBound = 40;
inline constexpr std::int64_t kOvercubicMaxC = 6;
inline constexpr std::size_t kOvercubicBound = 25;

/// Overpartitions of n (into even parts only when even_only), counted by
/// visiting every object. Throws DomainError for n > 40.
std::uint64_t enumerate_overpartitions(std::size_t n, bool even_only);

/// Objects counted by abar_c(n): one overpartition plus c-1 overpartitions
/// into even parts, sizes summing to n. c <= 6, n <= 25.
std::uint64_t enumerate_overcubic(std::int64_t c, std::size_t n);

/// Every object for n <= 6, one per line. An overlined part is written
/// with a trailing apostrophe; layers are separated by " | ".
std::vector<std::string> list_overpartitions(std::size_t n, bool even_only);
std::vector<std::string> list_overcubic(std::int64_t c, std::size_t n);

/// prod_h prod_{k>=1} (1 - q^(h k))^e expanded one binomial factor at a
/// time; negative powers multiply by the truncated geometric series.
TruncatedSeries naive_product_series(const std::vector<EtaTerm>& terms, std::size_t n);

}  // namespace overcubic
