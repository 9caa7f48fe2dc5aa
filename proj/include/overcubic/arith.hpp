#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace overcubic {

bool is_prime(std::int64_t n);

/// Primes in [lo, hi], ascending.
std::vector<std::int64_t> primes_between(std::int64_t lo, std::int64_t hi);

/// b^e with overflow detection; nullopt on overflow or negative e.
std::optional<std::int64_t> checked_pow(std::int64_t b, std::int64_t e);

}  // namespace overcubic
