#include "overcubic/arith.hpp"

namespace overcubic {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> primes_between(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = lo < 2 ? 2 : lo; n <= hi; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

std::optional<std::int64_t> checked_pow(std::int64_t b, std::int64_t e) {
  if (e < 0) return std::nullopt;
  std::int64_t acc = 1;
  for (std::int64_t i = 0; i < e; ++i)
    if (__builtin_mul_overflow(acc, b, &acc)) return std::nullopt;
  return acc;
}

}  // namespace overcubic
