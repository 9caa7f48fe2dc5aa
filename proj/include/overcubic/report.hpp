#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace overcubic {

enum class Status { Pass, Fail, Filtered };

const char* to_string(Status s);

/// Outcome of checking one instantiated identity or congruence.
struct VerificationReport {
  std::string claim;
  std::map<std::string, std::int64_t> params;
  std::uint64_t modulus = 0;  // 0: exact comparison
  std::size_t precision = 0;  // coefficients of the underlying series used
  std::size_t checked_terms = 0;
  Status status = Status::Pass;
  std::optional<std::size_t> first_failure;
  double wall_seconds = 0.0;

  bool passed() const { return status != Status::Fail; }
};

}  // namespace overcubic
