#pragma once

// Serialization of verification reports and coefficient tables.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "overcubic/congruence.hpp"
#include "overcubic/report.hpp"
#include "overcubic/series.hpp"

namespace overcubic {

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& name);

/// JSON: an array of
///   {"claim", "params", "modulus", "checked_terms", "status", "first_failure"}
/// With timing, the array moves under "reports" and per-report wall times
/// go to a sibling "meta" object, so the data section stays byte-stable.
void write_reports(std::ostream& out, const std::vector<VerificationReport>& reports, Format format,
                   bool timing = false);

void write_coefficients(std::ostream& out, const TruncatedSeries& series, Format format);

void write_candidates(std::ostream& out, const std::vector<ScanCandidate>& candidates, std::int64_t c,
                      std::size_t precision, Format format);

struct OracleRow {
  std::size_t n;
  std::uint64_t enumerated;
  Integer series;
  bool match;
};

void write_oracle(std::ostream& out, std::int64_t c, const std::vector<OracleRow>& rows, Format format);

}  // namespace overcubic
