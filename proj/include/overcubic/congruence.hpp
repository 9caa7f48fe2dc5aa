#pragma once

// Generalized overcubic partition numbers and the registry of congruence
// claims about them, together with the machinery that checks each claim
// on a finite prefix.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "overcubic/qexpr.hpp"
#include "overcubic/report.hpp"
#include "overcubic/series.hpp"

namespace overcubic {

/// sum_n abar_c(n) q^n = f4^(c-1) / (f1^2 f2^(2c-3)).
TruncatedSeries gen_overcubic(std::int64_t c, std::size_t n, std::optional<std::uint64_t> modulus = {});

/// Legendre symbol (a/p) for an odd prime p, via Euler's criterion.
int legendre(std::int64_t a, std::int64_t p);

/// Values a parameter ranges over.
struct ParamDomain {
  std::string name;
  std::vector<std::int64_t> values;
};

/// "abar_family(A n + B) == rhs (mod M)" for every instantiation of the
/// parameters. The claim text form is one line of key=value fields:
///
///   id=Thm3.3 family=2*m+2 A=8*p^(2*alpha) B=p^(2*alpha) mod=8
///   rhs=2*f1*f2 domain=m=0..2;alpha=0..1;p=primes(5..13) legendre=-2
///
/// Fields:
///   id, family, A, B, mod   required; integer expressions over parameters;
///                           mod=0 means an exact identity
///   rhs                     0 | family | eta expression (no spaces)
///   rhs_family, rhs_A, rhs_B  the compared abar progression when rhs=family
///   domain                  name=lo..hi | name=v1,v2 | name=primes(lo..hi),
///                           entries separated by ';'
///   legendre                a: keep only instances with (a/p) = -1
///   sieve                   parameter s: skip progression indices n = 0 mod s
///   note                    free text without spaces (ignored)
struct CongruenceClaim {
  enum class Rhs { Zero, Series, Family };

  std::string id;
  IntExpr family = IntExpr::parse("1");
  IntExpr step = IntExpr::parse("1");
  IntExpr offset = IntExpr::parse("0");
  IntExpr modulus = IntExpr::parse("0");
  Rhs rhs = Rhs::Zero;
  std::optional<EtaExpr> rhs_series;
  IntExpr rhs_family = IntExpr::parse("1");
  IntExpr rhs_step = IntExpr::parse("1");
  IntExpr rhs_offset = IntExpr::parse("0");
  std::vector<ParamDomain> domain;
  std::optional<std::int64_t> legendre_filter;
  std::optional<std::string> sieve;
  std::string line;  // source text
};

CongruenceClaim parse_claim_line(std::string_view line);

/// One claim per non-blank line; '#' starts a comment line.
std::vector<CongruenceClaim> parse_claim_file(std::istream& in);

/// Built-in claims: the theorems, corollaries and the intermediate identities
/// of their proofs.
const std::vector<CongruenceClaim>& claims_registry();

const CongruenceClaim* find_claim(const std::vector<CongruenceClaim>& claims, std::string_view id);

struct VerifyOptions {
  /// Largest abar index inspected. Unset: each instance is sized to check
  /// exactly min_terms progression terms.
  std::optional<std::size_t> nmax;
  std::size_t min_terms = 50;
  /// Replaces the claim's domain for the named parameters.
  std::map<std::string, std::vector<std::int64_t>> domain_overrides;
};

/// One report per parameter instantiation, sorted by claim id then params.
/// Throws PrecisionError when nmax leaves some instance with fewer than
/// min_terms checked terms.
std::vector<VerificationReport> verify_claims(const std::vector<CongruenceClaim>& claims,
                                              const VerifyOptions& options);

std::vector<VerificationReport> verify_claim(const CongruenceClaim& claim, const VerifyOptions& options);

struct ScanCandidate {
  std::size_t step;
  std::size_t offset;
  std::uint64_t modulus;
  std::size_t checked_terms;

  bool operator==(const ScanCandidate&) const = default;
};

/// Every (A <= a_max, 0 <= B < A, M) with abar_c(A n + B) = 0 (mod M) for
/// all A n + B < n. Results are empirical; n must be at least 100 * a_max.
std::vector<ScanCandidate> scan_congruences(std::int64_t c, std::size_t a_max,
                                            const std::vector<std::uint64_t>& moduli, std::size_t n);

/// p(5n+4) = 0 mod 5, p(7n+5) = 0 mod 7, p(11n+6) = 0 mod 11 at every such
/// index below n. first_failure is the failing partition index.
VerificationReport classical_sanity(std::size_t n);

}  // namespace overcubic
