#pragma once

// Arithmetic-progression extraction ("take the q^(pn+r) terms, divide by
// q^r, replace q^p by q"), its inverse, and numeric checks of the
// dissection lemmas the congruence proofs rely on.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "overcubic/report.hpp"
#include "overcubic/series.hpp"

namespace overcubic {

struct ApSelector {
  std::size_t step = 2;     // p >= 2
  std::size_t residue = 0;  // 0 <= r < p
};

/// coefficient[n] = a[p n + r]; precision ceil((precision(a) - r) / p).
TruncatedSeries extract_ap(const TruncatedSeries& a, ApSelector sel);

/// coefficient[n] = a[A n + B] for n < terms. Unlike extract_ap, B may be
/// any non-negative offset. Throws PrecisionError if a is too short.
TruncatedSeries extract_progression(const TruncatedSeries& a, std::size_t step, std::size_t offset,
                                    std::size_t terms);

/// sum_r q^r parts[r](q^p). Precision is the largest N for which every
/// exponent below N is determined by the parts, min_r (p * len_r + r).
TruncatedSeries reassemble(std::size_t step, std::span<const TruncatedSeries> parts);

enum class Lemma { PsiDissection, EtaDissection, InverseEtaSquared, InversePhi, EtaCubedQuintic };

/// Accepts "2.1" .. "2.5".
Lemma parse_lemma_id(std::string_view id);
const char* lemma_id(Lemma lemma);

/// Builds both sides of the lemma to precision n and compares them exactly.
/// p is required for the psi (p > 2) and f_1 (p >= 5) dissections and
/// ignored otherwise.
VerificationReport verify_lemma(Lemma lemma, std::int64_t p, std::size_t n);

enum class SideCondition { Psi, Eta };

/// Exhaustive check of the non-congruences that make the q^(pn + s)
/// component of the dissections consist of a single term.
bool dissection_side_condition(std::int64_t p, SideCondition which);

/// Which power of D(q^5) accompanies the q^0 term of the five-dissection
/// of f_1^3:
///   Direct:  f25^3 (D^3 - 3q D^2 + 5q^3 - 3q^5 D^-2 - q^6 D^-3)
///   Inverse: f25^3 (D^-3 - 3q D^-2 + 5q^3 - 3q^5 D^2 - q^6 D^3)
/// with D = (q^2;q^5)(q^3;q^5)/((q;q^5)(q^4;q^5)) evaluated at q^5. Only
/// Direct equals f_1^3; Inverse is kept so tests can pin that down.
enum class QuinticOrientation { Direct, Inverse };

TruncatedSeries eta_cubed_quintic_rhs(std::size_t n, QuinticOrientation orientation);

}  // namespace overcubic
