#include "overcubic/dissect.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "overcubic/arith.hpp"
#include "overcubic/errors.hpp"
#include "overcubic/qfactory.hpp"

namespace overcubic {

namespace {

std::int64_t exact_div(std::int64_t num, std::int64_t den) {
  if (num % den != 0)
    throw EvalError("non-integral exponent " + std::to_string(num) + "/" + std::to_string(den));
  return num / den;
}

std::size_t as_shift(std::int64_t e) {
  if (e < 0) throw EvalError("negative q-shift " + std::to_string(e));
  return static_cast<std::size_t>(e);
}

bool is_odd(std::int64_t k) { return k % 2 != 0; }

// (+-p - 1)/6, the index whose term is split off in the f_1 dissection.
std::int64_t excluded_index(std::int64_t p) { return p % 6 == 1 ? (p - 1) / 6 : (-p - 1) / 6; }

void require_prime(std::int64_t p, std::int64_t min, const char* what) {
  if (p < min || !is_prime(p))
    throw DomainError(std::string(what) + " needs a prime p >= " + std::to_string(min) + ", got " +
                      std::to_string(p));
}

TruncatedSeries psi_dissection_rhs(std::int64_t p, std::size_t n) {
  TruncatedSeries acc = shift(psi(p * p, n), as_shift(exact_div(p * p - 1, 8)));
  for (std::int64_t j = 0; j <= (p - 3) / 2; ++j) {
    const ThetaSpec spec{1, p * p + (2 * j + 1) * p, 1, p * p - (2 * j + 1) * p, 2};
    acc = acc + shift(theta_general(spec, n), as_shift(exact_div(j * j + j, 2)));
  }
  return acc;
}

TruncatedSeries eta_dissection_rhs(std::int64_t p, std::size_t n) {
  const std::int64_t skip = excluded_index(p);
  TruncatedSeries tail = shift(eta(p * p, n), as_shift(exact_div(p * p - 1, 24)));
  TruncatedSeries acc = is_odd(skip) ? scale(tail, -1) : tail;
  for (std::int64_t k = -(p - 1) / 2; k <= (p - 1) / 2; ++k) {
    if (k == skip) continue;
    const ThetaSpec spec{-1, 3 * p * p + (6 * k + 1) * p, -1, 3 * p * p - (6 * k + 1) * p, 2};
    TruncatedSeries term = shift(theta_general(spec, n), as_shift(exact_div(3 * k * k + k, 2)));
    acc = combine(acc, term, is_odd(k) ? -1 : 1);
  }
  return acc;
}

TruncatedSeries inverse_eta_squared_rhs(std::size_t n) {
  const auto even = eta_quotient({{8, 5}, {2, -5}, {16, -2}}, n);
  const auto odd = eta_quotient({{4, 2}, {16, 2}, {2, -5}, {8, -1}}, n);
  return even + scale(shift(odd, 1), 2);
}

TruncatedSeries inverse_phi_rhs(std::size_t n) {
  const auto phi4 = phi(4, false, n);
  const auto psi8 = psi(8, n);
  TruncatedSeries acc = power(phi4, 3);
  acc = acc + scale(shift(power(phi4, 2) * psi8, 1), 2);
  acc = acc + scale(shift(phi4 * power(psi8, 2), 2), 4);
  acc = acc + scale(shift(power(psi8, 3), 3), 8);
  return divide(acc, power(phi(4, true, n), 4));
}

}  // namespace

TruncatedSeries extract_ap(const TruncatedSeries& a, ApSelector sel) {
  if (sel.step < 2) throw DomainError("progression step must be at least 2");
  if (sel.residue >= sel.step) throw DomainError("residue must satisfy 0 <= r < p");
  if (a.precision() <= sel.residue)
    throw PrecisionError("precision " + std::to_string(a.precision()) + " too small for residue " +
                         std::to_string(sel.residue));
  const std::size_t len = (a.precision() - sel.residue + sel.step - 1) / sel.step;
  return extract_progression(a, sel.step, sel.residue, len);
}

TruncatedSeries extract_progression(const TruncatedSeries& a, std::size_t step, std::size_t offset,
                                    std::size_t terms) {
  if (step < 1) throw DomainError("progression step must be positive");
  if (terms == 0) throw DomainError("need at least one term");
  const std::size_t last = step * (terms - 1) + offset;
  if (last >= a.precision())
    throw PrecisionError("progression " + std::to_string(step) + "n+" + std::to_string(offset) + " to " +
                         std::to_string(terms) + " terms needs precision " + std::to_string(last + 1) +
                         ", have " + std::to_string(a.precision()));
  if (a.is_exact()) {
    std::vector<Integer> out(terms);
    for (std::size_t n = 0; n < terms; ++n) out[n] = a.exact_coeffs()[step * n + offset];
    return TruncatedSeries::exact(std::move(out));
  }
  std::vector<std::uint64_t> out(terms);
  for (std::size_t n = 0; n < terms; ++n) out[n] = a.residue_coeffs()[step * n + offset];
  return TruncatedSeries::residues(std::move(out), *a.modulus());
}

TruncatedSeries reassemble(std::size_t step, std::span<const TruncatedSeries> parts) {
  if (step < 1) throw DomainError("step must be positive");
  if (parts.size() != step)
    throw DomainError("reassemble needs exactly " + std::to_string(step) + " parts, got " +
                      std::to_string(parts.size()));
  std::size_t len = SIZE_MAX;
  for (std::size_t r = 0; r < step; ++r) len = std::min(len, step * parts[r].precision() + r);
  TruncatedSeries acc = TruncatedSeries::zero(len, parts[0].modulus());
  for (std::size_t r = 0; r < step; ++r) acc = acc + shift(stretch(parts[r], step), r);
  return acc.truncated(len);
}

Lemma parse_lemma_id(std::string_view id) {
  if (id == "2.1") return Lemma::PsiDissection;
  if (id == "2.2") return Lemma::EtaDissection;
  if (id == "2.3") return Lemma::InverseEtaSquared;
  if (id == "2.4") return Lemma::InversePhi;
  if (id == "2.5") return Lemma::EtaCubedQuintic;
  throw DomainError("unknown lemma id '" + std::string(id) + "' (expected 2.1 .. 2.5)");
}

const char* lemma_id(Lemma lemma) {
  switch (lemma) {
    case Lemma::PsiDissection:
      return "2.1";
    case Lemma::EtaDissection:
      return "2.2";
    case Lemma::InverseEtaSquared:
      return "2.3";
    case Lemma::InversePhi:
      return "2.4";
    case Lemma::EtaCubedQuintic:
      return "2.5";
  }
  return "?";
}

TruncatedSeries eta_cubed_quintic_rhs(std::size_t n, QuinticOrientation orientation) {
  const std::size_t inner = (n + 4) / 5;
  const auto d = quintic_quotient(inner);
  const auto d_inv = inverse(d);
  const auto& up = orientation == QuinticOrientation::Direct ? d : d_inv;
  const auto& down = orientation == QuinticOrientation::Direct ? d_inv : d;
  auto at5 = [n](const TruncatedSeries& s) { return stretch(s, 5).truncated(n); };

  TruncatedSeries acc = at5(power(up, 3));
  acc = acc - scale(shift(at5(power(up, 2)), 1), 3);
  acc = acc + TruncatedSeries::monomial(5, 3, n);
  acc = acc - scale(shift(at5(power(down, 2)), 5), 3);
  acc = acc - shift(at5(power(down, 3)), 6);
  return eta_quotient({{25, 3}}, n) * acc;
}

VerificationReport verify_lemma(Lemma lemma, std::int64_t p, std::size_t n) {
  if (n == 0) throw DomainError("precision must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.claim = std::string("Lemma") + lemma_id(lemma);
  report.precision = n;
  report.checked_terms = n;

  TruncatedSeries lhs = TruncatedSeries::zero(n);
  TruncatedSeries rhs = TruncatedSeries::zero(n);
  switch (lemma) {
    case Lemma::PsiDissection:
      require_prime(p, 3, "the psi dissection");
      report.params["p"] = p;
      lhs = psi(1, n);
      rhs = psi_dissection_rhs(p, n);
      break;
    case Lemma::EtaDissection:
      require_prime(p, 5, "the f1 dissection");
      report.params["p"] = p;
      lhs = eta(1, n);
      rhs = eta_dissection_rhs(p, n);
      break;
    case Lemma::InverseEtaSquared:
      lhs = eta_quotient({{1, -2}}, n);
      rhs = inverse_eta_squared_rhs(n);
      break;
    case Lemma::InversePhi:
      lhs = inverse(phi_neg(n));
      rhs = inverse_phi_rhs(n);
      break;
    case Lemma::EtaCubedQuintic:
      lhs = eta_quotient({{1, 3}}, n);
      rhs = eta_cubed_quintic_rhs(n, QuinticOrientation::Direct);
      break;
  }

  const Comparison cmp = compare(lhs, rhs, n);
  report.status = cmp.equal ? Status::Pass : Status::Fail;
  report.first_failure = cmp.first_mismatch;
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool dissection_side_condition(std::int64_t p, SideCondition which) {
  if (which == SideCondition::Psi) {
    require_prime(p, 3, "the psi side condition");
    const std::int64_t target = ((p * p - 1) / 8) % p;
    for (std::int64_t j = 0; j <= (p - 3) / 2; ++j)
      if (((j * j + j) / 2) % p == target) return false;
    return true;
  }
  require_prime(p, 5, "the f1 side condition");
  const std::int64_t target = ((p * p - 1) / 24) % p;
  const std::int64_t skip = excluded_index(p);
  for (std::int64_t k = -(p - 1) / 2; k <= (p - 1) / 2; ++k) {
    if (k == skip) continue;
    const std::int64_t value = ((3 * k * k + k) / 2) % p;
    if (value == target) return false;
  }
  return true;
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Filtered:
      return "filtered";
  }
  return "?";
}

}  // namespace overcubic
