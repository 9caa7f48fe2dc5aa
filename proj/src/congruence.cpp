#include "overcubic/congruence.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <tuple>

#include "overcubic/arith.hpp"
#include "overcubic/dissect.hpp"
#include "overcubic/errors.hpp"
#include "overcubic/qfactory.hpp"

namespace overcubic {

TruncatedSeries gen_overcubic(std::int64_t c, std::size_t n, std::optional<std::uint64_t> modulus) {
  if (c < 1) throw DomainError("c must be at least 1, got " + std::to_string(c));
  return eta_quotient({{4, c - 1}, {1, -2}, {2, -(2 * c - 3)}}, n, modulus);
}

int legendre(std::int64_t a, std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw DomainError("legendre symbol needs an odd prime, got " + std::to_string(p));
  std::int64_t base = ((a % p) + p) % p;
  if (base == 0) return 0;
  // Euler's criterion: a^((p-1)/2) mod p.
  std::int64_t e = (p - 1) / 2;
  std::int64_t result = 1;
  while (e > 0) {
    if (e & 1) result = static_cast<std::int64_t>((__int128)result * base % p);
    base = static_cast<std::int64_t>((__int128)base * base % p);
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Instance {
  const CongruenceClaim* claim = nullptr;
  ParamEnv env;
  bool filtered = false;
  std::int64_t c = 0;
  std::uint64_t modulus = 0;
  std::size_t step = 0, offset = 0;
  std::int64_t rhs_c = 0;
  std::size_t rhs_step = 0, rhs_offset = 0;
  std::optional<std::size_t> sieve;
  std::size_t length = 0;   // progression indices 0 .. length-1
  std::size_t checked = 0;  // indices not removed by the sieve
};

std::size_t as_size(std::int64_t v, const char* what, std::int64_t min) {
  if (v < min) throw DomainError(std::string(what) + " must be at least " + std::to_string(min) + ", got " + std::to_string(v));
  return static_cast<std::size_t>(v);
}

std::uint64_t as_modulus(std::int64_t v) {
  if (v < 0) throw DomainError("modulus must be non-negative, got " + std::to_string(v));
  return static_cast<std::uint64_t>(v);
}

bool sieved(const Instance& inst, std::size_t n) { return inst.sieve && n % *inst.sieve == 0; }

// Progression length holding `want` unsieved indices.
std::size_t length_for(std::size_t want, std::optional<std::size_t> sieve) {
  if (!sieve || *sieve <= 1) return want;
  const std::size_t s = *sieve;
  // Each block of s indices contributes s - 1 survivors.
  const std::size_t blocks = want / (s - 1);
  const std::size_t rest = want % (s - 1);
  return blocks * s + (rest ? rest + 1 : 0);
}

std::size_t unsieved_below(std::size_t len, std::optional<std::size_t> sieve) {
  if (!sieve || *sieve <= 1) return len;
  return len - (len + *sieve - 1) / *sieve;
}

std::vector<ParamEnv> expand_domain(const CongruenceClaim& claim, const VerifyOptions& options) {
  std::vector<ParamEnv> envs{ParamEnv{}};
  for (const auto& d : claim.domain) {
    auto it = options.domain_overrides.find(d.name);
    const auto& values = it != options.domain_overrides.end() ? it->second : d.values;
    std::vector<ParamEnv> next;
    for (const auto& env : envs)
      for (auto v : values) {
        ParamEnv e = env;
        e[d.name] = v;
        next.push_back(std::move(e));
      }
    envs = std::move(next);
  }
  return envs;
}

Instance plan(const CongruenceClaim& claim, ParamEnv env, const VerifyOptions& options) {
  Instance inst;
  inst.claim = &claim;
  inst.env = std::move(env);
  if (claim.legendre_filter && legendre(*claim.legendre_filter, inst.env.at("p")) != -1) {
    inst.filtered = true;
    return inst;
  }
  inst.c = claim.family.eval(inst.env);
  if (inst.c < 1) throw DomainError("claim " + claim.id + ": family value " + std::to_string(inst.c) + " is not positive");
  inst.modulus = as_modulus(claim.modulus.eval(inst.env));
  inst.step = as_size(claim.step.eval(inst.env), "A", 1);
  inst.offset = as_size(claim.offset.eval(inst.env), "B", 0);
  if (claim.sieve) inst.sieve = as_size(inst.env.at(*claim.sieve), "sieve", 2);
  if (claim.rhs == CongruenceClaim::Rhs::Family) {
    inst.rhs_c = claim.rhs_family.eval(inst.env);
    if (inst.rhs_c < 1) throw DomainError("claim " + claim.id + ": rhs family value is not positive");
    inst.rhs_step = as_size(claim.rhs_step.eval(inst.env), "rhs_A", 1);
    inst.rhs_offset = as_size(claim.rhs_offset.eval(inst.env), "rhs_B", 0);
  }

  const std::size_t want = std::max<std::size_t>(options.min_terms, 1);
  if (options.nmax) {
    inst.length = *options.nmax < inst.offset ? 0 : (*options.nmax - inst.offset) / inst.step + 1;
    inst.checked = unsieved_below(inst.length, inst.sieve);
    if (inst.checked < want) {
      std::string params;
      for (const auto& [k, v] : inst.env) params += " " + k + "=" + std::to_string(v);
      throw PrecisionError("claim " + claim.id + params + ": nmax " + std::to_string(*options.nmax) + " leaves " +
                           std::to_string(inst.checked) + " terms of " + std::to_string(inst.step) + "n+" +
                           std::to_string(inst.offset) + ", need " + std::to_string(want));
    }
  } else {
    inst.length = length_for(want, inst.sieve);
    inst.checked = unsieved_below(inst.length, inst.sieve);
  }
  return inst;
}

std::size_t needed(std::size_t step, std::size_t offset, std::size_t len) { return step * (len - 1) + offset + 1; }

using SeriesKey = std::pair<std::int64_t, std::uint64_t>;

class SeriesCache {
 public:
  void require(std::int64_t c, std::uint64_t m, std::size_t n) {
    auto& want = sizes_[{c, m}];
    want = std::max(want, n);
  }

  const TruncatedSeries& get(std::int64_t c, std::uint64_t m) {
    const SeriesKey key{c, m};
    auto it = built_.find(key);
    if (it == built_.end()) {
      std::optional<std::uint64_t> mod;
      if (m != 0) mod = m;
      it = built_.emplace(key, gen_overcubic(c, sizes_.at(key), mod)).first;
    }
    return it->second;
  }

 private:
  std::map<SeriesKey, std::size_t> sizes_;
  std::map<SeriesKey, TruncatedSeries> built_;
};

VerificationReport run(const Instance& inst, SeriesCache& cache) {
  const auto start = Clock::now();
  VerificationReport report;
  report.claim = inst.claim->id;
  report.params = inst.env;
  if (inst.filtered) {
    report.status = Status::Filtered;
    return report;
  }
  report.modulus = inst.modulus;
  report.precision = needed(inst.step, inst.offset, inst.length);
  report.checked_terms = inst.checked;

  std::optional<std::uint64_t> mod;
  if (inst.modulus != 0) mod = inst.modulus;
  const TruncatedSeries lhs =
      extract_progression(cache.get(inst.c, inst.modulus), inst.step, inst.offset, inst.length);

  std::optional<TruncatedSeries> rhs;
  switch (inst.claim->rhs) {
    case CongruenceClaim::Rhs::Zero:
      break;
    case CongruenceClaim::Rhs::Series:
      rhs = eval_expr(*inst.claim->rhs_series, inst.env, inst.length, mod);
      break;
    case CongruenceClaim::Rhs::Family:
      rhs = extract_progression(cache.get(inst.rhs_c, inst.modulus), inst.rhs_step, inst.rhs_offset, inst.length);
      break;
  }

  if (!inst.sieve) {
    const Comparison cmp = rhs ? compare(lhs, *rhs, inst.length, mod)
                               : compare(lhs, TruncatedSeries::zero(inst.length, mod), inst.length, mod);
    report.status = cmp.equal ? Status::Pass : Status::Fail;
    report.first_failure = cmp.first_mismatch;
  } else {
    // Sieved claims always have rhs = 0.
    for (std::size_t n = 0; n < inst.length; ++n) {
      if (sieved(inst, n) || lhs.coeff_is_zero(n)) continue;
      report.status = Status::Fail;
      report.first_failure = n;
      break;
    }
  }
  report.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace

std::vector<VerificationReport> verify_claims(const std::vector<CongruenceClaim>& claims,
                                              const VerifyOptions& options) {
  std::vector<Instance> instances;
  for (const auto& claim : claims)
    for (auto& env : expand_domain(claim, options)) instances.push_back(plan(claim, std::move(env), options));

  SeriesCache cache;
  for (const auto& inst : instances) {
    if (inst.filtered) continue;
    cache.require(inst.c, inst.modulus, needed(inst.step, inst.offset, inst.length));
    if (inst.claim->rhs == CongruenceClaim::Rhs::Family)
      cache.require(inst.rhs_c, inst.modulus, needed(inst.rhs_step, inst.rhs_offset, inst.length));
  }

  std::vector<VerificationReport> reports;
  reports.reserve(instances.size());
  for (const auto& inst : instances) reports.push_back(run(inst, cache));
  std::stable_sort(reports.begin(), reports.end(), [](const VerificationReport& a, const VerificationReport& b) {
    return std::tie(a.claim, a.params) < std::tie(b.claim, b.params);
  });
  return reports;
}

std::vector<VerificationReport> verify_claim(const CongruenceClaim& claim, const VerifyOptions& options) {
  return verify_claims({claim}, options);
}

std::vector<ScanCandidate> scan_congruences(std::int64_t c, std::size_t a_max,
                                            const std::vector<std::uint64_t>& moduli, std::size_t n) {
  if (a_max < 1) throw DomainError("a_max must be at least 1");
  if (n < 100 * a_max)
    throw PrecisionError("scan needs precision at least 100 * a_max = " + std::to_string(100 * a_max) + ", got " +
                         std::to_string(n));
  std::vector<ScanCandidate> out;
  for (const auto m : moduli) {
    if (m == 0) throw DomainError("scan moduli must be positive");
    const TruncatedSeries series = gen_overcubic(c, n, m);
    for (std::size_t a = 1; a <= a_max; ++a)
      for (std::size_t b = 0; b < a; ++b) {
        bool all_zero = true;
        std::size_t hits = 0;
        for (std::size_t idx = b; idx < n; idx += a, ++hits)
          if (!series.coeff_is_zero(idx)) {
            all_zero = false;
            break;
          }
        if (all_zero) out.push_back({a, b, m, hits});
      }
  }
  std::sort(out.begin(), out.end(), [](const ScanCandidate& x, const ScanCandidate& y) {
    return std::tie(x.step, x.offset, x.modulus) < std::tie(y.step, y.offset, y.modulus);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VerificationReport classical_sanity(std::size_t n) {
  const auto start = Clock::now();
  VerificationReport report;
  report.claim = "Classical";
  report.precision = n;
  const TruncatedSeries partitions = eta_quotient({{1, -1}}, n);
  struct Case {
    std::size_t step, offset;
    unsigned long m;
  };
  for (const Case& k : {Case{5, 4, 5}, Case{7, 5, 7}, Case{11, 6, 11}}) {
    for (std::size_t idx = k.offset; idx < n; idx += k.step) {
      ++report.checked_terms;
      if (!mpz_divisible_ui_p(partitions.coeff(idx).get_mpz_t(), k.m) &&
          (!report.first_failure || idx < *report.first_failure)) {
        report.status = Status::Fail;
        report.first_failure = idx;
      }
    }
  }
  report.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace overcubic
