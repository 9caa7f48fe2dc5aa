#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <string>

#include "overcubic/arith.hpp"
#include "overcubic/congruence.hpp"
#include "overcubic/errors.hpp"

namespace overcubic {

namespace {

std::int64_t parse_int(std::string_view s, std::size_t offset) {
  std::int64_t v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw ParseError("expected an integer, got '" + std::string(s) + "'", offset);
  return v;
}

std::pair<std::int64_t, std::int64_t> parse_range(std::string_view s, std::size_t offset) {
  const auto dots = s.find("..");
  if (dots == std::string_view::npos) throw ParseError("expected lo..hi, got '" + std::string(s) + "'", offset);
  const auto lo = parse_int(s.substr(0, dots), offset);
  const auto hi = parse_int(s.substr(dots + 2), offset);
  if (hi < lo) throw ParseError("empty range '" + std::string(s) + "'", offset);
  if (hi - lo > 100000) throw ParseError("range too long '" + std::string(s) + "'", offset);
  return {lo, hi};
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<ParamDomain> parse_domain(std::string_view text, std::size_t offset) {
  std::vector<ParamDomain> out;
  for (auto entry : split(text, ';')) {
    if (entry.empty()) continue;
    const auto eq = entry.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw ParseError("domain entry needs name=values, got '" + std::string(entry) + "'", offset);
    ParamDomain d;
    d.name = std::string(entry.substr(0, eq));
    auto spec = entry.substr(eq + 1);
    if (spec.starts_with("primes(") && spec.ends_with(")")) {
      auto [lo, hi] = parse_range(spec.substr(7, spec.size() - 8), offset);
      d.values = primes_between(lo, hi);
    } else if (spec.find("..") != std::string_view::npos) {
      auto [lo, hi] = parse_range(spec, offset);
      for (auto v = lo; v <= hi; ++v) d.values.push_back(v);
    } else {
      for (auto v : split(spec, ',')) d.values.push_back(parse_int(v, offset));
    }
    if (d.values.empty()) throw ParseError("domain of '" + d.name + "' is empty", offset);
    for (const auto& prev : out)
      if (prev.name == d.name) throw ParseError("parameter '" + d.name + "' listed twice", offset);
    out.push_back(std::move(d));
  }
  return out;
}

IntExpr parse_field(std::string_view value, std::size_t offset) {
  try {
    return IntExpr::parse(value);
  } catch (const ParseError& e) {
    throw ParseError(std::string("bad integer expression '") + std::string(value) + "': " + e.what(),
                     offset + e.offset());
  }
}

// Every referenced parameter must have a domain.
void check_bound(const CongruenceClaim& c) {
  std::set<std::string> bound;
  for (const auto& d : c.domain) bound.insert(d.name);
  auto need = [&](const std::vector<std::string>& names, const char* field) {
    for (const auto& n : names)
      if (!bound.count(n))
        throw ParseError(std::string("claim ") + c.id + ": parameter '" + n + "' in " + field + " has no domain", 0);
  };
  need(c.family.parameters(), "family");
  need(c.step.parameters(), "A");
  need(c.offset.parameters(), "B");
  need(c.modulus.parameters(), "mod");
  if (c.rhs == CongruenceClaim::Rhs::Series) need(c.rhs_series->parameters(), "rhs");
  if (c.rhs == CongruenceClaim::Rhs::Family) {
    need(c.rhs_family.parameters(), "rhs_family");
    need(c.rhs_step.parameters(), "rhs_A");
    need(c.rhs_offset.parameters(), "rhs_B");
  }
  if (c.legendre_filter && !bound.count("p"))
    throw ParseError("claim " + c.id + ": legendre filter needs a parameter p", 0);
  if (c.sieve && !bound.count(*c.sieve))
    throw ParseError("claim " + c.id + ": sieve parameter '" + *c.sieve + "' has no domain", 0);
}

// Spaces are not allowed inside field values, so each line stays one token
// per field.
constexpr const char* kBuiltin[] = {
    // Theorems and corollaries.
    "id=Thm3.1 family=2^lambda*m+t A=1 B=0 mod=2^(lambda+1) rhs=family rhs_family=t rhs_A=1 rhs_B=0 "
    "domain=lambda=1..3;m=0..2;t=1..3",
    "id=Thm3.2.i family=2*m+1 A=8*5^(2*alpha) B=5^(2*alpha) mod=8 rhs=family rhs_family=2*m+1 rhs_A=8 rhs_B=1 "
    "domain=m=0..2;alpha=0..1",
    "id=Thm3.2.ii family=2*m+1 A=8*5^(2*alpha+1) B=17*5^(2*alpha) mod=8 rhs=0 domain=m=0..2;alpha=0..1",
    "id=Thm3.2.iii family=2*m+1 A=8*5^(2*alpha+1) B=33*5^(2*alpha) mod=8 rhs=0 domain=m=0..2;alpha=0..1",
    "id=Thm3.3 family=2*m+2 A=8*p^(2*alpha) B=p^(2*alpha) mod=8 rhs=2*f1*f2 "
    "domain=m=0..2;alpha=0..1;p=primes(5..13) legendre=-2",
    "id=Thm3.3.i family=2*m+2 A=8*p^(2*alpha+1) B=p^(2*alpha+2) mod=8 rhs=0 "
    "domain=m=0..2;alpha=0..1;p=primes(5..13) legendre=-2 sieve=p",
    "id=Thm3.4 family=2*m+2 A=8*p^(2*alpha) B=3*p^(2*alpha) mod=8 rhs=4*f1*f8 "
    "domain=m=0..2;alpha=0..1;p=primes(5..13) legendre=-8",
    "id=Thm3.4.i family=2*m+2 A=8*p^(2*alpha+1) B=3*p^(2*alpha+2) mod=8 rhs=0 "
    "domain=m=0..2;alpha=0..1;p=primes(5..13) legendre=-8 sieve=p",
    "id=Thm3.5 family=8*m+3 A=8*p^(2*alpha) B=p^(2*alpha) mod=16 rhs=2*psi(q) "
    "domain=m=0..2;alpha=0..1;p=primes(3..13)",
    "id=Thm3.5.i family=8*m+3 A=8*p^(2*alpha+1) B=p^(2*alpha+2) mod=16 rhs=0 "
    "domain=m=0..2;alpha=0..1;p=primes(3..13) sieve=p",
    "id=Cor3.6 family=2*m+2 A=8 B=z mod=8 rhs=0 domain=m=0..2;z=5,7",
    "id=Cor3.8 family=8*m+3 A=8 B=w mod=16 rhs=0 domain=m=0..2;w=3,5,7",
    // Intermediate steps of the proofs, odd family.
    "id=Id3.2b family=2*m+1 A=1 B=0 mod=0 "
    "rhs=f4^(2*m)*f8^5/(f2^(4*m+4)*f16^2)+2*q*f4^(2*m+2)*f16^2/(f2^(4*m+4)*f8) domain=m=0..2",
    "id=Id3.2c family=2*m+1 A=2 B=1 mod=0 rhs=2*f2^(2*m+2)*f8^2/(f1^(4*m+4)*f4) domain=m=0..2",
    "id=Id3.2d family=2*m+1 A=2 B=1 mod=8 rhs=2*f4^3 domain=m=0..2",
    "id=Id3.2e family=2*m+1 A=8 B=1 mod=8 rhs=2*f1^3 domain=m=0..2",
    "id=Id3.2g family=2*m+1 A=40 B=25 mod=8 rhs=2*f5^3 domain=m=0..2",
    "id=Id3.2h family=2*m+1 A=200 B=25 mod=8 rhs=2*f1^3 domain=m=0..2",
    "id=Id3.2j family=2*m+1 A=200 B=25 mod=8 rhs=family rhs_family=2*m+1 rhs_A=8 rhs_B=1 domain=m=0..2",
    // c = 2 and the even family.
    "id=Id3.3b family=2 A=1 B=0 mod=0 rhs=f4*f8^5/(f2^6*f16^2)+2*q*f4^3*f16^2/(f2^6*f8)",
    "id=Id3.3c family=2 A=2 B=1 mod=0 rhs=2*f2^3*f8^2/(f1^6*f4)",
    "id=Id3.3d family=2*m+2 A=2 B=1 mod=8 rhs=2*f2*f4^3/f1^2 domain=m=0..2",
    "id=Id3.3e family=2*m+2 A=2 B=1 mod=8 rhs=2*f4^3*f8^5/(f2^4*f16^2)+4*q*f4^5*f16^2/(f2^4*f8) "
    "domain=m=0..2",
    "id=Id3.3f family=2*m+2 A=4 B=1 mod=8 rhs=2*f2^3*f4^5/(f1^4*f8^2) domain=m=0..2",
    "id=Id3.3g family=2*m+2 A=4 B=1 mod=8 rhs=2*f2*f4 domain=m=0..2",
    "id=Id3.3h family=2*m+2 A=8 B=1 mod=8 rhs=2*f1*f2 domain=m=0..2",
    "id=Id3.3l family=2*m+2 A=8*p^(2*alpha+1) B=p^(2*alpha+2) mod=8 rhs=2*f(p)*f(2*p) "
    "domain=m=0..2;alpha=0..1;p=primes(5..13) legendre=-2",
    "id=Id3.4b family=2*m+2 A=2 B=1 mod=8 rhs=2*f4^3/phi(-q) domain=m=0..2",
    "id=Id3.4c family=2*m+2 A=2 B=1 mod=8 rhs=2*f4^3/phi(-q^4)^4*(phi(q^4)^3+2*q*phi(q^4)^2*psi(q^8)) "
    "domain=m=0..2",
    "id=Id3.4d family=2*m+2 A=8 B=3 mod=8 rhs=4*f1^3/phi(-q)^4*phi(q)^2*psi(q^2) domain=m=0..2",
    "id=Id3.4e family=2*m+2 A=8 B=3 mod=8 rhs=4*f1*f8 domain=m=0..2",
    "id=Id3.4g family=2*m+2 A=8*p^(2*alpha+1) B=3*p^(2*alpha+2) mod=8 rhs=4*f(p)*f(8*p) "
    "domain=m=0..2;alpha=0..1;p=primes(5..13) legendre=-8",
    // c = 3 and the 8m+3 family.
    "id=Id3.5b family=3 A=1 B=0 mod=0 rhs=f4^2*f8^5/(f2^8*f16^2)+2*q*f4^4*f16^2/(f2^8*f8)",
    "id=Id3.5c family=3 A=2 B=1 mod=0 rhs=2*f2^4*f8^2/(f1^8*f4)",
    "id=Id3.5d family=8*m+3 A=2 B=1 mod=16 rhs=2*f8^2/f4 domain=m=0..2",
    "id=Id3.5e family=8*m+3 A=8 B=1 mod=16 rhs=2*f2^2/f1 domain=m=0..2",
    "id=Id3.5f family=8*m+3 A=8 B=1 mod=16 rhs=2*psi(q) domain=m=0..2",
    "id=Id3.5h family=8*m+3 A=8*p^(2*alpha+1) B=p^(2*alpha+2) mod=16 rhs=2*psi(q^p) "
    "domain=m=0..2;alpha=0..1;p=primes(3..13)",
};

}  // namespace

CongruenceClaim parse_claim_line(std::string_view line) {
  CongruenceClaim claim;
  claim.line = std::string(line);
  std::set<std::string> seen;
  std::optional<std::string> rhs_text;
  std::size_t rhs_offset = 0;

  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
    const auto field = line.substr(pos, end - pos);
    const auto eq = field.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw ParseError("expected key=value, got '" + std::string(field) + "'", pos);
    const std::string key(field.substr(0, eq));
    const auto value = field.substr(eq + 1);
    const std::size_t voff = pos + eq + 1;
    if (!seen.insert(key).second) throw ParseError("field '" + key + "' given twice", pos);
    if (value.empty()) throw ParseError("field '" + key + "' is empty", voff);

    if (key == "id") {
      claim.id = std::string(value);
    } else if (key == "family") {
      claim.family = parse_field(value, voff);
    } else if (key == "A") {
      claim.step = parse_field(value, voff);
    } else if (key == "B") {
      claim.offset = parse_field(value, voff);
    } else if (key == "mod") {
      claim.modulus = parse_field(value, voff);
    } else if (key == "rhs") {
      rhs_text = std::string(value);
      rhs_offset = voff;
    } else if (key == "rhs_family") {
      claim.rhs_family = parse_field(value, voff);
    } else if (key == "rhs_A") {
      claim.rhs_step = parse_field(value, voff);
    } else if (key == "rhs_B") {
      claim.rhs_offset = parse_field(value, voff);
    } else if (key == "domain") {
      claim.domain = parse_domain(value, voff);
    } else if (key == "legendre") {
      claim.legendre_filter = parse_int(value, voff);
    } else if (key == "sieve") {
      claim.sieve = std::string(value);
    } else if (key == "note") {
    } else {
      throw ParseError("unknown field '" + key + "'", pos);
    }
    pos = end;
  }

  for (const char* required : {"id", "family", "A", "B", "mod"})
    if (!seen.count(required)) throw ParseError(std::string("missing field '") + required + "'", line.size());

  if (!rhs_text || *rhs_text == "0") {
    claim.rhs = CongruenceClaim::Rhs::Zero;
  } else if (*rhs_text == "family") {
    claim.rhs = CongruenceClaim::Rhs::Family;
    if (!seen.count("rhs_family")) claim.rhs_family = claim.family;
  } else {
    claim.rhs = CongruenceClaim::Rhs::Series;
    try {
      claim.rhs_series = parse_expr(*rhs_text);
    } catch (const ParseError& e) {
      throw ParseError(std::string("bad rhs: ") + e.what(), rhs_offset + e.offset());
    }
  }
  if (claim.sieve && claim.rhs != CongruenceClaim::Rhs::Zero)
    throw ParseError("claim " + claim.id + ": sieve is only supported with rhs=0", 0);
  check_bound(claim);
  return claim;
}

std::vector<CongruenceClaim> parse_claim_file(std::istream& in) {
  std::vector<CongruenceClaim> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_claim_line(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.offset());
    }
  }
  return out;
}

const std::vector<CongruenceClaim>& claims_registry() {
  static const std::vector<CongruenceClaim> registry = [] {
    std::vector<CongruenceClaim> out;
    for (const char* line : kBuiltin) out.push_back(parse_claim_line(line));
    return out;
  }();
  return registry;
}

const CongruenceClaim* find_claim(const std::vector<CongruenceClaim>& claims, std::string_view id) {
  auto it = std::find_if(claims.begin(), claims.end(), [&](const CongruenceClaim& c) { return c.id == id; });
  return it == claims.end() ? nullptr : &*it;
}

}  // namespace overcubic
