#include "overcubic/cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "overcubic/congruence.hpp"
#include "overcubic/dissect.hpp"
#include "overcubic/errors.hpp"
#include "overcubic/oracle.hpp"
#include "overcubic/qexpr.hpp"
#include "overcubic/report_io.hpp"

namespace overcubic {

namespace {

struct OutputOpts {
  std::string format;
  std::string path;
  bool timing = false;
};

void add_output_opts(CLI::App* cmd, OutputOpts& o, const std::string& default_format) {
  o.format = default_format;
  cmd->add_option("--format", o.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--out", o.path, "write to this file instead of stdout");
}

// Writes through `emit` to the --out file or to `out`.
template <typename Fn>
void emit_to(const OutputOpts& o, std::ostream& out, Fn&& emit) {
  if (o.path.empty()) {
    emit(out);
    return;
  }
  std::ofstream file(o.path);
  if (!file) throw DomainError("cannot open output file '" + o.path + "'");
  emit(file);
}

std::pair<std::string, std::int64_t> parse_binding(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw DomainError("expected name=value, got '" + text + "'");
  const std::string value = text.substr(eq + 1);
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) throw DomainError("'" + value + "' is not an integer");
  return {text.substr(0, eq), v};
}

// "name=lo..hi" or "name=v1,v2" (the claim file domain syntax).
std::pair<std::string, std::vector<std::int64_t>> parse_domain_override(const std::string& text) {
  const auto claim = parse_claim_line("id=x family=1 A=1 B=0 mod=0 domain=" + text);
  if (claim.domain.size() != 1) throw DomainError("--domain takes exactly one name=values entry");
  return {claim.domain[0].name, claim.domain[0].values};
}

struct CoeffsArgs {
  std::string expr;
  std::vector<std::string> set;
  std::size_t n = 20;
  std::optional<std::uint64_t> modulus;
  OutputOpts output;
};

int cmd_coeffs(const CoeffsArgs& a, std::ostream& out) {
  if (a.n < 1) throw DomainError("--n must be at least 1");
  ParamEnv env;
  for (const auto& s : a.set) env.insert(parse_binding(s));
  const auto expr = parse_expr(a.expr);
  const auto series = eval_expr(expr, env, a.n, a.modulus);
  emit_to(a.output, out, [&](std::ostream& o) { write_coefficients(o, series, parse_format(a.output.format)); });
  return 0;
}

struct VerifyArgs {
  std::vector<std::string> claims;
  bool all = false;
  bool list = false;
  std::optional<std::size_t> nmax;
  std::size_t terms = 50;
  std::string claims_file;
  std::map<std::string, std::vector<std::int64_t>> overrides;
  std::vector<std::string> domains;
  OutputOpts output;
};

int cmd_verify(VerifyArgs& a, std::ostream& out) {
  std::vector<CongruenceClaim> pool = claims_registry();
  if (!a.claims_file.empty()) {
    std::ifstream in(a.claims_file);
    if (!in) throw DomainError("cannot open claims file '" + a.claims_file + "'");
    auto extra = parse_claim_file(in);
    for (auto& c : extra) {
      if (find_claim(pool, c.id)) throw DomainError("claim id '" + c.id + "' already defined");
      pool.push_back(std::move(c));
    }
  }
  if (a.list) {
    for (const auto& c : pool) out << c.id << "\t" << c.line << "\n";
    return 0;
  }

  std::vector<CongruenceClaim> selected;
  if (a.all) {
    selected = pool;
  } else if (!a.claims_file.empty() && a.claims.empty()) {
    for (const auto& c : pool)
      if (!find_claim(claims_registry(), c.id)) selected.push_back(c);
  } else {
    if (a.claims.empty()) throw DomainError("give --claim ID, --all or --list");
    for (const auto& id : a.claims) {
      const auto* c = find_claim(pool, id);
      if (!c) throw DomainError("unknown claim '" + id + "' (see verify --list)");
      selected.push_back(*c);
    }
  }

  VerifyOptions options;
  options.nmax = a.nmax;
  options.min_terms = a.terms;
  options.domain_overrides = a.overrides;
  for (const auto& d : a.domains) {
    auto [name, values] = parse_domain_override(d);
    options.domain_overrides[name] = values;
  }

  const auto reports = verify_claims(selected, options);
  emit_to(a.output, out, [&](std::ostream& o) {
    write_reports(o, reports, parse_format(a.output.format), a.output.timing);
  });
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  return ok ? 0 : 1;
}

struct LemmaArgs {
  std::string id;
  std::optional<std::int64_t> p;
  std::size_t n = 1000;
  OutputOpts output;
};

int cmd_lemma(const LemmaArgs& a, std::ostream& out) {
  const Lemma lemma = parse_lemma_id(a.id);
  const bool needs_p = lemma == Lemma::PsiDissection || lemma == Lemma::EtaDissection;
  if (needs_p && !a.p) throw DomainError("lemma " + a.id + " needs --p");
  std::vector<VerificationReport> reports{verify_lemma(lemma, a.p.value_or(0), a.n)};
  if (needs_p) {
    const auto which = lemma == Lemma::PsiDissection ? SideCondition::Psi : SideCondition::Eta;
    VerificationReport side;
    side.claim = std::string("Lemma") + lemma_id(lemma) + ".side";
    side.params["p"] = *a.p;
    side.checked_terms = 1;
    side.status = dissection_side_condition(*a.p, which) ? Status::Pass : Status::Fail;
    if (side.status == Status::Fail) side.first_failure = 0;
    reports.push_back(side);
  }
  emit_to(a.output, out, [&](std::ostream& o) {
    write_reports(o, reports, parse_format(a.output.format), a.output.timing);
  });
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); }) ? 0 : 1;
}

struct ScanArgs {
  std::int64_t c = 2;
  std::size_t amax = 8;
  std::vector<std::uint64_t> moduli{8};
  std::optional<std::size_t> n;
  OutputOpts output;
};

int cmd_scan(const ScanArgs& a, std::ostream& out) {
  const std::size_t n = a.n.value_or(std::max<std::size_t>(1000, 100 * a.amax));
  const auto found = scan_congruences(a.c, a.amax, a.moduli, n);
  emit_to(a.output, out, [&](std::ostream& o) { write_candidates(o, found, a.c, n, parse_format(a.output.format)); });
  return 0;
}

struct OracleArgs {
  std::int64_t c = 2;
  std::size_t nmax = 10;
  bool list = false;
  OutputOpts output;
};

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  if (a.list) {
    for (std::size_t n = 0; n <= a.nmax; ++n) {
      const auto objects = list_overcubic(a.c, n);
      out << "n=" << n << " (" << objects.size() << ")\n";
      for (const auto& s : objects) out << "  " << s << "\n";
    }
    return 0;
  }
  // Check bounds before building anything.
  enumerate_overcubic(a.c, a.nmax);
  const auto series = gen_overcubic(a.c, a.nmax + 1);
  std::vector<OracleRow> rows;
  bool ok = true;
  for (std::size_t n = 0; n <= a.nmax; ++n) {
    OracleRow r{n, enumerate_overcubic(a.c, n), series.coeff(n), false};
    r.match = Integer(static_cast<unsigned long>(r.enumerated)) == r.series;
    ok = ok && r.match;
    rows.push_back(std::move(r));
  }
  emit_to(a.output, out, [&](std::ostream& o) { write_oracle(o, a.c, rows, parse_format(a.output.format)); });
  return ok ? 0 : 1;
}

struct SanityArgs {
  std::size_t n = 2000;
  OutputOpts output;
};

int cmd_sanity(const SanityArgs& a, std::ostream& out) {
  const auto report = classical_sanity(a.n);
  emit_to(a.output, out, [&](std::ostream& o) {
    write_reports(o, {report}, parse_format(a.output.format), a.output.timing);
  });
  return report.passed() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized overcubic partition congruences: coefficients, claim checks, scans and oracles"};
  app.require_subcommand(1);

  CoeffsArgs coeffs;
  auto* c_cmd = app.add_subcommand("coeffs", "print coefficients of an eta/theta expression");
  c_cmd->add_option("--expr", coeffs.expr, "expression, e.g. \"f4^(c-1)/(f1^2*f2^(2*c-3))\"")->required();
  c_cmd->add_option("--set", coeffs.set, "parameter binding name=value (repeatable)");
  c_cmd->add_option("--n", coeffs.n, "number of coefficients")->capture_default_str();
  c_cmd->add_option("--mod", coeffs.modulus, "reduce modulo M");
  add_output_opts(c_cmd, coeffs.output, "text");

  VerifyArgs verify;
  auto* v_cmd = app.add_subcommand("verify", "check registry claims on a finite prefix");
  v_cmd->add_option("--claim", verify.claims, "claim id (repeatable)");
  v_cmd->add_flag("--all", verify.all, "every claim");
  v_cmd->add_flag("--list", verify.list, "list claim ids and definitions");
  v_cmd->add_option("--nmax", verify.nmax, "largest coefficient index inspected");
  v_cmd->add_option("--terms", verify.terms, "minimum progression terms per instance")->capture_default_str();
  v_cmd->add_option("--claims-file", verify.claims_file, "extra claims, one key=value line each");
  for (const char* name : {"p", "m", "alpha", "lambda", "t", "z", "w"})
    v_cmd->add_option(std::string("--") + name, verify.overrides[name], std::string("values of ") + name);
  v_cmd->add_option("--domain", verify.domains, "domain override name=lo..hi or name=v1,v2 (repeatable)");
  add_output_opts(v_cmd, verify.output, "json");
  v_cmd->add_flag("--timing", verify.output.timing, "add wall times in a separate meta section");

  LemmaArgs lemma;
  auto* l_cmd = app.add_subcommand("lemma", "check a dissection lemma");
  l_cmd->add_option("--id", lemma.id, "2.1 .. 2.5")->required();
  l_cmd->add_option("--p", lemma.p, "prime for 2.1 / 2.2");
  l_cmd->add_option("--n", lemma.n, "precision")->capture_default_str();
  add_output_opts(l_cmd, lemma.output, "json");
  l_cmd->add_flag("--timing", lemma.output.timing, "add wall times in a separate meta section");

  ScanArgs scan;
  auto* s_cmd = app.add_subcommand("scan", "search for vanishing progressions (empirical)");
  s_cmd->add_option("--c", scan.c, "family parameter c")->capture_default_str();
  s_cmd->add_option("--amax", scan.amax, "largest progression step")->capture_default_str();
  s_cmd->add_option("--mod", scan.moduli, "moduli (repeatable)");
  s_cmd->add_option("--n", scan.n, "precision, default max(1000, 100*amax)");
  add_output_opts(s_cmd, scan.output, "text");

  OracleArgs oracle;
  auto* o_cmd = app.add_subcommand("oracle", "compare enumeration with the series engine");
  o_cmd->add_option("--c", oracle.c, "family parameter c (<= 6)")->capture_default_str();
  o_cmd->add_option("--nmax", oracle.nmax, "largest n (<= 25)")->capture_default_str();
  o_cmd->add_flag("--list", oracle.list, "print the enumerated objects (n <= 6)");
  add_output_opts(o_cmd, oracle.output, "text");

  SanityArgs sanity;
  auto* y_cmd = app.add_subcommand("sanity", "Ramanujan's congruences for p(n) as an engine check");
  y_cmd->add_option("--n", sanity.n, "precision")->capture_default_str();
  add_output_opts(y_cmd, sanity.output, "json");
  y_cmd->add_flag("--timing", sanity.output.timing, "add wall times in a separate meta section");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_cmd) return cmd_coeffs(coeffs, out);
    if (*v_cmd) {
      for (auto it = verify.overrides.begin(); it != verify.overrides.end();)
        it = it->second.empty() ? verify.overrides.erase(it) : std::next(it);
      return cmd_verify(verify, out);
    }
    if (*l_cmd) return cmd_lemma(lemma, out);
    if (*s_cmd) return cmd_scan(scan, out);
    if (*o_cmd) return cmd_oracle(oracle, out);
    if (*y_cmd) return cmd_sanity(sanity, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace overcubic
