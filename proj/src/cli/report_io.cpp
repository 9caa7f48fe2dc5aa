#include "overcubic/report_io.hpp"

#include <iomanip>
#include <ostream>

#include <json.hpp>

#include "overcubic/errors.hpp"

namespace overcubic {

namespace {

using nlohmann::ordered_json;

ordered_json report_json(const VerificationReport& r) {
  ordered_json j;
  j["claim"] = r.claim;
  j["params"] = ordered_json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  j["modulus"] = r.modulus;
  j["checked_terms"] = r.checked_terms;
  j["status"] = to_string(r.status);
  if (r.first_failure)
    j["first_failure"] = *r.first_failure;
  else
    j["first_failure"] = nullptr;
  return j;
}

std::string params_text(const VerificationReport& r, char sep) {
  std::string s;
  for (const auto& [k, v] : r.params) {
    if (!s.empty()) s += sep;
    s += k + "=" + std::to_string(v);
  }
  return s;
}

// Integers that fit stay JSON numbers; larger ones become strings.
ordered_json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw DomainError("unknown format '" + name + "' (expected json, csv or text)");
}

void write_reports(std::ostream& out, const std::vector<VerificationReport>& reports, Format format, bool timing) {
  switch (format) {
    case Format::Json: {
      ordered_json arr = ordered_json::array();
      for (const auto& r : reports) arr.push_back(report_json(r));
      if (!timing) {
        out << arr.dump(2) << "\n";
        return;
      }
      ordered_json meta;
      double total = 0;
      meta["wall_seconds"] = ordered_json::array();
      for (const auto& r : reports) {
        meta["wall_seconds"].push_back(r.wall_seconds);
        total += r.wall_seconds;
      }
      meta["total_seconds"] = total;
      ordered_json doc;
      doc["reports"] = std::move(arr);
      doc["meta"] = std::move(meta);
      out << doc.dump(2) << "\n";
      return;
    }
    case Format::Csv:
      out << "claim,params,modulus,checked_terms,status,first_failure" << (timing ? ",wall_seconds" : "") << "\n";
      for (const auto& r : reports) {
        out << r.claim << "," << params_text(r, ';') << "," << r.modulus << "," << r.checked_terms << ","
            << to_string(r.status) << ",";
        if (r.first_failure) out << *r.first_failure;
        if (timing) out << "," << r.wall_seconds;
        out << "\n";
      }
      return;
    case Format::Text:
      for (const auto& r : reports) {
        out << r.claim;
        const auto params = params_text(r, ' ');
        if (!params.empty()) out << " [" << params << "]";
        if (r.status == Status::Filtered) {
          out << ": filtered\n";
          continue;
        }
        out << (r.modulus ? " mod " + std::to_string(r.modulus) : std::string(" exact")) << ": " << to_string(r.status)
            << " (" << r.checked_terms << " terms";
        if (r.first_failure) out << ", first failure at n=" << *r.first_failure;
        if (timing) out << ", " << std::fixed << std::setprecision(3) << r.wall_seconds << "s";
        out << ")\n";
      }
      return;
  }
}

void write_coefficients(std::ostream& out, const TruncatedSeries& series, Format format) {
  const auto coeffs = series.coeffs();
  switch (format) {
    case Format::Json: {
      ordered_json j;
      if (series.modulus())
        j["modulus"] = *series.modulus();
      else
        j["modulus"] = 0;
      j["coefficients"] = ordered_json::array();
      for (const auto& c : coeffs) j["coefficients"].push_back(integer_json(c));
      out << j.dump(2) << "\n";
      return;
    }
    case Format::Csv:
      out << "n,coefficient\n";
      for (std::size_t n = 0; n < coeffs.size(); ++n) out << n << "," << coeffs[n] << "\n";
      return;
    case Format::Text:
      for (std::size_t n = 0; n < coeffs.size(); ++n) out << n << "\t" << coeffs[n] << "\n";
      return;
  }
}

void write_candidates(std::ostream& out, const std::vector<ScanCandidate>& candidates, std::int64_t c,
                      std::size_t precision, Format format) {
  switch (format) {
    case Format::Json: {
      ordered_json arr = ordered_json::array();
      for (const auto& k : candidates) {
        ordered_json j;
        j["c"] = c;
        j["A"] = k.step;
        j["B"] = k.offset;
        j["modulus"] = k.modulus;
        j["checked_terms"] = k.checked_terms;
        j["label"] = "empirical to N=" + std::to_string(precision);
        arr.push_back(std::move(j));
      }
      out << arr.dump(2) << "\n";
      return;
    }
    case Format::Csv:
      out << "c,A,B,modulus,checked_terms,label\n";
      for (const auto& k : candidates)
        out << c << "," << k.step << "," << k.offset << "," << k.modulus << "," << k.checked_terms
            << ",empirical to N=" << precision << "\n";
      return;
    case Format::Text:
      for (const auto& k : candidates)
        out << "abar_" << c << "(" << k.step << "n+" << k.offset << ") = 0 mod " << k.modulus << "  [empirical to N="
            << precision << ", " << k.checked_terms << " terms]\n";
      return;
  }
}

void write_oracle(std::ostream& out, std::int64_t c, const std::vector<OracleRow>& rows, Format format) {
  switch (format) {
    case Format::Json: {
      ordered_json arr = ordered_json::array();
      for (const auto& r : rows) {
        ordered_json j;
        j["c"] = c;
        j["n"] = r.n;
        j["enumerated"] = r.enumerated;
        j["series"] = integer_json(r.series);
        j["match"] = r.match;
        arr.push_back(std::move(j));
      }
      out << arr.dump(2) << "\n";
      return;
    }
    case Format::Csv:
      out << "n,enumerated,series,match\n";
      for (const auto& r : rows) out << r.n << "," << r.enumerated << "," << r.series << "," << (r.match ? "yes" : "no") << "\n";
      return;
    case Format::Text:
      out << "n\tenumerated\tseries\tmatch\n";
      for (const auto& r : rows)
        out << r.n << "\t" << r.enumerated << "\t" << r.series << "\t" << (r.match ? "yes" : "NO") << "\n";
      return;
  }
}

}  // namespace overcubic
