#include "svdim/report.hpp"

#include <json.hpp>
#include <sstream>

#include "svdim/error.hpp"

namespace svdim {

namespace {

using json = nlohmann::ordered_json;

json record_json(const SecantRecord& r, bool with_grassmann) {
  json j{{"n", r.n},
         {"m", r.m},
         {"d", r.d},
         {"s", r.s},
         {"N", r.N},
         {"expected", r.expected},
         {"computed", r.computed},
         {"defect", r.defect},
         {"s1", r.s1},
         {"s2", r.s2},
         {"inTheoremRange", r.in_theorem_range},
         {"status", std::string(to_string(r.status))},
         {"seed", r.seed},
         {"trials", r.trials},
         {"modulus", r.modulus}};
  if (with_grassmann) j["grassmann"] = grassmann_verdict(r);
  return j;
}

std::string csv_escape(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void record_csv(std::ostream& out, const SecantRecord& r, bool with_grassmann) {
  out << r.n << ',' << r.m << ',' << r.d << ',' << r.s << ',' << r.N << ',' << r.expected << ','
      << r.computed << ',' << r.defect << ',' << r.s1 << ',' << r.s2 << ','
      << (r.in_theorem_range ? "true" : "false") << ',' << to_string(r.status) << ',' << r.seed << ','
      << r.trials << ',' << r.modulus;
  if (with_grassmann) out << ',' << csv_escape(grassmann_verdict(r));
  out << '\n';
}

json check_json(const CheckRecord& c) {
  json j{{"check", c.check}, {"n", c.n},         {"m", c.m},         {"d", c.d},
         {"s", c.s},         {"q", c.q},         {"t", c.t},         {"lhs", c.lhs},
         {"rhs", c.rhs},     {"passed", c.passed}, {"seed", c.seed}, {"trials", c.trials},
         {"modulus", c.modulus}};
  if (!c.scheme_json.empty()) j["scheme"] = json::parse(c.scheme_json);
  return j;
}

}  // namespace

ReportFormat report_format_from_string(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw InvalidParameters("unknown report format '" + std::string(name) + "'");
}

std::string format_records(std::span<const SecantRecord> records, ReportFormat format,
                           bool with_grassmann) {
  if (format == ReportFormat::json) {
    json arr = json::array();
    for (const auto& r : records) arr.push_back(record_json(r, with_grassmann));
    return arr.dump(2) + "\n";
  }
  std::ostringstream out;
  out << kSecantCsvHeader << (with_grassmann ? ",grassmann" : "") << '\n';
  for (const auto& r : records) record_csv(out, r, with_grassmann);
  return out.str();
}

std::string format_record(const SecantRecord& record, ReportFormat format, bool with_grassmann) {
  if (format == ReportFormat::json) return record_json(record, with_grassmann).dump(2) + "\n";
  return format_records(std::span<const SecantRecord>(&record, 1), format, with_grassmann);
}

std::string format_thresholds(const SegreVeroneseParams& params, const Thresholds& th,
                              ReportFormat format) {
  if (format == ReportFormat::json) {
    json j{{"n", params.n},           {"m", params.m},     {"d", params.d},
           {"N", params.ambient_dimension()}, {"s1", th.s1}, {"s2", th.s2},
           {"gap", th.gap()},         {"divisible", th.divisible}, {"uncovered", th.uncovered}};
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "n,m,d,N,s1,s2,gap,divisible,uncovered\n"
      << params.n << ',' << params.m << ',' << params.d << ',' << params.ambient_dimension() << ','
      << th.s1 << ',' << th.s2 << ',' << th.gap() << ',' << (th.divisible ? "true" : "false") << ','
      << th.uncovered << '\n';
  return out.str();
}

std::string format_summary(const VerificationSummary& summary, ReportFormat format) {
  const auto failures = summary.failures();
  if (format == ReportFormat::json) {
    json j;
    j["cellsChecked"] = summary.cells_checked;
    j["checksRun"] = summary.checks.size();
    j["failures"] = json::array();
    for (const auto& c : failures) j["failures"].push_back(check_json(c));
    j["checks"] = json::array();
    for (const auto& c : summary.checks) j["checks"].push_back(check_json(c));
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "check,n,m,d,s,q,t,lhs,rhs,passed,seed,trials,modulus\n";
  for (const auto& c : summary.checks) {
    out << c.check << ',' << c.n << ',' << c.m << ',' << c.d << ',' << c.s << ',' << c.q << ',' << c.t
        << ',' << c.lhs << ',' << c.rhs << ',' << (c.passed ? "true" : "false") << ',' << c.seed << ','
        << c.trials << ',' << c.modulus << '\n';
  }
  return out.str();
}

}  // namespace svdim
