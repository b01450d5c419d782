#include "charmat/report.hpp"

#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace charmat {

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "text") return ReportFormat::text;
  throw std::invalid_argument("unknown format: " + name);
}

std::string csv_header() {
  return "q,p,s,k,n,branch,det_a,det_b,c_k,d_k,u_k,pass";
}

std::string to_csv_row(const VerificationReport& rep) {
  std::string row;
  row += std::to_string(rep.q) + ",";
  row += std::to_string(rep.p) + ",";
  row += std::to_string(rep.s) + ",";
  row += std::to_string(rep.k) + ",";
  row += std::to_string(rep.n) + ",";
  row += std::string(branch_name(rep.branch)) + ",";
  row += rep.det.a.get_str() + ",";
  row += rep.det.b.get_str() + ",";
  row += (rep.c_k ? std::to_string(*rep.c_k) : "") + ",";
  row += (rep.d_k ? std::to_string(*rep.d_k) : "") + ",";
  row += (rep.u_k ? rep.u_k->get_str() : "") + ",";
  row += rep.passed() ? "true" : "false";
  return row;
}

std::string to_json_line(const VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["q"] = rep.q;
  j["p"] = rep.p;
  j["s"] = rep.s;
  j["k"] = rep.k;
  j["n"] = rep.n;
  j["branch"] = branch_name(rep.branch);
  j["det"] = {{"a", rep.det.a.get_str()}, {"b", rep.det.b.get_str()}};
  if (rep.c_k) j["c_k"] = *rep.c_k; else j["c_k"] = nullptr;
  if (rep.d_k) j["d_k"] = *rep.d_k; else j["d_k"] = nullptr;
  if (rep.u_k) j["u_k"] = rep.u_k->get_str(); else j["u_k"] = nullptr;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : rep.checks)
    j["checks"].push_back(
        {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["elapsed_ms"] = rep.elapsed_ms;
  return j.dump();
}

void write_text(std::ostream& os, const VerificationReport& rep) {
  os << "(q, k) = (" << rep.q << ", " << rep.k << ")  p=" << rep.p
     << " s=" << rep.s << " n=" << rep.n
     << " branch=" << branch_name(rep.branch) << "\n";
  os << "  det A_k(t) = " << rep.det.to_string() << "\n";
  if (rep.c_k && rep.d_k)
    os << "  c_k = " << *rep.c_k << ", d_k = " << *rep.d_k << "\n";
  if (rep.u_k)
    os << "  u_k = " << rep.u_k->get_str()
       << (rep.degenerate ? " (degenerate)" : "") << "\n";
  for (const auto& c : rep.checks)
    os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << ": "
       << c.detail << "\n";
  os << "  result: " << (rep.passed() ? "PASS" : "FAIL") << "\n";
}

void write_report(std::ostream& os, const VerificationReport& rep,
                  ReportFormat fmt) {
  switch (fmt) {
    case ReportFormat::json:
      os << to_json_line(rep) << "\n";
      break;
    case ReportFormat::csv:
      os << csv_header() << "\n" << to_csv_row(rep) << "\n";
      break;
    case ReportFormat::text:
      write_text(os, rep);
      break;
  }
}

}  // namespace charmat
