#include <doctest.h>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "charmat/fields.hpp"
#include "charmat/report.hpp"
#include "charmat/verifier.hpp"

using charmat::csv_header;
using charmat::FieldCtx;
using charmat::parse_format;
using charmat::ReportFormat;
using charmat::to_csv_row;
using charmat::to_json_line;
using charmat::VerificationReport;
using charmat::verify_pair;
using charmat::write_report;
using charmat::write_text;

namespace {

std::vector<std::string> split_csv(const std::string& row) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : row) {
    if (ch == ',') { out.push_back(cur); cur.clear(); }
    else cur += ch;
  }
  out.push_back(cur);
  return out;
}

VerificationReport synthetic_report() {
  VerificationReport rep;
  rep.q = 99;
  rep.p = 99;
  rep.s = 1;
  rep.k = 2;
  rep.n = 49;
  rep.branch = charmat::Branch::part_iii;
  rep.det = charmat::LinearPoly{0, 0};
  rep.degenerate = true;
  rep.u_k = mpz_class(0);
  rep.checks.push_back({"alpha", true, "fine"});
  rep.checks.push_back({"beta", false, "broken"});
  return rep;
}

}  // namespace

TEST_CASE("format names") {
  CHECK(parse_format("json") == ReportFormat::json);
  CHECK(parse_format("csv") == ReportFormat::csv);
  CHECK(parse_format("text") == ReportFormat::text);
  CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
  CHECK_THROWS_AS(parse_format(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_format("JSON"), std::invalid_argument);
}

TEST_CASE("csv header and row stay in column lockstep") {
  CHECK(csv_header() == "q,p,s,k,n,branch,det_a,det_b,c_k,d_k,u_k,pass");

  const FieldCtx f7(7, 1);
  const auto rep = verify_pair(f7, 2);
  const auto cells = split_csv(to_csv_row(rep));
  REQUIRE(cells.size() == split_csv(csv_header()).size());
  CHECK(cells[0] == "7");
  CHECK(cells[1] == "7");
  CHECK(cells[2] == "1");
  CHECK(cells[3] == "2");
  CHECK(cells[4] == "3");
  CHECK(cells[5] == "part_ii");
  CHECK(cells[6] == "-7");
  CHECK(cells[7] == "21");
  CHECK(!cells[8].empty());   // c_k is always computed
  CHECK(!cells[9].empty());   // d_k too
  CHECK(cells[10].empty());   // u_k only exists in the square branch
  CHECK(cells[11] == "true");
}

TEST_CASE("csv empty cells for absent values and false for failures") {
  VerificationReport rep = synthetic_report();
  rep.c_k.reset();
  rep.d_k.reset();
  rep.u_k.reset();
  const auto cells = split_csv(to_csv_row(rep));
  CHECK(cells[8].empty());
  CHECK(cells[9].empty());
  CHECK(cells[10].empty());
  CHECK(cells[11] == "false");  // one failing check sinks the row
}

TEST_CASE("json line carries every field in a fixed key order") {
  const FieldCtx f7(7, 1);
  const auto rep = verify_pair(f7, 2);
  const std::string line = to_json_line(rep);
  const auto j = nlohmann::ordered_json::parse(line);

  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  const std::vector<std::string> expect = {"q",   "p",   "s",      "k",
                                           "n",   "branch", "det", "c_k",
                                           "d_k", "u_k", "checks", "elapsed_ms"};
  CHECK(keys == expect);

  CHECK(j["q"] == 7);
  CHECK(j["p"] == 7);
  CHECK(j["s"] == 1);
  CHECK(j["k"] == 2);
  CHECK(j["n"] == 3);
  CHECK(j["branch"] == "part_ii");
  CHECK(j["det"]["a"] == "-7");  // decimal strings, never numbers
  CHECK(j["det"]["b"] == "21");
  CHECK(j["c_k"].is_number());
  CHECK(j["d_k"].is_number());
  CHECK(j["u_k"].is_null());
  CHECK(j["elapsed_ms"] == 0);

  REQUIRE(j["checks"].is_array());
  REQUIRE(!j["checks"].empty());
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("pass"));
    CHECK(c.contains("detail"));
    CHECK(c["pass"] == true);
  }
}

TEST_CASE("json u_k is a decimal string when present") {
  const FieldCtx f5(5, 1);
  const auto rep = verify_pair(f5, 4);
  const auto j = nlohmann::ordered_json::parse(to_json_line(rep));
  CHECK(j["branch"] == "part_iii");
  CHECK(j["u_k"] == "1");
  CHECK(j["c_k"] == 3);
  CHECK(j["d_k"] == -1);
  CHECK(j["det"]["a"] == "-1");
  CHECK(j["det"]["b"] == "1");
}

TEST_CASE("text report shape") {
  const FieldCtx f7(7, 1);
  const auto rep = verify_pair(f7, 2);
  std::ostringstream os;
  write_text(os, rep);
  const std::string out = os.str();
  CHECK(out.find("(q, k) = (7, 2)") != std::string::npos);
  CHECK(out.find("branch=part_ii") != std::string::npos);
  CHECK(out.find("det A_k(t) = ") != std::string::npos);
  CHECK(out.find("result: PASS") != std::string::npos);
  CHECK(out.find("[FAIL]") == std::string::npos);

  size_t ok_lines = 0;
  for (size_t pos = out.find("[ok]"); pos != std::string::npos;
       pos = out.find("[ok]", pos + 1))
    ++ok_lines;
  CHECK(ok_lines == rep.checks.size());
}

TEST_CASE("text report marks failures and degenerate extractions") {
  const VerificationReport rep = synthetic_report();
  std::ostringstream os;
  write_text(os, rep);
  const std::string out = os.str();
  CHECK(out.find("u_k = 0 (degenerate)") != std::string::npos);
  CHECK(out.find("[ok] alpha: fine") != std::string::npos);
  CHECK(out.find("[FAIL] beta: broken") != std::string::npos);
  CHECK(out.find("result: FAIL") != std::string::npos);
}

TEST_CASE("write_report dispatches on format") {
  const FieldCtx f3(3, 1);
  const auto rep = verify_pair(f3, 2);

  std::ostringstream js;
  write_report(js, rep, ReportFormat::json);
  CHECK(js.str() == to_json_line(rep) + "\n");

  std::ostringstream cs;
  write_report(cs, rep, ReportFormat::csv);
  CHECK(cs.str() == csv_header() + "\n" + to_csv_row(rep) + "\n");

  std::ostringstream ts;
  write_report(ts, rep, ReportFormat::text);
  std::ostringstream ts2;
  write_text(ts2, rep);
  CHECK(ts.str() == ts2.str());
}

TEST_CASE("reports are byte-stable without timing") {
  const FieldCtx f13(13, 1);
  const auto r1 = verify_pair(f13, 4);
  const auto r2 = verify_pair(f13, 4);
  CHECK(to_json_line(r1) == to_json_line(r2));
  CHECK(to_csv_row(r1) == to_csv_row(r2));
  CHECK(r1.elapsed_ms == 0);
}
