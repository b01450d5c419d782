#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "charmat/char_sums.hpp"
#include "charmat/fields.hpp"
#include "charmat/report.hpp"
#include "charmat/selftest.hpp"
#include "charmat/sweep.hpp"
#include "charmat/verifier.hpp"

namespace {

int log_level() {
  const char* env = std::getenv("CHARMAT_LOG");
  if (!env) return 1;
  const std::string v(env);
  if (v == "quiet") return 0;
  if (v == "debug") return 2;
  return 1;
}

void log_info(const std::string& msg) {
  if (log_level() >= 1) std::cerr << "charmat: " << msg << "\n";
}

void log_debug(const std::string& msg) {
  if (log_level() >= 2) std::cerr << "charmat: " << msg << "\n";
}

int usage_error(const std::string& msg) {
  std::cerr << "charmat: error: " << msg << "\n";
  return 2;
}

// --q takes precedence; otherwise p^s
std::optional<std::pair<uint64_t, uint32_t>> resolve_field(
    uint64_t q, uint64_t p, uint32_t s, std::string* err) {
  if (q != 0) {
    if (q % 2 == 0) {
      *err = "q must be odd (even characteristic is out of scope)";
      return std::nullopt;
    }
    const auto f = charmat::factor_prime_power(q);
    if (!f) {
      *err = "q = " + std::to_string(q) + " is not a prime power";
      return std::nullopt;
    }
    return f;
  }
  if (p == 0) {
    *err = "provide --q or --p (with optional --s)";
    return std::nullopt;
  }
  if (p == 2 || !charmat::is_prime_u64(p)) {
    *err = "p must be an odd prime";
    return std::nullopt;
  }
  if (s == 0) {
    *err = "s must be at least 1";
    return std::nullopt;
  }
  return std::make_pair(p, s);
}

std::optional<std::vector<uint64_t>> parse_k_filter(const std::string& spec,
                                                    std::string* err) {
  if (spec == "all") return std::nullopt;
  std::vector<uint64_t> ks;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      const unsigned long long v = std::stoull(tok);
      if (v == 0) throw std::invalid_argument("zero");
      ks.push_back(v);
    } catch (const std::exception&) {
      *err = "bad k value '" + tok + "' (expected 'all' or a comma list)";
      return std::make_optional(std::vector<uint64_t>{});
    }
  }
  if (ks.empty()) {
    *err = "empty k list";
    return std::make_optional(std::vector<uint64_t>{});
  }
  return ks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of character-matrix determinant identities"};
  app.require_subcommand(1);

  // verify
  auto* cmd_verify = app.add_subcommand(
      "verify", "verify one (q, k) pair and print a report");
  uint64_t v_q = 0, v_p = 0, v_k = 0;
  uint32_t v_s = 1;
  std::string v_format = "text";
  bool v_timing = false;
  uint64_t v_eigen_limit = 200;
  cmd_verify->add_option("--q", v_q, "field size, an odd prime power");
  cmd_verify->add_option("--p", v_p, "field characteristic");
  cmd_verify->add_option("--s", v_s, "field extension degree");
  cmd_verify->add_option("--k", v_k, "divisor of q-1")->required();
  cmd_verify->add_option("--format", v_format, "json, csv or text");
  cmd_verify->add_flag("--timing", v_timing, "record elapsed_ms");
  cmd_verify->add_option("--eigen-limit", v_eigen_limit,
                         "largest q for the cyclotomic eigenvalue checks");

  // sweep
  auto* cmd_sweep = app.add_subcommand(
      "sweep", "verify every admissible (q, k) pair in a range");
  charmat::SweepConfig cfg;
  cfg.jobs = 0;
  cfg.format = charmat::ReportFormat::json;
  std::string s_k = "all", s_branches = "i,ii,iii", s_format = "json";
  std::string s_out;
  cmd_sweep->add_option("--q-min", cfg.q_min, "lower bound, inclusive");
  cmd_sweep->add_option("--q-max", cfg.q_max, "upper bound, inclusive");
  cmd_sweep->add_option("--k", s_k, "'all' or a comma list of k values");
  cmd_sweep->add_option("--branches", s_branches,
                        "subset of i,ii,iii to include");
  cmd_sweep->add_option("--jobs", cfg.jobs, "worker count, 0 = auto");
  cmd_sweep->add_option("--format", s_format, "json, csv or text");
  cmd_sweep->add_option("--seed", cfg.seed, "echoed into the summary line");
  cmd_sweep->add_option("--out", s_out, "output path, default stdout");
  cmd_sweep->add_flag("--timing", cfg.timing, "record elapsed_ms");
  cmd_sweep->add_option("--eigen-limit", cfg.eigen_q_limit,
                        "largest q for the cyclotomic eigenvalue checks");

  // jacobi
  auto* cmd_jacobi = app.add_subcommand(
      "jacobi", "print a Jacobi sum as exact cyclotomic coefficients");
  uint64_t j_q = 0, j_n = 0;
  int64_t j_i = 0, j_j = 0;
  cmd_jacobi->add_option("--q", j_q, "field size")->required();
  cmd_jacobi->add_option("--i", j_i, "first character exponent")->required();
  cmd_jacobi->add_option("--j", j_j, "second character exponent")->required();
  cmd_jacobi->add_option("--n", j_n, "root-of-unity order, default q-1");

  // curve-count
  auto* cmd_curve = app.add_subcommand(
      "curve-count", "count points on y^2 = x^k + sign, including infinity");
  uint64_t c_q = 0, c_k = 0;
  std::string c_sign = "+1";
  cmd_curve->add_option("--q", c_q, "field size")->required();
  cmd_curve->add_option("--k", c_k, "exponent")->required();
  cmd_curve->add_option("--sign", c_sign, "+1 or -1");

  // selftest
  auto* cmd_selftest = app.add_subcommand(
      "selftest", "run the deterministic property suite");
  uint64_t t_seed = 0;
  cmd_selftest->add_option("--seed", t_seed, "randomness seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_verify) {
      std::string err;
      const auto ps = resolve_field(v_q, v_p, v_s, &err);
      if (!ps) return usage_error(err);
      charmat::ReportFormat fmt;
      try {
        fmt = charmat::parse_format(v_format);
      } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
      }
      const charmat::FieldCtx ctx(ps->first, ps->second);
      const uint64_t q = ctx.q();
      if (v_k == 0 || (q - 1) % v_k != 0)
        return usage_error("k = " + std::to_string(v_k) +
                           " does not divide q-1 = " + std::to_string(q - 1));
      if (log_level() >= 2) {
        std::string mod = "modulus coeffs";
        for (uint32_t c : ctx.params().modulus)
          mod += " " + std::to_string(c);
        log_debug(mod + ", generator " + ctx.to_string(ctx.generator()));
      }
      charmat::VerifyOptions opt;
      opt.timing = v_timing;
      opt.eigen_q_limit = v_eigen_limit;
      const auto rep = charmat::verify_pair(ctx, v_k, opt);
      log_info("verify q=" + std::to_string(q) + " k=" + std::to_string(v_k) +
               " branch=" + charmat::branch_name(rep.branch) +
               (rep.passed() ? " pass" : " FAIL"));
      charmat::write_report(std::cout, rep, fmt);
      return rep.passed() ? 0 : 1;
    }

    if (*cmd_sweep) {
      std::string err;
      const auto ks = parse_k_filter(s_k, &err);
      if (ks && ks->empty() && s_k != "all") return usage_error(err);
      cfg.k_list = ks;
      try {
        cfg.format = charmat::parse_format(s_format);
      } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
      }
      cfg.include_part_i = false;
      cfg.include_part_ii = false;
      cfg.include_part_iii = false;
      std::stringstream bs(s_branches);
      std::string btok;
      while (std::getline(bs, btok, ',')) {
        if (btok == "i") cfg.include_part_i = true;
        else if (btok == "ii") cfg.include_part_ii = true;
        else if (btok == "iii") cfg.include_part_iii = true;
        else return usage_error("unknown branch '" + btok + "'");
      }
      if (cfg.q_min > cfg.q_max)
        return usage_error("q-min exceeds q-max");
      std::ofstream file;
      if (!s_out.empty()) {
        file.open(s_out);
        if (!file) return usage_error("cannot open " + s_out);
      }
      std::ostream& os = s_out.empty() ? std::cout : file;
      const auto sum = charmat::run_sweep(cfg, os);
      log_info("sweep done: total=" + std::to_string(sum.total) +
               " failed=" + std::to_string(sum.failed));
      return sum.failed == 0 ? 0 : 1;
    }

    if (*cmd_jacobi) {
      std::string err;
      const auto ps = resolve_field(j_q, 0, 1, &err);
      if (!ps) return usage_error(err);
      const charmat::FieldCtx ctx(ps->first, ps->second);
      const uint64_t n = j_n == 0 ? ctx.q() - 1 : j_n;
      charmat::CycInt js(1);
      try {
        js = charmat::jacobi_sum(ctx, j_i, j_j, n);
      } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
      }
      nlohmann::ordered_json out;
      out["q"] = ctx.q();
      out["i"] = j_i;
      out["j"] = j_j;
      out["n"] = n;
      out["coeffs"] = nlohmann::ordered_json::array();
      for (uint32_t t = 0; t < js.order(); ++t)
        out["coeffs"].push_back(js.coeff(t).get_str());
      std::cout << out.dump() << "\n";
      return 0;
    }

    if (*cmd_curve) {
      std::string err;
      const auto ps = resolve_field(c_q, 0, 1, &err);
      if (!ps) return usage_error(err);
      int sign;
      if (c_sign == "+1" || c_sign == "1") sign = 1;
      else if (c_sign == "-1") sign = -1;
      else return usage_error("sign must be +1 or -1");
      const charmat::FieldCtx ctx(ps->first, ps->second);
      if (c_k == 0) return usage_error("k must be positive");
      const auto cc = charmat::curve_count(ctx, c_k, sign);
      nlohmann::ordered_json out;
      out["q"] = ctx.q();
      out["k"] = cc.k;
      out["sign"] = cc.sign;
      out["points"] = cc.points;
      out["trace"] = cc.trace;
      std::cout << out.dump() << "\n";
      return 0;
    }

    if (*cmd_selftest) {
      const bool ok = charmat::run_selftest(t_seed, std::cout);
      return ok ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "charmat: internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
