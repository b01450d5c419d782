#include "charmat/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <mutex>
#include <ostream>
#include <thread>

#include "charmat/fields.hpp"

namespace charmat {

std::optional<std::pair<uint64_t, uint32_t>> factor_prime_power(uint64_t q) {
  if (q < 3) return std::nullopt;
  uint64_t p = 0;
  for (uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) { p = d; break; }
  if (p == 0) p = q;
  uint32_t s = 0;
  uint64_t m = q;
  while (m % p == 0) { m /= p; ++s; }
  if (m != 1) return std::nullopt;
  return std::make_pair(p, s);
}

std::vector<uint64_t> odd_prime_powers(uint64_t lo, uint64_t hi) {
  std::vector<uint64_t> out;
  for (uint64_t q = std::max<uint64_t>(lo, 3); q <= hi; ++q) {
    if (q % 2 == 0) continue;
    if (factor_prime_power(q)) out.push_back(q);
  }
  return out;
}

std::vector<uint64_t> divisors_of(uint64_t m) {
  std::vector<uint64_t> small, large;
  for (uint64_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    small.push_back(d);
    if (d != m / d) large.push_back(m / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

namespace {

struct Task {
  uint64_t q;
  std::vector<uint64_t> ks;
  std::vector<VerificationReport> reports;
  bool done = false;
};

bool branch_included(const SweepConfig& cfg, Branch b) {
  switch (b) {
    case Branch::part_i: return cfg.include_part_i;
    case Branch::part_ii: return cfg.include_part_ii;
    case Branch::part_iii: return cfg.include_part_iii;
    default: return false;
  }
}

VerificationReport run_one(const FieldCtx& ctx, uint64_t k,
                           const VerifyOptions& opt) {
  try {
    return verify_pair(ctx, k, opt);
  } catch (const std::exception& e) {
    // an exception here means a broken internal invariant; surface it
    // as a failing check instead of tearing the sweep down
    VerificationReport rep;
    rep.q = ctx.q();
    rep.p = ctx.p();
    rep.s = ctx.s();
    rep.k = k;
    rep.n = (ctx.q() - 1) / k;
    rep.branch = classify_branch(ctx.q(), k);
    rep.checks.push_back({"exception", false, e.what()});
    return rep;
  }
}

}  // namespace

SweepSummary run_sweep(const SweepConfig& cfg, std::ostream& os,
                       std::vector<VerificationReport>* collect) {
  if (cfg.q_min > cfg.q_max)
    throw std::invalid_argument("q_min must not exceed q_max");

  VerifyOptions opt;
  opt.eigen_q_limit = cfg.eigen_q_limit;
  opt.timing = cfg.timing;

  std::vector<Task> tasks;
  for (uint64_t q : odd_prime_powers(cfg.q_min, cfg.q_max)) {
    Task t;
    t.q = q;
    for (uint64_t k : divisors_of(q - 1)) {
      if (cfg.k_list &&
          std::find(cfg.k_list->begin(), cfg.k_list->end(), k) ==
              cfg.k_list->end())
        continue;
      if (branch_included(cfg, classify_branch(q, k))) t.ks.push_back(k);
    }
    if (!t.ks.empty()) tasks.push_back(std::move(t));
  }

  std::mutex mu;
  std::condition_variable cv;
  std::atomic<size_t> next_task{0};

  auto worker = [&] {
    for (;;) {
      const size_t idx = next_task.fetch_add(1);
      if (idx >= tasks.size()) return;
      Task& t = tasks[idx];
      const auto [p, s] = *factor_prime_power(t.q);
      const FieldCtx ctx(p, s);
      std::vector<VerificationReport> reps;
      reps.reserve(t.ks.size());
      for (uint64_t k : t.ks) reps.push_back(run_one(ctx, k, opt));
      {
        std::lock_guard<std::mutex> lock(mu);
        t.reports = std::move(reps);
        t.done = true;
      }
      cv.notify_one();
    }
  };

  unsigned jobs = cfg.jobs == 0 ? std::thread::hardware_concurrency()
                                : cfg.jobs;
  jobs = std::max(1u, std::min<unsigned>(jobs, tasks.size() ? tasks.size() : 1));

  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);

  if (cfg.format == ReportFormat::csv) os << csv_header() << "\n";

  SweepSummary sum;
  for (size_t i = 0; i < tasks.size(); ++i) {
    std::unique_lock<std::mutex> lock(mu);
    cv.wait(lock, [&] { return tasks[i].done; });
    std::vector<VerificationReport> reps = std::move(tasks[i].reports);
    lock.unlock();
    for (const auto& rep : reps) {
      ++sum.total;
      if (rep.passed()) ++sum.passed; else ++sum.failed;
      if (rep.degenerate) ++sum.degenerate;
      switch (cfg.format) {
        case ReportFormat::json: os << to_json_line(rep) << "\n"; break;
        case ReportFormat::csv: os << to_csv_row(rep) << "\n"; break;
        case ReportFormat::text: write_text(os, rep); break;
      }
      if (collect) collect->push_back(rep);
    }
  }
  for (auto& th : pool) th.join();

  switch (cfg.format) {
    case ReportFormat::json:
      os << "{\"summary\":{\"total\":" << sum.total << ",\"passed\":"
         << sum.passed << ",\"failed\":" << sum.failed << ",\"degenerate\":"
         << sum.degenerate << ",\"seed\":" << cfg.seed << "}}\n";
      break;
    case ReportFormat::csv:
      os << "# total=" << sum.total << " passed=" << sum.passed
         << " failed=" << sum.failed << " degenerate=" << sum.degenerate
         << " seed=" << cfg.seed << "\n";
      break;
    case ReportFormat::text:
      os << "summary: total=" << sum.total << " passed=" << sum.passed
         << " failed=" << sum.failed << " degenerate=" << sum.degenerate
         << " seed=" << cfg.seed << "\n";
      break;
  }
  return sum;
}

}  // namespace charmat
