#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

#include "capi.hpp"

namespace burrcli {

namespace {

bool supported_b1(std::uint64_t b1) { return b1 == 4 || b1 == 7 || b1 == 8 || b1 >= 11; }

struct Cell {
  std::uint64_t b1;
  std::uint64_t b2;
};

class SweepRunner {
 public:
  SweepRunner(const SweepOptions& opts, std::vector<Cell> cells, ResultCache cache)
      : opts_(opts), cells_(std::move(cells)), cache_(std::move(cache)) {
    report_.rows.resize(cells_.size());
  }

  SweepReport run() {
    const unsigned workers = std::max(1U, std::min<unsigned>(opts_.jobs, cells_.size()));
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back([this] { work(); });
    }
    if (first_error_) std::rethrow_exception(first_error_);
    if (opts_.cache_path) cache_.save(*opts_.cache_path);
    return std::move(report_);
  }

 private:
  void work() {
    for (;;) {
      const std::size_t i = next_.fetch_add(1);
      if (i >= cells_.size()) return;
      try {
        report_.rows[i] = solve(cells_[i]);
      } catch (...) {
        std::lock_guard lock(mu_);
        if (!first_error_) first_error_ = std::current_exception();
        next_ = cells_.size();
        return;
      }
      maybe_checkpoint();
    }
  }

  CacheEntry decide(const TripleKey& key) {
    {
      std::lock_guard lock(mu_);
      if (auto hit = cache_.find(key); hit && hit->outcome != BURR_RESOURCE_EXCEEDED) {
        ++report_.cache_hits;
        return *hit;
      }
    }
    burr_search_result* raw = nullptr;
    check(burr_search(key.b1, key.b2, key.b3, &opts_.limits, &raw));
    SearchPtr result(raw);
    const CacheEntry entry{burr_search_outcome(result.get()), burr_search_nodes(result.get())};
    std::lock_guard lock(mu_);
    cache_.put(key, entry);
    report_.new_nodes += entry.nodes;
    ++report_.searches;
    return entry;
  }

  SweepRow solve(const Cell& c) {
    const auto start = std::chrono::steady_clock::now();
    SweepRow row;
    row.b1 = c.b1;
    row.b2 = c.b2;
    row.m = static_cast<std::int64_t>(c.b2) - static_cast<std::int64_t>(3 * c.b1 + 5);
    row.predicted_b3 = c.b1 + c.b2 + 1;
    const std::uint64_t b3_max = row.predicted_b3 + opts_.b3_slack.value_or(c.b1);
    for (std::uint64_t b3 = c.b2 + 1; b3 <= b3_max; ++b3) {
      const CacheEntry e = decide({c.b1, c.b2, b3});
      row.nodes += e.nodes;
      if (e.outcome == BURR_RESOURCE_EXCEEDED) {
        row.decided = false;
        break;
      }
      if (e.outcome == BURR_FEASIBLE) {
        row.found_b3 = b3;
        break;
      }
    }
    row.match = row.decided && row.found_b3 == row.predicted_b3;
    row.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
  }

  void maybe_checkpoint() {
    if (!opts_.cache_path || opts_.checkpoint_every == 0) return;
    const std::size_t done = ++completed_;
    if (done % opts_.checkpoint_every != 0) return;
    std::lock_guard lock(mu_);
    cache_.save(*opts_.cache_path);
  }

  const SweepOptions& opts_;
  std::vector<Cell> cells_;
  ResultCache cache_;
  SweepReport report_;
  std::mutex mu_;
  std::atomic<std::size_t> next_{0};
  std::atomic<std::size_t> completed_{0};
  std::exception_ptr first_error_;
};

}  // namespace

bool SweepReport::any_inconclusive() const {
  return std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.decided; });
}

SweepReport run_sweep(const SweepOptions& opts) {
  if (opts.b1_values.empty()) throw CliError(kExitUsage, "sweep needs at least one b1");
  if (opts.jobs == 0) throw CliError(kExitUsage, "--jobs must be at least 1");
  if (opts.limits.max_nodes == 0 || !(opts.limits.max_seconds > 0))
    throw CliError(kExitUsage, "search limits must be positive");

  std::vector<std::uint64_t> b1s = opts.b1_values;
  std::sort(b1s.begin(), b1s.end());
  b1s.erase(std::unique(b1s.begin(), b1s.end()), b1s.end());

  std::vector<Cell> cells;
  for (std::uint64_t b1 : b1s) {
    if (!supported_b1(b1))
      throw CliError(kExitUsage, "b1 = " + std::to_string(b1) + " is not in {4, 7, 8} or >= 11");
    const std::uint64_t lo = opts.b2_min.value_or(3 * b1 + 5);
    const std::uint64_t hi = opts.b2_max.value_or(6 * b1 + 10);
    if (lo <= b1 || lo > hi)
      throw CliError(kExitUsage, "empty or invalid b2 range for b1 = " + std::to_string(b1));
    for (std::uint64_t b2 = lo; b2 <= hi; ++b2) cells.push_back({b1, b2});
  }

  ResultCache cache;
  if (opts.cache_path) cache = ResultCache::load(*opts.cache_path);
  return SweepRunner(opts, std::move(cells), std::move(cache)).run();
}

std::string sweep_csv(const std::vector<SweepRow>& rows, bool deterministic) {
  std::ostringstream out;
  out << "b1,b2,m,predicted_b3,found_b3,match,nodes,status";
  if (!deterministic) out << ",seconds";
  out << '\n';
  for (const auto& r : rows) {
    out << r.b1 << ',' << r.b2 << ',' << r.m << ',' << r.predicted_b3 << ',';
    if (r.found_b3) out << *r.found_b3;
    out << ',' << (r.match ? "true" : "false") << ',' << r.nodes << ','
        << (r.decided ? "Decided" : "Inconclusive");
    if (!deterministic) out << ',' << r.seconds;
    out << '\n';
  }
  return out.str();
}

}  // namespace burrcli
