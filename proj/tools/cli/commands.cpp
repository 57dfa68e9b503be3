#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "capi.hpp"
#include "sweep.hpp"

namespace burrcli {

using nlohmann::json;
using u64 = std::uint64_t;

namespace {

struct Common {
  std::string format = "json";
  bool deterministic = false;
};

struct LimitFlags {
  u64 max_nodes = burr_limits_default().max_nodes;
  double max_seconds = burr_limits_default().max_seconds;
  bool memo = false;

  burr_limits get() const {
    if (max_nodes == 0 || !(max_seconds > 0))
      throw CliError(kExitUsage, "--max-nodes and --max-seconds must be positive");
    return {max_nodes, max_seconds, memo ? 1 : 0};
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_flag("--deterministic", c.deterministic, "Omit timing fields");
}

void add_limits(CLI::App* cmd, LimitFlags& l) {
  cmd->add_option("--max-nodes", l.max_nodes, "Node budget per feasibility search");
  cmd->add_option("--max-seconds", l.max_seconds, "Time budget per feasibility search");
  cmd->add_flag("--memo", l.memo, "Memoize dead search states");
}

json sigma_json(const burr_sumset* s) {
  u64 v = 0;
  if (burr_sumset_sigma(s, &v) == BURR_OK) return v;
  std::string text(burr_sumset_sigma_decimal(s, nullptr, 0) + 1, '\0');
  burr_sumset_sigma_decimal(s, text.data(), text.size());
  text.pop_back();
  return text;
}

SumsetPtr make_sumset(const std::vector<u64>& elems, u64 cap, u64 max_cap) {
  burr_sumset* raw = nullptr;
  check(burr_sumset_of(elems.data(), elems.size(), cap, max_cap, &raw));
  return SumsetPtr(raw);
}

u64 checked_sum(const std::vector<u64>& elems) {
  u64 total = 0;
  for (u64 e : elems)
    if (__builtin_add_overflow(total, e, &total))
      throw CliError(kExitResource, "element sum exceeds 64 bits; pass --cap");
  return total;
}

json lemma21_json(const burr_lemma21* r) {
  json violations = json::array();
  for (std::size_t i = 0; i < burr_lemma21_violation_count(r); ++i) {
    std::size_t index = 0;
    burr_chain_clause clause{};
    check(burr_lemma21_violation(r, i, &index, &clause));
    violations.push_back({{"index", index}, {"clause", burr_chain_clause_name(clause)}});
  }
  return {{"k", burr_lemma21_k(r)},
          {"chain", take_list([&](burr_list** o) { return burr_lemma21_chain(r, o); })},
          {"pass", burr_lemma21_pass(r) != 0},
          {"violations", violations}};
}

json lemma22_json(const burr_lemma22* r) {
  u64 head[3] = {0, 0, 0};
  burr_lemma22_head(r, head);
  json clauses = json::object();
  for (int c = 0; c < BURR_HEAD_CLAUSE_COUNT; ++c) {
    const auto clause = static_cast<burr_head_clause>(c);
    clauses[burr_head_clause_name(clause)] = burr_lemma22_clause(r, clause) != 0;
  }
  return {{"k", burr_lemma22_k(r)},
          {"a_k1", head[0]},
          {"a_k2", head[1]},
          {"a_k3", head[2]},
          {"clauses", clauses},
          {"pass", burr_lemma22_pass(r) != 0}};
}

json plan_json(const burr_plan* p) {
  json j = {{"case", burr_case_name(burr_plan_case(p))},
            {"m", burr_plan_m(p)},
            {"head", take_list([&](burr_list** o) { return burr_plan_head(p, o); })},
            {"tail_rule", burr_plan_tail_rule(p)},
            {"min_horizon", burr_plan_min_horizon(p)}};
  u64 jv = 0, lv = 0;
  if (burr_plan_jl(p, &jv, &lv)) {
    j["j"] = jv;
    j["l"] = lv;
  }
  return j;
}

std::vector<u64> first_n(const std::vector<u64>& v, std::size_t n) {
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(n, v.size()))};
}

}  // namespace

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Workbench for the inverse subset-sum problem P(A) = N \\ B"};
  app.require_subcommand(1);

  Common common;
  LimitFlags limits;
  std::vector<u64> elements;
  u64 b1 = 0, b2 = 0, b3 = 0;
  std::optional<u64> cap, upto, horizon, b3_max, b2_min, b2_max, b3_slack, opt_b2;
  u64 max_cap = 0;
  bool members = false, exact = false;
  unsigned jobs = 1;
  std::optional<std::string> cache_path;
  u64 trials = 500, seed = 42, max_n = 16, max_value = 64;
  std::vector<u64> b1_list;

  auto add_elements = [&](CLI::App* cmd) {
    cmd->add_option("--elements", elements, "Strictly increasing positive integers")
        ->delimiter(',');
  };

  auto* c_sumset = app.add_subcommand("sumset", "Subset sums P(A) of a finite set");
  add_elements(c_sumset);
  c_sumset->add_option("--cap", cap, "Largest value tracked (default: sum of elements)");
  c_sumset->add_option("--upto", upto, "Gap window upper bound (default: cap)");
  c_sumset->add_option("--max-cap", max_cap, "Memory ceiling override");
  c_sumset->add_flag("--members", members, "List every member");
  add_common(c_sumset, common);

  auto* c_construct = app.add_subcommand("construct", "Sharp construction for (b1, b2)");
  c_construct->add_option("--b1", b1)->required();
  c_construct->add_option("--b2", b2)->required();
  c_construct->add_option("--horizon", horizon, "Window for the gap report (default 2*(4b1+6+m))");
  c_construct->add_option("--max-cap", max_cap, "Memory ceiling override");
  add_common(c_construct, common);

  auto* c_derive = app.add_subcommand("derive-b", "Exclusions B up to a horizon");
  add_elements(c_derive);
  c_derive->add_option("--horizon", horizon)->required();
  c_derive->add_option("--max-cap", max_cap, "Memory ceiling override");
  c_derive->add_flag("--exact", exact, "Certify that omitted elements all exceed the horizon");
  add_common(c_derive, common);

  auto* c_search = app.add_subcommand("search", "Feasibility of an exclusion triple");
  c_search->add_option("--b1", b1)->required();
  c_search->add_option("--b2", b2)->required();
  c_search->add_option("--b3", b3)->required();
  add_limits(c_search, limits);
  add_common(c_search, common);

  auto* c_critical = app.add_subcommand("critical", "Smallest feasible b3 for (b1, b2)");
  c_critical->add_option("--b1", b1)->required();
  c_critical->add_option("--b2", b2)->required();
  c_critical->add_option("--b3-max", b3_max, "Largest candidate (default 2*(b1+b2+1))");
  add_limits(c_critical, limits);
  add_common(c_critical, common);

  auto* c_sweep = app.add_subcommand("sweep", "Critical b3 over a (b1, b2) grid");
  c_sweep->add_option("--b1", b1_list, "b1 values")->required()->delimiter(',');
  c_sweep->add_option("--b2-min", b2_min);
  c_sweep->add_option("--b2-max", b2_max);
  c_sweep->add_option("--b3-slack", b3_slack, "Candidates beyond b1+b2+1 (default b1)");
  c_sweep->add_option("--jobs", jobs, "Worker threads");
  c_sweep->add_option("--cache", cache_path, "Result cache file");
  add_limits(c_sweep, limits);
  add_common(c_sweep, common);

  auto* c_verify = app.add_subcommand("verify-lemmas", "Check the structural lemmas on a sequence");
  add_elements(c_verify);
  c_verify->add_option("--b1", b1)->required();
  c_verify->add_option("--b2", opt_b2, "Also check the head lemma (needs b2 >= 3b1+5)");
  add_common(c_verify, common);

  auto* c_oracle = app.add_subcommand("oracle-check", "Sumset engine vs brute force");
  c_oracle->add_option("--trials", trials);
  c_oracle->add_option("--seed", seed);
  c_oracle->add_option("--max-n", max_n);
  c_oracle->add_option("--max-value", max_value);
  add_common(c_oracle, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const bool sweep_cmd = c_sweep->parsed();
  if (sweep_cmd && c_sweep->count("--format") == 0) common.format = "csv";
  if (!sweep_cmd && common.format == "csv") {
    err << "error: --format csv is only supported by sweep\n";
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  json doc;
  json stats = json::object();
  int code = kExitOk;

  auto finish_stats = [&] {
    if (!common.deterministic)
      stats["elapsed_ms"] = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - start)
                                .count();
  };

  try {
    if (c_sumset->parsed()) {
      const u64 c = cap ? *cap : checked_sum(elements);
      const u64 window = upto.value_or(c);
      auto s = make_sumset(elements, c, max_cap);
      json result = {
          {"elements", elements},
          {"cap", c},
          {"sigma", sigma_json(s.get())},
          {"member_count", burr_sumset_count(s.get())},
          {"gaps", take_list([&](burr_list** o) { return burr_sumset_gaps(s.get(), window, o); })}};
      if (members) {
        std::vector<u64> m;
        for (u64 x = 0; x <= c; ++x)
          if (burr_sumset_contains(s.get(), x)) m.push_back(x);
        result["members"] = m;
      }
      doc = {{"command", "sumset"},
             {"params", {{"elements", elements}, {"cap", c}, {"upto", window}}},
             {"result", result}};
    } else if (c_construct->parsed()) {
      burr_plan* raw = nullptr;
      check(burr_plan_create(b1, b2, &raw));
      PlanPtr plan(raw);
      const u64 h = horizon.value_or(2 * burr_plan_min_horizon(plan.get()));
      const auto seq = take_list([&](burr_list** o) { return burr_realize(plan.get(), h, o); });
      const auto excl = take_list(
          [&](burr_list** o) { return burr_derive_b(seq.data(), seq.size(), h, max_cap, o); });
      const auto first3 = first_n(excl, 3);
      doc = {{"command", "construct"},
             {"params", {{"b1", b1}, {"b2", b2}, {"horizon", h}}},
             {"result",
              {{"plan", plan_json(plan.get())},
               {"elements", seq},
               {"gap_report", {{"horizon", h}, {"exclusions", excl}, {"exact", true}}},
               {"first_exclusions", first3},
               {"predicted_b3", b1 + b2 + 1},
               {"sharp", first3 == std::vector<u64>{b1, b2, b1 + b2 + 1}}}}};
    } else if (c_derive->parsed()) {
      const auto excl = take_list([&](burr_list** o) {
        return burr_derive_b(elements.data(), elements.size(), *horizon, max_cap, o);
      });
      doc = {{"command", "derive-b"},
             {"params", {{"elements", elements}, {"horizon", *horizon}}},
             {"result", {{"horizon", *horizon}, {"exclusions", excl}, {"exact", exact}}}};
    } else if (c_search->parsed()) {
      const burr_limits lim = limits.get();
      burr_search_result* raw = nullptr;
      check(burr_search(b1, b2, b3, &lim, &raw));
      SearchPtr r(raw);
      const burr_outcome o = burr_search_outcome(r.get());
      json result = {{"outcome", burr_outcome_name(o)}};
      if (o == BURR_FEASIBLE) {
        result["witness"] = take_list([&](burr_list** l) { return burr_search_witness(r.get(), l); });
        result["certificate"] =
            take_list([&](burr_list** l) { return burr_search_certificate(r.get(), l); });
      }
      stats["nodes"] = burr_search_nodes(r.get());
      stats["max_depth"] = burr_search_max_depth(r.get());
      doc = {{"command", "search"},
             {"params",
              {{"b1", b1}, {"b2", b2}, {"b3", b3}, {"max_nodes", lim.max_nodes},
               {"max_seconds", lim.max_seconds}, {"memo", lim.memoize != 0}}},
             {"result", result}};
      if (o == BURR_RESOURCE_EXCEEDED) code = kExitResource;
    } else if (c_critical->parsed()) {
      const burr_limits lim = limits.get();
      const u64 top = b3_max.value_or(2 * (b1 + b2 + 1));
      burr_critical cr{};
      check(burr_critical_b3(b1, b2, top, &lim, &cr));
      json result = {{"status", burr_critical_status_name(cr.status)},
                     {"predicted_b3", b1 + b2 + 1}};
      if (cr.status == BURR_CRITICAL_FOUND) result["b3"] = cr.b3;
      if (cr.status == BURR_CRITICAL_INCONCLUSIVE) {
        result["first_undecided"] = cr.first_undecided;
        code = kExitResource;
      }
      stats["nodes"] = cr.nodes;
      doc = {{"command", "critical"},
             {"params", {{"b1", b1}, {"b2", b2}, {"b3_max", top}}},
             {"result", result}};
    } else if (sweep_cmd) {
      SweepOptions opts;
      opts.b1_values = b1_list;
      opts.b2_min = b2_min;
      opts.b2_max = b2_max;
      opts.b3_slack = b3_slack;
      opts.jobs = jobs;
      opts.limits = limits.get();
      opts.cache_path = cache_path;
      const SweepReport rep = run_sweep(opts);
      err << "sweep: " << rep.rows.size() << " cells, " << rep.searches << " searches, "
          << rep.cache_hits << " cache hits, " << rep.new_nodes << " new nodes\n";
      if (rep.any_inconclusive()) code = kExitResource;
      if (common.format == "csv") {
        out << sweep_csv(rep.rows, common.deterministic);
        return code;
      }
      json rows = json::array();
      for (const auto& r : rep.rows) {
        json row = {{"b1", r.b1}, {"b2", r.b2}, {"m", r.m}, {"predicted_b3", r.predicted_b3},
                    {"found_b3", r.found_b3 ? json(*r.found_b3) : json(nullptr)},
                    {"match", r.match}, {"nodes", r.nodes},
                    {"status", r.decided ? "Decided" : "Inconclusive"}};
        if (!common.deterministic) row["seconds"] = r.seconds;
        rows.push_back(row);
      }
      stats["new_nodes"] = rep.new_nodes;
      stats["cache_hits"] = rep.cache_hits;
      doc = {{"command", "sweep"},
             {"params", {{"b1", b1_list}, {"jobs", jobs}}},
             {"result", {{"rows", rows}}}};
    } else if (c_verify->parsed()) {
      burr_lemma21* r21 = nullptr;
      check(burr_verify_lemma21(elements.data(), elements.size(), b1, &r21));
      Lemma21Ptr l21(r21);
      json result = {{"lemma21", lemma21_json(l21.get())}};
      bool pass = burr_lemma21_pass(l21.get()) != 0;
      if (opt_b2) {
        burr_lemma22* r22 = nullptr;
        check(burr_verify_lemma22(elements.data(), elements.size(), b1, *opt_b2, &r22));
        Lemma22Ptr l22(r22);
        result["lemma22"] = lemma22_json(l22.get());
        pass = pass && burr_lemma22_pass(l22.get()) != 0;
      }
      result["pass"] = pass;
      json params = {{"elements", elements}, {"b1", b1}};
      if (opt_b2) params["b2"] = *opt_b2;
      doc = {{"command", "verify-lemmas"}, {"params", params}, {"result", result}};
      if (!pass) code = kExitMismatch;
    } else if (c_oracle->parsed()) {
      if (max_n > 20) throw CliError(kExitUsage, "--max-n must be at most 20");
      if (max_value < max_n || max_value == 0)
        throw CliError(kExitUsage, "--max-value must be at least --max-n and positive");
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<u64> size_dist(0, max_n);
      std::vector<u64> pool(max_value);
      for (u64 i = 0; i < max_value; ++i) pool[i] = i + 1;
      u64 mismatches = 0;
      json first_mismatch = nullptr;
      for (u64 t = 0; t < trials; ++t) {
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<u64> set(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size_dist(rng)));
        std::sort(set.begin(), set.end());
        const u64 total = checked_sum(set);
        auto s = make_sumset(set, total, 0);
        std::vector<u64> engine;
        for (u64 x = 0; x <= total; ++x)
          if (burr_sumset_contains(s.get(), x)) engine.push_back(x);
        const auto brute = take_list(
            [&](burr_list** o) { return burr_brute_force_sumset(set.data(), set.size(), o); });
        if (engine != brute) {
          if (mismatches++ == 0) first_mismatch = set;
        }
      }
      doc = {{"command", "oracle-check"},
             {"params", {{"trials", trials}, {"seed", seed}, {"max_n", max_n}, {"max_value", max_value}}},
             {"result", {{"mismatches", mismatches}, {"first_mismatch", first_mismatch},
                         {"pass", mismatches == 0}}}};
      if (mismatches != 0) code = kExitMismatch;
    }
  } catch (const CliError& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  }

  finish_stats();
  doc["stats"] = stats;
  out << doc.dump(2) << '\n';
  return code;
}

}  // namespace burrcli
