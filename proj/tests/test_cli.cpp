#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cache.hpp"
#include "capi.hpp"
#include "commands.hpp"
#include "sweep.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "burrset");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = burrcli::run_command(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_path(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("burrset_test_" + name);
  fs::remove(p);
  fs::remove(p.string() + ".lock");
  return p;
}

}  // namespace

TEST_CASE("cli: construct document") {
  const auto r = run({"construct", "--b1", "11", "--b2", "49", "--horizon", "500"});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["command"] == "construct");
  CHECK(doc.contains("params"));
  CHECK(doc.contains("stats"));
  CHECK(doc["result"]["plan"]["case"] == "RangeMidJ");
  CHECK(doc["result"]["plan"]["j"] == 1);
  CHECK(doc["result"]["first_exclusions"] == json::array({11, 49, 61}));
  CHECK(doc["result"]["gap_report"]["exact"] == true);
  CHECK(doc["result"]["sharp"] == true);
}

TEST_CASE("cli: search outcomes and exit codes") {
  auto r = run({"search", "--b1", "11", "--b2", "38", "--b3", "49"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["result"]["outcome"] == "infeasible");

  r = run({"search", "--b1", "11", "--b2", "38", "--b3", "50", "--deterministic"});
  CHECK(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["result"]["witness"] == json::array({1, 2, 3, 4, 12, 13, 14}));
  CHECK_FALSE(doc["stats"].contains("elapsed_ms"));

  r = run({"search", "--b1", "11", "--b2", "38", "--b3", "49", "--max-nodes", "2"});
  CHECK(r.code == 3);
  CHECK(json::parse(r.out)["result"]["outcome"] == "resource_exceeded");
}

TEST_CASE("cli: argument errors emit nothing on stdout") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"search", "--b1", "11", "--b2", "38"},
           {"search", "--b1", "x", "--b2", "38", "--b3", "40"},
           {"search", "--b1", "11", "--b2", "10", "--b3", "40"},
           {"search", "--b1", "11", "--b2", "38", "--b3", "49", "--max-nodes", "0"},
           {"construct", "--b1", "9", "--b2", "40"},
           {"construct", "--b1", "11", "--b2", "38", "--horizon", "10"},
           {"sumset", "--elements", "3,2"},
           {"sumset", "--elements", "1,2", "--format", "csv"},
           {"sweep", "--b1", "5"},
           {"sweep", "--b1", "4", "--jobs", "0"},
           {"nonsense"},
       }) {
    const auto r = run(args);
    INFO(args[0]);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
  }
}

TEST_CASE("cli: sumset and derive-b") {
  auto r = run({"sumset", "--elements", "1,2,3,4,12,13,14", "--members"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["result"]["sigma"] == 49);
  CHECK(doc["result"]["gaps"] == json::array({11, 38}));
  CHECK(doc["result"]["member_count"] == 48);

  r = run({"sumset", "--cap", "100000000"});
  CHECK(r.code == 3);

  r = run({"derive-b", "--elements", "1", "--horizon", "3"});
  REQUIRE(r.code == 0);
  doc = json::parse(r.out);
  CHECK(doc["result"]["exclusions"] == json::array({2, 3}));
  CHECK(doc["result"]["exact"] == false);
}

TEST_CASE("cli: critical") {
  auto r = run({"critical", "--b1", "4", "--b2", "17", "--b3-max", "40"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["result"]["b3"] == 22);

  r = run({"critical", "--b1", "5", "--b2", "20", "--b3-max", "40"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["result"]["status"] == "not_found");

  r = run({"critical", "--b1", "11", "--b2", "38", "--max-nodes", "2"});
  CHECK(r.code == 3);
  CHECK(json::parse(r.out)["result"]["first_undecided"] == 39);
}

TEST_CASE("cli: verify-lemmas and oracle-check") {
  auto r = run({"verify-lemmas", "--elements", "1,2,3,4,12,13,14", "--b1", "11", "--b2", "38"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["result"]["lemma21"]["chain"] == json::array({1, 3, 6, 10}));
  CHECK(doc["result"]["lemma22"]["clauses"]["prefix_pattern"] == true);

  r = run({"verify-lemmas", "--elements", "1,3", "--b1", "5"});
  CHECK(r.code == 4);
  doc = json::parse(r.out);
  CHECK(doc["result"]["lemma21"]["violations"][0]["clause"] == "growth");

  r = run({"oracle-check", "--trials", "500", "--seed", "42", "--max-n", "16"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["result"]["mismatches"] == 0);
}

TEST_CASE("cache: json round trip and overwrite rules") {
  burrcli::ResultCache c;
  CHECK(c.put({4, 17, 22}, {BURR_FEASIBLE, 34}));
  CHECK(c.put({4, 17, 21}, {BURR_INFEASIBLE, 9}));
  CHECK(c.put({7, 26, 30}, {BURR_RESOURCE_EXCEEDED, 100}));
  CHECK_FALSE(c.put({4, 17, 22}, {BURR_INFEASIBLE, 1}));
  CHECK(c.put({7, 26, 30}, {BURR_INFEASIBLE, 120}));

  const auto back = burrcli::ResultCache::from_json(c.to_json());
  CHECK(back.entries() == c.entries());
  CHECK(back.find({7, 26, 30})->outcome == BURR_INFEASIBLE);

  CHECK_THROWS_AS(burrcli::ResultCache::from_json(R"({"schema_version": 2, "entries": {}})"),
                  burrcli::CliError);
  CHECK_THROWS_AS(burrcli::ResultCache::from_json("not json"), burrcli::CliError);
  CHECK_THROWS_AS(burrcli::ResultCache::from_json(
                      R"({"schema_version": 1, "entries": {"4-17-22": {"outcome": "feasible", "nodes": 1}}})"),
                  burrcli::CliError);

  const auto path = temp_path("roundtrip.json");
  c.save(path);
  const auto loaded = burrcli::ResultCache::load(path);
  CHECK(loaded.entries() == c.entries());
  CHECK(burrcli::ResultCache::load(temp_path("missing.json")).size() == 0);
}

TEST_CASE("sweep: b1 = 4 matches the predicted critical values") {
  burrcli::SweepOptions opts;
  opts.b1_values = {4};
  const auto rep = burrcli::run_sweep(opts);
  REQUIRE(rep.rows.size() == 18);
  for (const auto& row : rep.rows) {
    CHECK(row.match);
    CHECK(row.found_b3 == row.b2 + 5);
    CHECK(row.decided);
  }
  CHECK_FALSE(rep.any_inconclusive());

  opts.b1_values = {7};
  opts.b2_min = 26;
  opts.b2_max = 26;
  const auto seven = burrcli::run_sweep(opts);
  REQUIRE(seven.rows.size() == 1);
  CHECK(seven.rows[0].found_b3 == 34u);
}

TEST_CASE("sweep: scheduling independence and warm cache replay") {
  const auto cache = temp_path("sweep_cache.json");
  const auto a = run({"sweep", "--b1", "4,7", "--deterministic", "--jobs", "1"});
  const auto b = run({"sweep", "--b1", "7,4", "--deterministic", "--jobs", "4"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);

  const auto cold = run({"sweep", "--b1", "4", "--deterministic", "--cache", cache.string()});
  const auto warm = run({"sweep", "--b1", "4", "--deterministic", "--cache", cache.string(),
                         "--jobs", "3"});
  REQUIRE(cold.code == 0);
  REQUIRE(warm.code == 0);
  CHECK(cold.out == warm.out);
  CHECK(warm.err.find(" 0 new nodes") != std::string::npos);
  CHECK(warm.err.find(" 0 searches") != std::string::npos);

  const auto timed = run({"sweep", "--b1", "4"});
  CHECK(timed.out.rfind("b1,b2,m,predicted_b3,found_b3,match,nodes,status,seconds\n", 0) == 0);
}

TEST_CASE("sweep: inconclusive rows exit 3 and are retried from cache") {
  const auto cache = temp_path("inconclusive.json");
  const auto r = run({"sweep", "--b1", "4", "--b2-max", "18", "--max-nodes", "3", "--deterministic",
                      "--cache", cache.string()});
  CHECK(r.code == 3);
  CHECK(r.out.find("Inconclusive") != std::string::npos);

  const auto again = run({"sweep", "--b1", "4", "--b2-max", "18", "--deterministic", "--cache",
                          cache.string(), "--format", "json"});
  REQUIRE(again.code == 0);
  const auto doc = json::parse(again.out);
  for (const auto& row : doc["result"]["rows"]) CHECK(row["match"] == true);
}
