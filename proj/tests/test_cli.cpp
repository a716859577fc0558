#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("SS3_CLI");
  REQUIRE(p != nullptr);
  return p;
}

RunResult run(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("census q=3 json") {
  RunResult r = run("census --q 3");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["q"] == 3);
  CHECK(j["pass"] == true);
  CHECK(j["observed"].size() == 4);
  CHECK(j["expected"].size() == 4);
  CHECK(j["curves_scanned"] == 36);
  CHECK(j["witnesses"].size() == 4);
  // Deterministic output: identical bytes on a second run.
  RunResult r2 = run("census --q 3");
  CHECK(r.out == r2.out);
  // Observed sorted by (s1, s2).
  auto& obs = j["observed"];
  for (size_t i = 1; i < obs.size(); ++i) {
    auto a = std::pair<long long, long long>(obs[i - 1][0], obs[i - 1][1]);
    auto b = std::pair<long long, long long>(obs[i][0], obs[i][1]);
    CHECK(a < b);
  }
}

TEST_CASE("census csv") {
  RunResult r = run("census --q 3 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("s1,s2,expected,observed", 0) == 0);
  RunResult r2 = run("census --q 3 --format csv");
  CHECK(r.out == r2.out);
}

TEST_CASE("census multi-worker determinism") {
  RunResult a = run("census --q 9 --jobs 1");
  RunResult b = run("census --q 9 --jobs 3");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("census").exit_code == 2);            // missing --q
  CHECK(run("census --q 5").exit_code == 2);      // not a power of 3
  CHECK(run("census --q 81").exit_code == 2);     // opt-in required
  CHECK(run("bogus-subcommand").exit_code == 2);
  CHECK(run("classify-elliptic --q 9 --b 99 --c 00").exit_code == 2);
  CHECK(run("construct --q 3 --s1 0 --s2 6").exit_code == 2);  // not on list
}

TEST_CASE("classify-elliptic") {
  RunResult r = run("classify-elliptic --q 3 --b 1 --c 0");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["class"] == "pm_one");
  CHECK(j["trace"] == 0);
  CHECK(j["aut"] == 6);
  CHECK(j["counted_trace"] == 0);
}

TEST_CASE("cover") {
  RunResult r = run("cover --q 9 --b 10 --c 10");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["split"] == true);
  CHECK(j["classified"].is_array());
  // Odd-degree fields get no classified pair.
  RunResult r3 = run("cover --q 27 --b 100 --c 100");
  CHECK(r3.exit_code == 0);
  json j3 = json::parse(r3.out);
  CHECK(!j3.contains("classified"));
}

TEST_CASE("moduli") {
  RunResult r = run("moduli --q 9 --fiber 10");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["distinct_roots"].is_number());
  CHECK(j["splitting_degree"].is_number());
  CHECK(j["roots"].is_array());
}

TEST_CASE("construct") {
  RunResult r = run("construct --q 3 --s1 0 --s2 3");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["verified"] == true);
  CHECK(j["s1"] == 0);
  CHECK(j["s2"] == 3);
  CHECK(j.contains("poly"));
  CHECK(j.contains("twist"));
}

TEST_CASE("igusa") {
  // y^2 = x^5 + 1 over F_3: supersingular, invariant 0, weil (0,0).
  RunResult r = run("igusa --q 3 --poly 1,0,0,0,0,1");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["supersingular"] == true);
  CHECK(j["invariant"] == "0");
  CHECK(j["weil"][0] == 0);
  CHECK(j["weil"][1] == 0);
  CHECK(j["geometric_aut"] == 10);

  // y^2 = x^5 - x over F_3: not supersingular, weil (0,-2).
  RunResult r2 = run("igusa --q 3 --poly 0,2,0,0,0,1");
  CHECK(r2.exit_code == 0);
  json j2 = json::parse(r2.out);
  CHECK(j2["supersingular"] == false);
  CHECK(j2["invariant"].is_null());
  CHECK(j2["weil"][0] == 0);
  CHECK(j2["weil"][1] == -2);
}

TEST_CASE("verify suites") {
  RunResult r = run("verify --suite moduli");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["pass"] == true);
  for (auto& [name, res] : j["results"].items()) {
    CHECK(res["pass"] == true);
    CHECK(res["counterexample"].is_null());
  }
  RunResult c = run("verify --suite census");
  CHECK(c.exit_code == 0);
  CHECK(json::parse(c.out)["pass"] == true);
}

TEST_CASE("verify fault injection flips the exit code") {
  RunResult bad = run("verify --suite tables --inject-table-fault");
  CHECK(bad.exit_code == 1);
  json j = json::parse(bad.out);
  CHECK(j["pass"] == false);
  bool some_counterexample = false;
  for (auto& [name, res] : j["results"].items())
    if (!res["counterexample"].is_null()) some_counterexample = true;
  CHECK(some_counterexample);
}
