#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vnum/errors.hpp"
#include "vnum/report.hpp"

using namespace vnum;
using namespace vnum::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "vnum_cli_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

const std::string kC4 = "n 4\n1 2\n2 3\n3 4\n1 4\n";

struct EnvGuard {
  const char* name;
  explicit EnvGuard(const char* n, const char* value) : name(n) { setenv(n, value, 1); }
  ~EnvGuard() { unsetenv(name); }
};

}  // namespace

TEST_CASE("compute C4 as JSON") {
  const auto path = write_temp("c4.txt", kC4);
  const auto r = call({"compute", path, "--json", "--deterministic"});
  REQUIRE(r.code == kOk);
  const auto j = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"version", "input", "primes", "global"});
  CHECK(j["version"] == kVersion);
  CHECK(j["input"]["n"] == 4);
  CHECK(j["primes"].size() == 3);
  CHECK(j["global"]["v"] == 2);
  CHECK(j["global"]["argmin_s"] == "{}");
  std::vector<std::string> prime_keys;
  for (auto it = j["primes"][0].begin(); it != j["primes"][0].end(); ++it) prime_keys.push_back(it.key());
  CHECK(prime_keys ==
        std::vector<std::string>{"s", "method", "v", "witness", "window", "oracle_ok", "millis"});
  for (const auto& p : j["primes"]) CHECK(p["millis"] == 0);
}

TEST_CASE("reports are deterministic and round-trip") {
  const auto path = write_temp("c4.txt", kC4);
  const auto a = call({"compute", path, "--json", "--deterministic", "--oracle"});
  const auto b = call({"compute", path, "--json", "--deterministic", "--oracle", "--jobs", "1"});
  REQUIRE(a.code == kOk);
  CHECK(a.out == b.out);
  CHECK(ReportDocument::parse(a.out).dump() == a.out);

  const auto timed = call({"compute", path, "--json"});
  CHECK(ReportDocument::parse(timed.out).dump() == timed.out);
  CHECK_THROWS_AS(ReportDocument::parse("{\"version\": 1}"), ParseError);
  CHECK_THROWS_AS(ReportDocument::parse("not json"), ParseError);
}

TEST_CASE("single prime and oracle columns") {
  const auto path = write_temp("c4.txt", kC4);
  const auto r = call({"compute", path, "--prime", "1,3", "--oracle", "--json", "--deterministic"});
  REQUIRE(r.code == kOk);
  const auto d = ReportDocument::parse(r.out);
  REQUIRE(d.primes.size() == 1);
  CHECK(d.primes[0].s == "{1,3}");
  CHECK(d.primes[0].v == 2);
  CHECK(d.primes[0].oracle_ok == true);
  CHECK(call({"compute", path, "--prime", "1,2"}).code == kPrecondition);
}

TEST_CASE("bounds-only never runs Buchberger") {
  const auto path = write_temp("c6.txt", "n 6\n1 2\n2 3\n3 4\n4 5\n5 6\n1 6\n");
  const auto before = poly::buchberger_runs();
  const auto r = call({"compute", path, "--bounds-only", "--json", "--deterministic"});
  CHECK(r.code == kOk);
  CHECK(poly::buchberger_runs() == before);
  const auto d = ReportDocument::parse(r.out);
  for (const auto& p : d.primes) {
    CHECK(p.method != "algebraic");
    CHECK_FALSE(p.witness.has_value());
  }
}

TEST_CASE("human table") {
  const auto path = write_temp("c4.txt", kC4);
  const auto r = call({"compute", path});
  CHECK(r.code == kOk);
  CHECK(r.out.find("global v = 2") != std::string::npos);
}

TEST_CASE("cycle commands") {
  const auto b = call({"cycle", "7", "--bounds", "--json", "--deterministic"});
  REQUIRE(b.code == kOk);
  CHECK(b.err.find("global window for C_7: [4, 5]") != std::string::npos);
  CHECK(call({"bounds", "cycle", "7", "--json", "--deterministic"}).out == b.out);
  CHECK(call({"cycle", "5", "--bounds"}).code == kPrecondition);

  const auto v = call({"cycle", "6", "--json", "--deterministic"});
  REQUIRE(v.code == kOk);
  CHECK(ReportDocument::parse(v.out).global_v == 4);
  CHECK(v.err.find("all windows satisfied: yes") != std::string::npos);
}

TEST_CASE("gb command") {
  const auto path = write_temp("c4.txt", kC4);
  const auto r = call({"gb", path});
  CHECK(r.code == kOk);
  CHECK(r.out.find("x1*y2 - x2*y1") != std::string::npos);
  const auto sigma = write_temp("sigma.txt", "4 3 2 1\n");
  const auto j = call({"gb", path, "--sigma", sigma, "--json"});
  REQUIRE(j.code == kOk);
  const auto doc = nlohmann::ordered_json::parse(j.out);
  CHECK(doc["reduced"] == true);
  CHECK(doc["sigma"] == std::vector<int>{4, 3, 2, 1});
  const auto bad = write_temp("bad_sigma.txt", "1 1 2 3\n");
  CHECK(call({"gb", path, "--sigma", bad}).code == kPrecondition);
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == kParse);
  CHECK(call({"compute"}).code == kParse);
  CHECK(call({"compute", "/nonexistent/graph.txt"}).code == kParse);
  CHECK(call({"compute", write_temp("dup.txt", "n 3\n1 2\n1 2\n")}).code == kParse);
  CHECK(call({"compute", write_temp("split.txt", "n 4\n1 2\n3 4\n")}).code == kPrecondition);
  CHECK(call({"cycle", "99"}).code == kParse);
  CHECK(call({"--version"}).code == kOk);
}

TEST_CASE("resource caps come from the environment") {
  const auto path = write_temp("c4.txt", kC4);
  {
    EnvGuard cap("VNUM_MAX_POLYS", "1");
    const auto r = call({"compute", path, "--json", "--deterministic"});
    CHECK(r.code == kResource);
    const auto d = ReportDocument::parse(r.out);
    CHECK_FALSE(d.global_v.has_value());
    CHECK_FALSE(r.err.empty());
  }
  {
    EnvGuard bad("VNUM_MAX_DEGREE", "lots");
    CHECK(call({"compute", path}).code == kParse);
  }
  {
    EnvGuard zero("VNUM_TIME_BUDGET_SECS", "0");
    CHECK(call({"compute", path}).code == kPrecondition);
  }
}

TEST_CASE("jobs flag overrides the environment") {
  EnvGuard jobs("VNUM_JOBS", "3");
  RunConfig cfg;
  apply_environment(cfg);
  CHECK(cfg.jobs == 3);
  const auto path = write_temp("c4.txt", kC4);
  CHECK(call({"compute", path, "--jobs", "1", "--json", "--deterministic"}).code == kOk);
}

TEST_CASE("run without the command line") {
  RunConfig cfg;
  cfg.command = Command::compute;
  cfg.graph_path = write_temp("p4.txt", "n 4\n1 2\n2 3\n3 4\n");
  cfg.deterministic = true;
  const auto o = run(cfg);
  CHECK(o.exit_code == kOk);
  CHECK(o.report.global_v == 2);
  CHECK(o.report.primes.size() == 3);
}
