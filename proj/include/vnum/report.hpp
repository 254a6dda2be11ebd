#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vnum/bei.hpp"

namespace vnum::cli {

inline constexpr const char* kVersion = "vnum 0.1.0";

struct PrimeRecord {
  std::string s;  // "{1,3}", "{}" for the empty set
  std::string method;
  std::optional<int> v;
  std::optional<std::string> witness;
  int lo = 0;
  int hi = 0;
  std::optional<bool> oracle_ok;
  long long millis = 0;
};

/// Machine-readable run report; key order of the JSON form is fixed.
struct ReportDocument {
  std::string version = kVersion;
  int n = 0;
  std::vector<graph::Edge> edges;
  std::vector<PrimeRecord> primes;
  std::optional<int> global_v;
  std::optional<std::string> argmin_s;

  nlohmann::ordered_json to_json() const;
  static ReportDocument from_json(const nlohmann::ordered_json& j);
  std::string dump() const;
  static ReportDocument parse(std::string_view text);
};

ReportDocument make_report(const graph::Graph& g, const bei::VNumberReport& r, bool deterministic);

enum class Command { compute, cycle, gb, bounds };

struct RunConfig {
  Command command = Command::compute;
  std::string graph_path;
  int cycle_n = 0;
  std::optional<graph::VertexSet> prime;  // unset: all primes
  bool json = false;
  bool bounds_only = false;
  bool oracle = false;
  bool verify = true;  // cycle: --verify (default) or --bounds
  std::optional<std::string> sigma_path;
  poly::Limits limits;
  double time_budget_secs = 300;
  int jobs = 0;
  bool deterministic = false;
};

/// Applies VNUM_MAX_POLYS, VNUM_MAX_DEGREE, VNUM_TIME_BUDGET_SECS, VNUM_JOBS.
void apply_environment(RunConfig& cfg);

enum ExitCode { kOk = 0, kOther = 1, kParse = 2, kPrecondition = 3, kResource = 4 };

struct RunOutcome {
  ReportDocument report;
  std::vector<std::string> notes;  // extra human-readable lines
  int exit_code = kOk;
};

/// compute and cycle commands.
RunOutcome run(const RunConfig& cfg);

/// Full command line: parses args (without the program name), runs, prints.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vnum::cli
