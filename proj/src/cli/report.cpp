#include "vnum/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "vnum/cycle.hpp"
#include "vnum/errors.hpp"

namespace vnum::cli {

using nlohmann::ordered_json;

namespace {

template <typename T>
ordered_json opt_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

template <typename T>
std::optional<T> opt_from(const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

}  // namespace

ordered_json ReportDocument::to_json() const {
  ordered_json j;
  j["version"] = version;
  ordered_json edge_list = ordered_json::array();
  for (auto [u, v] : edges) edge_list.push_back({u, v});
  j["input"] = {{"n", n}, {"edges", edge_list}};
  ordered_json list = ordered_json::array();
  for (const auto& p : primes) {
    ordered_json e;
    e["s"] = p.s;
    e["method"] = p.method;
    e["v"] = opt_json(p.v);
    e["witness"] = opt_json(p.witness);
    e["window"] = {{"lo", p.lo}, {"hi", p.hi}};
    e["oracle_ok"] = opt_json(p.oracle_ok);
    e["millis"] = p.millis;
    list.push_back(std::move(e));
  }
  j["primes"] = std::move(list);
  j["global"] = {{"v", opt_json(global_v)}, {"argmin_s", opt_json(argmin_s)}};
  return j;
}

ReportDocument ReportDocument::from_json(const ordered_json& j) {
  try {
    ReportDocument d;
    d.version = j.at("version").get<std::string>();
    d.n = j.at("input").at("n").get<int>();
    for (const auto& e : j.at("input").at("edges")) d.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    for (const auto& e : j.at("primes")) {
      PrimeRecord p;
      p.s = e.at("s").get<std::string>();
      p.method = e.at("method").get<std::string>();
      p.v = opt_from<int>(e.at("v"));
      p.witness = opt_from<std::string>(e.at("witness"));
      p.lo = e.at("window").at("lo").get<int>();
      p.hi = e.at("window").at("hi").get<int>();
      p.oracle_ok = opt_from<bool>(e.at("oracle_ok"));
      p.millis = e.at("millis").get<long long>();
      d.primes.push_back(std::move(p));
    }
    d.global_v = opt_from<int>(j.at("global").at("v"));
    d.argmin_s = opt_from<std::string>(j.at("global").at("argmin_s"));
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
}

std::string ReportDocument::dump() const { return to_json().dump(2) + "\n"; }

ReportDocument ReportDocument::parse(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
  return from_json(j);
}

ReportDocument make_report(const graph::Graph& g, const bei::VNumberReport& r, bool deterministic) {
  ReportDocument d;
  d.n = g.n();
  d.edges = g.edges();
  for (const auto& e : r.primes) {
    PrimeRecord p;
    p.s = graph::to_string(e.s);
    p.method = bei::to_string(e.method);
    p.v = e.v;
    if (e.v && e.method == bei::Method::algebraic) p.witness = poly::to_string(e.witness);
    p.lo = e.window_lo;
    p.hi = e.window_hi;
    p.oracle_ok = e.oracle_ok();
    p.millis = deterministic ? 0 : std::llround(e.millis);
    d.primes.push_back(std::move(p));
  }
  d.global_v = r.global_v;
  if (r.global_v) d.argmin_s = graph::to_string(r.argmin);
  return d;
}

namespace {

long long env_number(const char* name, long long fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  const long long v = std::strtoll(raw, &end, 10);
  if (*end != '\0') throw ParseError(std::string(name) + ": not an integer: " + raw);
  if (v <= 0) throw PreconditionError(std::string(name) + " must be positive");
  return v;
}

}  // namespace

void apply_environment(RunConfig& cfg) {
  cfg.limits.max_polys = static_cast<std::size_t>(env_number("VNUM_MAX_POLYS", cfg.limits.max_polys));
  cfg.limits.max_degree = static_cast<int>(env_number("VNUM_MAX_DEGREE", cfg.limits.max_degree));
  cfg.time_budget_secs =
      static_cast<double>(env_number("VNUM_TIME_BUDGET_SECS", std::llround(cfg.time_budget_secs)));
  cfg.jobs = static_cast<int>(env_number("VNUM_JOBS", cfg.jobs));
}

namespace {

bei::VNumberOptions options_of(const RunConfig& cfg) {
  bei::VNumberOptions o;
  o.limits = cfg.limits;
  o.time_budget_secs = cfg.time_budget_secs;
  o.algebraic = !cfg.bounds_only;
  o.oracle = cfg.oracle;
  o.jobs = cfg.jobs;
  o.only = cfg.prime;
  return o;
}

void collect_errors(const bei::VNumberReport& r, RunOutcome& out) {
  for (const auto& e : r.primes) {
    if (e.error.empty()) continue;
    out.notes.push_back("S = " + graph::to_string(e.s) + ": " + e.error);
    out.exit_code = kResource;
  }
}

RunOutcome run_cycle_bounds(const RunConfig& cfg) {
  const int n = cfg.cycle_n;
  const auto window = cycle::global_bounds(n);
  const graph::Graph g = cycle::cycle_graph(n);
  RunOutcome out;
  out.report.n = n;
  out.report.edges = g.edges();
  for (const auto& cut : graph::enumerate_min_cuts(g)) {
    const auto w = cycle::localized_bounds(n, cut.s);
    PrimeRecord p;
    p.s = graph::to_string(cut.s);
    p.method = "combinatorial";
    if (w.exact()) p.v = w.lo;
    p.lo = w.lo;
    p.hi = w.hi;
    out.report.primes.push_back(std::move(p));
  }
  if (window.exact()) out.report.global_v = window.lo;
  std::ostringstream line;
  line << "global window for C_" << n << ": [" << window.lo << ", " << window.hi << "]";
  out.notes.push_back(line.str());
  return out;
}

RunOutcome run_cycle_verify(const RunConfig& cfg) {
  const int n = cfg.cycle_n;
  const auto rep = cycle::verify_cycle(n, options_of(cfg));
  RunOutcome out;
  out.report = make_report(cycle::cycle_graph(n), rep.vnumber, cfg.deterministic);
  for (std::size_t i = 0; i < rep.checks.size(); ++i) {
    const auto& c = rep.checks[i];
    out.report.primes[i].lo = c.window.lo;
    out.report.primes[i].hi = c.window.hi;
    if (c.groebner != "n/a")
      out.notes.push_back("S = " + graph::to_string(c.s) + ": J + I_S basis check " + c.groebner);
  }
  if (rep.global_window) {
    std::ostringstream line;
    line << "global window for C_" << n << ": [" << rep.global_window->lo << ", "
         << rep.global_window->hi << "]";
    out.notes.push_back(line.str());
  }
  out.notes.push_back(std::string("all windows satisfied: ") + (rep.all_in_window ? "yes" : "no"));
  collect_errors(rep.vnumber, out);
  if (out.exit_code == kOk && !rep.all_in_window) out.exit_code = kOther;
  return out;
}

}  // namespace

RunOutcome run(const RunConfig& cfg) {
  if (cfg.limits.max_polys == 0 || cfg.limits.max_degree <= 0 || cfg.time_budget_secs <= 0)
    throw PreconditionError("resource caps must be positive");
  switch (cfg.command) {
    case Command::compute: {
      const graph::Graph g = graph::read_graph_file(cfg.graph_path);
      const auto r = bei::vnumber(g, options_of(cfg));
      RunOutcome out;
      out.report = make_report(g, r, cfg.deterministic);
      collect_errors(r, out);
      return out;
    }
    case Command::cycle:
    case Command::bounds:
      return cfg.verify ? run_cycle_verify(cfg) : run_cycle_bounds(cfg);
    case Command::gb:
      break;
  }
  throw PreconditionError("run: the gb command has no report");
}

namespace {

std::string cell(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

void print_table(const RunOutcome& o, std::ostream& out) {
  const auto& d = o.report;
  out << "graph: n = " << d.n << ", " << d.edges.size() << " edges\n";
  out << std::left << std::setw(14) << "S" << std::setw(15) << "method" << std::setw(4) << "v"
      << std::setw(10) << "window" << std::setw(8) << "oracle" << std::setw(9) << "ms"
      << "witness\n";
  for (const auto& p : d.primes) {
    const std::string window = "[" + std::to_string(p.lo) + "," + std::to_string(p.hi) + "]";
    const std::string oracle = p.oracle_ok ? (*p.oracle_ok ? "ok" : "FAIL") : "-";
    out << std::left << std::setw(14) << p.s << std::setw(15) << p.method << std::setw(4) << cell(p.v)
        << std::setw(10) << window << std::setw(8) << oracle << std::setw(9) << p.millis
        << p.witness.value_or("-") << "\n";
  }
  for (const auto& line : o.notes) out << line << "\n";
  if (d.global_v)
    out << "global v = " << *d.global_v << (d.argmin_s ? " at S = " + *d.argmin_s : "") << "\n";
  else
    out << "global v unavailable\n";
}

std::vector<int> read_permutation(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::string line;
  std::getline(in, line);
  std::istringstream ss(line);
  std::vector<int> sigma;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("permutation: bad entry '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError("permutation: bad entry '" + tok + "'");
    sigma.push_back(v);
  }
  std::vector<int> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != bei::identity_permutation(n))
    throw PreconditionError("permutation file must list a permutation of 1.." + std::to_string(n));
  return sigma;
}

int run_gb(const RunConfig& cfg, std::ostream& out) {
  const graph::Graph g = graph::read_graph_file(cfg.graph_path);
  const auto sigma = cfg.sigma_path ? read_permutation(*cfg.sigma_path, g.n()) : bei::identity_permutation(g.n());
  const auto gb = bei::admissible_path_basis(g, sigma);
  if (cfg.json) {
    ordered_json j;
    j["version"] = kVersion;
    j["sigma"] = sigma;
    j["reduced"] = gb.reduced;
    ordered_json basis = ordered_json::array();
    for (const auto& p : gb.generators) basis.push_back(poly::to_string(p));
    j["basis"] = std::move(basis);
    out << j.dump(2) << "\n";
  } else {
    for (const auto& p : gb.generators) out << poly::to_string(p) << "\n";
  }
  return kOk;
}

}  // namespace

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"v-numbers of binomial edge ideals"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  RunConfig cfg;
  std::string prime_text;

  auto* compute = app.add_subcommand("compute", "localized and global v-numbers of a graph");
  compute->add_option("graph", cfg.graph_path, "graph file")->required();
  auto* all = compute->add_flag("--all", "every prime in min(G) (default)");
  compute->add_option("--prime", prime_text, "one prime: 1,3 or empty")->excludes(all);
  compute->add_flag("--bounds-only", cfg.bounds_only, "combinatorial values and bounds only");
  compute->add_flag("--oracle", cfg.oracle, "cross-check with the intersection oracle");

  auto* cyc = app.add_subcommand("cycle", "v-number of the cycle C_n");
  cyc->add_option("n", cfg.cycle_n, "cycle length")->required()->check(CLI::Range(3, 15));
  auto* verify = cyc->add_flag("--verify", "compute and check every window (default)");
  auto* bounds_flag = cyc->add_flag("--bounds", "bound windows only")->excludes(verify);

  auto* gb = app.add_subcommand("gb", "admissible-path Groebner basis of J_G");
  gb->add_option("graph", cfg.graph_path, "graph file")->required();
  std::string sigma_path;
  gb->add_option("--sigma", sigma_path, "permutation file (images of 1..n)");

  auto* bounds = app.add_subcommand("bounds", "bound windows without algebra");
  std::string family;
  bounds->add_option("family", family, "graph family")->required()->check(CLI::IsMember({"cycle"}));
  bounds->add_option("n", cfg.cycle_n, "cycle length")->required()->check(CLI::Range(3, 31));

  for (auto* sub : {compute, cyc, gb, bounds}) {
    sub->add_flag("--json", cfg.json, "JSON output");
    sub->add_flag("--deterministic", cfg.deterministic, "report zero timings");
    sub->add_option("--jobs", cfg.jobs, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    const int jobs_flag = cfg.jobs;
    apply_environment(cfg);
    if (jobs_flag > 0) cfg.jobs = jobs_flag;
    if (*compute) {
      cfg.command = Command::compute;
      if (!prime_text.empty()) cfg.prime = graph::parse_vertex_list(prime_text);
    } else if (*cyc) {
      cfg.command = Command::cycle;
      cfg.verify = !*bounds_flag;
    } else if (*bounds) {
      cfg.command = Command::bounds;
      cfg.verify = false;
    } else {
      cfg.command = Command::gb;
      if (!sigma_path.empty()) cfg.sigma_path = sigma_path;
      return run_gb(cfg, out);
    }
    const RunOutcome o = run(cfg);
    if (cfg.json) {
      out << o.report.dump();
      for (const auto& line : o.notes) err << line << "\n";
    } else {
      print_table(o, out);
    }
    return o.exit_code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kOther;
  }
}

}  // namespace vnum::cli
