// Serial reference vs OpenMP v-number on cycles and a few denser graphs.
#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <omp.h>

#include "vnum/bei.hpp"
#include "vnum/cycle.hpp"

using namespace vnum;

namespace {

template <class F>
double best_seconds(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

graph::Graph wheel(int n) {
  std::vector<graph::Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, n);
  for (int i = 1; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(1, n - 1);
  return graph::Graph::from_edges(n, e);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel v-number timing"};
  int max_cycle = 8;
  int reps = 3;
  int jobs = 0;
  app.add_option("--max-cycle", max_cycle, "largest cycle")->check(CLI::Range(4, 10));
  app.add_option("--reps", reps, "repetitions, best time kept")->check(CLI::PositiveNumber);
  app.add_option("--jobs", jobs, "threads for the parallel run (0: all cores)")->check(CLI::NonNegativeNumber);
  CLI11_PARSE(app, argc, argv);

  std::vector<std::pair<std::string, graph::Graph>> cases;
  for (int n = 5; n <= max_cycle; ++n) cases.emplace_back("C" + std::to_string(n), cycle::cycle_graph(n));
  cases.emplace_back("P7", graph::Graph::path(7));
  cases.emplace_back("W7", wheel(7));

  bei::VNumberOptions opt;
  opt.jobs = jobs;
  std::cout << "threads available: " << omp_get_max_threads() << "\n";
  std::cout << std::left << std::setw(6) << "graph" << std::setw(8) << "primes" << std::setw(4) << "v"
            << std::setw(12) << "serial s" << std::setw(12) << "parallel s" << "speedup\n";
  bool agree = true;
  for (const auto& [name, g] : cases) {
    bei::VNumberReport a, b;
    const double ts = best_seconds(reps, [&] { a = bei::vnumber_serial(g, opt); });
    const double tp = best_seconds(reps, [&] { b = bei::vnumber(g, opt); });
    agree = agree && a.global_v == b.global_v && a.argmin == b.argmin;
    std::cout << std::left << std::setw(6) << name << std::setw(8) << a.primes.size() << std::setw(4)
              << (a.global_v ? std::to_string(*a.global_v) : "-") << std::fixed << std::setprecision(3)
              << std::setw(12) << ts << std::setw(12) << tp << std::setprecision(2) << ts / tp << "\n";
  }
  if (!agree) {
    std::cerr << "serial and parallel reports disagree\n";
    return 1;
  }
  return 0;
}
