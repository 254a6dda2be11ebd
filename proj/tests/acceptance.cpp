// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "support.hpp"
#include "vnum/bei.hpp"
#include "vnum/cycle.hpp"
#include "vnum/matroid.hpp"

using namespace vnum;
using graph::Graph;
using graph::VertexSet;
using poly::Generators;
using poly::Monomial;
using poly::Variable;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  std::string failure;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) failure = what;
    pass = false;
  }
};

std::string describe(const Graph& g, VertexSet s) {
  std::string e;
  for (auto [u, v] : g.edges()) e += std::to_string(u) + "-" + std::to_string(v) + " ";
  if (!e.empty()) e.pop_back();
  return "n=" + std::to_string(g.n()) + " [" + e + "] S=" + graph::to_string(s);
}

std::vector<Graph> named_paths_and_cycles(int max_n) {
  std::vector<Graph> out;
  for (int n = 3; n <= max_n; ++n) out.push_back(Graph::path(n));
  for (int n = 4; n <= max_n; ++n) out.push_back(testing::cycle(n));
  return out;
}

struct CutSample {
  Graph g;
  VertexSet s;
};

// Every minimal 2-cut of every connected graph with n <= 6, plus the labeled
// paths and cycles.
std::vector<CutSample> two_cut_sample() {
  std::vector<CutSample> out;
  auto graphs = testing::connected_graphs_up_to(6, 3);
  for (auto& g : named_paths_and_cycles(6)) graphs.push_back(g);
  for (const auto& g : graphs)
    for (const auto& cut : graph::enumerate_min_cuts(g))
      if (cut.k == 2) out.push_back({g, cut.s});
  return out;
}

Monomial var(Variable v) { return Monomial::of(v); }

Generators ideal_sum(Generators a, const Generators& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

int ceil_two_thirds(int n) { return (2 * n + 2) / 3; }

// 1. S = ∅ gives gamma_c(G) on non-complete connected graphs.
Outcome empty_prime_equality() {
  Outcome o;
  int graphs = 0;
  for (const auto& g : testing::connected_graphs_up_to(5, 2)) {
    if (g.is_complete()) continue;
    ++graphs;
    const int v = bei::vnumber_at_prime(g, {}).v;
    const int gc = graph::gamma_c(g).size;
    o.expect(v == gc, describe(g, {}) + ": v=" + std::to_string(v) + " gamma_c=" + std::to_string(gc));
  }
  o.note = std::to_string(graphs) + " graphs";
  return o;
}

// 2. Minimal 2-cuts give gamma_c(V1, V2).
Outcome two_cut_equality() {
  Outcome o;
  const auto sample = two_cut_sample();
  for (const auto& [g, s] : sample) {
    const int v = bei::vnumber_at_prime(g, s).v;
    const int pd = graph::gamma_c_pair(g, s).size;
    o.expect(v == pd, describe(g, s) + ": v=" + std::to_string(v) + " gamma_c(V1,V2)=" + std::to_string(pd));
  }
  o.expect(sample.size() >= 25, "sample too small");
  o.note = std::to_string(sample.size()) + " (g,S) pairs";
  return o;
}

// 3. Global values of C6, C7, C8.
Outcome cycle_anchors() {
  Outcome o;
  std::string values;
  for (int n : {6, 7, 8}) {
    const auto r = bei::vnumber(cycle::cycle_graph(n));
    if (!r.global_v) {
      o.expect(false, "C" + std::to_string(n) + ": no global value (resource cap)");
      continue;
    }
    const int v = *r.global_v;
    const int up = ceil_two_thirds(n);
    values += " C" + std::to_string(n) + "=" + std::to_string(v);
    if (n == 6) o.expect(v == 4, "C6: v=" + std::to_string(v));
    else o.expect(up - 1 <= v && v <= up, "C" + std::to_string(n) + ": v=" + std::to_string(v));
  }
  o.note = values.empty() ? values : values.substr(1);
  return o;
}

// 4. Transversal upper bound, tight when the combined initial ideal is squarefree.
Outcome transversal_bound() {
  Outcome o;
  int tight = 0;
  const auto sample = two_cut_sample();
  for (const auto& [g, s] : sample) {
    const int v = bei::vnumber_at_prime(g, s).v;
    const auto w = matroid::min_transversal_weight(matroid::delta_family(g, s));
    if (!w) {
      o.expect(false, describe(g, s) + ": no transversal");
      continue;
    }
    o.expect(v <= w->weight, describe(g, s) + ": v=" + std::to_string(v) + " > weight=" + std::to_string(w->weight));
    if (bei::minimal_cut_basis_check(g, s).squarefree) {
      ++tight;
      o.expect(v == w->weight, describe(g, s) + ": squarefree but v=" + std::to_string(v) +
                                   " weight=" + std::to_string(w->weight));
    }
  }
  o.note = std::to_string(sample.size()) + " pairs, " + std::to_string(tight) + " squarefree";
  return o;
}

// 5. (J : P_S) and J + J_T(S) have the same radical.
Outcome transversal_radical() {
  Outcome o;
  int pairs = 0;
  for (const auto& g : testing::connected_graphs_up_to(5, 2)) {
    const auto j = bei::edge_ideal_gens(g);
    for (const auto& cut : graph::enumerate_min_cuts(g)) {
      ++pairs;
      const auto colon = poly::colon_ideal(j, bei::prime_component(g, cut.s).gens);
      const auto t = matroid::transversal_ideal_generic(g, cut.s);
      const auto jt = ideal_sum(j, t);
      for (const auto& f : colon)
        o.expect(poly::radical_membership(f, jt), describe(g, cut.s) + ": colon element outside the radical");
      const auto colon_gb = poly::buchberger(colon);
      for (const auto& f : t)
        o.expect(poly::normal_form(f, colon_gb).is_zero(), describe(g, cut.s) + ": transversal generator outside the colon");
    }
  }
  o.note = std::to_string(pairs) + " (g,S) pairs";
  return o;
}

// 6. Groebner structure: (a) admissible paths, (b) combined minimal-cut basis,
// (c) squarefree initial ideals.
Outcome groebner_structure() {
  Outcome o;
  int bases = 0, cuts = 0;
  for (const auto& g : testing::connected_graphs_up_to(6, 2)) {
    const auto basis = bei::admissible_path_basis(g);
    const auto ord = poly::MonomialOrder();
    ++bases;
    o.expect(poly::satisfies_buchberger_criterion(basis.generators, ord), describe(g, {}) + ": (a) criterion");
    o.expect(poly::is_reduced_form(basis.generators, ord), describe(g, {}) + ": (a) not reduced");
    o.expect(poly::initial_ideal(basis).squarefree, describe(g, {}) + ": (c) J_G initial ideal");
    for (const auto& cut : graph::enumerate_min_cuts(g)) {
      if (cut.k != 2) continue;
      ++cuts;
      const auto c = bei::minimal_cut_basis_check(g, cut.s);
      o.expect(c.groebner, describe(g, cut.s) + ": (b) combined basis fails Buchberger");
      o.expect(c.squarefree, describe(g, cut.s) + ": (c) combined initial ideal");
    }
  }
  o.note = std::to_string(bases) + " graphs, " + std::to_string(cuts) + " minimal 2-cuts";
  return o;
}

// 7. Independent oracle.
Outcome oracle_equivalence() {
  Outcome o;
  int pairs = 0;
  for (const auto& g : testing::connected_graphs_up_to(5, 2)) {
    if (g.is_complete()) continue;
    for (const auto& cut : graph::enumerate_min_cuts(g)) {
      ++pairs;
      const int a = bei::vnumber_at_prime(g, cut.s).v;
      const int b = bei::oracle_vnumber_at_prime(g, cut.s);
      o.expect(a == b, describe(g, cut.s) + ": engine " + std::to_string(a) + " oracle " + std::to_string(b));
    }
  }
  o.note = std::to_string(pairs) + " (g,S) pairs";
  return o;
}

// 8. J_G is the intersection of the primes over min(G).
Outcome decomposition() {
  Outcome o;
  int graphs = 0;
  for (const auto& g : testing::connected_graphs_up_to(5, 2)) {
    ++graphs;
    Generators acc;
    bool first = true;
    for (const auto& cut : graph::enumerate_min_cuts(g)) {
      const auto p = bei::prime_component(g, cut.s).gens;
      acc = first ? poly::buchberger(p).generators : poly::intersect(acc, p);
      first = false;
    }
    o.expect(poly::same_ideal(acc, bei::edge_ideal_gens(g)), describe(g, {}) + ": intersection differs");
  }
  o.note = std::to_string(graphs) + " graphs";
  return o;
}

// 9. Localized cycle values against their windows.
Outcome cycle_windows() {
  Outcome o;
  int primes = 0;
  for (int n = 4; n <= 8; ++n) {
    const auto r = cycle::verify_cycle(n, {}, false);
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
      const auto& c = r.checks[i];
      const auto& p = r.vnumber.primes[i];
      ++primes;
      const std::string where = "C" + std::to_string(n) + " S=" + graph::to_string(c.s);
      if (!p.v) {
        o.expect(false, where + ": no value (" + p.error + ")");
        continue;
      }
      o.expect(c.window.contains(*p.v), where + ": v=" + std::to_string(*p.v) + " outside [" +
                                            std::to_string(c.window.lo) + "," + std::to_string(c.window.hi) + "]");
      if (c.s.size() >= 3)
        o.expect(*p.v >= n - c.s.size(), where + ": below n - |S|");
    }
  }
  o.note = std::to_string(primes) + " primes on C4..C8";
  return o;
}

// 10. Initial ideals of (J : x_i) and (J : f_{i-1,i+1}) on cycles.
Outcome saturation_initial_ideals() {
  Outcome o;
  int cases = 0;
  for (int n = 4; n <= 6; ++n) {
    const Graph g = cycle::cycle_graph(n);
    const auto j = bei::edge_ideal_gens(g);
    const auto in_j = poly::initial_ideal(poly::buchberger(j)).monomials;
    auto wrap = [n](int v) { return ((v - 1) % n + n) % n + 1; };
    for (int i = 1; i <= n; ++i) {
      ++cases;
      const int a = wrap(i - 1), b = wrap(i + 1);
      const std::string where = "C" + std::to_string(n) + " i=" + std::to_string(i);

      const auto sat_x = poly::buchberger(poly::colon_poly(j, poly::Polynomial::x(i)));
      auto bound = in_j;
      for (auto u : {Variable::x(a), Variable::y(a)})
        for (auto w : {Variable::x(b), Variable::y(b)}) bound.push_back(var(u) * var(w));
      o.expect(poly::monomial_ideal_contains(bound, poly::initial_ideal(sat_x).monomials), where + ": (J:x_i)");

      const auto sat_f = poly::buchberger(poly::colon_poly(j, poly::minor(std::min(a, b), std::max(a, b))));
      auto expected = in_j;
      expected.push_back(var(Variable::x(i)));
      expected.push_back(var(Variable::y(i)));
      std::vector<int> rest;
      for (int v = 1; v <= n; ++v)
        if (v != a && v != i && v != b) rest.push_back(v);
      for (const auto& m : poly::bipartition_monomials(rest)) expected.push_back(m);
      const auto in_sat = poly::initial_ideal(sat_f).monomials;
      o.expect(poly::monomial_ideal_contains(expected, in_sat) && poly::monomial_ideal_contains(in_sat, expected),
               where + ": in(J:f)");
    }
  }
  o.note = std::to_string(cases) + " (n,i) cases";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"empty prime equals gamma_c, n<=5", empty_prime_equality},
      {"minimal 2-cuts equal gamma_c(V1,V2), n<=6", two_cut_equality},
      {"C6 = 4, C7 and C8 inside their windows", cycle_anchors},
      {"transversal weight bound", transversal_bound},
      {"colon equals radical of J + J_T(S), n<=5", transversal_radical},
      {"Groebner structure (a)(b)(c), n<=6", groebner_structure},
      {"oracle equivalence, n<=5", oracle_equivalence},
      {"decomposition over min(G), n<=5", decomposition},
      {"cycle localized windows, n<=8", cycle_windows},
      {"saturation initial ideals, cycles n<=6", saturation_initial_ideals},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failure = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::cout << "criterion " << std::setw(2) << k + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  "
              << criteria[k].first << " (" << o.note << "; " << std::fixed << std::setprecision(1) << secs
              << " s)";
    if (!o.pass) std::cout << "  first failure: " << o.failure;
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
