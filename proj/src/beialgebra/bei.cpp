#include "vnum/bei.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <numeric>
#include <stdexcept>

#include <omp.h>

#include "vnum/errors.hpp"
#include "vnum/matroid.hpp"

namespace vnum::bei {

using poly::MonomialOrder;

Generators edge_ideal_gens(const Graph& g) {
  Generators out;
  for (auto [i, j] : g.edges()) out.push_back(poly::minor(i, j));
  return out;
}

PrimeComponent prime_component(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw PreconditionError("prime_component: S outside the vertex set");
  PrimeComponent p{s, {}};
  for (int i : s) {
    p.gens.push_back(Polynomial::x(i));
    p.gens.push_back(Polynomial::y(i));
  }
  for (VertexSet comp : graph::components_within(g, g.vertices() - s)) {
    const auto vs = comp.to_vector();
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b) p.gens.push_back(poly::minor(vs[a], vs[b]));
  }
  return p;
}

std::vector<int> identity_permutation(int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 1);
  return id;
}

namespace {

void require_permutation(const std::vector<int>& sigma, int n) {
  if (static_cast<int>(sigma.size()) != n) throw PreconditionError("permutation has the wrong length");
  std::vector<int> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != identity_permutation(n)) throw PreconditionError("not a permutation of 1..n");
}

bool connected_through(const Graph& g, int i, int j, VertexSet through) {
  const VertexSet allowed = through | VertexSet::of({i, j});
  VertexSet seen = VertexSet::of({i});
  std::vector<int> stack{i};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u) & allowed) {
      if (seen.contains(w)) continue;
      if (w == j) return true;
      seen.insert(w);
      stack.push_back(w);
    }
  }
  return false;
}

// Condition (iii): no path from i to j whose interior is a proper subset of
// the given interior.
bool no_shortcut(const Graph& g, int i, int j, VertexSet interior) {
  if (interior.empty()) return true;
  if (g.has_edge(i, j)) return false;
  for (int v : interior) {
    VertexSet rest = interior;
    if (connected_through(g, i, j, rest.erase(v))) return false;
  }
  return true;
}

void require_min_prime(const Graph& g, VertexSet s, const char* op) {
  if (!graph::is_connected(g)) throw PreconditionError(std::string(op) + ": graph is not connected");
  if (s.empty()) return;
  if (!s.subset_of(g.vertices()) || s == g.vertices() || !graph::is_minimal_kcut(g, s).minimal)
    throw PreconditionError(std::string(op) + ": " + graph::to_string(s) + " is not in min(G)");
}

}  // namespace

std::vector<std::vector<int>> admissible_paths(const Graph& g, const std::vector<int>& sigma) {
  const int n = g.n();
  require_permutation(sigma, n);
  auto rank = [&](int v) { return sigma[v - 1]; };
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (rank(i) >= rank(j)) continue;
      std::vector<int> path{i};
      VertexSet interior;
      std::function<void(int)> extend = [&](int u) {
        for (int w : g.neighbors(u)) {
          if (w == j) {
            if (no_shortcut(g, i, j, interior)) {
              path.push_back(j);
              out.push_back(path);
              path.pop_back();
            }
            continue;
          }
          if (w == i || interior.contains(w)) continue;
          if (rank(w) > rank(i) && rank(w) < rank(j)) continue;
          interior.insert(w);
          path.push_back(w);
          extend(w);
          path.pop_back();
          interior.erase(w);
        }
      };
      extend(i);
    }
  }
  return out;
}

Polynomial path_binomial(const std::vector<int>& path, const std::vector<int>& sigma) {
  const int i = path.front();
  const int j = path.back();
  poly::Monomial u;
  for (std::size_t k = 1; k + 1 < path.size(); ++k) {
    const int v = path[k];
    if (sigma[v - 1] > sigma[j - 1]) u = u * poly::Monomial::of(poly::Variable::x(v));
    else u = u * poly::Monomial::of(poly::Variable::y(v));
  }
  return poly::minor(i, j).times(u);
}

GroebnerBasis admissible_path_basis(const Graph& g, const std::vector<int>& sigma) {
  const MonomialOrder ord = MonomialOrder::permuted(sigma);
  GroebnerBasis gb;
  gb.order = ord;
  for (const auto& path : admissible_paths(g, sigma)) gb.generators.push_back(path_binomial(path, sigma));
  std::sort(gb.generators.begin(), gb.generators.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.greater(ord.leading_term(b).monomial, ord.leading_term(a).monomial);
  });
  if (!poly::satisfies_buchberger_criterion(gb.generators, ord))
    throw std::logic_error("admissible-path binomials fail Buchberger's criterion");
  gb.reduced = poly::is_reduced_form(gb.generators, ord);
  return gb;
}

GroebnerBasis admissible_path_basis(const Graph& g) {
  return admissible_path_basis(g, identity_permutation(g.n()));
}

bool check_colon_equals_prime(const Graph& g, const Polynomial& f, VertexSet s, const Limits& limits) {
  if (f.is_zero() || !f.is_homogeneous())
    throw PreconditionError("check_colon_equals_prime: f must be homogeneous and nonzero");
  const auto colon = poly::colon_poly(edge_ideal_gens(g), f, limits);
  return poly::same_ideal(colon, prime_component(g, s).gens, limits);
}

LocalValue vnumber_at_prime(const Graph& g, VertexSet s, const Limits& limits) {
  require_min_prime(g, s, "vnumber_at_prime");
  if (s.empty() && g.is_complete()) return {0, Polynomial(1)};
  const Generators j = edge_ideal_gens(g);
  const auto colon = poly::colon_ideal(j, prime_component(g, s).gens, limits);
  auto nd = poly::min_new_degree(colon, j, limits);
  if (!check_colon_equals_prime(g, nd.witness, s, limits))
    throw std::logic_error("vnumber_at_prime: witness " + poly::to_string(nd.witness) +
                           " does not have colon P_" + graph::to_string(s));
  return {nd.degree, std::move(nd.witness)};
}

int oracle_vnumber_at_prime(const Graph& g, VertexSet s, const Limits& limits) {
  require_min_prime(g, s, "oracle_vnumber_at_prime");
  std::optional<Generators> q;
  for (const auto& cut : graph::enumerate_min_cuts(g)) {
    if (cut.s == s) continue;
    Generators p = prime_component(g, cut.s).gens;
    q = q ? poly::intersect(*q, p, limits) : poly::buchberger(p, {}, limits).generators;
  }
  // Q = (1): the constant already lies outside P_S.
  if (!q) return 0;
  // Q is homogeneous, so Q_d ⊆ P_S for all d below the least degree of a
  // generator outside P_S; multiples m*q of lower generators stay in P_S.
  const auto gb_p = poly::buchberger(prime_component(g, s).gens, {}, limits);
  std::optional<int> best;
  for (const auto& h : *q)
    if (!poly::normal_form(h, gb_p).is_zero()) best = std::min(best.value_or(h.degree()), h.degree());
  if (!best) throw std::logic_error("oracle: intersection of the other primes lies inside P_S");
  if (*best > 2 * g.n()) throw ResourceError("oracle degree cap 2n exceeded");
  return *best;
}

std::optional<int> combinatorial_value(const Graph& g, VertexSet s) {
  if (s.empty()) return g.is_complete() ? 0 : graph::gamma_c(g).size;
  const auto cut = graph::is_minimal_kcut(g, s);
  if (cut.minimal && cut.k == 2) return graph::gamma_c_pair(g, s).size;
  return std::nullopt;
}

std::vector<int> separating_relabel(const Graph& g, VertexSet s) {
  const auto comps = graph::components_within(g, g.vertices() - s);
  if (comps.size() != 2) throw PreconditionError("separating_relabel: S must leave two components");
  std::vector<int> image(g.n(), 0);
  int next = 1;
  for (VertexSet block : {comps[0], s, comps[1]})
    for (int v : block) image[v - 1] = next++;
  return image;
}

CutBasisCheck minimal_cut_basis_check(const Graph& g, VertexSet s, bool minimal_only) {
  require_min_prime(g, s, "minimal_cut_basis_check");
  const auto image = separating_relabel(g, s);
  std::vector<graph::Edge> edges;
  for (auto [u, v] : g.edges()) {
    const int a = image[u - 1], b = image[v - 1];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  const Graph h = Graph::from_edges(g.n(), edges);
  VertexSet hs;
  for (int v : s) hs.insert(image[v - 1]);

  Generators gens = admissible_path_basis(h).generators;
  for (auto& p : matroid::concise_cut_generators(h, hs, minimal_only)) gens.push_back(std::move(p));

  const MonomialOrder ord;
  CutBasisCheck out;
  out.groebner = poly::satisfies_buchberger_criterion(gens, ord);
  out.squarefree = std::all_of(gens.begin(), gens.end(), [&](const Polynomial& p) {
    return ord.leading_term(p).monomial.is_squarefree();
  });
  std::vector<int> back(g.n());
  for (int v = 1; v <= g.n(); ++v) back[image[v - 1] - 1] = v;
  for (const auto& p : gens) out.basis.push_back(poly::relabel(p, back));
  return out;
}

std::string to_string(Method m) {
  switch (m) {
    case Method::combinatorial: return "combinatorial";
    case Method::algebraic: return "algebraic";
    case Method::oracle: return "oracle";
  }
  return "?";
}

PrimeEntry evaluate_prime(const Graph& g, const graph::CutRecord& cut, const VNumberOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  PrimeEntry e;
  e.s = cut.s;
  e.k = cut.k;
  e.combinatorial = combinatorial_value(g, cut.s);
  if (auto w = matroid::min_transversal_weight(matroid::delta_family(g, cut.s)))
    e.transversal_weight = w->weight;
  if (e.combinatorial) {
    e.window_lo = e.window_hi = *e.combinatorial;
  } else {
    e.window_lo = 0;
    e.window_hi = e.transversal_weight.value_or(0);
  }

  if (!opt.algebraic) {
    e.method = Method::combinatorial;
    e.v = e.combinatorial;
  } else {
    Limits limits = opt.limits;
    limits.deadline.reset();
    if (opt.time_budget_secs)
      limits.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                    std::chrono::duration<double>(*opt.time_budget_secs));
    try {
      auto lv = vnumber_at_prime(g, cut.s, limits);
      e.method = Method::algebraic;
      e.v = lv.v;
      e.witness = std::move(lv.witness);
      if (opt.oracle) e.oracle = oracle_vnumber_at_prime(g, cut.s, limits);
    } catch (const ResourceError& err) {
      e.error = err.what();
    }
  }
  e.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return e;
}

namespace {

std::vector<graph::CutRecord> selected_cuts(const Graph& g, const VNumberOptions& opt) {
  if (!graph::is_connected(g)) throw PreconditionError("vnumber: graph is not connected");
  auto cuts = graph::enumerate_min_cuts(g);
  if (!opt.only) return cuts;
  auto it = std::find_if(cuts.begin(), cuts.end(), [&](const auto& c) { return c.s == *opt.only; });
  if (it == cuts.end()) throw PreconditionError(graph::to_string(*opt.only) + " is not in min(G)");
  return {*it};
}

void summarize(VNumberReport& r) {
  bool complete = true;
  for (const auto& e : r.primes) {
    if (!e.v) {
      complete = false;
      continue;
    }
    if (!r.global_v || *e.v < *r.global_v) {
      r.global_v = e.v;
      r.argmin = e.s;
    }
  }
  if (!complete) {
    r.global_v.reset();
    r.argmin = VertexSet();
  }
}

}  // namespace

VNumberReport vnumber_serial(const Graph& g, const VNumberOptions& opt) {
  VNumberReport r;
  for (const auto& cut : selected_cuts(g, opt)) r.primes.push_back(evaluate_prime(g, cut, opt));
  summarize(r);
  return r;
}

VNumberReport vnumber(const Graph& g, const VNumberOptions& opt) {
  const auto cuts = selected_cuts(g, opt);
  VNumberReport r;
  r.primes.resize(cuts.size());
  std::vector<std::exception_ptr> failures(cuts.size());
  const int threads = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
  const long count = static_cast<long>(cuts.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long idx = 0; idx < count; ++idx) {
    try {
      r.primes[idx] = evaluate_prime(g, cuts[idx], opt);
    } catch (...) {
      failures[idx] = std::current_exception();
    }
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);
  summarize(r);
  return r;
}

}  // namespace vnum::bei
