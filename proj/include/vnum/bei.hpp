#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vnum/graph.hpp"
#include "vnum/ideal.hpp"

namespace vnum::bei {

using graph::Graph;
using graph::VertexSet;
using poly::Generators;
using poly::GroebnerBasis;
using poly::Limits;
using poly::Polynomial;

/// f_{i,j} for every edge, i < j.
Generators edge_ideal_gens(const Graph& g);

struct PrimeComponent {
  VertexSet s;
  Generators gens;
};

/// P_S = (x_i, y_i : i in S) + all 2-minors inside each component of G - S.
PrimeComponent prime_component(const Graph& g, VertexSet s);

/// Identity permutation of 1..n, as images.
std::vector<int> identity_permutation(int n);

/// All sigma-admissible paths i = i_0, ..., i_r = j with sigma(i) < sigma(j).
/// sigma holds the images sigma(1..n).
std::vector<std::vector<int>> admissible_paths(const Graph& g, const std::vector<int>& sigma);

/// u_pi * f_{i,j} for one admissible path.
Polynomial path_binomial(const std::vector<int>& path, const std::vector<int>& sigma);

/// The admissible-path binomials, checked against Buchberger's criterion under
/// <_sigma. Throws std::logic_error if the check fails.
GroebnerBasis admissible_path_basis(const Graph& g, const std::vector<int>& sigma);
GroebnerBasis admissible_path_basis(const Graph& g);

struct LocalValue {
  int v = 0;
  Polynomial witness;
};

/// alpha((J_G : P_S) / J_G) with a witness whose colon is certified to be P_S.
LocalValue vnumber_at_prime(const Graph& g, VertexSet s, const Limits& limits = {});

/// Independent value from Q = intersection of the other minimal primes.
int oracle_vnumber_at_prime(const Graph& g, VertexSet s, const Limits& limits = {});

/// (J_G : f) == P_S.
bool check_colon_equals_prime(const Graph& g, const Polynomial& f, VertexSet s,
                              const Limits& limits = {});

/// Exact combinatorial value when a closed form applies: S = ∅ gives 0 or
/// gamma_c(G), a minimal 2-cut gives gamma_c(V1, V2).
std::optional<int> combinatorial_value(const Graph& g, VertexSet s);

/// Vertex relabeling (images) that puts V1 first and V2 last, keeping the
/// relative order inside V1, S and V2.
std::vector<int> separating_relabel(const Graph& g, VertexSet s);

struct CutBasisCheck {
  bool groebner = false;    // admissible paths ∪ cut generators pass Buchberger
  bool squarefree = false;  // every leading monomial is squarefree
  Generators basis;         // in the original labels
};

/// Groebner check for J_G + J_T(S), S a minimal 2-cut, after relabeling so
/// that V1 < S < V2. minimal_only selects the cut generators from
/// inclusion-minimal pair dominating sets.
CutBasisCheck minimal_cut_basis_check(const Graph& g, VertexSet s, bool minimal_only = false);

enum class Method { combinatorial, algebraic, oracle };
std::string to_string(Method m);

struct PrimeEntry {
  VertexSet s;
  int k = 1;
  Method method = Method::algebraic;
  std::optional<int> v;
  Polynomial witness;
  std::optional<int> combinatorial;
  std::optional<int> transversal_weight;
  std::optional<int> oracle;
  int window_lo = 0;
  int window_hi = 0;
  std::string error;  // non-empty when the computation for this prime failed
  double millis = 0;

  bool combinatorial_agrees() const { return !combinatorial || !v || *combinatorial == *v; }
  std::optional<bool> oracle_ok() const {
    if (!oracle || !v) return std::nullopt;
    return *oracle == *v;
  }
};

struct VNumberOptions {
  Limits limits;                        // per Buchberger run; deadline ignored
  std::optional<double> time_budget_secs;  // per prime
  bool algebraic = true;                // false: combinatorics and transversal bound only
  bool oracle = false;
  int jobs = 0;                         // 0: OpenMP default
  std::optional<VertexSet> only;        // restrict to one prime
};

struct VNumberReport {
  std::vector<PrimeEntry> primes;  // in enumerate_min_cuts order
  std::optional<int> global_v;     // set when every prime has a value
  VertexSet argmin;
};

/// Evaluates one prime (no parallelism).
PrimeEntry evaluate_prime(const Graph& g, const graph::CutRecord& cut, const VNumberOptions& opt);

/// Serial reference: primes evaluated one after the other.
VNumberReport vnumber_serial(const Graph& g, const VNumberOptions& opt = {});

/// Same report with primes evaluated concurrently (OpenMP).
VNumberReport vnumber(const Graph& g, const VNumberOptions& opt = {});

}  // namespace vnum::bei
