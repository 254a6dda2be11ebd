#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "vnum/bei.hpp"

namespace vnum::cycle {

using graph::Graph;
using graph::VertexSet;
using poly::Generators;
using poly::Polynomial;

/// C_n with the wraparound edge {1, n}; n >= 3.
Graph cycle_graph(int n);

/// Cyclic interval [a, b] of C_n; a > b means it wraps past n.
struct Interval {
  int a = 0;
  int b = 0;
  std::vector<int> vertices;  // a, a+1, ..., b (mod n)
  int size() const { return static_cast<int>(vertices.size()); }
};

struct IntervalDecomposition {
  int n = 0;
  VertexSet s;
  std::vector<Interval> intervals;  // I_1..I_k, I_j followed by b_j + 1 in S
  std::vector<int> c1;              // 1-based j with |I_j| = 1
  std::vector<int> c2;              // 1-based j with |I_j| >= 2
  VertexSet f_set;                  // union of {a_j, b_j}

  int k() const { return static_cast<int>(intervals.size()); }
  /// I_j for any integer j, indices taken cyclically (1-based).
  const Interval& at(int j) const;
  /// Vertex v reduced to 1..n.
  int wrap(int v) const { return ((v - 1) % n + n) % n + 1; }
};

/// Requires S in min(C_n) with |S| >= 2.
IntervalDecomposition intervals(int n, VertexSet s);

struct SigmaCertificate {
  std::vector<int> sigma;     // images sigma(1..n)
  std::array<bool, 5> checks{};  // conditions (i)..(v)

  bool valid() const { return checks[0] && checks[1] && checks[2] && checks[3] && checks[4]; }
};

/// Evaluates the five S-consistency conditions for sigma.
SigmaCertificate check_s_consistent(const IntervalDecomposition& d, const std::vector<int>& sigma);

/// With two singleton intervals, the explicit construction; otherwise the
/// first valid permutation in lexicographic order (n <= 8 only).
std::optional<SigmaCertificate> s_consistent_permutation(int n, VertexSet s);

/// P = prod_j f_{b_j, a_{j+1}}.
Polynomial cut_polynomial(int n, VertexSet s);

/// { P * g_{C,D} : C + D = [n] \ (S ∪ F) }.
Generators cycle_transversal_ideal(int n, VertexSet s);

struct Window {
  int lo = 0;
  int hi = 0;
  bool exact() const { return lo == hi; }
  bool contains(int v) const { return lo <= v && v <= hi; }
};

/// Bounds on v_{P_S}(J_{C_n}) for S in min(C_n).
Window localized_bounds(int n, VertexSet s);

/// Bounds on v(J_{C_n}) for n >= 6; smaller n throws PreconditionError.
Window global_bounds(int n);

struct CyclePrimeCheck {
  VertexSet s;
  Window window;
  bool in_window = false;
  bool lower_bound_ok = true;   // v >= n - |S| for |S| >= 3
  std::string groebner = "n/a";  // passed | failed | skipped | n/a
};

struct CycleReport {
  int n = 0;
  bei::VNumberReport vnumber;
  std::vector<CyclePrimeCheck> checks;  // parallel to vnumber.primes
  std::optional<Window> global_window;
  bool all_in_window = false;
  /// Global value equals ceil(2n/3); meaningful when global_window is set.
  bool matches_upper = false;
};

/// v(J_{C_n}) with every localized value checked against its window and, when
/// an S-consistent permutation exists, the Groebner basis of J_{C_n} + I_S.
CycleReport verify_cycle(int n, const bei::VNumberOptions& opt = {}, bool groebner_checks = true);

}  // namespace vnum::cycle
