#pragma once

#include <optional>
#include <vector>

#include "vnum/graph.hpp"
#include "vnum/polynomial.hpp"

namespace vnum::matroid {

using graph::Graph;
using graph::VertexSet;

/// Rank-two matroid on 1..n given by its loops and parallel classes.
class RankTwoMatroid {
 public:
  RankTwoMatroid(int n, VertexSet loops, std::vector<VertexSet> classes);

  int n() const { return n_; }
  VertexSet loops() const { return loops_; }
  const std::vector<VertexSet>& parallel_classes() const { return classes_; }

  /// B meets a loop, or holds two elements of one class, or |B| >= 3.
  bool dependent(VertexSet b) const;

 private:
  int n_;
  VertexSet loops_;
  std::vector<VertexSet> classes_;
};

/// M(S): loops S, classes the components of G - S. S must be in min(G).
RankTwoMatroid matroid_of_cut(const Graph& g, VertexSet s);

/// Subsets of size 1 or 2 dependent in m1 and independent in m2, sorted.
std::vector<VertexSet> small_dependent_diff(const RankTwoMatroid& m1, const RankTwoMatroid& m2);

struct FamilyMember {
  VertexSet source;                 // the S' this member came from
  std::vector<VertexSet> elements;  // each of size 1 or 2
};

struct TransversalFamily {
  VertexSet s;
  std::vector<FamilyMember> members;
};

/// Delta_S: one member per S' in min(G) \ {S}.
TransversalFamily delta_family(const Graph& g, VertexSet s);

/// A = A_1 ⨿ A_2, singletons and pairs, each stored as a VertexSet.
struct Transversal {
  std::vector<VertexSet> elements;  // sorted lexicographically

  int weight() const;
  std::vector<int> singles() const;
  std::vector<VertexSet> pairs() const;
  bool hits(const TransversalFamily& f) const;
};

/// Lexicographic order on sorted element lists, used to break weight ties.
bool lex_less(const Transversal& a, const Transversal& b);

struct WeightedTransversal {
  int weight = 0;
  Transversal witness;
};

/// Exact min |A_1| + 2|A_2| over transversals by branch and bound. Returns
/// nullopt when some member is empty (no transversal exists).
std::optional<WeightedTransversal> min_transversal_weight(const TransversalFamily& f);

/// Same minimum by exhaustive search over subsets of the element union
/// (test oracle; union must have at most 20 elements).
std::optional<WeightedTransversal> min_transversal_weight_brute(const TransversalFamily& f);

/// All inclusion-minimal transversals, sorted lexicographically.
std::vector<Transversal> minimal_transversals(const TransversalFamily& f);

/// g_{A,C,D} for one transversal and every bipartition C ⨿ D = A_1.
std::vector<poly::Polynomial> transversal_generators(const Transversal& a);

/// Generators of J_{T(S)} from the inclusion-minimal transversals of Delta_S.
std::vector<poly::Polynomial> transversal_ideal_generic(const Graph& g, VertexSet s);

/// { g_{C,D} f_{i,j} : A in D_c(V1,V2), i in A∩V1, j in A∩V2, C ⨿ D = A \ {i,j} },
/// over inclusion-minimal A by default. S must be a minimal 2-cut.
std::vector<poly::Polynomial> concise_cut_generators(const Graph& g, VertexSet s,
                                                     bool minimal_only = true);

}  // namespace vnum::matroid
