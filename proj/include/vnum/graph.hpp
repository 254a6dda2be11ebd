#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vnum::graph {

inline constexpr int kMaxGraphVertices = 31;

/// Set of vertex labels 1..31 packed in a bitmask (bit v-1 for vertex v).
class VertexSet {
 public:
  constexpr VertexSet() = default;
  static constexpr VertexSet from_bits(std::uint32_t bits) { return VertexSet(bits); }
  static VertexSet of(std::initializer_list<int> vertices);
  static VertexSet of(const std::vector<int>& vertices);
  /// {1, ..., n}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 32 ? ~0u : ((1u << n) - 1u));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return v >= 1 && v <= 32 && ((bits_ >> (v - 1)) & 1u); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  /// Smallest element; 0 for the empty set.
  constexpr int min() const { return bits_ ? std::countr_zero(bits_) + 1 : 0; }
  constexpr int max() const { return bits_ ? 32 - std::countl_zero(bits_) : 0; }

  VertexSet& insert(int v);
  VertexSet& erase(int v);
  std::vector<int> to_vector() const;

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_) + 1; }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint32_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_ = 0;
};

/// Lexicographic comparison of the sorted element lists ({1} < {1,2} < {2}).
bool lex_less(VertexSet a, VertexSet b);
std::string to_string(VertexSet s);

using Edge = std::pair<int, int>;

/// Simple undirected graph. Vertices keep their labels under induction, so a
/// Graph carries its vertex set explicitly (a subset of 1..n).
class Graph {
 public:
  Graph() = default;
  /// Graph on 1..n; edges are validated (range, no loops, no duplicates).
  static Graph from_edges(int n, const std::vector<Edge>& edges);
  static Graph complete(int n);
  static Graph path(int n);

  int n() const { return n_; }
  VertexSet vertices() const { return vertices_; }
  VertexSet neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const { return adj_[u].contains(v); }
  /// Edges {u,v} with u < v, sorted.
  std::vector<Edge> edges() const;
  int edge_count() const;
  bool is_complete() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph induced_subgraph(const Graph& g, VertexSet w);
  int n_ = 0;
  VertexSet vertices_;
  std::vector<VertexSet> adj_ = std::vector<VertexSet>(1);
};

/// G_W with original labels.
Graph induced_subgraph(const Graph& g, VertexSet w);

/// Components of g sorted by their smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
/// Components of the induced subgraph on w.
std::vector<VertexSet> components_within(const Graph& g, VertexSet w);
int component_count(const Graph& g, VertexSet w);
bool is_connected(const Graph& g);

struct KCut {
  bool minimal = false;
  int k = 0;
};

/// Minimal k-cut test; k is the number of components of G - S.
KCut is_minimal_kcut(const Graph& g, VertexSet s);

struct CutRecord {
  VertexSet s;
  int k = 1;
  std::vector<VertexSet> components;
};

/// {∅} ∪ all minimal k-cuts, sorted lexicographically; g must be connected.
std::vector<CutRecord> enumerate_min_cuts(const Graph& g);

bool is_connected_dominating(const Graph& g, VertexSet b);

struct Domination {
  int size = 0;
  VertexSet witness;
};

/// Connected domination number with the lexicographically least witness.
Domination gamma_c(const Graph& g);

struct PairDomination {
  int size = 0;
  VertexSet witness;
  VertexSet v1, v2;
};

/// gamma_c(V1, V2) for a minimal 2-cut s (V1 holds the smallest vertex).
PairDomination gamma_c_pair(const Graph& g, VertexSet s);

/// Members of D_c(V1, V2) for a minimal 2-cut, all or inclusion-minimal only.
std::vector<VertexSet> pair_dominating_sets(const Graph& g, VertexSet s, bool minimal_only);

/// Graph text format: `n <count>` then `u v` lines, `#` comments.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string format_graph(const Graph& g);

/// Parses `1,3,5` or `empty`.
VertexSet parse_vertex_list(std::string_view text);

}  // namespace vnum::graph
