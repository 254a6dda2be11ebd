#include "vnum/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "vnum/errors.hpp"

namespace vnum::graph {

VertexSet VertexSet::of(std::initializer_list<int> vertices) {
  VertexSet s;
  for (int v : vertices) s.insert(v);
  return s;
}

VertexSet VertexSet::of(const std::vector<int>& vertices) {
  VertexSet s;
  for (int v : vertices) s.insert(v);
  return s;
}

VertexSet& VertexSet::insert(int v) {
  if (v < 1 || v > kMaxGraphVertices)
    throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  bits_ |= 1u << (v - 1);
  return *this;
}

VertexSet& VertexSet::erase(int v) {
  if (v >= 1 && v <= 32) bits_ &= ~(1u << (v - 1));
  return *this;
}

std::vector<int> VertexSet::to_vector() const { return {begin(), end()}; }

bool lex_less(VertexSet a, VertexSet b) {
  const auto va = a.to_vector();
  const auto vb = b.to_vector();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  if (n < 0 || n > kMaxGraphVertices)
    throw PreconditionError("vertex count " + std::to_string(n) + " out of range");
  Graph g;
  g.n_ = n;
  g.vertices_ = VertexSet::range(n);
  g.adj_.assign(n + 1, VertexSet{});
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > n || v > n)
      throw PreconditionError("edge endpoint outside 1.." + std::to_string(n));
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    if (g.adj_[u].contains(v))
      throw PreconditionError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    g.adj_[u].insert(v);
    g.adj_[v].insert(u);
  }
  return g;
}

Graph Graph::complete(int n) {
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return from_edges(n, e);
}

Graph Graph::path(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return from_edges(n, e);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u : vertices_)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int Graph::edge_count() const {
  int c = 0;
  for (int u : vertices_) c += adj_[u].size();
  return c / 2;
}

bool Graph::is_complete() const {
  const int k = vertices_.size();
  return edge_count() == k * (k - 1) / 2;
}

Graph induced_subgraph(const Graph& g, VertexSet w) {
  if (!w.subset_of(g.vertices())) throw PreconditionError("induced_subgraph: vertex out of range");
  Graph h = g;
  h.vertices_ = w;
  for (int v = 1; v <= g.n(); ++v) h.adj_[v] = w.contains(v) ? (g.adj_[v] & w) : VertexSet{};
  return h;
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet w) {
  std::vector<VertexSet> out;
  VertexSet left = w & g.vertices();
  while (!left.empty()) {
    VertexSet comp = VertexSet::of({left.min()});
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next = next | (g.neighbors(v) & left);
      frontier = next - comp;
      comp = comp | frontier;
    }
    out.push_back(comp);
    left = left - comp;
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return components_within(g, g.vertices());
}

int component_count(const Graph& g, VertexSet w) {
  return static_cast<int>(components_within(g, w).size());
}

bool is_connected(const Graph& g) { return component_count(g, g.vertices()) <= 1; }

namespace {

void require_connected(const Graph& g, const char* op) {
  if (!is_connected(g)) throw PreconditionError(std::string(op) + ": graph is not connected");
}

// Visits the k-subsets of `pool` in lexicographic order until fn returns true.
bool for_each_subset_lex(const std::vector<int>& pool, int k,
                         const std::function<bool(VertexSet)>& fn) {
  std::vector<int> idx(k);
  std::function<bool(int, int, VertexSet)> rec = [&](int pos, int start, VertexSet acc) {
    if (pos == k) return fn(acc);
    for (int i = start; i <= static_cast<int>(pool.size()) - (k - pos); ++i) {
      VertexSet next = acc;
      next.insert(pool[i]);
      if (rec(pos + 1, i + 1, next)) return true;
    }
    return false;
  };
  return rec(0, 0, VertexSet{});
}

}  // namespace

KCut is_minimal_kcut(const Graph& g, VertexSet s) {
  require_connected(g, "is_minimal_kcut");
  if (s.empty()) throw PreconditionError("is_minimal_kcut: S is empty");
  if (!s.subset_of(g.vertices()) || s == g.vertices())
    throw PreconditionError("is_minimal_kcut: S must be a proper subset of the vertices");
  const VertexSet rest = g.vertices() - s;
  const int k = component_count(g, rest);
  KCut out{false, k};
  if (k < 2) return out;
  for (int i : s) {
    VertexSet with_i = rest;
    with_i.insert(i);
    // Cut point: re-adding i strictly lowers the component count.
    if (component_count(g, with_i) >= k) return out;
  }
  out.minimal = true;
  return out;
}

std::vector<CutRecord> enumerate_min_cuts(const Graph& g) {
  require_connected(g, "enumerate_min_cuts");
  std::vector<CutRecord> out;
  out.push_back({VertexSet{}, 1, components_within(g, g.vertices())});
  const std::uint32_t all = g.vertices().bits();
  for (std::uint32_t bits = all; bits; bits = (bits - 1) & all) {
    const VertexSet s = VertexSet::from_bits(bits);
    if (s == g.vertices()) continue;
    const VertexSet rest = g.vertices() - s;
    auto comps = components_within(g, rest);
    if (comps.size() < 2) continue;
    if (!is_minimal_kcut(g, s).minimal) continue;
    out.push_back({s, static_cast<int>(comps.size()), std::move(comps)});
  }
  std::sort(out.begin(), out.end(),
            [](const CutRecord& a, const CutRecord& b) { return lex_less(a.s, b.s); });
  return out;
}

bool is_connected_dominating(const Graph& g, VertexSet b) {
  if (b.empty()) throw PreconditionError("is_connected_dominating: empty candidate set");
  if (!b.subset_of(g.vertices()))
    throw PreconditionError("is_connected_dominating: candidate outside the graph");
  if (component_count(g, b) != 1) return false;
  for (int v : g.vertices() - b)
    if (!g.neighbors(v).intersects(b)) return false;
  return true;
}

Domination gamma_c(const Graph& g) {
  require_connected(g, "gamma_c");
  if (g.vertices().empty()) throw PreconditionError("gamma_c: empty graph");
  // gamma_c(K_1) = 1 by convention; the search below returns that naturally.
  const auto pool = g.vertices().to_vector();
  for (int k = 1; k <= static_cast<int>(pool.size()); ++k) {
    Domination found;
    if (for_each_subset_lex(pool, k, [&](VertexSet b) {
          if (!is_connected_dominating(g, b)) return false;
          found = {k, b};
          return true;
        }))
      return found;
  }
  throw std::logic_error("gamma_c: the full vertex set must dominate");
}

namespace {

struct Sides {
  VertexSet v1, v2;
  Graph g1, g2;  // G_{V1 ∪ S}, G_{V2 ∪ S}
};

Sides two_cut_sides(const Graph& g, VertexSet s) {
  const KCut cut = is_minimal_kcut(g, s);
  if (!cut.minimal || cut.k != 2)
    throw PreconditionError("S = " + to_string(s) + " is not a minimal 2-cut");
  const auto comps = components_within(g, g.vertices() - s);
  return {comps[0], comps[1], induced_subgraph(g, comps[0] | s), induced_subgraph(g, comps[1] | s)};
}

bool in_pair_dc(const Sides& sides, VertexSet a) {
  const VertexSet a1 = a & sides.v1;
  const VertexSet a2 = a & sides.v2;
  return !a1.empty() && !a2.empty() && is_connected_dominating(sides.g1, a1) &&
         is_connected_dominating(sides.g2, a2);
}

}  // namespace

PairDomination gamma_c_pair(const Graph& g, VertexSet s) {
  const Sides sides = two_cut_sides(g, s);
  const auto pool = (sides.v1 | sides.v2).to_vector();
  for (int k = 2; k <= static_cast<int>(pool.size()); ++k) {
    PairDomination found;
    if (for_each_subset_lex(pool, k, [&](VertexSet a) {
          if (!in_pair_dc(sides, a)) return false;
          found = {k, a, sides.v1, sides.v2};
          return true;
        }))
      return found;
  }
  throw std::logic_error("gamma_c_pair: V1 ∪ V2 must belong to D_c(V1, V2)");
}

std::vector<VertexSet> pair_dominating_sets(const Graph& g, VertexSet s, bool minimal_only) {
  const Sides sides = two_cut_sides(g, s);
  const std::uint32_t all = (sides.v1 | sides.v2).bits();
  std::vector<VertexSet> members;
  for (std::uint32_t bits = all; bits; bits = (bits - 1) & all) {
    const VertexSet a = VertexSet::from_bits(bits);
    if (in_pair_dc(sides, a)) members.push_back(a);
  }
  if (minimal_only) {
    std::vector<VertexSet> minimal;
    for (VertexSet a : members) {
      const bool has_smaller = std::any_of(members.begin(), members.end(), [&](VertexSet b) {
        return b != a && b.subset_of(a);
      });
      if (!has_smaller) minimal.push_back(a);
    }
    members = std::move(minimal);
  }
  std::sort(members.begin(), members.end(), lex_less);
  return members;
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const auto where = "line " + std::to_string(lineno) + ": ";
    auto to_int = [&](const std::string& t) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(t, &used);
      } catch (const std::exception&) {
        throw ParseError(where + "expected an integer, got '" + t + "'");
      }
      if (used != t.size()) throw ParseError(where + "expected an integer, got '" + t + "'");
      return v;
    };
    if (n < 0) {
      if (tok.size() != 2 || tok[0] != "n") throw ParseError(where + "expected 'n <count>'");
      n = to_int(tok[1]);
      if (n < 1 || n > kMaxGraphVertices)
        throw ParseError(where + "vertex count must be in 1.." + std::to_string(kMaxGraphVertices));
      continue;
    }
    if (tok.size() != 2) throw ParseError(where + "expected 'u v'");
    const int u = to_int(tok[0]);
    const int v = to_int(tok[1]);
    if (!(1 <= u && u < v && v <= n)) throw ParseError(where + "edge must satisfy 1 <= u < v <= n");
    if (!seen.insert({u, v}).second) throw ParseError(where + "duplicate edge");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw ParseError("missing 'n <count>' header");
  return Graph::from_edges(n, edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string format_graph(const Graph& g) {
  std::string out = "n " + std::to_string(g.n()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

VertexSet parse_vertex_list(std::string_view text) {
  if (text == "empty") return {};
  VertexSet s;
  std::string item;
  auto flush = [&] {
    if (item.empty()) throw ParseError("malformed vertex list '" + std::string(text) + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 1 || v > kMaxGraphVertices)
      throw ParseError("malformed vertex '" + item + "'");
    if (s.contains(v)) throw ParseError("repeated vertex " + item);
    s.insert(v);
    item.clear();
  };
  for (char c : text) {
    if (c == ',') flush();
    else if (c != ' ') item += c;
  }
  flush();
  return s;
}

}  // namespace vnum::graph
