#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "vnum/graph.hpp"

namespace vnum::testing {

using graph::Edge;
using graph::Graph;

inline std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

inline Graph graph_of_mask(int n, std::uint32_t mask) {
  const auto pairs = all_pairs(n);
  std::vector<Edge> edges;
  for (std::size_t b = 0; b < pairs.size(); ++b)
    if ((mask >> b) & 1u) edges.push_back(pairs[b]);
  return Graph::from_edges(n, edges);
}

// One representative (least edge mask over all relabelings) per isomorphism
// class of connected graphs on n vertices.
inline std::vector<Graph> connected_graphs(int n) {
  const auto pairs = all_pairs(n);
  std::vector<int> index(static_cast<std::size_t>((n + 1) * (n + 1)), 0);
  for (std::size_t b = 0; b < pairs.size(); ++b) {
    index[pairs[b].first * (n + 1) + pairs[b].second] = static_cast<int>(b);
    index[pairs[b].second * (n + 1) + pairs[b].first] = static_cast<int>(b);
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::set<std::uint32_t> canon;
  const std::uint32_t total = pairs.empty() ? 1u : (1u << pairs.size());
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    const Graph g = graph_of_mask(n, mask);
    if (!graph::is_connected(g)) continue;
    std::uint32_t best = mask;
    for (const auto& perm : perms) {
      std::uint32_t m = 0;
      for (std::size_t b = 0; b < pairs.size(); ++b)
        if ((mask >> b) & 1u) m |= 1u << index[perm[pairs[b].first - 1] * (n + 1) + perm[pairs[b].second - 1]];
      best = std::min(best, m);
      if (best < mask) break;
    }
    if (best == mask) canon.insert(mask);
  }
  std::vector<Graph> out;
  for (auto m : canon) out.push_back(graph_of_mask(n, m));
  return out;
}

inline std::vector<Graph> connected_graphs_up_to(int max_n, int min_n = 1) {
  std::vector<Graph> out;
  for (int n = min_n; n <= max_n; ++n)
    for (auto& g : connected_graphs(n)) out.push_back(std::move(g));
  return out;
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(1, n);
  return Graph::from_edges(n, e);
}

inline Graph random_connected_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  for (;;) {
    std::vector<Edge> edges;
    for (const auto& e : all_pairs(n))
      if (coin(rng)) edges.push_back(e);
    Graph g = Graph::from_edges(n, edges);
    if (graph::is_connected(g)) return g;
  }
}

}  // namespace vnum::testing
