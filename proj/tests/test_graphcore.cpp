#include <doctest.h>

#include "support.hpp"
#include "vnum/errors.hpp"
#include "vnum/graph.hpp"

using namespace vnum;
using graph::Graph;
using graph::VertexSet;

namespace {

Graph p4() { return Graph::path(4); }
Graph c4() { return testing::cycle(4); }

std::vector<VertexSet> cut_sets(const Graph& g) {
  std::vector<VertexSet> out;
  for (const auto& c : graph::enumerate_min_cuts(g)) out.push_back(c.s);
  return out;
}

}  // namespace

TEST_CASE("induced subgraph keeps labels") {
  const Graph h = graph::induced_subgraph(c4(), VertexSet::of({1, 2, 3}));
  CHECK(h.edges() == std::vector<graph::Edge>{{1, 2}, {2, 3}});
  CHECK(h.vertices() == VertexSet::of({1, 2, 3}));
  CHECK(graph::induced_subgraph(c4(), {}).edges().empty());
  const Graph q = graph::induced_subgraph(p4(), VertexSet::of({1, 3, 4}));
  CHECK(q.edges() == std::vector<graph::Edge>{{3, 4}});
  CHECK(graph::connected_components(q) == std::vector<VertexSet>{VertexSet::of({1}), VertexSet::of({3, 4})});
  CHECK_THROWS_AS(graph::induced_subgraph(c4(), VertexSet::of({5})), PreconditionError);
}

TEST_CASE("components") {
  CHECK(graph::connected_components(testing::cycle(5)) == std::vector<VertexSet>{VertexSet::range(5)});
  CHECK(graph::components_within(c4(), VertexSet::of({2, 4})) ==
        std::vector<VertexSet>{VertexSet::of({2}), VertexSet::of({4})});
}

TEST_CASE("minimal k-cuts") {
  auto a = graph::is_minimal_kcut(p4(), VertexSet::of({2}));
  CHECK(a.minimal);
  CHECK(a.k == 2);
  CHECK_FALSE(graph::is_minimal_kcut(p4(), VertexSet::of({2, 3})).minimal);
  auto b = graph::is_minimal_kcut(testing::cycle(6), VertexSet::of({1, 3, 5}));
  CHECK(b.minimal);
  CHECK(b.k == 3);
  CHECK_THROWS_AS(graph::is_minimal_kcut(p4(), {}), PreconditionError);
  CHECK_THROWS_AS(graph::is_minimal_kcut(p4(), VertexSet::range(4)), PreconditionError);
}

TEST_CASE("min(G) enumeration") {
  CHECK(cut_sets(c4()) == std::vector<VertexSet>{{}, VertexSet::of({1, 3}), VertexSet::of({2, 4})});
  CHECK(cut_sets(p4()) == std::vector<VertexSet>{{}, VertexSet::of({2}), VertexSet::of({3})});
  CHECK(cut_sets(Graph::complete(4)) == std::vector<VertexSet>{{}});
  const Graph split = Graph::from_edges(4, {{1, 2}, {3, 4}});
  CHECK_THROWS_AS(graph::enumerate_min_cuts(split), PreconditionError);
}

TEST_CASE("min(G) round trip on all small connected graphs") {
  for (const auto& g : testing::connected_graphs_up_to(6, 2)) {
    for (const auto& c : graph::enumerate_min_cuts(g)) {
      if (c.s.empty()) continue;
      const auto k = graph::is_minimal_kcut(g, c.s);
      CHECK(k.minimal);
      CHECK(k.k == c.k);
      VertexSet cover = c.s;
      for (VertexSet comp : c.components) {
        CHECK_FALSE(comp.intersects(cover));
        cover = cover | comp;
      }
      CHECK(cover == g.vertices());
    }
  }
}

TEST_CASE("min(C_n) is the empty set plus independent sets of size >= 2") {
  for (int n = 4; n <= 9; ++n) {
    const Graph g = testing::cycle(n);
    std::vector<VertexSet> expected{{}};
    for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
      const VertexSet s = VertexSet::from_bits(bits);
      if (s.size() < 2) continue;
      bool independent = true;
      for (int v : s) independent = independent && !s.contains(v == n ? 1 : v + 1);
      if (independent) expected.push_back(s);
    }
    std::sort(expected.begin(), expected.end(), graph::lex_less);
    CHECK(cut_sets(g) == expected);
  }
}

TEST_CASE("connected domination") {
  CHECK(graph::is_connected_dominating(p4(), VertexSet::of({2, 3})));
  CHECK_FALSE(graph::is_connected_dominating(p4(), VertexSet::of({1, 2})));
  CHECK(graph::is_connected_dominating(c4(), VertexSet::of({1, 2})));
  CHECK_THROWS_AS(graph::is_connected_dominating(p4(), {}), PreconditionError);

  auto d = graph::gamma_c(p4());
  CHECK(d.size == 2);
  CHECK(d.witness == VertexSet::of({2, 3}));
  CHECK(graph::gamma_c(c4()).size == 2);
  CHECK(graph::gamma_c(Graph::complete(3)).size == 1);
  CHECK(graph::gamma_c(Graph::complete(1)).size == 1);
  for (const auto& g : testing::connected_graphs_up_to(6))
    CHECK(graph::is_connected_dominating(g, graph::gamma_c(g).witness));
}

TEST_CASE("pair domination number") {
  auto a = graph::gamma_c_pair(c4(), VertexSet::of({1, 3}));
  CHECK(a.size == 2);
  CHECK(a.witness == VertexSet::of({2, 4}));
  auto b = graph::gamma_c_pair(testing::cycle(6), VertexSet::of({1, 4}));
  CHECK(b.size == 4);
  CHECK(b.witness == VertexSet::of({2, 3, 5, 6}));
  auto c = graph::gamma_c_pair(p4(), VertexSet::of({2}));
  CHECK(c.size == 2);
  CHECK(c.witness == VertexSet::of({1, 3}));
  CHECK_THROWS_AS(graph::gamma_c_pair(testing::cycle(6), VertexSet::of({1, 3, 5})), PreconditionError);

  for (const auto& g : testing::connected_graphs_up_to(6, 3)) {
    for (const auto& cut : graph::enumerate_min_cuts(g)) {
      if (cut.k != 2) continue;
      const auto pd = graph::gamma_c_pair(g, cut.s);
      CHECK(pd.size >= 2);
      const Graph g1 = graph::induced_subgraph(g, pd.v1 | cut.s);
      const Graph g2 = graph::induced_subgraph(g, pd.v2 | cut.s);
      CHECK(graph::is_connected_dominating(g1, pd.witness & pd.v1));
      CHECK(graph::is_connected_dominating(g2, pd.witness & pd.v2));
    }
  }
}

TEST_CASE("graph text format") {
  const Graph g = graph::parse_graph("# square\nn 4\n1 2\n2 3 # side\n3 4\n1 4\n");
  CHECK(g == c4());
  CHECK(graph::parse_graph(graph::format_graph(g)) == g);
  CHECK_THROWS_AS(graph::parse_graph("n 3\n1 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(graph::parse_graph("n 3\n2 1\n"), ParseError);
  CHECK_THROWS_AS(graph::parse_graph("n 3\n1 4\n"), ParseError);
  CHECK_THROWS_AS(graph::parse_graph("1 2\n"), ParseError);
  CHECK_THROWS_AS(graph::parse_graph("n 3\n1 x\n"), ParseError);
  CHECK(graph::parse_vertex_list("1,3") == VertexSet::of({1, 3}));
  CHECK(graph::parse_vertex_list("empty").empty());
  CHECK_THROWS_AS(graph::parse_vertex_list("1,,3"), ParseError);
}

TEST_CASE("enumeration helper counts isomorphism classes") {
  const std::vector<std::size_t> counts{1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) CHECK(testing::connected_graphs(n).size() == counts[n - 1]);
}
