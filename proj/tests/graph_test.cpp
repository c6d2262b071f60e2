#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "cdg/errors.hpp"
#include "cdg/graph.hpp"
#include "cdg/graph_io.hpp"
#include "cdg/orientation.hpp"
#include "cdg/recognition.hpp"

namespace cdg {
namespace {

Graph path_abc() { return parse_edge_list("a b\nb c\n"); }

TEST(InducedSubgraph, Examples) {
  const auto k4 = complete_graph(4);
  EXPECT_TRUE(is_isomorphic_small(induced_subgraph(k4, {"1", "2", "4"}), complete_graph(3)));

  const auto two = induced_subgraph(path_abc(), {"a", "c"});
  EXPECT_EQ(two.vertex_count(), 2u);
  EXPECT_EQ(two.edge_count(), 0u);

  const auto net = net_graph_fixture();
  EXPECT_TRUE(is_isomorphic_small(induced_subgraph(net, {"a", "b", "c"}), complete_graph(3)));
  EXPECT_THROW(induced_subgraph(net, {"nope"}), GraphError);
}

TEST(GraphUnion, Examples) {
  const auto u = graph_union(complete_graph(2, "x"), complete_graph(1, "y"));
  EXPECT_EQ(u.vertex_count(), 3u);
  EXPECT_EQ(u.edge_count(), 1u);

  const auto kk = graph_union(complete_graph(1, "x"), complete_graph(1, "y"));
  EXPECT_EQ(kk.vertex_count(), 2u);
  EXPECT_EQ(kk.edge_count(), 0u);

  const auto nk = graph_union(net_graph_fixture(), complete_graph(3, "k"));
  EXPECT_EQ(nk.vertex_count(), 9u);
  EXPECT_EQ(nk.edge_count(), 9u);

  EXPECT_THROW(graph_union(complete_graph(2), complete_graph(2)), GraphError);
}

TEST(GraphJoin, Examples) {
  EXPECT_TRUE(is_isomorphic_small(graph_join(complete_graph(1, "x"), complete_graph(1, "y")), complete_graph(2)));
  EXPECT_TRUE(is_isomorphic_small(graph_join(complete_graph(1, "x"), edgeless_graph(4, "y")),
                                  complete_bipartite_graph(1, 4)));
  EXPECT_TRUE(is_isomorphic_small(graph_join(complete_graph(2, "x"), complete_graph(2, "y")), complete_graph(4)));
}

TEST(LexProduct, Examples) {
  const auto k2 = complete_graph(2);
  const auto singleton = lex_product(k2, {{"1", complete_graph(1)}, {"2", complete_graph(1)}});
  EXPECT_TRUE(is_isomorphic_small(singleton, k2));

  const auto f = path_graph(3);
  EXPECT_TRUE(is_isomorphic_small(lex_product(complete_graph(1), {{"1", f}}), f));

  const auto mixed = lex_product(k2, {{"1", complete_graph(2)}, {"2", edgeless_graph(2)}});
  EXPECT_EQ(mixed.vertex_count(), 4u);
  EXPECT_EQ(mixed.edge_count(), 5u);
  EXPECT_TRUE(mixed.has_vertex(product_label("1", "2")));

  EXPECT_THROW(lex_product(k2, {{"1", f}}), GraphError);
}

TEST(StandardGraphs, Examples) {
  EXPECT_EQ(complete_graph(3).edge_count(), 3u);
  const auto c5 = cycle_graph(5);
  EXPECT_EQ(c5.edge_count(), 5u);
  for (std::size_t v = 0; v < 5; ++v) EXPECT_EQ(c5.degree(v), 2u);
  EXPECT_EQ(edgeless_graph(4).edge_count(), 0u);
  EXPECT_EQ(path_graph(4).edge_count(), 3u);
  EXPECT_EQ(complete_bipartite_graph(2, 3).edge_count(), 6u);
}

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(is_isomorphic_small(cycle_graph(4), complete_bipartite_graph(2, 2)));
  EXPECT_FALSE(is_isomorphic_small(complete_graph(3), path_graph(3)));

  const auto net = net_graph_fixture();
  std::vector<std::string> shuffled = net.labels();
  std::mt19937 rng(3);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::map<std::string, std::string> mapping;
  for (std::size_t i = 0; i < shuffled.size(); ++i) mapping[net.label(i)] = "n" + shuffled[i];
  EXPECT_TRUE(is_isomorphic_small(net, relabel(net, mapping)));
  EXPECT_THROW(is_isomorphic_small(complete_graph(13), complete_graph(13)), OutOfRange);
}

TEST(Builder, RejectsLoopsAndDuplicates) {
  GraphBuilder b;
  b.add_vertex("a");
  EXPECT_THROW(b.add_new_vertex("a"), GraphError);
  EXPECT_THROW(b.add_edge("a", "a"), GraphError);
  b.add_edge("a", "b");
  b.add_edge("b", "a");
  const auto g = b.build();
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"a", "b"}));
}

TEST(EdgeList, ParseWriteRoundTrip) {
  const auto g = parse_edge_list("# comment\nu v\n\nw\nv x\n");
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"u", "v", "w", "x"}));
  EXPECT_EQ(g.edge_count(), 2u);
  std::ostringstream out;
  write_edge_list(out, g);
  EXPECT_EQ(parse_edge_list(out.str()), g);
}

TEST(EdgeList, RoundTripKeepsVertexOrder) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    GraphBuilder b;
    const std::size_t n = 1 + rng() % 8;
    for (std::size_t i = 0; i < n; ++i) b.add_vertex("x" + std::to_string(rng() % 1000 + 1000 * i));
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (rng() % 3 == 0) b.add_edge(u, v);
      }
    }
    const auto g = b.build();
    std::ostringstream out;
    write_edge_list(out, g);
    EXPECT_EQ(parse_edge_list(out.str()), g);
  }
}

TEST(EdgeList, Errors) {
  try {
    parse_edge_list("a b\nb c d\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(parse_edge_list("a a\n"), ParseError);
  EXPECT_THROW(load_edge_list("/nonexistent/graph.txt"), Error);
}

TEST(Dot, UndirectedAndOriented) {
  const auto g = path_abc();
  const auto plain = to_dot(g);
  EXPECT_NE(plain.find("graph \"G\" {"), std::string::npos);
  EXPECT_NE(plain.find("\"a\" -- \"b\""), std::string::npos);
  const Orientation o({{0, 1}, {2, 1}});
  const auto directed = to_dot(g, o);
  EXPECT_NE(directed.find("digraph \"G\" {"), std::string::npos);
  EXPECT_NE(directed.find("\"c\" -> \"b\""), std::string::npos);
  EXPECT_THROW(to_dot(g, Orientation({{0, 1}})), GraphError);
}

TEST(Orientation, Examples) {
  const auto k3 = complete_graph(3);
  EXPECT_FALSE(validate_orientation(k3, Orientation({{0, 1}, {1, 2}, {2, 0}})));
  EXPECT_TRUE(validate_orientation(k3, Orientation({{0, 1}, {1, 2}, {0, 2}})));
  EXPECT_TRUE(validate_orientation(path_abc(), Orientation({{0, 1}, {2, 1}})));
  EXPECT_THROW(validate_orientation(k3, Orientation({{0, 1}, {1, 2}})), GraphError);
  EXPECT_THROW(validate_orientation(k3, Orientation({{0, 1}, {1, 0}, {1, 2}, {0, 2}})), GraphError);
}

// Vertex count and edge count of H[F] in closed form.
TEST(LexProductProperty, Counts) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    GraphBuilder hb;
    const std::size_t hn = 1 + rng() % 5;
    for (std::size_t i = 0; i < hn; ++i) hb.add_vertex("h" + std::to_string(i));
    for (std::size_t u = 0; u < hn; ++u) {
      for (std::size_t v = u + 1; v < hn; ++v) {
        if (rng() % 2) hb.add_edge(u, v);
      }
    }
    const auto h = hb.build();
    std::map<std::string, Graph> fibers;
    std::size_t vertices = 0, edges = 0;
    for (std::size_t i = 0; i < hn; ++i) {
      GraphBuilder fb;
      const std::size_t fn = 1 + rng() % 3;
      for (std::size_t j = 0; j < fn; ++j) fb.add_vertex("f" + std::to_string(j));
      if (fn >= 2 && rng() % 2) fb.add_edge(0, 1);
      auto f = fb.build();
      vertices += f.vertex_count();
      edges += f.edge_count();
      fibers.emplace(h.label(i), std::move(f));
    }
    for (auto [u, v] : h.edges()) edges += fibers.at(h.label(u)).vertex_count() * fibers.at(h.label(v)).vertex_count();
    const auto p = lex_product(h, fibers);
    EXPECT_EQ(p.vertex_count(), vertices);
    EXPECT_EQ(p.edge_count(), edges);

    // One full fiber is a copy of that fiber; one vertex from each fiber is
    // a copy of h.
    const auto& first = h.label(0);
    std::set<std::string> fiber_keep, transversal;
    for (const auto& w : fibers.at(first).labels()) fiber_keep.insert(product_label(first, w));
    for (std::size_t i = 0; i < hn; ++i) transversal.insert(product_label(h.label(i), fibers.at(h.label(i)).label(0)));
    EXPECT_TRUE(is_isomorphic_small(induced_subgraph(p, fiber_keep), fibers.at(first)));
    EXPECT_TRUE(is_isomorphic_small(induced_subgraph(p, transversal), h));
  }
}

TEST(JoinUnionProperty, CommutativeAndAssociative) {
  const auto a = path_graph(3, "a");
  const auto b = cycle_graph(4, "b");
  const auto c = complete_graph(2, "c");
  EXPECT_TRUE(is_isomorphic_small(graph_join(a, b), graph_join(b, a)));
  EXPECT_TRUE(is_isomorphic_small(graph_union(a, b), graph_union(b, a)));
  EXPECT_TRUE(is_isomorphic_small(graph_join(graph_join(a, b), c), graph_join(a, graph_join(b, c))));
  EXPECT_TRUE(is_isomorphic_small(graph_union(graph_union(a, b), c), graph_union(a, graph_union(b, c))));
}

}  // namespace
}  // namespace cdg
