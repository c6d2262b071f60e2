#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cdg {

using Edge = std::pair<std::size_t, std::size_t>;

// Finite simple undirected graph with string vertex labels. Vertex indices
// follow insertion order; every algorithm in the library iterates in that
// order. Immutable once built.
class Graph {
public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& label(std::size_t v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<std::size_t> find(const std::string& label) const;
  // Throws GraphError for an unknown label.
  std::size_t index_of(const std::string& label) const;
  bool has_vertex(const std::string& label) const { return find(label).has_value(); }

  bool adjacent(std::size_t u, std::size_t v) const {
    return u != v && adjacency_[u * labels_.size() + v];
  }
  bool adjacent(const std::string& u, const std::string& v) const {
    return adjacent(index_of(u), index_of(v));
  }

  // Ascending neighbor indices.
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return neighbors_.at(v); }
  std::size_t degree(std::size_t v) const { return neighbors_.at(v).size(); }

  // Edges as (u, v) with u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::vector<std::size_t> degree_sequence() const;  // descending

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

private:
  friend class GraphBuilder;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> neighbors_;
  std::vector<Edge> edges_;
  std::vector<bool> adjacency_;
};

class GraphBuilder {
public:
  // Returns the index of the (possibly existing) vertex.
  std::size_t add_vertex(const std::string& label);
  // Adds a new vertex; throws GraphError when the label already exists.
  std::size_t add_new_vertex(const std::string& label);
  bool has_vertex(const std::string& label) const { return index_.count(label) != 0; }
  std::size_t vertex_count() const noexcept { return labels_.size(); }

  // Loops are rejected; repeated edges collapse.
  void add_edge(std::size_t u, std::size_t v);
  void add_edge(const std::string& u, const std::string& v);

  Graph build() const;

private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::set<Edge> edges_;
};

// Edges of g with both ends in keep; vertices keep g's order. Unknown
// labels throw GraphError.
Graph induced_subgraph(const Graph& g, const std::set<std::string>& keep);

// Disjoint union. Throws GraphError when the label sets overlap.
Graph graph_union(const Graph& g1, const Graph& g2);

// Union plus every edge between g1 and g2.
Graph graph_join(const Graph& g1, const Graph& g2);

// Generalized lexicographic product H[F]: vertices "(v,w)" for v in H and w
// in F_v, adjacent when {v1,v2} is an edge of H, or v1 == v2 and {w1,w2} is
// an edge of F_v1. Throws GraphError when a fiber is missing.
Graph lex_product(const Graph& h, const std::map<std::string, Graph>& fibers);

std::string product_label(const std::string& base, const std::string& fiber);

// Standard families on labels prefix+"1" .. prefix+"n".
Graph complete_graph(std::size_t n, const std::string& prefix = "");
Graph edgeless_graph(std::size_t n, const std::string& prefix = "");
Graph path_graph(std::size_t n, const std::string& prefix = "");
Graph cycle_graph(std::size_t n, const std::string& prefix = "");  // n >= 3
Graph complete_bipartite_graph(std::size_t a, std::size_t b, const std::string& prefix = "");

// Same vertices under new labels; `mapping` must be injective and cover g.
Graph relabel(const Graph& g, const std::map<std::string, std::string>& mapping);

inline constexpr std::size_t kIsomorphismVertexCap = 12;

// Backtracking search with degree pruning; both graphs must have at most
// kIsomorphismVertexCap vertices (OutOfRange otherwise).
bool is_isomorphic_small(const Graph& g1, const Graph& g2);

}  // namespace cdg
