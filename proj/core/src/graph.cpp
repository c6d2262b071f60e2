#include "cdg/graph.hpp"

#include <algorithm>
#include <functional>

#include "cdg/errors.hpp"

namespace cdg {

std::optional<std::size_t> Graph::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Graph::index_of(const std::string& label) const {
  auto v = find(label);
  if (!v) throw GraphError("unknown vertex '" + label + "'");
  return *v;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> out;
  out.reserve(vertex_count());
  for (const auto& n : neighbors_) out.push_back(n.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::size_t GraphBuilder::add_vertex(const std::string& label) {
  auto [it, inserted] = index_.emplace(label, labels_.size());
  if (inserted) labels_.push_back(label);
  return it->second;
}

std::size_t GraphBuilder::add_new_vertex(const std::string& label) {
  if (has_vertex(label)) throw GraphError("duplicate vertex label '" + label + "'");
  return add_vertex(label);
}

void GraphBuilder::add_edge(std::size_t u, std::size_t v) {
  if (u >= labels_.size() || v >= labels_.size()) throw GraphError("edge endpoint out of range");
  if (u == v) throw GraphError("loop at vertex '" + labels_[u] + "'");
  edges_.insert(std::minmax(u, v));
}

void GraphBuilder::add_edge(const std::string& u, const std::string& v) {
  const auto a = add_vertex(u);
  const auto b = add_vertex(v);
  add_edge(a, b);
}

Graph GraphBuilder::build() const {
  Graph g;
  const auto n = labels_.size();
  g.labels_ = labels_;
  g.index_ = index_;
  g.neighbors_.assign(n, {});
  g.adjacency_.assign(n * n, false);
  g.edges_.assign(edges_.begin(), edges_.end());
  for (auto [u, v] : g.edges_) {
    g.neighbors_[u].push_back(v);
    g.neighbors_[v].push_back(u);
    g.adjacency_[u * n + v] = true;
    g.adjacency_[v * n + u] = true;
  }
  for (auto& nb : g.neighbors_) std::sort(nb.begin(), nb.end());
  return g;
}

Graph induced_subgraph(const Graph& g, const std::set<std::string>& keep) {
  for (const auto& label : keep) g.index_of(label);
  GraphBuilder b;
  std::vector<std::size_t> kept;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (keep.count(g.label(v))) {
      b.add_vertex(g.label(v));
      kept.push_back(v);
    }
  }
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      if (g.adjacent(kept[i], kept[j])) b.add_edge(i, j);
    }
  }
  return b.build();
}

namespace {

GraphBuilder disjoint_builder(const Graph& g1, const Graph& g2) {
  GraphBuilder b;
  for (const auto& l : g1.labels()) b.add_vertex(l);
  for (const auto& l : g2.labels()) {
    if (g1.has_vertex(l)) throw GraphError("label '" + l + "' appears in both graphs");
    b.add_vertex(l);
  }
  const auto offset = g1.vertex_count();
  for (auto [u, v] : g1.edges()) b.add_edge(u, v);
  for (auto [u, v] : g2.edges()) b.add_edge(u + offset, v + offset);
  return b;
}

}  // namespace

Graph graph_union(const Graph& g1, const Graph& g2) { return disjoint_builder(g1, g2).build(); }

Graph graph_join(const Graph& g1, const Graph& g2) {
  GraphBuilder b = disjoint_builder(g1, g2);
  const auto offset = g1.vertex_count();
  for (std::size_t u = 0; u < g1.vertex_count(); ++u) {
    for (std::size_t v = 0; v < g2.vertex_count(); ++v) b.add_edge(u, v + offset);
  }
  return b.build();
}

std::string product_label(const std::string& base, const std::string& fiber) {
  return "(" + base + "," + fiber + ")";
}

Graph lex_product(const Graph& h, const std::map<std::string, Graph>& fibers) {
  std::vector<const Graph*> fiber_of(h.vertex_count());
  std::vector<std::size_t> first(h.vertex_count());
  GraphBuilder b;
  for (std::size_t v = 0; v < h.vertex_count(); ++v) {
    auto it = fibers.find(h.label(v));
    if (it == fibers.end()) throw GraphError("no fiber for vertex '" + h.label(v) + "'");
    fiber_of[v] = &it->second;
    first[v] = b.vertex_count();
    for (const auto& w : it->second.labels()) b.add_new_vertex(product_label(h.label(v), w));
  }
  for (std::size_t v = 0; v < h.vertex_count(); ++v) {
    for (auto [w1, w2] : fiber_of[v]->edges()) b.add_edge(first[v] + w1, first[v] + w2);
  }
  for (auto [u, v] : h.edges()) {
    for (std::size_t i = 0; i < fiber_of[u]->vertex_count(); ++i) {
      for (std::size_t j = 0; j < fiber_of[v]->vertex_count(); ++j) b.add_edge(first[u] + i, first[v] + j);
    }
  }
  return b.build();
}

namespace {

GraphBuilder numbered(std::size_t n, const std::string& prefix) {
  GraphBuilder b;
  for (std::size_t i = 1; i <= n; ++i) b.add_vertex(prefix + std::to_string(i));
  return b;
}

void require_positive(std::size_t n) {
  if (n < 1) throw OutOfRange("graph order must be positive");
}

}  // namespace

Graph complete_graph(std::size_t n, const std::string& prefix) {
  require_positive(n);
  auto b = numbered(n, prefix);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return b.build();
}

Graph edgeless_graph(std::size_t n, const std::string& prefix) {
  require_positive(n);
  return numbered(n, prefix).build();
}

Graph path_graph(std::size_t n, const std::string& prefix) {
  require_positive(n);
  auto b = numbered(n, prefix);
  for (std::size_t u = 0; u + 1 < n; ++u) b.add_edge(u, u + 1);
  return b.build();
}

Graph cycle_graph(std::size_t n, const std::string& prefix) {
  if (n < 3) throw OutOfRange("cycle needs at least 3 vertices");
  auto b = numbered(n, prefix);
  for (std::size_t u = 0; u < n; ++u) b.add_edge(u, (u + 1) % n);
  return b.build();
}

Graph complete_bipartite_graph(std::size_t a, std::size_t c, const std::string& prefix) {
  require_positive(a);
  require_positive(c);
  auto b = numbered(a + c, prefix);
  for (std::size_t u = 0; u < a; ++u) {
    for (std::size_t v = a; v < a + c; ++v) b.add_edge(u, v);
  }
  return b.build();
}

Graph relabel(const Graph& g, const std::map<std::string, std::string>& mapping) {
  GraphBuilder b;
  for (const auto& l : g.labels()) {
    auto it = mapping.find(l);
    if (it == mapping.end()) throw GraphError("relabeling misses vertex '" + l + "'");
    b.add_new_vertex(it->second);
  }
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  return b.build();
}

bool is_isomorphic_small(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() > kIsomorphismVertexCap || g2.vertex_count() > kIsomorphismVertexCap) {
    throw OutOfRange("isomorphism check is limited to " + std::to_string(kIsomorphismVertexCap) + " vertices");
  }
  const auto n = g1.vertex_count();
  if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
  if (g1.degree_sequence() != g2.degree_sequence()) return false;

  std::vector<std::size_t> image(n), used_by(n, n);
  std::function<bool(std::size_t)> extend = [&](std::size_t v) {
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used_by[w] != n || g1.degree(v) != g2.degree(w)) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = g1.adjacent(u, v) == g2.adjacent(image[u], w);
      if (!ok) continue;
      image[v] = w;
      used_by[w] = v;
      if (extend(v + 1)) return true;
      used_by[w] = n;
    }
    return false;
  };
  return extend(0);
}

}  // namespace cdg
