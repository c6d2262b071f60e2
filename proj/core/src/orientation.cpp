#include "cdg/orientation.hpp"

#include <algorithm>

#include "cdg/errors.hpp"

namespace cdg {

Orientation::Orientation(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
  std::sort(arcs_.begin(), arcs_.end());
}

bool Orientation::contains(Arc a) const { return std::binary_search(arcs_.begin(), arcs_.end(), a); }

void require_covers(const Graph& g, const Orientation& o) {
  if (o.size() != g.edge_count()) {
    throw GraphError("orientation has " + std::to_string(o.size()) + " arcs for " +
                     std::to_string(g.edge_count()) + " edges");
  }
  for (auto [u, v] : o.arcs()) {
    if (u >= g.vertex_count() || v >= g.vertex_count() || !g.adjacent(u, v)) {
      throw GraphError("orientation arc without an underlying edge");
    }
    if (o.contains({v, u})) throw GraphError("edge oriented both ways");
  }
}

bool validate_orientation(const Graph& g, const Orientation& o) {
  require_covers(g, o);
  std::vector<std::vector<std::size_t>> out(g.vertex_count()), in(g.vertex_count());
  for (auto [u, v] : o.arcs()) {
    out[u].push_back(v);
    in[v].push_back(u);
  }
  for (std::size_t y = 0; y < g.vertex_count(); ++y) {
    for (auto x : in[y]) {
      for (auto z : out[y]) {
        if (!o.contains({x, z})) return false;
      }
    }
  }
  return true;
}

}  // namespace cdg
