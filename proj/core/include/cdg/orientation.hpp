#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cdg/graph.hpp"

namespace cdg {

// Directed edge (tail, head) by vertex index.
using Arc = std::pair<std::size_t, std::size_t>;

// One direction per undirected edge of an associated Graph. Arcs are kept
// sorted so lookups are logarithmic.
class Orientation {
public:
  Orientation() = default;
  explicit Orientation(std::vector<Arc> arcs);

  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  std::size_t size() const noexcept { return arcs_.size(); }
  bool contains(Arc a) const;

  bool operator==(const Orientation&) const = default;

private:
  std::vector<Arc> arcs_;
};

// Throws GraphError unless o holds exactly one direction of every edge of g
// and nothing else.
void require_covers(const Graph& g, const Orientation& o);

// Transitivity: (x,y), (y,z) in o imply (x,z) in o. Throws GraphError on a
// coverage mismatch.
bool validate_orientation(const Graph& g, const Orientation& o);

}  // namespace cdg
