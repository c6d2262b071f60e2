#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdg/graph.hpp"
#include "cdg/number_theory.hpp"
#include "cdg/orientation.hpp"

namespace cdg {

// Injective vertex labeling, indexed like the graph's vertices, in which
// adjacency coincides with divisibility.
struct DivisorLabeling {
  std::vector<BigInt> labels;

  bool operator==(const DivisorLabeling&) const = default;
};

struct Certificate {
  Orientation orientation;
  DivisorLabeling labeling;
};

struct Obstruction {
  enum class Kind {
    // Chain of arcs, each forcing the next, running from an arc to its
    // reverse. No transitive orientation can contain the first arc or its
    // reverse, so none exists.
    forcing_cycle,
    // Vertices of a forbidden induced configuration, e.g. the net graph.
    forbidden_configuration,
    // Vertices (x, y, z) with x->y->z directed and {x,z} not an edge.
    transitivity_triple,
    // The oracle exhausted every vertex ordering.
    exhausted_search,
  };

  Kind kind = Kind::forcing_cycle;
  std::string description;
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> arcs;
};

std::string to_string(Obstruction::Kind kind);

struct Verdict {
  bool is_divisor = false;
  std::string method;
  std::optional<Certificate> certificate;  // present iff is_divisor
  std::optional<Obstruction> obstruction;  // present iff !is_divisor
};

struct OrientationResult {
  std::optional<Orientation> orientation;
  // When not orientable: a closed chain of arcs (u,v) -> ... -> (v,u), each
  // consecutive pair related by the forcing rule in the input graph.
  std::vector<Arc> forcing_cycle;
  // Set only if the forcing pass succeeded but global verification did not.
  std::optional<std::vector<std::size_t>> failed_triple;

  bool orientable() const noexcept { return orientation.has_value(); }
};

// Implication-class forcing. Repeatedly seeds the lexicographically least
// undecided edge low->high, closes it under the forcing rule within the
// edges not yet assigned to an earlier class, and retires the class. A class
// that forces both directions of an edge ends the search; the returned
// witness is then recomputed as a forcing cycle in the original graph. A
// successful pass is checked for transitivity before it is returned.
OrientationResult find_transitive_orientation(const Graph& g);

// True when arcs a and b are related by one forcing step in g: they share
// their tail (or head) and the two other endpoints are distinct and
// non-adjacent.
bool forces(const Graph& g, Arc a, Arc b);

// Checks that chain starts at some arc (u,v), ends at (v,u), uses only edges
// of g, and that every consecutive pair satisfies forces().
bool validate_forcing_cycle(const Graph& g, const std::vector<Arc>& chain);

inline constexpr std::size_t kBruteForceVertexCap = 9;

// Searches vertex orderings (orienting earlier -> later) for a transitive
// orientation, pruning an ordering prefix as soon as it contains a violated
// triple. Throws OutOfRange above kBruteForceVertexCap vertices.
std::optional<Orientation> brute_force_orientation(const Graph& g);
bool brute_force_is_divisor(const Graph& g);

// Vertex v gets the v-th prime q_v; label(v) is the product of q_u over u = v
// and every tail u of an arc (u, v). Throws GraphError when o is not a
// transitive orientation of g.
DivisorLabeling divisor_labeling_from_orientation(const Graph& g, const Orientation& o);

// Injectivity plus adjacency <=> divisibility over all pairs. Throws
// GraphError when the labeling does not cover g.
bool validate_labeling(const Graph& g, const DivisorLabeling& labeling);

// Forcing recognizer wrapped with a certificate or witness.
Verdict is_divisor_graph(const Graph& g);

// Same contract backed by brute_force_orientation.
Verdict is_divisor_graph_brute_force(const Graph& g);

// The 6-vertex net: triangle a,b,c with pendants x at c, y at b, z at a.
Graph net_graph_fixture();

}  // namespace cdg
