#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cdg/graph.hpp"
#include "cdg/group.hpp"
#include "cdg/orientation.hpp"

namespace cdg {

// N_G: vertices are the radicals of non-identity element orders, adjacent
// when coprime. Vertices are ordered by number of prime factors, then value.
struct RadicalGraph {
  Graph graph;
  std::vector<std::uint64_t> radicals;  // in vertex order
};

struct OrientedGraph {
  Graph graph;
  Orientation orientation;
};

// "<index>:<order>"
std::string element_label(std::size_t index, std::uint64_t order);

// Gamma(G): one vertex per element, adjacent when the orders are coprime.
Graph coprime_graph(const EnumeratedGroup& group);
Graph coprime_graph(const GroupSpec& spec, const EnumerationOptions& options = {});

RadicalGraph radical_graph(const OrderSpectrum& spectrum);
// Accepts any order set; members are reduced to their radicals and 1 is
// dropped.
RadicalGraph radical_graph_from_orders(const std::set<std::uint64_t>& orders);

// Edge {x,y} when x in <y> or y in <x>. The orientation points from the
// larger cyclic subgroup to the smaller and, inside a class of generators of
// one cyclic subgroup, from lower to higher element index.
OrientedGraph oriented_power_graph(const EnumeratedGroup& group);
Graph power_graph(const GroupSpec& spec, const EnumerationOptions& options = {});

// Edge when one generated subgroup strictly contains the other; oriented
// from the larger subgroup to the smaller.
OrientedGraph oriented_reduced_power_graph(const EnumeratedGroup& group);
Graph reduced_power_graph(const GroupSpec& spec, const EnumerationOptions& options = {});

// Edge when one order divides the other; oriented from the smaller order to
// the larger and, among equal orders, from lower to higher index.
OrientedGraph oriented_order_graph(const EnumeratedGroup& group);
Graph order_graph(const GroupSpec& spec, const EnumerationOptions& options = {});

// L_G: one vertex per cyclic subgroup, labeled "C<i>:<order>" with i the
// least element index generating it; edges are strict containments,
// oriented from the larger subgroup to the smaller.
OrientedGraph l_graph(const EnumeratedGroup& group);
OrientedGraph l_graph(const GroupSpec& spec, const EnumerationOptions& options = {});

// Gamma(G) ~ K_1 v N_G[edgeless fibers]. class_sizes[r] is the number of
// elements whose order has radical r.
struct CoprimeDecomposition {
  RadicalGraph radical_graph;
  std::map<std::uint64_t, BigInt> class_sizes;
};

// Throws Unsupported for support-only spectra.
CoprimeDecomposition decompose_coprime(const OrderSpectrum& spectrum);
CoprimeDecomposition decompose_coprime(const GroupSpec& spec, const EnumerationOptions& options = {});

// K_1 v lex_product(N_G, edgeless fibers). The identity vertex is "e" and a
// fiber vertex is "(r,k)" with k counted from 1. Throws OutOfRange when a
// class is too large to materialize.
Graph reconstruct_coprime_graph(const CoprimeDecomposition& decomposition);

// Constructive check of Gamma(G) ~ K_1 v N_G[edgeless fibers]: element x
// maps to "e" or to (radical(o(x)), rank of x within its class), and every
// pair of elements is compared against the reconstructed graph.
struct StructureCheck {
  bool bijective = false;
  bool adjacency_preserved = false;
  std::size_t pairs_checked = 0;

  bool ok() const noexcept { return bijective && adjacency_preserved; }
};

StructureCheck verify_coprime_structure(const EnumeratedGroup& group);

}  // namespace cdg
