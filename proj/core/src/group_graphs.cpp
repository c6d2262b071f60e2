#include "cdg/group_graphs.hpp"

#include <algorithm>
#include <numeric>

#include "cdg/errors.hpp"

namespace cdg {

std::string element_label(std::size_t index, std::uint64_t order) {
  return std::to_string(index) + ":" + std::to_string(order);
}

namespace {

GraphBuilder element_vertices(const EnumeratedGroup& group) {
  GraphBuilder b;
  for (std::size_t i = 0; i < group.size(); ++i) b.add_vertex(element_label(i, group.order(i)));
  return b;
}

// Membership table for cyclic subgroups: contains[x] is a bitmap of <x>.
struct CyclicSubgroups {
  explicit CyclicSubgroups(const EnumeratedGroup& group) : n(group.size()), bits(n * n, false) {
    for (std::size_t x = 0; x < n; ++x) {
      for (auto y : group.cyclic_subgroup(x)) bits[x * n + y] = true;
    }
  }
  bool contains(std::size_t outer, std::size_t inner) const { return bits[outer * n + inner]; }
  bool same(std::size_t x, std::size_t y) const { return contains(x, y) && contains(y, x); }

  std::size_t n;
  std::vector<bool> bits;
};

std::vector<std::uint64_t> sorted_radicals(const std::set<std::uint64_t>& orders) {
  std::set<std::uint64_t> rads;
  for (auto m : orders) {
    if (m > 1) rads.insert(radical(m));
  }
  std::vector<std::uint64_t> out(rads.begin(), rads.end());
  std::stable_sort(out.begin(), out.end(),
                   [](std::uint64_t a, std::uint64_t b) { return omega(a) < omega(b); });
  return out;
}

}  // namespace

Graph coprime_graph(const EnumeratedGroup& group) {
  auto b = element_vertices(group);
  for (std::size_t x = 0; x < group.size(); ++x) {
    for (std::size_t y = x + 1; y < group.size(); ++y) {
      if (std::gcd(group.order(x), group.order(y)) == 1) b.add_edge(x, y);
    }
  }
  return b.build();
}

Graph coprime_graph(const GroupSpec& spec, const EnumerationOptions& options) {
  return coprime_graph(enumerate_elements(spec, options));
}

RadicalGraph radical_graph_from_orders(const std::set<std::uint64_t>& orders) {
  RadicalGraph rg;
  rg.radicals = sorted_radicals(orders);
  GraphBuilder b;
  for (auto r : rg.radicals) b.add_vertex(std::to_string(r));
  for (std::size_t i = 0; i < rg.radicals.size(); ++i) {
    for (std::size_t j = i + 1; j < rg.radicals.size(); ++j) {
      if (std::gcd(rg.radicals[i], rg.radicals[j]) == 1) b.add_edge(i, j);
    }
  }
  rg.graph = b.build();
  return rg;
}

RadicalGraph radical_graph(const OrderSpectrum& spectrum) { return radical_graph_from_orders(spectrum.pi_e()); }

OrientedGraph oriented_power_graph(const EnumeratedGroup& group) {
  const CyclicSubgroups cyc(group);
  auto b = element_vertices(group);
  std::vector<Arc> arcs;
  for (std::size_t x = 0; x < group.size(); ++x) {
    for (std::size_t y = x + 1; y < group.size(); ++y) {
      const bool x_in_y = cyc.contains(y, x);
      const bool y_in_x = cyc.contains(x, y);
      if (!x_in_y && !y_in_x) continue;
      b.add_edge(x, y);
      if (x_in_y && y_in_x) {
        arcs.push_back({x, y});
      } else if (x_in_y) {
        arcs.push_back({y, x});
      } else {
        arcs.push_back({x, y});
      }
    }
  }
  return {b.build(), Orientation(std::move(arcs))};
}

Graph power_graph(const GroupSpec& spec, const EnumerationOptions& options) {
  return oriented_power_graph(enumerate_elements(spec, options)).graph;
}

OrientedGraph oriented_reduced_power_graph(const EnumeratedGroup& group) {
  const CyclicSubgroups cyc(group);
  auto b = element_vertices(group);
  std::vector<Arc> arcs;
  for (std::size_t x = 0; x < group.size(); ++x) {
    for (std::size_t y = x + 1; y < group.size(); ++y) {
      if (cyc.same(x, y)) continue;
      if (cyc.contains(y, x)) {
        b.add_edge(x, y);
        arcs.push_back({y, x});
      } else if (cyc.contains(x, y)) {
        b.add_edge(x, y);
        arcs.push_back({x, y});
      }
    }
  }
  return {b.build(), Orientation(std::move(arcs))};
}

Graph reduced_power_graph(const GroupSpec& spec, const EnumerationOptions& options) {
  return oriented_reduced_power_graph(enumerate_elements(spec, options)).graph;
}

OrientedGraph oriented_order_graph(const EnumeratedGroup& group) {
  auto b = element_vertices(group);
  std::vector<Arc> arcs;
  for (std::size_t x = 0; x < group.size(); ++x) {
    for (std::size_t y = x + 1; y < group.size(); ++y) {
      const auto ox = group.order(x);
      const auto oy = group.order(y);
      if (oy % ox == 0) {
        b.add_edge(x, y);
        arcs.push_back({x, y});  // also covers ox == oy: lower index first
      } else if (ox % oy == 0) {
        b.add_edge(x, y);
        arcs.push_back({y, x});
      }
    }
  }
  return {b.build(), Orientation(std::move(arcs))};
}

Graph order_graph(const GroupSpec& spec, const EnumerationOptions& options) {
  return oriented_order_graph(enumerate_elements(spec, options)).graph;
}

OrientedGraph l_graph(const EnumeratedGroup& group) {
  const CyclicSubgroups cyc(group);
  // Representative: least index generating each cyclic subgroup.
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < group.size(); ++x) {
    const bool seen = std::any_of(reps.begin(), reps.end(), [&](std::size_t r) { return cyc.same(r, x); });
    if (!seen) reps.push_back(x);
  }
  GraphBuilder b;
  for (auto r : reps) b.add_vertex("C" + std::to_string(r) + ":" + std::to_string(group.order(r)));
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      if (cyc.contains(reps[j], reps[i])) {
        b.add_edge(i, j);
        arcs.push_back({j, i});
      } else if (cyc.contains(reps[i], reps[j])) {
        b.add_edge(i, j);
        arcs.push_back({i, j});
      }
    }
  }
  return {b.build(), Orientation(std::move(arcs))};
}

OrientedGraph l_graph(const GroupSpec& spec, const EnumerationOptions& options) {
  return l_graph(enumerate_elements(spec, options));
}

CoprimeDecomposition decompose_coprime(const OrderSpectrum& spectrum) {
  CoprimeDecomposition d;
  d.radical_graph = radical_graph(spectrum);
  for (const auto& [order, count] : spectrum.counts()) {
    if (order > 1) d.class_sizes[radical(order)] += count;
  }
  return d;
}

CoprimeDecomposition decompose_coprime(const GroupSpec& spec, const EnumerationOptions& options) {
  return decompose_coprime(order_spectrum(spec, options));
}

Graph reconstruct_coprime_graph(const CoprimeDecomposition& decomposition) {
  const auto& n = decomposition.radical_graph;
  std::map<std::string, Graph> fibers;
  for (auto r : n.radicals) {
    const BigInt& size = decomposition.class_sizes.at(r);
    if (size > 100'000) throw OutOfRange("class of radical " + std::to_string(r) + " is too large to build");
    fibers.emplace(std::to_string(r), edgeless_graph(static_cast<std::size_t>(size)));
  }
  GraphBuilder center;
  center.add_vertex("e");
  return graph_join(center.build(), lex_product(n.graph, fibers));
}

StructureCheck verify_coprime_structure(const EnumeratedGroup& group) {
  StructureCheck check;
  const auto decomposition = decompose_coprime([&] {
    std::map<std::uint64_t, BigInt> counts;
    for (auto o : group.orders()) counts[o] += 1;
    return OrderSpectrum::from_counts(std::move(counts));
  }());
  const Graph target = reconstruct_coprime_graph(decomposition);
  const Graph gamma = coprime_graph(group);

  // Constructive map, no search.
  std::map<std::uint64_t, std::size_t> next_rank;
  std::vector<std::size_t> image(group.size());
  std::vector<bool> hit(target.vertex_count(), false);
  check.bijective = group.size() == target.vertex_count();
  for (std::size_t x = 0; x < group.size(); ++x) {
    std::string label = "e";
    if (group.order(x) != 1) {
      const auto r = radical(group.order(x));
      label = product_label(std::to_string(r), std::to_string(++next_rank[r]));
    }
    auto v = target.find(label);
    if (!v || hit[*v]) {
      check.bijective = false;
      return check;
    }
    hit[*v] = true;
    image[x] = *v;
  }
  check.adjacency_preserved = true;
  for (std::size_t x = 0; x < group.size(); ++x) {
    for (std::size_t y = x + 1; y < group.size(); ++y) {
      ++check.pairs_checked;
      if (gamma.adjacent(x, y) != target.adjacent(image[x], image[y])) check.adjacency_preserved = false;
    }
  }
  return check;
}

}  // namespace cdg
