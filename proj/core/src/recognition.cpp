#include "cdg/recognition.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "cdg/errors.hpp"

namespace cdg {

std::string to_string(Obstruction::Kind kind) {
  switch (kind) {
    case Obstruction::Kind::forcing_cycle: return "forcing-cycle";
    case Obstruction::Kind::forbidden_configuration: return "forbidden-configuration";
    case Obstruction::Kind::transitivity_triple: return "transitivity-triple";
    case Obstruction::Kind::exhausted_search: return "exhausted-search";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Edge ids addressable from either endpoint.
class EdgeIndex {
public:
  explicit EdgeIndex(const Graph& g) : g_(g), ids_(g.vertex_count()) {
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      auto [u, v] = g.edges()[e];
      ids_[u].push_back(e);
      ids_[v].push_back(e);
    }
    // ids_[u] was filled in edge order; re-sort to match neighbor order.
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
      std::sort(ids_[u].begin(), ids_[u].end(), [&](std::size_t a, std::size_t b) {
        return other(a, u) < other(b, u);
      });
    }
  }

  std::size_t other(std::size_t e, std::size_t u) const {
    auto [a, b] = g_.edges()[e];
    return a == u ? b : a;
  }

  // Edge id of {u, v}, or kNone.
  std::size_t id(std::size_t u, std::size_t v) const {
    const auto& nb = g_.neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) return kNone;
    return ids_[u][static_cast<std::size_t>(it - nb.begin())];
  }

  // Edge ids incident to u, in neighbor order.
  const std::vector<std::size_t>& incident(std::size_t u) const { return ids_[u]; }

private:
  const Graph& g_;
  std::vector<std::vector<std::size_t>> ids_;
};

// Arc encoded as 2*edge + (tail is the larger endpoint).
using ArcCode = std::size_t;

struct ForcingState {
  const Graph& g;
  EdgeIndex index;
  std::vector<bool> remaining;        // edge still in the current subgraph
  std::vector<std::size_t> klass;     // implication class, kNone = undecided
  std::vector<ArcCode> chosen;        // arc chosen for the edge
  std::vector<ArcCode> parent;        // forcing predecessor of the chosen arc
  std::vector<std::size_t> members;   // edges of the class being closed

  explicit ForcingState(const Graph& graph)
      : g(graph),
        index(graph),
        remaining(graph.edge_count(), true),
        klass(graph.edge_count(), kNone),
        chosen(graph.edge_count(), kNone),
        parent(graph.edge_count(), kNone) {}

  ArcCode encode(std::size_t tail, std::size_t head) const {
    const auto e = index.id(tail, head);
    return 2 * e + (tail > head ? 1 : 0);
  }

  Arc decode(ArcCode a) const {
    auto [u, v] = g.edges()[a / 2];
    return (a % 2) ? Arc{v, u} : Arc{u, v};
  }

  bool live_edge(std::size_t u, std::size_t v) const {
    const auto e = index.id(u, v);
    return e != kNone && remaining[e];
  }

  // Forcing chain from the class seed to the chosen arc of edge e.
  std::vector<ArcCode> path_to(std::size_t e) const {
    std::vector<ArcCode> path;
    for (ArcCode a = chosen[e]; a != kNone; a = parent[a / 2]) path.push_back(a);
    std::reverse(path.begin(), path.end());
    return path;
  }
};

struct Conflict {
  ArcCode from;    // arc whose expansion forced `forced`
  ArcCode forced;  // reverse of an arc already in the class
};

// Closes the implication class seeded at `seed` (arc code) inside the live
// subgraph. Returns the first conflict, if any.
std::optional<Conflict> close_class(ForcingState& s, ArcCode seed, std::size_t cls) {
  std::deque<ArcCode> queue;
  s.members.assign(1, seed / 2);
  s.klass[seed / 2] = cls;
  s.chosen[seed / 2] = seed;
  s.parent[seed / 2] = kNone;
  queue.push_back(seed);

  auto force = [&](ArcCode from, std::size_t tail, std::size_t head) -> std::optional<Conflict> {
    const ArcCode a = s.encode(tail, head);
    const auto e = a / 2;
    if (s.klass[e] == kNone) {
      s.klass[e] = cls;
      s.chosen[e] = a;
      s.parent[e] = from;
      s.members.push_back(e);
      queue.push_back(a);
      return std::nullopt;
    }
    if (s.chosen[e] != a) return Conflict{from, a};
    return std::nullopt;
  };

  while (!queue.empty()) {
    const ArcCode arc = queue.front();
    queue.pop_front();
    const auto [a, b] = s.decode(arc);
    // (a,b) forces (a,c) when {b,c} is not a live edge.
    for (auto e : s.index.incident(a)) {
      if (!s.remaining[e]) continue;
      const auto c = s.index.other(e, a);
      if (c == b || s.live_edge(b, c)) continue;
      if (auto conflict = force(arc, a, c)) return conflict;
    }
    // (a,b) forces (c,b) when {a,c} is not a live edge.
    for (auto e : s.index.incident(b)) {
      if (!s.remaining[e]) continue;
      const auto c = s.index.other(e, b);
      if (c == a || s.live_edge(a, c)) continue;
      if (auto conflict = force(arc, c, b)) return conflict;
    }
  }
  return std::nullopt;
}

std::vector<Arc> conflict_cycle(const ForcingState& s, const Conflict& c) {
  // P1: seed .. from, forced.   P2: seed .. reverse(forced).
  auto p1 = s.path_to(c.from / 2);
  p1.push_back(c.forced);
  auto p2 = s.path_to(c.forced / 2);
  std::vector<Arc> cycle;
  for (auto a : p2) cycle.push_back(s.decode(a));
  // p2 ends at reverse(forced); continue with the reversed P1 walked backwards.
  for (std::size_t i = p1.size() - 1; i-- > 0;) {
    const auto [u, v] = s.decode(p1[i]);
    cycle.push_back({v, u});
  }
  return cycle;
}

// Implication classes of g itself (no retirement), searched for a class
// containing both directions of some edge.
std::vector<Arc> original_forcing_cycle(const Graph& g) {
  ForcingState s(g);
  std::size_t cls = 0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (s.klass[e] != kNone) continue;
    if (auto conflict = close_class(s, 2 * e, cls++)) return conflict_cycle(s, *conflict);
  }
  return {};
}

std::optional<std::vector<std::size_t>> transitivity_violation(const Graph& g, const Orientation& o) {
  std::vector<std::vector<std::size_t>> out(g.vertex_count()), in(g.vertex_count());
  for (auto [u, v] : o.arcs()) {
    out[u].push_back(v);
    in[v].push_back(u);
  }
  for (std::size_t y = 0; y < g.vertex_count(); ++y) {
    for (auto x : in[y]) {
      for (auto z : out[y]) {
        if (!o.contains({x, z})) return std::vector<std::size_t>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

OrientationResult find_transitive_orientation(const Graph& g) {
  OrientationResult result;
  ForcingState s(g);
  std::size_t cls = 0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (s.klass[e] != kNone) continue;
    if (close_class(s, 2 * e, cls)) {
      // Any conflict in the decomposition implies one among the implication
      // classes of g itself; report that one so the witness refers to g only.
      result.forcing_cycle = original_forcing_cycle(g);
      return result;
    }
    for (auto f : s.members) s.remaining[f] = false;
    ++cls;
  }
  std::vector<Arc> arcs;
  arcs.reserve(g.edge_count());
  for (std::size_t f = 0; f < g.edge_count(); ++f) arcs.push_back(s.decode(s.chosen[f]));
  Orientation o(std::move(arcs));
  if (auto triple = transitivity_violation(g, o)) {
    result.failed_triple = std::move(triple);
    return result;
  }
  result.orientation = std::move(o);
  return result;
}

bool forces(const Graph& g, Arc a, Arc b) {
  if (a == b) return false;
  if (a.first == b.first) return a.second != b.second && !g.adjacent(a.second, b.second);
  if (a.second == b.second) return a.first != b.first && !g.adjacent(a.first, b.first);
  return false;
}

bool validate_forcing_cycle(const Graph& g, const std::vector<Arc>& chain) {
  if (chain.size() < 2) return false;
  for (auto [u, v] : chain) {
    if (u >= g.vertex_count() || v >= g.vertex_count() || !g.adjacent(u, v)) return false;
  }
  if (chain.back() != Arc{chain.front().second, chain.front().first}) return false;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!forces(g, chain[i], chain[i + 1])) return false;
  }
  return true;
}

std::optional<Orientation> brute_force_orientation(const Graph& g) {
  const auto n = g.vertex_count();
  if (n > kBruteForceVertexCap) {
    throw OutOfRange("brute-force oracle is limited to " + std::to_string(kBruteForceVertexCap) + " vertices");
  }
  std::vector<std::uint32_t> nbr(n, 0);
  for (auto [u, v] : g.edges()) {
    nbr[u] |= 1u << v;
    nbr[v] |= 1u << u;
  }
  std::vector<std::size_t> order;
  std::vector<std::uint32_t> before(n, 0);  // neighbors placed earlier
  std::uint32_t placed = 0;

  // Placing v last closes every triple (x, u, v) with x before u before v:
  // the orientation stays transitive iff each earlier neighbor u of v has
  // all its own earlier neighbors adjacent to v.
  std::function<bool()> extend = [&]() {
    if (order.size() == n) return true;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed & (1u << v)) continue;
      const std::uint32_t earlier = nbr[v] & placed;
      bool ok = true;
      for (std::uint32_t rest = earlier; rest && ok; rest &= rest - 1) {
        const auto u = static_cast<std::size_t>(__builtin_ctz(rest));
        ok = (before[u] & ~nbr[v]) == 0;
      }
      if (!ok) continue;
      before[v] = earlier;
      placed |= 1u << v;
      order.push_back(v);
      if (extend()) return true;
      order.pop_back();
      placed &= ~(1u << v);
    }
    return false;
  };
  if (!extend()) return std::nullopt;

  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<Arc> arcs;
  for (auto [u, v] : g.edges()) arcs.push_back(position[u] < position[v] ? Arc{u, v} : Arc{v, u});
  return Orientation(std::move(arcs));
}

bool brute_force_is_divisor(const Graph& g) { return brute_force_orientation(g).has_value(); }

DivisorLabeling divisor_labeling_from_orientation(const Graph& g, const Orientation& o) {
  if (!validate_orientation(g, o)) throw GraphError("orientation is not transitive");
  const auto primes = first_primes(g.vertex_count());
  DivisorLabeling lab;
  lab.labels.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) lab.labels.emplace_back(primes[v]);
  for (auto [u, v] : o.arcs()) lab.labels[v] *= primes[u];
  return lab;
}

bool validate_labeling(const Graph& g, const DivisorLabeling& labeling) {
  if (labeling.labels.size() != g.vertex_count()) {
    throw GraphError("labeling covers " + std::to_string(labeling.labels.size()) + " of " +
                     std::to_string(g.vertex_count()) + " vertices");
  }
  for (const auto& l : labeling.labels) {
    if (l <= 0) return false;
  }
  auto sorted = labeling.labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (std::size_t v = u + 1; v < g.vertex_count(); ++v) {
      const auto& a = labeling.labels[u];
      const auto& b = labeling.labels[v];
      const bool divides = (b % a == 0) || (a % b == 0);
      if (divides != g.adjacent(u, v)) return false;
    }
  }
  return true;
}

namespace {

Verdict positive(const Graph& g, Orientation o, std::string method) {
  Verdict v;
  v.is_divisor = true;
  v.method = std::move(method);
  auto labeling = divisor_labeling_from_orientation(g, o);
  v.certificate = Certificate{std::move(o), std::move(labeling)};
  return v;
}

std::vector<std::pair<std::string, std::string>> label_arcs(const Graph& g, const std::vector<Arc>& arcs) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [u, v] : arcs) out.emplace_back(g.label(u), g.label(v));
  return out;
}

}  // namespace

Verdict is_divisor_graph(const Graph& g) {
  auto result = find_transitive_orientation(g);
  if (result.orientable()) return positive(g, std::move(*result.orientation), "forcing");

  Verdict v;
  v.method = "forcing";
  Obstruction ob;
  if (!result.forcing_cycle.empty()) {
    ob.kind = Obstruction::Kind::forcing_cycle;
    const auto [u, w] = result.forcing_cycle.front();
    ob.description = "orienting " + g.label(u) + "->" + g.label(w) + " forces " + g.label(w) + "->" +
                     g.label(u) + " through " + std::to_string(result.forcing_cycle.size() - 1) +
                     " forcing steps";
    ob.arcs = label_arcs(g, result.forcing_cycle);
  } else {
    ob.kind = Obstruction::Kind::transitivity_triple;
    const auto& t = *result.failed_triple;
    ob.description = "directed path " + g.label(t[0]) + "->" + g.label(t[1]) + "->" + g.label(t[2]) +
                     " without the closing edge";
    for (auto x : t) ob.vertices.push_back(g.label(x));
  }
  v.obstruction = std::move(ob);
  return v;
}

Verdict is_divisor_graph_brute_force(const Graph& g) {
  if (auto o = brute_force_orientation(g)) return positive(g, std::move(*o), "brute-force");
  Verdict v;
  v.method = "brute-force";
  Obstruction ob;
  ob.kind = Obstruction::Kind::exhausted_search;
  ob.description = "no ordering of the " + std::to_string(g.vertex_count()) +
                   " vertices yields a transitive orientation";
  ob.vertices = g.labels();
  v.obstruction = std::move(ob);
  return v;
}

Graph net_graph_fixture() {
  GraphBuilder b;
  for (const char* l : {"a", "b", "c", "x", "y", "z"}) b.add_vertex(l);
  b.add_edge("a", "b");
  b.add_edge("a", "c");
  b.add_edge("b", "c");
  b.add_edge("c", "x");
  b.add_edge("b", "y");
  b.add_edge("a", "z");
  return b.build();
}

}  // namespace cdg
