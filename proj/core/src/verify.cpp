#include "cdg/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "cdg/classification.hpp"
#include "cdg/errors.hpp"
#include "cdg/group_graphs.hpp"
#include "cdg/recognition.hpp"
#include "parallel.hpp"

namespace cdg {

bool TheoremReport::all_agree() const { return disagreements() == 0; }

std::size_t TheoremReport::disagreements() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const TheoremCase& c) { return !c.agree || !c.certified; }));
}

std::size_t TheoremReport::predicate_true() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const TheoremCase& c) { return c.predicate; }));
}

std::size_t sweep_threads() {
  if (const char* env = std::getenv("COPRIME_DIVISOR_THREADS")) {
    char* end = nullptr;
    const auto v = std::strtoul(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

const std::vector<std::string>& verification_families() {
  static const std::vector<std::string> families = {
      "oracle",      "dihedral",       "dicyclic",       "symmetric", "alternating",
      "three-prime", "four-prime",     "single-composite", "nilpotent", "direct-product",
      "sporadic",    "structure",      "power-graphs",
  };
  return families;
}

const std::vector<std::string>& structure_test_groups() {
  static const std::vector<std::string> groups = {
      "Z 1",  "Z 2",  "Z 7",  "Z 8",  "Z 12", "Z 30", "Z 60", "Z 105",
      "D 6",  "D 8",  "D 12", "D 20", "D 30", "D 60",
      "Q 8",  "Q 12", "Q 24", "Q 60",
      "S 3",  "S 4",  "S 5",  "A 4",  "A 5",
      "DP (Z 2) (Z 2)", "DP (Z 2) (S 3)", "DP (Z 3) (S 3)", "DP (D 6) (D 10)", "DP (Z 2) (A 5)",
      "PERM 4 ; (1 2 3 4) ; (1 3)", "PERM 6 ; (1 2 3) ; (4 5)",
  };
  return groups;
}

const std::vector<std::string>& direct_product_factors() {
  static const std::vector<std::string> factors = {
      "Z 4", "Z 9", "Z 6", "S 3", "D 10", "A 5", "Z 30", "DP (Z 2) (Z 3)",
  };
  return factors;
}

const std::vector<std::pair<std::string, std::string>>& direct_product_examples() {
  // Element orders of L3(2), Sz(8) and G2(3) follow the ATLAS.
  static const std::vector<std::pair<std::string, std::string>> examples = {
      {"S 3", "A 5"},
      {"D 6", "D 10"},
      {"A 5", "D 10"},
      {"S 5", "SPEC L3_2 : 2,3,4,7"},
      {"Z 2", "SPEC Sz8 : 2,4,5,7,13"},
      {"Z 3", "SPEC G2_3 : 2,3,4,6,7,8,9,12,13"},
      {"Z 2", "SPEC M11 : 2,3,4,5,6,8,11"},
  };
  return examples;
}

namespace {

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Graph graph_from_mask(std::size_t n, std::uint32_t mask) {
  GraphBuilder b;
  for (std::size_t i = 1; i <= n; ++i) b.add_vertex("v" + std::to_string(i));
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v, ++bit) {
      if (mask & (1u << bit)) b.add_edge(u, v);
    }
  }
  return b.build();
}

std::uint32_t canonical_mask(std::size_t n, std::uint32_t mask) {
  bool adj[8][8] = {};
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v, ++bit) adj[u][v] = adj[v][u] = (mask >> bit) & 1u;
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = mask;
  do {
    std::uint32_t code = 0;
    bit = 0;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v, ++bit) {
        if (adj[perm[u]][perm[v]]) code |= 1u << bit;
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

TheoremCase make_case(std::string param, bool predicate, std::optional<bool> recognizer, std::string note = {}) {
  TheoremCase c;
  c.param = std::move(param);
  c.predicate = predicate;
  c.recognizer = recognizer;
  c.agree = !recognizer || *recognizer == predicate;
  c.note = std::move(note);
  return c;
}

// Runs the recognizer and checks whatever it emits.
struct Recognized {
  bool is_divisor;
  bool certified;
};

Recognized recognize(const Graph& g) {
  const auto result = find_transitive_orientation(g);
  if (result.orientable()) {
    const auto& o = *result.orientation;
    const bool ok = validate_orientation(g, o) && validate_labeling(g, divisor_labeling_from_orientation(g, o));
    return {true, ok};
  }
  return {false, validate_forcing_cycle(g, result.forcing_cycle)};
}

TheoremCase recognizer_case(std::string param, bool predicate, const Graph& g, std::string note = {}) {
  const auto r = recognize(g);
  auto c = make_case(std::move(param), predicate, r.is_divisor, std::move(note));
  c.certified = r.certified;
  return c;
}

std::string set_string(const std::set<std::uint64_t>& s) {
  std::string out = "{";
  bool first = true;
  for (auto v : s) {
    out += (first ? "" : ",") + std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::size_t threads_for(const VerifyOptions& options) {
  return options.threads ? options.threads : sweep_threads();
}

template <class Make>
std::vector<TheoremCase> sweep(std::size_t count, const VerifyOptions& options, Make&& make) {
  std::vector<TheoremCase> cases(count);
  detail::parallel_for(count, threads_for(options), [&](std::size_t i) { cases[i] = make(i); });
  return cases;
}

TheoremReport oracle_family(const VerifyOptions& options) {
  const auto small = small_graph_corpus(5);
  const auto total = small.size() + options.oracle_cases;
  TheoremReport report{"oracle", {}};
  report.cases = sweep(total, options, [&](std::size_t i) {
    if (i < small.size()) {
      const Graph& g = small[i];
      return recognizer_case("small-" + std::to_string(i) + ":n=" + std::to_string(g.vertex_count()),
                             brute_force_is_divisor(g), g, "exhaustive");
    }
    const auto k = i - small.size();
    const std::size_t n = 6 + k % 3;
    const Graph g = random_graph(n, options.seed, k);
    return recognizer_case("random-" + std::to_string(k) + ":n=" + std::to_string(n), brute_force_is_divisor(g), g,
                           "random");
  });
  return report;
}

TheoremReport dihedral_family(const VerifyOptions& options) {
  const std::uint64_t hi = options.max_n.value_or(300);
  TheoremReport report{"dihedral", {}};
  if (hi < 3) return report;
  report.cases = sweep(hi - 2, options, [&](std::size_t i) {
    const std::uint64_t n = 3 + i;
    const auto rg = radical_graph(order_spectrum(GroupSpec::dihedral(n)));
    return recognizer_case("n=" + std::to_string(n), dihedral_predicate(n), rg.graph);
  });
  return report;
}

TheoremReport dicyclic_family(const VerifyOptions& options) {
  const std::uint64_t hi = options.max_n.value_or(150);
  TheoremReport report{"dicyclic", {}};
  if (hi < 2) return report;
  report.cases = sweep(hi - 1, options, [&](std::size_t i) {
    const std::uint64_t t = 2 + i;
    const auto rg = radical_graph(order_spectrum(GroupSpec::dicyclic(t)));
    return recognizer_case("t=" + std::to_string(t), dicyclic_predicate(t), rg.graph);
  });
  return report;
}

TheoremReport permutation_family(const VerifyOptions& options, Parity parity) {
  const auto hi = static_cast<std::uint32_t>(std::min<std::uint64_t>(options.max_n.value_or(12), GroupSpec::kMaxDegree));
  TheoremReport report{parity == Parity::all ? "symmetric" : "alternating", {}};
  if (hi < 2) return report;
  report.cases = sweep(hi - 1, options, [&](std::size_t i) {
    const auto n = static_cast<std::uint32_t>(2 + i);
    const auto orders = partition_orders(n, parity);
    const bool pred = parity == Parity::all ? symmetric_predicate(n) : alternating_predicate(n);
    return recognizer_case("n=" + std::to_string(n), pred, radical_graph_from_orders(orders).graph,
                           "pi_e=" + set_string(orders));
  });
  return report;
}

TheoremReport three_prime_family(const VerifyOptions& options) {
  const std::vector<std::array<std::uint64_t, 3>> triples = {{2, 3, 5}, {2, 5, 7}, {3, 5, 7}};
  TheoremReport report{"three-prime", {}};
  report.cases = sweep(triples.size() * 9, options, [&](std::size_t i) {
    const auto [p, q, r] = triples[i / 9];
    const auto shape = i % 9;
    std::set<std::uint64_t> orders{p, q, r};
    const std::uint64_t products[3] = {p * q, p * r, q * r};
    if (shape == 8) {
      orders.insert({p * q, p * r, q * r, p * q * r});
    } else {
      for (int b = 0; b < 3; ++b) {
        if (shape & (1u << b)) orders.insert(products[b]);
      }
    }
    return recognizer_case(set_string(orders), three_prime_predicate(orders),
                           radical_graph_from_orders(orders).graph);
  });
  return report;
}

TheoremReport four_prime_family(const VerifyOptions& options) {
  const std::uint64_t p = 2, q = 3, r = 5, s = 7;
  const std::uint64_t composites[6] = {p * q, p * r, p * s, q * r, q * s, r * s};
  TheoremReport report{"four-prime", {}};
  report.cases = sweep(64, options, [&](std::size_t mask) {
    std::set<std::uint64_t> orders{p, q, r, s};
    for (int b = 0; b < 6; ++b) {
      if (mask & (1u << b)) orders.insert(composites[b]);
    }
    const bool pred = four_prime_predicate(orders);
    auto c = recognizer_case(set_string(orders), pred, radical_graph_from_orders(orders).graph);
    if (linear_forest_predicate(orders) != pred) {
      c.agree = false;
      c.note = "linear-forest restatement disagrees";
    }
    return c;
  });
  return report;
}

TheoremReport single_composite_family(const VerifyOptions& options) {
  std::vector<std::set<std::uint64_t>> shapes;
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto primes = first_primes(n);
    for (std::size_t l = 0; l < n; ++l) {
      for (std::size_t t = l + 1; t < n; ++t) {
        std::set<std::uint64_t> orders(primes.begin(), primes.end());
        orders.insert(primes[l] * primes[t]);
        shapes.push_back(std::move(orders));
      }
    }
  }
  TheoremReport report{"single-composite", {}};
  report.cases = sweep(shapes.size(), options, [&](std::size_t i) {
    return recognizer_case(set_string(shapes[i]), single_composite_predicate(shapes[i]),
                           radical_graph_from_orders(shapes[i]).graph);
  });
  return report;
}

TheoremReport nilpotent_family(const VerifyOptions& options) {
  const std::vector<std::uint64_t> factors = {2, 4, 3, 9, 5, 25, 7, 49};
  std::vector<std::vector<std::uint64_t>> combos;
  const auto m = factors.size();
  for (std::size_t a = 0; a < m; ++a) {
    combos.push_back({factors[a]});
    for (std::size_t b = a; b < m; ++b) {
      combos.push_back({factors[a], factors[b]});
      for (std::size_t c = b; c < m; ++c) combos.push_back({factors[a], factors[b], factors[c]});
    }
  }
  TheoremReport report{"nilpotent", {}};
  report.cases = sweep(combos.size(), options, [&](std::size_t i) {
    const auto& combo = combos[i];
    GroupSpec spec = GroupSpec::cyclic(combo[0]);
    std::set<std::uint64_t> primes;
    for (std::size_t k = 0; k < combo.size(); ++k) {
      if (k > 0) spec = GroupSpec::direct_product(std::move(spec), GroupSpec::cyclic(combo[k]));
      for (auto p : prime_factors(combo[k])) primes.insert(p);
    }
    return recognizer_case(to_string(spec), primes.size() <= 2, radical_graph(order_spectrum(spec)).graph);
  });
  return report;
}

TheoremReport direct_product_family(const VerifyOptions& options) {
  const auto& names = direct_product_factors();
  struct Pair {
    std::string left, right;
    bool example;
  };
  std::vector<Pair> pairs;
  for (const auto& h : names) {
    for (const auto& k : names) pairs.push_back({h, k, false});
  }
  for (const auto& [h, k] : direct_product_examples()) pairs.push_back({h, k, true});

  TheoremReport report{"direct-product", {}};
  report.cases = sweep(pairs.size(), options, [&](std::size_t i) {
    const auto h = parse_group_spec(pairs[i].left);
    const auto k = parse_group_spec(pairs[i].right);
    const auto sh = order_spectrum(h);
    const auto sk = order_spectrum(k);
    const auto product = order_spectrum(GroupSpec::direct_product(h, k));
    const bool pred = direct_product_predicate(sh.pi_e(), sk.pi_e());
    auto c = recognizer_case("(" + pairs[i].left + ") x (" + pairs[i].right + ")", pred,
                             radical_graph(product).graph, pairs[i].example ? "example" : "");
    if (pairs[i].example && pred) {
      c.agree = false;
      c.note = "example expected to be a non-divisor graph";
    }
    return c;
  });
  return report;
}

TheoremReport sporadic_family(const VerifyOptions& options) {
  const auto& table = sporadic_table();
  TheoremReport report{"sporadic", {}};
  report.cases = sweep(table.size(), options, [&](std::size_t i) {
    const auto& rec = table[i];
    const std::string note = to_string(rec.provenance) + ": " + rec.note;
    if (rec.pi_e.empty()) return make_case(rec.name, rec.verdict, std::nullopt, note);
    return recognizer_case(rec.name, rec.verdict, radical_graph_from_orders(rec.pi_e).graph, note);
  });
  return report;
}

TheoremReport structure_family(const VerifyOptions& options) {
  const auto& groups = structure_test_groups();
  TheoremReport report{"structure", {}};
  report.cases = sweep(groups.size(), options, [&](std::size_t i) {
    const auto group = enumerate_elements(parse_group_spec(groups[i]));
    const auto check = verify_coprime_structure(group);
    return make_case(groups[i], true, check.ok(),
                     "|G|=" + std::to_string(group.size()) + " pairs=" + std::to_string(check.pairs_checked));
  });
  return report;
}

TheoremReport power_graph_family(const VerifyOptions& options) {
  const auto& groups = structure_test_groups();
  static const char* kinds[3] = {"power", "reduced-power", "order"};
  TheoremReport report{"power-graphs", {}};
  report.cases = sweep(groups.size() * 3, options, [&](std::size_t i) {
    const auto group = enumerate_elements(parse_group_spec(groups[i / 3]));
    const auto kind = i % 3;
    const OrientedGraph og = kind == 0   ? oriented_power_graph(group)
                             : kind == 1 ? oriented_reduced_power_graph(group)
                                         : oriented_order_graph(group);
    const bool canonical_ok = validate_orientation(og.graph, og.orientation);
    auto c = recognizer_case(std::string(kinds[kind]) + " " + groups[i / 3], true, og.graph,
                             "edges=" + std::to_string(og.graph.edge_count()));
    if (!canonical_ok) {
      c.certified = false;
      c.note += " canonical orientation not transitive";
    }
    return c;
  });
  return report;
}

}  // namespace

std::vector<Graph> small_graph_corpus(std::size_t max_vertices) {
  if (max_vertices > 6) throw OutOfRange("small graph corpus is limited to 6 vertices");
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    std::set<std::uint32_t> seen;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      const auto canon = canonical_mask(n, mask);
      if (seen.insert(canon).second) out.push_back(graph_from_mask(n, canon));
    }
  }
  return out;
}

Graph random_graph(std::size_t n, std::uint64_t seed, std::uint64_t case_index) {
  std::uint64_t state = seed * 0x100000001b3ULL ^ (case_index + 1) * 0x9e3779b97f4a7c15ULL;
  const auto density = 15 + splitmix(state) % 71;  // percent
  GraphBuilder b;
  for (std::size_t i = 1; i <= n; ++i) b.add_vertex("v" + std::to_string(i));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (splitmix(state) % 100 < density) b.add_edge(u, v);
    }
  }
  return b.build();
}

TheoremReport verify_family(std::string_view family, const VerifyOptions& options) {
  if (family == "oracle") return oracle_family(options);
  if (family == "dihedral") return dihedral_family(options);
  if (family == "dicyclic") return dicyclic_family(options);
  if (family == "symmetric") return permutation_family(options, Parity::all);
  if (family == "alternating") return permutation_family(options, Parity::even);
  if (family == "three-prime") return three_prime_family(options);
  if (family == "four-prime") return four_prime_family(options);
  if (family == "single-composite") return single_composite_family(options);
  if (family == "nilpotent") return nilpotent_family(options);
  if (family == "direct-product") return direct_product_family(options);
  if (family == "sporadic") return sporadic_family(options);
  if (family == "structure") return structure_family(options);
  if (family == "power-graphs") return power_graph_family(options);
  throw OutOfRange("unknown family '" + std::string(family) + "'");
}

std::vector<TheoremReport> verify_paper(const VerifyOptions& options) {
  const auto& names = options.families.empty() ? verification_families() : options.families;
  std::vector<TheoremReport> reports;
  for (const auto& f : names) reports.push_back(verify_family(f, options));
  return reports;
}

Json report_json(const TheoremReport& report) {
  Json cases = Json::array();
  for (const auto& c : report.cases) {
    Json j{{"param", c.param}, {"predicate", c.predicate}};
    j["recognizer"] = c.recognizer ? Json(*c.recognizer) : Json(nullptr);
    j["agree"] = c.agree;
    j["certified"] = c.certified;
    if (!c.note.empty()) j["note"] = c.note;
    cases.push_back(std::move(j));
  }
  return Json{{"family", report.family}, {"cases", cases}, {"all_agree", report.all_agree()}};
}

std::string summary_table(const std::vector<TheoremReport>& reports) {
  std::ostringstream os;
  os << std::left << std::setw(18) << "family" << std::right << std::setw(8) << "cases" << std::setw(8) << "true"
     << std::setw(8) << "false" << std::setw(10) << "unchecked" << std::setw(10) << "disagree" << "  status\n";
  for (const auto& r : reports) {
    const auto unchecked = std::count_if(r.cases.begin(), r.cases.end(), [](const auto& c) { return !c.recognizer; });
    os << std::left << std::setw(18) << r.family << std::right << std::setw(8) << r.cases.size() << std::setw(8)
       << r.predicate_true() << std::setw(8) << r.cases.size() - r.predicate_true() << std::setw(10) << unchecked
       << std::setw(10) << r.disagreements() << "  " << (r.all_agree() ? "ok" : "FAIL") << '\n';
  }
  return os.str();
}

}  // namespace cdg
