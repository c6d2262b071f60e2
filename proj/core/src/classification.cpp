#include "cdg/classification.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

#include "cdg/errors.hpp"

namespace cdg {

namespace {

std::set<std::uint64_t> radicals_of(const std::set<std::uint64_t>& orders) {
  std::set<std::uint64_t> out;
  for (auto m : orders) {
    if (m > 1) out.insert(radical(m));
  }
  return out;
}

std::set<std::uint64_t> composites_of(const std::set<std::uint64_t>& radicals) {
  std::set<std::uint64_t> out;
  for (auto r : radicals) {
    if (omega(r) >= 2) out.insert(r);
  }
  return out;
}

bool has(const std::set<std::uint64_t>& s, std::uint64_t v) { return s.count(v) != 0; }

std::vector<std::uint64_t> join_radicals(std::initializer_list<std::uint64_t> list) { return list; }

}  // namespace

std::string to_string(ObstructionWitness::Kind kind) {
  switch (kind) {
    case ObstructionWitness::Kind::three_prime_order: return "three-prime-order";
    case ObstructionWitness::Kind::net: return "net";
    case ObstructionWitness::Kind::four_cycle: return "four-cycle";
    case ObstructionWitness::Kind::four_star: return "four-star";
  }
  return "unknown";
}

std::string ObstructionWitness::describe() const {
  auto list = [](const std::vector<std::uint64_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
  };
  switch (kind) {
    case Kind::three_prime_order:
      return "element order with radical " + std::to_string(radicals.front()) + " has three distinct prime factors " +
             list(primes);
    case Kind::net:
      return "radicals " + list(radicals) + " induce the net graph";
    case Kind::four_cycle:
      return "radicals " + list(radicals) + " contain the four-cycle pattern pq,pr,rs,qs";
    case Kind::four_star:
      return "radicals " + list(radicals) + " contain the star pattern pq,pr,ps";
  }
  return "";
}

std::optional<ObstructionWitness> obstruction_scan(const std::set<std::uint64_t>& orders) {
  const auto rads = radicals_of(orders);
  for (auto r : rads) {
    auto ps = prime_factors(r);
    if (ps.size() >= 3) {
      return ObstructionWitness{ObstructionWitness::Kind::three_prime_order, ps, {r}};
    }
  }
  const auto prime_set_of = primes_of(rads);
  const std::vector<std::uint64_t> primes(prime_set_of.begin(), prime_set_of.end());
  const auto n = primes.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto p = primes[i], q = primes[j], r = primes[k];
        if (has(rads, p * q) && has(rads, p * r) && has(rads, q * r)) {
          return ObstructionWitness{ObstructionWitness::Kind::net, {p, q, r},
                                    join_radicals({p, q, r, p * q, p * r, q * r})};
        }
      }
    }
  }
  // Four-prime patterns: for each 4-subset try every assignment of roles.
  std::optional<ObstructionWitness> star;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        for (std::size_t d = c + 1; d < n; ++d) {
          std::array<std::uint64_t, 4> q4{primes[a], primes[b], primes[c], primes[d]};
          std::array<std::uint64_t, 4> perm = q4;
          do {
            const auto p = perm[0], q = perm[1], r = perm[2], s = perm[3];
            if (has(rads, p * q) && has(rads, p * r) && has(rads, r * s) && has(rads, q * s)) {
              return ObstructionWitness{ObstructionWitness::Kind::four_cycle, {p, q, r, s},
                                        join_radicals({p, q, r, s, p * q, p * r, r * s, q * s})};
            }
            if (!star && has(rads, p * q) && has(rads, p * r) && has(rads, p * s)) {
              star = ObstructionWitness{ObstructionWitness::Kind::four_star, {p, q, r, s},
                                        join_radicals({p, q, r, s, p * q, p * r, p * s})};
            }
          } while (std::next_permutation(perm.begin(), perm.end()));
        }
      }
    }
  }
  return star;
}

bool two_prime_predicate(const std::set<std::uint64_t>& primes) {
  if (primes.size() > 2) throw OutOfRange("two-prime predicate needs at most two primes");
  return true;
}

bool three_prime_predicate(const std::set<std::uint64_t>& orders) {
  const auto rads = radicals_of(orders);
  const auto pi = primes_of(rads);
  if (pi.size() != 3) throw OutOfRange("three-prime predicate needs exactly three primes");
  const std::vector<std::uint64_t> ps(pi.begin(), pi.end());
  const auto p = ps[0], q = ps[1], r = ps[2];
  if (has(rads, p * q * r)) return false;
  return !(has(rads, p * q) && has(rads, p * r) && has(rads, q * r));
}

bool four_prime_predicate(const std::set<std::uint64_t>& orders) {
  const auto rads = radicals_of(orders);
  const auto pi = primes_of(rads);
  if (pi.size() != 4) throw OutOfRange("four-prime predicate needs exactly four primes");
  for (auto r : rads) {
    if (omega(r) >= 3) return false;
  }
  for (auto p : pi) {
    if (!has(rads, p)) return false;
  }
  const auto composites = composites_of(rads);
  std::array<std::uint64_t, 4> perm{};
  std::copy(pi.begin(), pi.end(), perm.begin());
  do {
    const auto p = perm[0], q = perm[1], r = perm[2], s = perm[3];
    const std::set<std::uint64_t> allowed{p * q, p * r, r * s};
    if (std::includes(allowed.begin(), allowed.end(), composites.begin(), composites.end())) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool linear_forest_predicate(const std::set<std::uint64_t>& orders) {
  const auto rads = radicals_of(orders);
  const auto pi = primes_of(rads);
  if (pi.size() != 4) throw OutOfRange("linear-forest predicate needs exactly four primes");
  for (auto p : pi) {
    if (!has(rads, p)) return false;
  }
  const std::vector<std::uint64_t> ps(pi.begin(), pi.end());
  bool adj[4][4] = {};
  for (auto r : composites_of(rads)) {
    if (omega(r) != 2) return false;
    const auto f = prime_factors(r);
    const auto i = std::find(ps.begin(), ps.end(), f[0]) - ps.begin();
    const auto j = std::find(ps.begin(), ps.end(), f[1]) - ps.begin();
    adj[i][j] = adj[j][i] = true;
  }
  int deg[4] = {};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) deg[i] += adj[i][j];
  }
  for (int i = 0; i < 4; ++i) {
    if (deg[i] >= 3) return false;  // claw
    for (int j = i + 1; j < 4; ++j) {
      for (int k = j + 1; k < 4; ++k) {
        if (adj[i][j] && adj[j][k] && adj[i][k]) return false;  // triangle
      }
    }
  }
  // 4-cycle: with maximum degree 2 it is exactly the 2-regular case.
  return !std::all_of(deg, deg + 4, [](int d) { return d == 2; });
}

bool has_single_composite_shape(const std::set<std::uint64_t>& orders) {
  const auto rads = radicals_of(orders);
  const auto pi = primes_of(rads);
  if (pi.size() < 3) return false;
  for (auto p : pi) {
    if (!has(rads, p)) return false;
  }
  const auto composites = composites_of(rads);
  return composites.size() == 1 && omega(*composites.begin()) == 2;
}

bool single_composite_predicate(const std::set<std::uint64_t>& orders) {
  if (!has_single_composite_shape(orders)) {
    throw OutOfRange("radicals are not n >= 3 primes plus one product of two of them");
  }
  return true;
}

bool dihedral_predicate(std::uint64_t n) {
  if (n < 3) throw OutOfRange("dihedral predicate needs n >= 3");
  return omega(n) <= 2;
}

bool dicyclic_predicate(std::uint64_t t) {
  if (t < 2) throw OutOfRange("dicyclic predicate needs t >= 2");
  return omega(2 * t) <= 2;
}

bool symmetric_predicate(std::uint32_t n) { return n <= 7; }

bool alternating_predicate(std::uint32_t n) { return n <= 8; }

namespace {

// Case (b) with pi(H) = {p}.
bool prime_power_case(const std::set<std::uint64_t>& pi_h, const std::set<std::uint64_t>& pi_e_k) {
  if (pi_h.size() != 1) return false;
  const auto p = *pi_h.begin();
  auto others = primes_of(pi_e_k);
  others.erase(p);
  if (others.size() > 2) return false;
  if (others.size() < 2) return true;  // a fresh prime can play q or r
  const auto q = *others.begin();
  const auto r = *others.rbegin();
  for (auto m : pi_e_k) {
    if (m % (q * r) == 0) return false;
  }
  return true;
}

}  // namespace

bool direct_product_predicate(const std::set<std::uint64_t>& pi_e_h, const std::set<std::uint64_t>& pi_e_k) {
  const auto pi_h = primes_of(pi_e_h);
  const auto pi_k = primes_of(pi_e_k);
  if (pi_h.empty() || pi_k.empty()) throw OutOfRange("direct-product predicate needs non-trivial factors");
  if (pi_h.size() == 2 && pi_h == pi_k) return true;
  return prime_power_case(pi_h, pi_e_k) || prime_power_case(pi_k, pi_e_h);
}

GroupVerdict coprime_is_divisor(const OrderSpectrum& spectrum) {
  GroupVerdict gv;
  gv.pi_e = spectrum.pi_e();
  gv.primes = prime_set(spectrum);
  gv.radical_graph = radical_graph(spectrum);
  gv.witness = obstruction_scan(gv.pi_e);

  bool predicted = false;
  std::string_view method;
  if (gv.pi_e.empty()) {
    predicted = true;
    method = kMethodTrivial;
  } else if (is_cp_group(spectrum)) {
    predicted = true;
    method = kMethodCp;
  } else if (gv.primes.size() <= 2) {
    predicted = two_prime_predicate(gv.primes);
    method = kMethodTwoPrime;
  } else if (gv.primes.size() == 3) {
    predicted = three_prime_predicate(gv.pi_e);
    method = kMethodThreePrime;
  } else if (gv.primes.size() == 4) {
    predicted = four_prime_predicate(gv.pi_e);
    method = kMethodFourPrime;
  } else {
    method = kMethodRecognizer;
  }

  Verdict recognized = is_divisor_graph(gv.radical_graph.graph);
  if (method == kMethodRecognizer) {
    predicted = recognized.is_divisor;
  } else if (predicted != recognized.is_divisor) {
    throw std::logic_error("theorem branch " + std::string(method) + " disagrees with the recognizer");
  }
  gv.verdict = std::move(recognized);
  gv.verdict.method = std::string(method);

  if (!predicted && gv.witness) {
    // The recognizer's forcing chain stays attached as an independent check.
    Obstruction& ob = *gv.verdict.obstruction;
    ob.kind = Obstruction::Kind::forbidden_configuration;
    ob.description = gv.witness->describe();
    ob.vertices.clear();
    for (auto r : gv.witness->radicals) ob.vertices.push_back(std::to_string(r));
  }
  return gv;
}

GroupVerdict coprime_is_divisor(const GroupSpec& spec, const EnumerationOptions& options) {
  return coprime_is_divisor(order_spectrum(spec, options));
}

std::string to_string(Provenance p) { return p == Provenance::paper ? "paper" : "witness"; }

namespace {

SporadicRecord mathieu(std::string name, std::set<std::uint64_t> pi_e, bool verdict) {
  pi_e.erase(1);
  return {std::move(name), std::move(pi_e), true, verdict, Provenance::paper, "full element-order set"};
}

SporadicRecord witness(std::string name) {
  return {std::move(name), {2, 3, 5, 6, 10, 15}, false, false, Provenance::witness,
          "orders 6, 10, 15 occur"};
}

SporadicRecord by_subgroup(std::string name, std::string subgroup) {
  return {std::move(name), {}, false, false, Provenance::paper, "contains " + std::move(subgroup)};
}

std::string normalize(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (c == '_' || c == ' ') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

}  // namespace

const std::vector<SporadicRecord>& sporadic_table() {
  static const std::vector<SporadicRecord> table = {
      mathieu("M11", {2, 3, 4, 5, 6, 8, 11}, true),
      mathieu("M12", {2, 3, 4, 5, 6, 8, 10, 11}, true),
      mathieu("M22", {1, 2, 3, 4, 5, 6, 7, 8, 11}, true),
      mathieu("M23", {2, 3, 4, 5, 6, 7, 8, 11, 14, 15, 23}, true),
      witness("M24"),
      by_subgroup("J1", "D6 x D10"),
      by_subgroup("J2", "A5 x D10"),
      witness("J3"),
      by_subgroup("J4", "M24"),
      by_subgroup("Co1", "McL"),
      by_subgroup("Co2", "McL"),
      by_subgroup("Co3", "McL"),
      by_subgroup("Fi22", "S10"),
      witness("Fi23"),
      witness("Fi24'"),
      by_subgroup("HS", "S8"),
      witness("McL"),
      by_subgroup("He", "S4 x L3(2)"),
      by_subgroup("Ru", "Z2 x Z2 x Sz(8)"),
      by_subgroup("Suz", "S3 x A5"),
      by_subgroup("O'N", "J1"),
      by_subgroup("HN", "A12"),
      by_subgroup("Ly", "Z2 x M11"),
      by_subgroup("Th", "Z3 x G2(3)"),
      by_subgroup("B", "Th"),
      by_subgroup("M", "A12"),
  };
  return table;
}

const SporadicRecord& sporadic_verdict(std::string_view name) {
  const auto key = normalize(name);
  for (const auto& rec : sporadic_table()) {
    if (normalize(rec.name) == key) return rec;
  }
  throw OutOfRange("unknown sporadic group '" + std::string(name) + "'");
}

}  // namespace cdg
