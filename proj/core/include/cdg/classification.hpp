#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cdg/group.hpp"
#include "cdg/group_graphs.hpp"
#include "cdg/recognition.hpp"

namespace cdg {

// Closed-form predicates for "Gamma(G) is a divisor graph". All of them work
// on radicals: an order set is first reduced to the radicals of its members,
// so an element of order p^2 q counts as pq.

// Forbidden radical patterns that rule out a divisor coprime graph.
struct ObstructionWitness {
  enum class Kind {
    three_prime_order,  // a radical with >= 3 prime factors
    net,                // p, q, r with pq, pr, qr present
    four_cycle,         // p, q, r, s with pq, pr, rs, qs present
    four_star,          // p, q, r, s with pq, pr, ps present
  };

  Kind kind;
  std::vector<std::uint64_t> primes;    // the primes the pattern is built on
  std::vector<std::uint64_t> radicals;  // vertices of N_G inducing the pattern

  std::string describe() const;
};

std::string to_string(ObstructionWitness::Kind kind);

// First obstruction found, scanning (i) radicals with three or more prime
// factors, (ii) net triples, (iii) four-prime cycles then stars, each in
// ascending lexicographic order of primes.
std::optional<ObstructionWitness> obstruction_scan(const std::set<std::uint64_t>& orders);

// At most two primes: always a divisor graph. Throws OutOfRange for more.
bool two_prime_predicate(const std::set<std::uint64_t>& primes);

// Exactly three primes {p,q,r}: divisor iff not all of pq, pr, qr occur.
bool three_prime_predicate(const std::set<std::uint64_t>& orders);

// Exactly four primes: divisor iff no radical has three prime factors, all
// four primes occur, and some relabeling of the primes as p,q,r,s carries
// the composite radicals into {pq, pr, rs}. Tries all 24 relabelings.
bool four_prime_predicate(const std::set<std::uint64_t>& orders);

// The same condition restated: composites are products of two primes and
// the graph they induce on the four primes has no triangle, 4-cycle or claw.
bool linear_forest_predicate(const std::set<std::uint64_t>& orders);

// Radicals = n >= 3 primes plus exactly one product of two of them.
bool has_single_composite_shape(const std::set<std::uint64_t>& orders);
// Always true on the shape above; throws OutOfRange otherwise.
bool single_composite_predicate(const std::set<std::uint64_t>& orders);

bool dihedral_predicate(std::uint64_t n);   // D_{2n}, n >= 3
bool dicyclic_predicate(std::uint64_t t);   // Q_{4t}, t >= 2
bool symmetric_predicate(std::uint32_t n);  // n <= 7
bool alternating_predicate(std::uint32_t n);  // n <= 8

// H x K for non-trivial H, K given by their order sets: true iff
// (a) pi(H) = pi(K) = {p, q}, or (b) pi(H) = {p}, pi(K) within {p, q, r}
// and no element of K has order divisible by qr (either argument order).
bool direct_product_predicate(const std::set<std::uint64_t>& pi_e_h, const std::set<std::uint64_t>& pi_e_k);

// Method tags reported in Verdict::method.
inline constexpr std::string_view kMethodTrivial = "trivial-group";
inline constexpr std::string_view kMethodCp = "cp-group-theorem";
inline constexpr std::string_view kMethodTwoPrime = "two-prime-theorem";
inline constexpr std::string_view kMethodThreePrime = "three-prime-theorem";
inline constexpr std::string_view kMethodFourPrime = "four-prime-theorem";
inline constexpr std::string_view kMethodRecognizer = "recognizer";

struct GroupVerdict {
  Verdict verdict;  // certificate / obstruction refer to radical_graph.graph
  RadicalGraph radical_graph;
  std::set<std::uint64_t> pi_e;
  std::set<std::uint64_t> primes;
  std::optional<ObstructionWitness> witness;
};

// Dispatches trivial group, CP-group, |pi| <= 2, |pi| = 3, |pi| = 4, and
// falls back to the recognizer on N_G. The recognizer always runs on N_G as
// well: it supplies the certificate, and a disagreement with the theorem
// branch raises std::logic_error.
GroupVerdict coprime_is_divisor(const OrderSpectrum& spectrum);
GroupVerdict coprime_is_divisor(const GroupSpec& spec, const EnumerationOptions& options = {});

// Sporadic simple groups.
enum class Provenance { paper, witness };

std::string to_string(Provenance p);

struct SporadicRecord {
  std::string name;
  std::set<std::uint64_t> pi_e;  // full (Mathieu M11..M23) or a partial witness set
  bool full_spectrum = false;
  bool verdict = false;
  Provenance provenance = Provenance::paper;
  std::string note;
};

// All 26 records, in the conventional order.
const std::vector<SporadicRecord>& sporadic_table();

// Case-insensitive; '_' ignored ("M_23", "m23", "Fi24'", "McL").
// Throws OutOfRange for an unknown name.
const SporadicRecord& sporadic_verdict(std::string_view name);

}  // namespace cdg
