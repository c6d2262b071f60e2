#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cdg/number_theory.hpp"
#include "cdg/permutation.hpp"

namespace cdg {

class GroupSpec;

// Z_n.
struct Cyclic {
  std::uint64_t n;
};

// D_{2n} = <a, b | a^n = b^2 = e, b a b^{-1} = a^{-1}>; n is the rotation order.
struct Dihedral {
  std::uint64_t n;
};

// Q_{4t} = <x, y | x^{2t} = y^4 = e, x^t = y^2, y^{-1} x y = x^{-1}>.
struct Dicyclic {
  std::uint64_t t;
};

struct Symmetric {
  std::uint32_t n;
};

struct Alternating {
  std::uint32_t n;
};

struct DirectProduct {
  std::shared_ptr<const GroupSpec> left;
  std::shared_ptr<const GroupSpec> right;
};

// Subgroup of Sym({1..degree}) generated by `generators`.
struct PermGroup {
  std::size_t degree;
  std::vector<Permutation> generators;
};

// A group known only through its set of non-identity element orders.
struct SpectrumGroup {
  std::string name;
  std::set<std::uint64_t> pi_e;
};

// Symbolic description of a finite group. Construct through the static
// factories, which enforce the parameter bounds.
class GroupSpec {
public:
  using Variant = std::variant<Cyclic, Dihedral, Dicyclic, Symmetric, Alternating, DirectProduct,
                               PermGroup, SpectrumGroup>;

  static constexpr std::uint64_t kMaxCyclicOrder = 1'000'000'000;
  static constexpr std::uint32_t kMaxDegree = 64;

  static GroupSpec cyclic(std::uint64_t n);
  static GroupSpec dihedral(std::uint64_t n);
  static GroupSpec dicyclic(std::uint64_t t);
  static GroupSpec symmetric(std::uint32_t n);
  static GroupSpec alternating(std::uint32_t n);
  static GroupSpec direct_product(GroupSpec left, GroupSpec right);
  static GroupSpec perm_group(std::size_t degree, std::vector<Permutation> generators);
  static GroupSpec spectrum_group(std::string name, std::set<std::uint64_t> pi_e);

  const Variant& variant() const noexcept { return value_; }

  template <class T>
  const T* get_if() const noexcept {
    return std::get_if<T>(&value_);
  }

  // True when the spec (recursively) contains a SpectrumGroup.
  bool is_support_only() const;

private:
  explicit GroupSpec(Variant v) : value_(std::move(v)) {}

  Variant value_;
};

bool operator==(const GroupSpec& a, const GroupSpec& b);

// Canonical text in the grammar accepted by parse_group_spec.
std::string to_string(const GroupSpec& spec);

// Grammar (whitespace separated):
//   Z n | D m | Q m | S n | A n | DP (spec) (spec)
//   | PERM k ; cycles ; cycles ...  | SPEC name : m1,m2,...
// D and Q take the group order (D 12 is D_12 with n = 6, Q 8 is Q_8).
// Throws ParseError on syntax errors and OutOfRange on parameter bounds.
GroupSpec parse_group_spec(std::string_view text);

// Multiset of element orders. Support always contains 1. Counts are absent
// for groups described only by their order set.
class OrderSpectrum {
public:
  // counts[m] = number of elements of order m. Requires counts[1] == 1 and a
  // support that is divisor-closed.
  static OrderSpectrum from_counts(std::map<std::uint64_t, BigInt> counts);

  // pi_e may or may not contain 1; it must be divisor-closed above 1.
  static OrderSpectrum support_only(const std::set<std::uint64_t>& pi_e);

  const std::set<std::uint64_t>& support() const noexcept { return support_; }

  // Support without the identity order.
  std::set<std::uint64_t> pi_e() const;

  bool has_multiplicities() const noexcept { return counts_.has_value(); }

  // Throws Unsupported for a support-only spectrum.
  const std::map<std::uint64_t, BigInt>& counts() const;
  BigInt multiplicity(std::uint64_t order) const;

  // |G|, when multiplicities are known.
  std::optional<BigInt> total() const;

  bool operator==(const OrderSpectrum&) const = default;

private:
  std::set<std::uint64_t> support_;
  std::optional<std::map<std::uint64_t, BigInt>> counts_;
};

struct EnumerationOptions {
  std::size_t element_cap = 100'000;
};

// Every divisor d > 1 of a member is itself a member.
bool is_divisor_closed(const std::set<std::uint64_t>& pi_e);

OrderSpectrum order_spectrum(const GroupSpec& spec, const EnumerationOptions& options = {});

enum class Parity { all, even };

// { lcm(cycle type) : cycle type a partition of n } restricted to even
// permutations for Parity::even. 1 <= n <= 64.
std::set<std::uint64_t> partition_orders(std::uint32_t n, Parity parity);

// Elements of a concrete group with its multiplication. Element 0 is the
// identity; the remaining order is deterministic per variant.
class EnumeratedGroup {
public:
  using Code = std::vector<std::int64_t>;

  struct Model;

  EnumeratedGroup(std::shared_ptr<const Model> model, std::vector<Code> elements);

  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t identity() const noexcept { return 0; }

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  std::uint64_t order(std::size_t a) const { return orders_[a]; }
  const std::vector<std::uint64_t>& orders() const noexcept { return orders_; }

  // Human-readable word, e.g. "a^2 b" or "(1 2 3)".
  std::string element_name(std::size_t a) const;

  // Indices of <a>, ascending.
  std::vector<std::size_t> cyclic_subgroup(std::size_t a) const;

  std::size_t index_of(const Code& code) const;

private:
  std::shared_ptr<const Model> model_;
  std::vector<Code> elements_;
  std::map<Code, std::size_t> index_;
  std::vector<std::uint64_t> orders_;
};

// Throws CapExceeded above options.element_cap and Unsupported for specs
// containing a SpectrumGroup.
EnumeratedGroup enumerate_elements(const GroupSpec& spec, const EnumerationOptions& options = {});

// pi(G), read off the order support.
std::set<std::uint64_t> prime_set(const OrderSpectrum& spectrum);
std::set<std::uint64_t> prime_set(const GroupSpec& spec, const EnumerationOptions& options = {});

// Every non-identity element has prime-power order.
bool is_cp_group(const OrderSpectrum& spectrum);

}  // namespace cdg
