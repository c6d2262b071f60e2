#include <functional>
#include <numeric>

#include "cdg/errors.hpp"
#include "cdg/group.hpp"

namespace cdg {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

BigInt factorial(std::uint32_t n) {
  BigInt f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Calls visit(parts) for every partition of n into non-increasing parts.
void for_each_partition(std::uint32_t n,
                        const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  std::vector<std::uint32_t> parts;
  std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t rest, std::uint32_t max_part) {
    if (rest == 0) {
      visit(parts);
      return;
    }
    for (std::uint32_t p = std::min(rest, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(rest - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
}

bool is_even_type(const std::vector<std::uint32_t>& parts) {
  std::size_t even_parts = 0;
  for (auto p : parts) even_parts += (p % 2 == 0);
  return even_parts % 2 == 0;
}

std::uint64_t lcm_of(const std::vector<std::uint32_t>& parts) {
  std::uint64_t l = 1;
  for (auto p : parts) l = lcm_checked(l, p);
  return l;
}

OrderSpectrum symmetric_spectrum(std::uint32_t n, Parity parity) {
  const BigInt n_fact = factorial(n);
  std::map<std::uint64_t, BigInt> counts;
  for_each_partition(n, [&](const std::vector<std::uint32_t>& parts) {
    if (parity == Parity::even && !is_even_type(parts)) return;
    // Class size n! / prod_k (k^{m_k} m_k!).
    BigInt denom = 1;
    std::size_t i = 0;
    while (i < parts.size()) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      const auto mult = static_cast<std::uint32_t>(j - i);
      denom *= boost::multiprecision::pow(BigInt(parts[i]), mult) * factorial(mult);
      i = j;
    }
    counts[lcm_of(parts)] += n_fact / denom;
  });
  return OrderSpectrum::from_counts(std::move(counts));
}

std::map<std::uint64_t, BigInt> cyclic_counts(std::uint64_t n) {
  std::map<std::uint64_t, BigInt> counts;
  for (auto d : divisors(n)) counts[d] = euler_phi(d);
  return counts;
}

OrderSpectrum lcm_convolution(const OrderSpectrum& h, const OrderSpectrum& k) {
  if (h.has_multiplicities() && k.has_multiplicities()) {
    std::map<std::uint64_t, BigInt> counts;
    for (const auto& [a, ca] : h.counts()) {
      for (const auto& [b, cb] : k.counts()) counts[lcm_checked(a, b)] += ca * cb;
    }
    return OrderSpectrum::from_counts(std::move(counts));
  }
  std::set<std::uint64_t> support;
  for (auto a : h.support()) {
    for (auto b : k.support()) support.insert(lcm_checked(a, b));
  }
  return OrderSpectrum::support_only(support);
}

}  // namespace

bool is_divisor_closed(const std::set<std::uint64_t>& pi_e) {
  for (auto m : pi_e) {
    if (m <= 1) continue;
    for (auto d : divisors(m)) {
      if (d > 1 && !pi_e.count(d)) return false;
    }
  }
  return true;
}

OrderSpectrum OrderSpectrum::from_counts(std::map<std::uint64_t, BigInt> counts) {
  auto one = counts.find(1);
  if (one == counts.end() || one->second != 1) {
    throw OutOfRange("order spectrum must contain exactly one element of order 1");
  }
  OrderSpectrum s;
  for (auto it = counts.begin(); it != counts.end();) {
    if (it->first == 0 || it->second < 0) throw OutOfRange("invalid order spectrum entry");
    if (it->second == 0) {
      it = counts.erase(it);
      continue;
    }
    s.support_.insert(it->first);
    ++it;
  }
  if (!is_divisor_closed(s.support_)) throw OutOfRange("order spectrum support is not divisor-closed");
  s.counts_ = std::move(counts);
  return s;
}

OrderSpectrum OrderSpectrum::support_only(const std::set<std::uint64_t>& pi_e) {
  if (pi_e.count(0)) throw OutOfRange("element orders must be positive");
  if (!is_divisor_closed(pi_e)) throw OutOfRange("order set is not divisor-closed");
  OrderSpectrum s;
  s.support_ = pi_e;
  s.support_.insert(1);
  return s;
}

std::set<std::uint64_t> OrderSpectrum::pi_e() const {
  auto out = support_;
  out.erase(1);
  return out;
}

const std::map<std::uint64_t, BigInt>& OrderSpectrum::counts() const {
  if (!counts_) throw Unsupported("spectrum carries only its support, not multiplicities");
  return *counts_;
}

BigInt OrderSpectrum::multiplicity(std::uint64_t order) const {
  const auto& c = counts();
  auto it = c.find(order);
  return it == c.end() ? BigInt(0) : it->second;
}

std::optional<BigInt> OrderSpectrum::total() const {
  if (!counts_) return std::nullopt;
  BigInt sum = 0;
  for (const auto& [order, count] : *counts_) sum += count;
  return sum;
}

std::set<std::uint64_t> partition_orders(std::uint32_t n, Parity parity) {
  if (n < 1 || n > GroupSpec::kMaxDegree) throw OutOfRange("partition_orders needs 1 <= n <= 64");
  std::set<std::uint64_t> orders;
  for_each_partition(n, [&](const std::vector<std::uint32_t>& parts) {
    if (parity == Parity::even && !is_even_type(parts)) return;
    orders.insert(lcm_of(parts));
  });
  return orders;
}

OrderSpectrum order_spectrum(const GroupSpec& spec, const EnumerationOptions& options) {
  return std::visit(
      overloaded{
          [](const Cyclic& c) { return OrderSpectrum::from_counts(cyclic_counts(c.n)); },
          [](const Dihedral& d) {
            auto counts = cyclic_counts(d.n);
            counts[2] += d.n;  // the n reflections a^i b
            return OrderSpectrum::from_counts(std::move(counts));
          },
          [](const Dicyclic& q) {
            auto counts = cyclic_counts(2 * q.t);
            counts[4] += 2 * q.t;  // o(x^i y) = 4
            return OrderSpectrum::from_counts(std::move(counts));
          },
          [](const Symmetric& s) { return symmetric_spectrum(s.n, Parity::all); },
          [](const Alternating& a) { return symmetric_spectrum(a.n, Parity::even); },
          [&](const DirectProduct& dp) {
            return lcm_convolution(order_spectrum(*dp.left, options), order_spectrum(*dp.right, options));
          },
          [&](const PermGroup&) {
            const auto group = enumerate_elements(spec, options);
            std::map<std::uint64_t, BigInt> counts;
            for (auto o : group.orders()) counts[o] += 1;
            return OrderSpectrum::from_counts(std::move(counts));
          },
          [](const SpectrumGroup& s) { return OrderSpectrum::support_only(s.pi_e); },
      },
      spec.variant());
}

std::set<std::uint64_t> prime_set(const OrderSpectrum& spectrum) { return primes_of(spectrum.pi_e()); }

std::set<std::uint64_t> prime_set(const GroupSpec& spec, const EnumerationOptions& options) {
  return prime_set(order_spectrum(spec, options));
}

bool is_cp_group(const OrderSpectrum& spectrum) {
  for (auto m : spectrum.pi_e()) {
    if (!is_prime_power(m)) return false;
  }
  return true;
}

}  // namespace cdg
