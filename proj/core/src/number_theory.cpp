#include "cdg/number_theory.hpp"

#include <limits>
#include <numeric>

#include "cdg/errors.hpp"

namespace cdg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t radical(std::uint64_t m) {
  std::uint64_t r = 1;
  for (auto p : prime_factors(m)) r *= p;
  return r;
}

std::size_t omega(std::uint64_t m) { return prime_factors(m).size(); }

bool is_prime_power(std::uint64_t m) { return omega(m) == 1; }

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (auto p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t g = std::gcd(a, b);
  const std::uint64_t q = a / g;
  if (q > std::numeric_limits<std::uint64_t>::max() / b) {
    throw OutOfRange("lcm overflows 64 bits");
  }
  return q * b;
}

std::set<std::uint64_t> primes_of(const std::set<std::uint64_t>& values) {
  std::set<std::uint64_t> out;
  for (auto v : values) {
    for (auto p : prime_factors(v)) out.insert(p);
  }
  return out;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::uint64_t c = 2; out.size() < count; ++c) {
    if (is_prime(c)) out.push_back(c);
  }
  return out;
}

}  // namespace cdg
