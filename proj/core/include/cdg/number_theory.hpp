#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cdg {

using BigInt = boost::multiprecision::cpp_int;

// Deterministic trial division; inputs here stay far below 2^40.
bool is_prime(std::uint64_t n);

// Distinct prime divisors in ascending order. prime_factors(1) is empty.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// Product of the distinct primes dividing m; radical(1) == 1.
std::uint64_t radical(std::uint64_t m);

// Number of distinct prime divisors.
std::size_t omega(std::uint64_t m);

bool is_prime_power(std::uint64_t m);

// All positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b);

// Union of the prime divisors of every member.
std::set<std::uint64_t> primes_of(const std::set<std::uint64_t>& values);

// First `count` primes in ascending order.
std::vector<std::uint64_t> first_primes(std::size_t count);

}  // namespace cdg
