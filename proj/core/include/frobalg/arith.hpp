#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace frobalg {

/// Arbitrary-precision integer used by every closed-form count and bound.
using Integer = boost::multiprecision::cpp_int;

bool is_prime(std::uint64_t n);

/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Least prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

/// Order of a in (Z/nZ)^*. Requires gcd(a, n) = 1 and n >= 2.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

/// Least generator of (Z/pZ)^* for prime p >= 3.
std::uint64_t smallest_primitive_root(std::uint64_t p);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

Integer binomial(unsigned n, unsigned k);
Integer integer_pow(const Integer& base, unsigned exp);
Integer factorial(unsigned n);

} // namespace frobalg
