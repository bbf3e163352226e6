#pragma once

// Integer helpers shared by the symbolic modules: exact big integers,
// divisor enumeration, factorisation of word-sized integers.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace szm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// 2^k as an exact integer.
BigInt pow2(unsigned k);

/// Positive divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Prime factorisation of n as (prime, exponent) pairs, primes increasing.
/// Uses trial division followed by Pollard rho, so any 64-bit n is fine.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Euler's totient.
std::uint64_t totient(std::uint64_t n);

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n);

/// Narrowing conversion that throws std::overflow_error when x does not
/// fit in 64 bits.
std::uint64_t to_u64(const BigInt& x);

}  // namespace szm
