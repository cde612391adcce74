#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace picky {

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
bool is_prime(std::uint64_t n);

/// Prime factorisation as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
unsigned valuation(std::uint64_t n, std::uint64_t p);

/// Throws BoundExceeded on overflow.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

std::uint64_t euler_phi(std::uint64_t n);

/// Units of Z/n in increasing order (n >= 1; for n = 1 returns {0}).
std::vector<std::uint64_t> units_mod(std::uint64_t n);

/// 64-bit FNV-1a over a byte range.
std::uint64_t fnv1a(const void* data, std::size_t len,
                    std::uint64_t seed = 1469598103934665603ull);

} // namespace picky
