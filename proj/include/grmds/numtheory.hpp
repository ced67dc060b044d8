#pragma once

#include <cstdint>
#include <optional>
#include <vector>

// Integer helpers used for ring setup: primality, factoring of p^m - 1,
// and exponent arithmetic modulo group orders that fit in 64 bits.
namespace grmds::nt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// base^exp, or nullopt when the result would not fit below `limit`.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp,
                                         std::uint64_t limit = (std::uint64_t{1} << 62));

/// Multiplicative order of a modulo n (gcd(a, n) must be 1, n >= 1).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

}  // namespace grmds::nt
