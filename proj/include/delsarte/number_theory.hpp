#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace delsarte::nt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs, primes ascending.
/// Trial division up to 10^6, Pollard-Brent rho beyond.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

std::uint64_t totient(std::uint64_t n);

}  // namespace delsarte::nt
