#pragma once

#include <cstdint>

#include "raysplit/bignum.hpp"

namespace raysplit {

/// Euler's totient: count of integers in [1, n) coprime to n, with totient(1) = 1.
/// Throws std::invalid_argument for n = 0.
std::uint64_t totient(std::uint64_t n);

/// Moebius function: 0 for non-squarefree n, otherwise (-1)^{#prime factors}.
/// Throws std::invalid_argument for n = 0.
int moebius(std::uint64_t n);

/// Total binomial coefficient: C(n, k) for 0 <= k <= n, zero otherwise
/// (out-of-range terms in the weighted identity must vanish silently).
BigInt binomial(long long n, long long k);

}  // namespace raysplit
