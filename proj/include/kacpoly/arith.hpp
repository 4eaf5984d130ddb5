#pragma once

#include <cstdint>
#include <vector>

namespace kacpoly {

/// Möbius function; n >= 1.
int moebius(std::int64_t n);

/// Positive divisors of n in ascending order; n >= 1.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Euler's totient.
std::int64_t totient(std::int64_t n);

std::int64_t gcd_all(const std::vector<std::int64_t>& values);

} // namespace kacpoly
