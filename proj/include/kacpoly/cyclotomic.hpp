#pragma once

#include <cstdint>
#include <vector>

#include "kacpoly/poly.hpp"

namespace kacpoly {

/// The k-th cyclotomic polynomial, built as a Möbius product of q^d - 1.
Poly cyclotomic(std::int64_t k);

struct CyclotomicFactor {
    std::int64_t index;
    unsigned multiplicity;
    friend bool operator==(const CyclotomicFactor&, const CyclotomicFactor&) = default;
};

struct CyclotomicFactorization {
    Rational constant;
    std::vector<CyclotomicFactor> factors;  // ascending index

    Poly expand() const;
};

/// Writes den as constant * prod Phi_k^m_k by trial division. Throws
/// NotCyclotomic when a nonconstant cofactor survives, InputError when
/// den is zero or vanishes at q = 0.
CyclotomicFactorization cyclotomic_certify(const Poly& den);

} // namespace kacpoly
