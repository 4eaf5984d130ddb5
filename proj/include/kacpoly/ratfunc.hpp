#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "kacpoly/poly.hpp"

namespace kacpoly {

/// Element of Q(q), kept as num/den with gcd(num, den) = 1 and den monic.
class RationalFunction {
public:
    RationalFunction() : den_(1L) {}
    RationalFunction(long c) : num_(c), den_(1L) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(const Rational& c) : num_(c), den_(1L) {}
    RationalFunction(Poly p) : num_(std::move(p)), den_(1L) {}

    /// Reduces num/den; throws ZeroDenominator when den = 0.
    static RationalFunction reduce(const Poly& num, const Poly& den);
    /// Caller guarantees den monic and coprime to num.
    static RationalFunction from_reduced(Poly num, Poly den);
    /// q^k for any integer k.
    static RationalFunction q_power(std::int64_t k);

    const Poly& numerator() const noexcept { return num_; }
    const Poly& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }
    /// Throws NotPolynomial unless the denominator is 1.
    Poly to_polynomial() const;

    RationalFunction operator-() const { return from_reduced(-num_, den_); }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction inverse() const;
    RationalFunction div_int(long n) const;
    /// q -> q^l.
    RationalFunction adams(std::int64_t l) const { return from_reduced(num_.adams(l), den_.adams(l)); }
    /// Multiplies by q^k, k of either sign.
    RationalFunction shift(std::int64_t k) const;

    std::string to_string() const;

private:
    Poly num_;
    Poly den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

inline RationalFunction ratfn_reduce(const Poly& num, const Poly& den) { return RationalFunction::reduce(num, den); }

} // namespace kacpoly
