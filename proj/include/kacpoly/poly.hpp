#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kacpoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial in q over the rationals.
///
/// Stored as integer numerators sharing one positive common denominator,
/// with gcd(content, denominator) = 1 and trailing zeros stripped. The zero
/// polynomial has no stored coefficients and degree -1.
class Poly {
public:
    Poly() = default;
    Poly(long c);  // NOLINT(google-explicit-constructor): constants promote freely
    Poly(const Integer& c);
    Poly(const Rational& c);

    static Poly from_integers(std::initializer_list<long> coeffs);
    static Poly from_integers(std::vector<Integer> coeffs);
    static Poly from_rationals(const std::vector<Rational>& coeffs);
    static Poly monomial(const Rational& c, std::int64_t exponent);
    static Poly q_power(std::int64_t exponent) { return monomial(Rational(1), exponent); }

    bool is_zero() const noexcept { return num_.empty(); }
    bool is_constant() const noexcept { return num_.size() <= 1; }
    bool is_one() const noexcept { return num_.size() == 1 && num_[0] == 1 && den_ == 1; }
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(num_.size()) - 1; }
    /// Index of the first nonzero coefficient; -1 for the zero polynomial.
    std::int64_t valuation() const noexcept;

    Rational coefficient(std::int64_t i) const;
    Rational leading() const { return coefficient(degree()); }
    Rational constant_term() const { return coefficient(0); }
    std::vector<Rational> coefficients() const;

    bool is_integral() const noexcept { return den_ == 1; }
    const std::vector<Integer>& numerators() const noexcept { return num_; }
    const Integer& denominator() const noexcept { return den_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.den_ == b.den_ && a.num_ == b.num_; }

    /// Multiplies by q^k; for k < 0 the low coefficients must vanish.
    Poly shift(std::int64_t k) const;
    /// Substitution q -> q^l.
    Poly adams(std::int64_t l) const;
    /// q^n * p(1/q); requires n >= degree.
    Poly reversed(std::int64_t n) const;
    Poly monic() const;
    /// Integer polynomial with positive leading coefficient and content 1.
    Poly primitive() const;
    Rational evaluate(const Rational& x) const;

    /// "c_v*q^v + ..." ascending, "0" for zero.
    std::string to_string() const;

private:
    void normalize();

    std::vector<Integer> num_;
    Integer den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

enum class ArithOp { add, sub, mul };

Poly poly_arith(const Poly& a, const Poly& b, ArithOp op);

struct DivMod {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division over Q.
DivMod divmod(const Poly& a, const Poly& b);

/// Quotient of an exact division; throws NotDivisible on a nonzero remainder.
Poly exact_divide(const Poly& num, const Poly& den);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

Poly power(const Poly& p, unsigned e);

} // namespace kacpoly
