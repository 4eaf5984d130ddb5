#include "kacpoly/ratfunc.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "kacpoly/error.hpp"

namespace kacpoly {

namespace {

// Denominators are monic, so a constant one is exactly 1.
bool trivial(const Poly& den) { return den.is_one(); }

} // namespace

RationalFunction RationalFunction::reduce(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
    if (num.is_zero()) return {};
    const Poly g = gcd(num, den);
    Poly n = g.is_one() ? num : exact_divide(num, g);
    Poly d = g.is_one() ? den : exact_divide(den, g);
    const Rational lead = d.leading();
    if (lead != 1) {
        const Rational inv = 1 / lead;
        n *= inv;
        d *= inv;
    }
    return from_reduced(std::move(n), std::move(d));
}

RationalFunction RationalFunction::from_reduced(Poly num, Poly den) {
    RationalFunction f;
    if (num.is_zero()) return f;
    f.num_ = std::move(num);
    f.den_ = std::move(den);
    return f;
}

RationalFunction RationalFunction::q_power(std::int64_t k) {
    if (k >= 0) return from_reduced(Poly::q_power(k), Poly(1L));
    return from_reduced(Poly(1L), Poly::q_power(-k));
}

Poly RationalFunction::to_polynomial() const {
    if (!trivial(den_)) throw NotPolynomial("not a polynomial: " + to_string());
    return num_;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (trivial(a.den_) && trivial(b.den_)) return RationalFunction(a.num_ + b.num_);
    if (a.den_ == b.den_) {
        Poly n = a.num_ + b.num_;
        if (n.is_zero()) return {};
        const Poly g = gcd(n, a.den_);
        if (g.is_one()) return RationalFunction::from_reduced(std::move(n), a.den_);
        return RationalFunction::from_reduced(exact_divide(n, g), exact_divide(a.den_, g));
    }
    // Henrici: with g = gcd(da, db), gcd(num, den) divides g.
    const Poly g = gcd(a.den_, b.den_);
    if (g.is_one()) {
        Poly n = a.num_ * b.den_ + b.num_ * a.den_;
        return RationalFunction::from_reduced(std::move(n), a.den_ * b.den_);
    }
    const Poly da = exact_divide(a.den_, g);
    const Poly db = exact_divide(b.den_, g);
    Poly n = a.num_ * db + b.num_ * da;
    if (n.is_zero()) return {};
    Poly d = a.den_ * db;
    const Poly h = gcd(n, g);
    if (!h.is_one()) {
        n = exact_divide(n, h);
        d = exact_divide(d, h);
    }
    return RationalFunction::from_reduced(std::move(n), std::move(d));
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (trivial(a.den_) && trivial(b.den_)) return RationalFunction(a.num_ * b.num_);
    Poly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    if (!trivial(bd)) {
        const Poly g = gcd(an, bd);
        if (!g.is_one()) {
            an = exact_divide(an, g);
            bd = exact_divide(bd, g);
        }
    }
    if (!trivial(ad)) {
        const Poly g = gcd(bn, ad);
        if (!g.is_one()) {
            bn = exact_divide(bn, g);
            ad = exact_divide(ad, g);
        }
    }
    return RationalFunction::from_reduced(an * bn, ad * bd);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw ZeroDenominator("inverse of zero");
    const Rational lead = num_.leading();
    const Rational inv = 1 / lead;
    return from_reduced(den_ * inv, num_ * inv);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction RationalFunction::div_int(long n) const {
    if (n == 0) throw ZeroDenominator("division by integer zero");
    return from_reduced(num_ * Rational(1, n), den_);
}

RationalFunction RationalFunction::shift(std::int64_t k) const {
    if (k == 0 || is_zero()) return *this;
    if (k > 0) {
        // q^k may cancel q-powers of the denominator.
        const std::int64_t vd = den_.valuation();
        const std::int64_t cancel = std::min(k, vd);
        return from_reduced(num_.shift(k - cancel), den_.shift(-cancel));
    }
    const std::int64_t vn = num_.valuation();
    const std::int64_t cancel = std::min(-k, vn);
    return from_reduced(num_.shift(-cancel), den_.shift(-k - cancel));
}

std::string RationalFunction::to_string() const {
    if (trivial(den_)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

} // namespace kacpoly
