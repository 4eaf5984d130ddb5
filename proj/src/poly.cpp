#include "kacpoly/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <utility>

#include "kacpoly/error.hpp"

namespace kacpoly {

namespace {

using IntVec = std::vector<Integer>;

void strip(IntVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

Integer content(const IntVec& v) {
    Integer g = 0;
    for (const auto& c : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntVec primitive_part(IntVec v) {
    strip(v);
    if (v.empty()) return v;
    Integer g = content(v);
    if (v.back() < 0) g = -g;
    if (g != 1)
        for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return v;
}

IntVec convolve(const IntVec& a, const IntVec& b) {
    if (a.empty() || b.empty()) return {};
    IntVec out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return out;
}

// Pseudo-remainder of a by b, primitive part taken.
IntVec prem_primitive(IntVec r, const IntVec& b) {
    const std::size_t db = b.size() - 1;
    const Integer& lb = b.back();
    while (r.size() >= b.size()) {
        Integer lr = r.back();
        const std::size_t shift = r.size() - 1 - db;
        for (auto& c : r) c *= lb;
        for (std::size_t j = 0; j <= db; ++j)
            mpz_submul(r[j + shift].get_mpz_t(), lr.get_mpz_t(), b[j].get_mpz_t());
        strip(r);
        if (r.size() > 64) {
            Integer g = content(r);
            if (g > 1)
                for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        }
    }
    return primitive_part(std::move(r));
}

// Arithmetic modulo the Mersenne prime 2^61 - 1, used for a cheap coprimality
// test before running the integer remainder sequence.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    std::uint64_t s = lo + hi;
    if (s >= kPrime) s -= kPrime;
    return s;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> reduce_mod(const IntVec& v) {
    std::vector<std::uint64_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = mpz_fdiv_ui(v[i].get_mpz_t(), kPrime);
    return out;
}

// Degree of gcd modulo the prime.
std::int64_t gcd_degree_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
    auto trim = [](std::vector<std::uint64_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        const std::uint64_t inv = powmod(b.back(), kPrime - 2);
        while (a.size() >= b.size()) {
            const std::uint64_t f = mulmod(a.back(), inv);
            const std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t t = mulmod(f, b[j]);
                std::uint64_t& x = a[j + shift];
                x = x >= t ? x - t : x + kPrime - t;
            }
            trim(a);
        }
        std::swap(a, b);
    }
    return static_cast<std::int64_t>(a.size()) - 1;
}

} // namespace

Poly::Poly(long c) : Poly(Integer(c)) {}

Poly::Poly(const Integer& c) {
    if (c != 0) num_.push_back(c);
}

Poly::Poly(const Rational& c) {
    if (c != 0) {
        num_.push_back(c.get_num());
        den_ = c.get_den();
    }
}

Poly Poly::from_integers(std::initializer_list<long> coeffs) {
    Poly p;
    p.num_.reserve(coeffs.size());
    for (long c : coeffs) p.num_.emplace_back(c);
    p.normalize();
    return p;
}

Poly Poly::from_integers(std::vector<Integer> coeffs) {
    Poly p;
    p.num_ = std::move(coeffs);
    p.normalize();
    return p;
}

Poly Poly::from_rationals(const std::vector<Rational>& coeffs) {
    Integer l = 1;
    for (const auto& c : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    Poly p;
    p.num_.reserve(coeffs.size());
    for (const auto& c : coeffs) p.num_.push_back(c.get_num() * (l / c.get_den()));
    p.den_ = l;
    p.normalize();
    return p;
}

Poly Poly::monomial(const Rational& c, std::int64_t exponent) {
    if (exponent < 0) throw InputError("negative exponent in Poly::monomial");
    Poly p;
    if (c == 0) return p;
    p.num_.assign(static_cast<std::size_t>(exponent) + 1, Integer(0));
    p.num_.back() = c.get_num();
    p.den_ = c.get_den();
    return p;
}

void Poly::normalize() {
    strip(num_);
    if (num_.empty()) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    if (den_ == 1) return;
    Integer g = den_;
    for (const auto& c : num_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
    }
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

std::int64_t Poly::valuation() const noexcept {
    for (std::size_t i = 0; i < num_.size(); ++i)
        if (num_[i] != 0) return static_cast<std::int64_t>(i);
    return -1;
}

Rational Poly::coefficient(std::int64_t i) const {
    if (i < 0 || i >= static_cast<std::int64_t>(num_.size())) return Rational(0);
    Rational r(num_[static_cast<std::size_t>(i)], den_);
    r.canonicalize();
    return r;
}

std::vector<Rational> Poly::coefficients() const {
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (std::int64_t i = 0; i <= degree(); ++i) out.push_back(coefficient(i));
    return out;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& c : p.num_) c = -c;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (num_.size() < o.num_.size()) num_.resize(o.num_.size());
    if (den_ == o.den_) {
        for (std::size_t i = 0; i < o.num_.size(); ++i) num_[i] += o.num_[i];
    } else {
        Integer l;
        mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
        const Integer ma = l / den_;
        const Integer mb = l / o.den_;
        if (ma != 1)
            for (auto& c : num_) c *= ma;
        for (std::size_t i = 0; i < o.num_.size(); ++i)
            mpz_addmul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), mb.get_mpz_t());
        den_ = l;
    }
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) return *this = Poly();
    if (is_zero()) return *this;
    for (auto& x : num_) x *= c.get_num();
    den_ *= c.get_den();
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly p;
    if (a.is_zero() || b.is_zero()) return p;
    p.num_ = convolve(a.num_, b.num_);
    p.den_ = a.den_ * b.den_;
    p.normalize();
    return p;
}

Poly Poly::shift(std::int64_t k) const {
    if (is_zero() || k == 0) return *this;
    Poly p = *this;
    if (k > 0) {
        p.num_.insert(p.num_.begin(), static_cast<std::size_t>(k), Integer(0));
        return p;
    }
    const auto drop = static_cast<std::size_t>(-k);
    for (std::size_t i = 0; i < std::min(drop, p.num_.size()); ++i)
        if (p.num_[i] != 0) throw NotDivisible("shift: polynomial not divisible by q^" + std::to_string(-k));
    p.num_.erase(p.num_.begin(), p.num_.begin() + static_cast<std::ptrdiff_t>(std::min(drop, p.num_.size())));
    p.normalize();
    return p;
}

Poly Poly::adams(std::int64_t l) const {
    if (l < 1) throw InputError("adams: exponent must be positive");
    if (l == 1 || is_constant()) return *this;
    Poly p;
    p.num_.assign(static_cast<std::size_t>(degree() * l) + 1, Integer(0));
    for (std::size_t i = 0; i < num_.size(); ++i) p.num_[i * static_cast<std::size_t>(l)] = num_[i];
    p.den_ = den_;
    return p;
}

Poly Poly::reversed(std::int64_t n) const {
    if (is_zero()) return *this;
    if (n < degree()) throw InputError("reversed: n below degree");
    Poly p;
    p.num_.assign(static_cast<std::size_t>(n) + 1, Integer(0));
    for (std::size_t i = 0; i < num_.size(); ++i) p.num_[static_cast<std::size_t>(n) - i] = num_[i];
    p.den_ = den_;
    p.normalize();
    return p;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Poly p;
    p.num_ = num_;
    p.den_ = num_.back();
    p.normalize();
    return p;
}

Poly Poly::primitive() const {
    Poly p;
    p.num_ = primitive_part(num_);
    return p;
}

Rational Poly::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = num_.rbegin(); it != num_.rend(); ++it) acc = acc * x + Rational(*it);
    acc /= Rational(den_);
    return acc;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::int64_t i = 0; i <= degree(); ++i) {
        Rational c = coefficient(i);
        if (c == 0) continue;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1) os << c.get_str() << "*";
        os << "q";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

Poly poly_arith(const Poly& a, const Poly& b, ArithOp op) {
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    }
    return {};
}

DivMod divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw ZeroDenominator("division by the zero polynomial");
    if (a.degree() < b.degree()) return {Poly(), a};
    const auto& bn = b.numerators();
    const std::size_t db = bn.size() - 1;
    const std::size_t steps = a.numerators().size() - db;
    if (bn.back() == 1 || bn.back() == -1) {
        // Integer long division, scaled back at the end.
        IntVec r = a.numerators();
        IntVec q(steps);
        const bool negate = bn.back() < 0;
        for (std::size_t s = steps; s-- > 0;) {
            Integer c = r[s + db];
            if (negate) c = -c;
            q[s] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[s + j].get_mpz_t(), c.get_mpz_t(), bn[j].get_mpz_t());
        }
        r.resize(db);
        Rational scale(b.denominator(), a.denominator());
        scale.canonicalize();
        Poly quot = Poly::from_integers(std::move(q)) * scale;
        Poly rem = Poly::from_integers(std::move(r)) * Rational(Integer(1), a.denominator());
        return {std::move(quot), std::move(rem)};
    }
    std::vector<Rational> r = a.coefficients();
    std::vector<Rational> bc = b.coefficients();
    std::vector<Rational> q(steps);
    const Rational lead_inv = 1 / bc.back();
    for (std::size_t s = steps; s-- > 0;) {
        Rational c = r[s + db] * lead_inv;
        q[s] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) r[s + j] -= c * bc[j];
    }
    r.resize(db);
    return {Poly::from_rationals(q), Poly::from_rationals(r)};
}

Poly exact_divide(const Poly& num, const Poly& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero())
        throw NotDivisible("exact_divide: (" + num.to_string() + ") / (" + den.to_string() + ") leaves remainder " +
                           r.to_string());
    return q;
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    const std::int64_t va = a.valuation();
    const std::int64_t vb = b.valuation();
    const std::int64_t v = std::min(va, vb);
    Poly common_q = Poly::q_power(v);
    if (a.degree() == va || b.degree() == vb) return common_q;  // one side is c*q^k

    IntVec x(a.numerators().begin() + va, a.numerators().end());
    IntVec y(b.numerators().begin() + vb, b.numerators().end());
    if (x.size() == 1 || y.size() == 1) return common_q;

    // If the leading coefficients survive reduction and the modular gcd is a
    // unit, the rational gcd is a unit too.
    if (mpz_fdiv_ui(x.back().get_mpz_t(), kPrime) != 0 && mpz_fdiv_ui(y.back().get_mpz_t(), kPrime) != 0 &&
        gcd_degree_mod(reduce_mod(x), reduce_mod(y)) == 0)
        return common_q;

    x = primitive_part(std::move(x));
    y = primitive_part(std::move(y));
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        IntVec r = prem_primitive(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return (Poly::from_integers(std::move(x)).monic()).shift(v);
}

Poly power(const Poly& p, unsigned e) {
    Poly result(1L);
    Poly base = p;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

} // namespace kacpoly
