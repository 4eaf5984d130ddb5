#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kacpoly/cyclotomic.hpp"
#include "kacpoly/hua.hpp"
#include "kacpoly/poly.hpp"
#include "kacpoly/quiver.hpp"
#include "kacpoly/ratfunc.hpp"

namespace kacpoly {

/// Finite sum  sum_L c_L(q) q^{L . n}  over integer vectors L indexed by the
/// varying arrows. Constant exponent offsets live inside the coefficients as
/// powers of q, so each linear part carries exactly one coefficient.
class ParamElement {
public:
    using Linear = std::vector<std::int64_t>;  // trailing zeros trimmed

    ParamElement() = default;
    ParamElement(long c);  // NOLINT(google-explicit-constructor)
    ParamElement(const RationalFunction& c);  // NOLINT(google-explicit-constructor)

    static ParamElement term(Linear linear, RationalFunction coeff);

    const std::map<Linear, RationalFunction>& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    ParamElement operator-() const;
    friend ParamElement operator+(const ParamElement& a, const ParamElement& b);
    friend ParamElement operator-(const ParamElement& a, const ParamElement& b) { return a + (-b); }
    friend ParamElement operator*(const ParamElement& a, const ParamElement& b);
    friend bool operator==(const ParamElement&, const ParamElement&) = default;

    ParamElement div_int(long n) const;
    /// q -> q^l on coefficients and L -> l L on exponents.
    ParamElement adams(std::int64_t l) const;

    std::string to_string() const;

    /// Upper bound on term_count of any result; exceeding it throws TermExplosion.
    static void set_term_cap(std::size_t cap);
    static std::size_t term_cap();

private:
    static void check_cap(std::size_t n);

    std::map<Linear, RationalFunction> terms_;
};

/// l(n) = constant + sum_alpha linear[alpha] * n_alpha.
struct AffineExponent {
    std::int64_t constant = 0;
    std::vector<std::pair<std::string, std::int64_t>> linear;  // varying arrows, declaration order

    std::vector<std::int64_t> linear_values() const;
    std::int64_t linear_coefficient(const std::string& arrow) const;
    /// Reads n_alpha for each varying arrow from a full multiplicity vector.
    std::int64_t evaluate(const Quiver& q, const MultVector& n) const;
    std::string to_string() const;

    friend bool operator==(const AffineExponent&, const AffineExponent&) = default;
};

struct DecompositionGroup {
    AffineExponent exponent;
    Poly numerator;
    friend bool operator==(const DecompositionGroup&, const DecompositionGroup&) = default;
};

/// A_{Q_n,d}(q) = sum_j q^{l_j(n)} P_j(q) / Q(q) with Q monic, Q(0) != 0 and
/// cyclotomic, P_j(0) != 0, gcd(Q, P_0, ..., P_s) = 1, distinct linear parts.
/// No groups means A vanishes identically.
struct Decomposition {
    Quiver quiver;
    DimVector dim;
    std::vector<std::string> varying;
    Poly denominator{1L};
    CyclotomicFactorization certificate;
    std::vector<DecompositionGroup> groups;

    bool is_zero() const noexcept { return groups.empty(); }
    friend bool operator==(const Decomposition& a, const Decomposition& b) {
        return a.quiver == b.quiver && a.dim == b.dim && a.varying == b.varying && a.denominator == b.denominator &&
               a.groups == b.groups;
    }
};

/// Varying arrow names validated and put in declaration order.
std::vector<std::string> normalize_varying(const Quiver& q, const std::vector<std::string>& varying);

/// z^d coefficient of the parametric pipeline before canonicalization.
ParamElement param_raw(const Quiver& q, const DimVector& d, const std::vector<std::string>& varying,
                       KacPath path = KacPath::moebius);

Decomposition param_kac(const Quiver& q, const DimVector& d, const std::vector<std::string>& varying,
                        KacPath path = KacPath::moebius);

Decomposition canonicalize(const ParamElement& raw, const Quiver& q, const DimVector& d,
                           const std::vector<std::string>& varying);

/// One summand q^{exponent} numerator / denominator, not necessarily reduced.
struct RawTerm {
    AffineExponent exponent;
    Poly numerator;
    Poly denominator;
};

Decomposition canonicalize(const std::vector<RawTerm>& raw, const Quiver& q, const DimVector& d,
                           const std::vector<std::string>& varying);

/// The groups of a decomposition as raw terms over its denominator.
std::vector<RawTerm> raw_terms(const Decomposition& dec);

/// Evaluates at n (entries of non-varying arrows are ignored). Throws
/// NotPolynomial if the quotient is not a polynomial.
Poly specialize(const Decomposition& dec, const MultVector& n);

} // namespace kacpoly
