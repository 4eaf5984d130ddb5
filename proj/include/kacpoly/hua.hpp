#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "kacpoly/arith.hpp"
#include "kacpoly/poly.hpp"
#include "kacpoly/quiver.hpp"
#include "kacpoly/ratfunc.hpp"
#include "kacpoly/series.hpp"

namespace kacpoly {

enum class KacPath { moebius, plethystic };

struct KacResult {
    Quiver quiver;
    DimVector dim;
    Poly poly;
    KacPath path = KacPath::moebius;
};

/// Contributions of all partition tuples of one multidegree to Hua's series,
/// summed per linear part. Arrows listed in `varying` contribute
/// mult * <pi^s, pi^t> to the linear part (one slot per varying arrow, in the
/// given order); every other arrow contributes to the q-power.
struct HuaTerm {
    std::vector<std::int64_t> linear;
    RationalFunction value;
};

std::vector<HuaTerm> hua_terms(const Quiver& q, const DimVector& e, const std::vector<std::size_t>& varying);

/// Hua's series over any coefficient ring; `lift(linear, value)` turns one
/// HuaTerm into a coefficient.
template <CoefficientRing C, class Lift>
TruncatedSeries<C> hua_P_over(const Quiver& q, const DimVector& box, const std::vector<std::size_t>& varying,
                              Lift lift) {
    check_dim(q, box);
    TruncatedSeries<C> p = TruncatedSeries<C>::one(box);
    for (std::size_t i = 1; i < p.size(); ++i) {
        C acc(0L);
        for (auto& t : hua_terms(q, p.key(i), varying)) acc = acc + lift(t.linear, t.value);
        p.at(i) = std::move(acc);
    }
    return p;
}

TruncatedSeries<RationalFunction> hua_P(const Quiver& q, const DimVector& box);

/// H(d, q) = gcd(d) * [z^d] log P.
RationalFunction hua_H(const TruncatedSeries<RationalFunction>& P, const DimVector& d);

/// (q - 1)/g * sum_{e | g} mu(e) H(d/e)(q^e) from a precomputed log P, g = gcd(d).
template <CoefficientRing C>
C kac_from_log(const TruncatedSeries<C>& logP, const DimVector& d, const C& q_minus_one) {
    const std::int64_t g = gcd_all(d.entries);
    C sum(0L);
    for (std::int64_t e : divisors(g)) {
        const int mu = moebius(e);
        if (mu == 0) continue;
        DimVector de = d;
        for (auto& v : de.entries) v /= e;
        // H(d/e) = gcd(d/e) * log coefficient
        C h = logP.coefficient(de) * C(static_cast<long>(g / e));
        h = h.adams(e);
        sum = mu > 0 ? sum + h : sum - h;
    }
    return (sum * q_minus_one).div_int(static_cast<long>(g));
}

/// (q - 1) [z^d] Log_{q,z} P.
template <CoefficientRing C>
C kac_from_pleth_log(const TruncatedSeries<C>& P, const DimVector& d, const C& q_minus_one) {
    return pleth_log(P, true).coefficient(d) * q_minus_one;
}

KacResult kac_direct(const Quiver& q, const DimVector& d, bool checked = false);
KacResult kac_plethystic(const Quiver& q, const DimVector& d, bool checked = false);

/// A_e for every nonzero e <= box from a single log of Hua's series.
std::map<DimVector, Poly> kac_all(const Quiver& q, const DimVector& box);

/// Throws InvariantViolation unless poly is zero or an integral, nonnegative,
/// monic polynomial of degree 1 - <d,d>.
void check_kac_invariants(const Quiver& q, const DimVector& d, const Poly& poly);

enum class CountKind { M, I };

/// Counts of all (M) or indecomposable (I) representations for every nonzero
/// e <= box: sum M z^d = Exp_{q,z}(sum A z^d), sum M z^d = Exp_z(sum I z^d).
std::map<DimVector, Poly> counts_from_A(const Quiver& q, const DimVector& box, CountKind which);

} // namespace kacpoly
