#include "kacpoly/cyclotomic.hpp"

#include "kacpoly/arith.hpp"
#include "kacpoly/error.hpp"

namespace kacpoly {

Poly cyclotomic(std::int64_t k) {
    if (k < 1) throw InputError("cyclotomic: index must be positive");
    Poly up(1L), down(1L);
    for (std::int64_t d : divisors(k)) {
        const int mu = moebius(k / d);
        if (mu == 0) continue;
        Poly factor = Poly::q_power(d) - Poly(1L);
        if (mu > 0)
            up *= factor;
        else
            down *= factor;
    }
    return exact_divide(up, down);
}

Poly CyclotomicFactorization::expand() const {
    Poly p(constant);
    for (const auto& f : factors) p *= power(cyclotomic(f.index), f.multiplicity);
    return p;
}

CyclotomicFactorization cyclotomic_certify(const Poly& den) {
    if (den.is_zero()) throw InputError("cyclotomic_certify: zero polynomial");
    if (den.constant_term() == 0) throw InputError("cyclotomic_certify: polynomial vanishes at q = 0");
    CyclotomicFactorization out;
    Poly rest = den;
    // phi(k) >= sqrt(k/2), so k <= 2 deg^2 covers every candidate.
    const std::int64_t bound = 2 * den.degree() * den.degree() + 2;
    for (std::int64_t k = 1; k <= bound && rest.degree() > 0; ++k) {
        if (totient(k) > rest.degree()) continue;
        const Poly phi = cyclotomic(k);
        unsigned mult = 0;
        for (;;) {
            auto [q, r] = divmod(rest, phi);
            if (!r.is_zero()) break;
            rest = std::move(q);
            ++mult;
        }
        if (mult) out.factors.push_back({k, mult});
    }
    if (rest.degree() > 0) throw NotCyclotomic("non-cyclotomic factor " + rest.to_string() + " in " + den.to_string());
    out.constant = rest.constant_term();
    return out;
}

} // namespace kacpoly
