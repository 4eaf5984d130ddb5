#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kacpoly/cyclotomic.hpp"
#include "kacpoly/error.hpp"
#include "kacpoly/poly.hpp"
#include "kacpoly/ratfunc.hpp"

using namespace kacpoly;

namespace {

Poly random_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(-1, max_degree);
    std::vector<Integer> c(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& x : c) x = coeff(rng);
    return Poly::from_integers(c);
}

}  // namespace

TEST_CASE("poly arithmetic examples") {
    const Poly one_plus_q = Poly::from_integers({1, 1});
    const Poly one_minus_q = Poly::from_integers({1, -1});
    CHECK(poly_arith(one_plus_q, one_minus_q, ArithOp::mul) == Poly::from_integers({1, 0, -1}));

    const Poly expanded = power(Poly::from_integers({-1, 1}), 3) * power(one_plus_q, 2);
    CHECK(expanded == Poly::from_integers({-1, 1, 2, -2, -1, 1}));

    const Poly p = Poly::from_integers({3, 0, -2, 7});
    CHECK(poly_arith(p, Poly(), ArithOp::add) == p);
    CHECK(poly_arith(p, p, ArithOp::sub).is_zero());
}

TEST_CASE("poly ring laws on random inputs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Poly a = random_poly(rng, 6), b = random_poly(rng, 6), c = random_poly(rng, 6);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Poly());
        CHECK(a * Poly(1L) == a);
        if (!b.is_zero()) {
            const DivMod qr = divmod(a, b);
            CHECK(qr.quotient * b + qr.remainder == a);
            CHECK(qr.remainder.degree() < b.degree());
            CHECK(exact_divide(a * b, b) == a);
        }
    }
}

TEST_CASE("poly accessors") {
    const Poly p = Poly::from_rationals({Rational(0), Rational(1, 2), Rational(0), Rational(3)});
    CHECK(p.valuation() == 1);
    CHECK(p.degree() == 3);
    CHECK(p.coefficient(1) == Rational(1, 2));
    CHECK(p.coefficient(99) == 0);
    CHECK_FALSE(p.is_integral());
    CHECK(p.to_string() == "1/2*q + 3*q^3");
    CHECK(Poly().to_string() == "0");
    CHECK(Poly().degree() == -1);
    CHECK(Poly::from_integers({1, 1}).adams(3) == Poly::from_integers({1, 0, 0, 1}));
    CHECK(Poly::from_integers({1, 2}).reversed(3) == Poly::from_integers({0, 0, 2, 1}));
    CHECK(Poly::from_integers({0, 0, 5}).shift(-2) == Poly(5L));
    CHECK_THROWS_AS(Poly::from_integers({1, 1}).shift(-1), NotDivisible);
    CHECK(Poly::from_integers({2, 4}).monic() == Poly::from_rationals({Rational(1, 2), Rational(1)}));
    CHECK(Poly::from_rationals({Rational(-1, 2), Rational(-1, 3)}).primitive() == Poly::from_integers({3, 2}));
}

TEST_CASE("ratfn_reduce examples") {
    CHECK(ratfn_reduce(Poly::from_integers({-1, 0, 1}), Poly::from_integers({-1, 1})) ==
          RationalFunction(Poly::from_integers({1, 1})));
    const Poly den = power(Poly::from_integers({-1, 1}), 3) * power(Poly::from_integers({1, 1}), 2);
    CHECK(ratfn_reduce(Poly::from_integers({-1, 0, 3, 0, -3, 0, 1}), den) ==
          RationalFunction(Poly::from_integers({1, 1})));
    CHECK(ratfn_reduce(Poly(), Poly::from_integers({1, 1})).is_zero());
    CHECK_THROWS_AS(ratfn_reduce(Poly(1L), Poly()), ZeroDenominator);
}

TEST_CASE("rational function field laws") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        Poly n1 = random_poly(rng, 4), d1 = random_poly(rng, 3), n2 = random_poly(rng, 4), d2 = random_poly(rng, 3);
        if (d1.is_zero() || d2.is_zero()) continue;
        const auto a = ratfn_reduce(n1, d1), b = ratfn_reduce(n2, d2);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a - b) + b == a);
        CHECK(a.denominator().leading() == 1);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK((a * b).adams(2) == a.adams(2) * b.adams(2));
    }
    CHECK(RationalFunction::q_power(-2) * RationalFunction::q_power(2) == RationalFunction(1L));
    CHECK_THROWS_AS(RationalFunction::q_power(-1).to_polynomial(), NotPolynomial);
}

TEST_CASE("exact_divide examples") {
    CHECK(exact_divide(Poly::from_integers({1, 0, 0, 0, -1}), Poly::from_integers({1, 0, -1})) ==
          Poly::from_integers({1, 0, 1}));
    const int g = 3;
    CHECK(exact_divide(Poly(1L) - Poly::q_power(2 * g), Poly::from_integers({1, 0, -1})) ==
          Poly::from_integers({1, 0, 1, 0, 1}));
    CHECK_THROWS_AS(exact_divide(Poly::q_power(3), Poly::from_integers({1, 1})), NotDivisible);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == Poly::from_integers({-1, 1}));
    CHECK(cyclotomic(2) == Poly::from_integers({1, 1}));
    CHECK(cyclotomic(3) == Poly::from_integers({1, 1, 1}));
    CHECK(cyclotomic(4) == Poly::from_integers({1, 0, 1}));
    CHECK(cyclotomic(6) == Poly::from_integers({1, -1, 1}));
    // q^n - 1 is the product of Phi_k over k | n
    for (std::int64_t n = 1; n <= 30; ++n) {
        Poly prod(1L);
        for (std::int64_t k = 1; k <= n; ++k)
            if (n % k == 0) prod *= cyclotomic(k);
        CHECK(prod == Poly::q_power(n) - Poly(1L));
    }
}

TEST_CASE("cyclotomic_certify examples") {
    auto c = cyclotomic_certify(Poly::from_integers({1, 0, -1}));
    CHECK(c.factors == std::vector<CyclotomicFactor>{{1, 1}, {2, 1}});
    CHECK(c.constant == -1);
    CHECK(c.expand() == Poly::from_integers({1, 0, -1}));

    const Poly den = power(Poly::from_integers({1, -1}), 3) * power(Poly::from_integers({1, 1}), 2) *
                     Poly::from_integers({1, 0, 0, -1});
    c = cyclotomic_certify(den);
    CHECK(c.factors == std::vector<CyclotomicFactor>{{1, 4}, {2, 2}, {3, 1}});
    CHECK(c.expand() == den);

    CHECK_THROWS_AS(cyclotomic_certify(Poly::from_integers({-2, 0, 1})), NotCyclotomic);
    CHECK_THROWS_AS(cyclotomic_certify(Poly()), InputError);
    CHECK_THROWS_AS(cyclotomic_certify(Poly::from_integers({0, 1})), InputError);
}
