#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kacpoly/asymptotics.hpp"
#include "kacpoly/error.hpp"
#include "oracles.hpp"

using namespace kacpoly;
using namespace kacpoly::families;

namespace {

Poly P(std::initializer_list<long> c) { return Poly::from_integers(c); }

std::vector<Integer> prefix(const char* key) { return oracle::integers(oracle::printed_limits().at(key)); }

}  // namespace

TEST_CASE("expand_series") {
    CHECK(expand_series(P({1}), P({1, -1}), 4) == oracle::integers({1, 1, 1, 1, 1}));
    CHECK(expand_series(P({1, 2}), power(P({1, -1}), 3) * power(P({1, 1}), 2), 10) == prefix("K(2,2)"));
    CHECK(expand_series(P({1}), P({1, -1}) * P({1, 0, 0, -1}), 10) == oracle::inverse_product({{1, 1}, {3, 1}}, 10));
    CHECK_THROWS_AS(expand_series(P({1}), P({2, 1}), 3), InvariantViolation);
    CHECK_THROWS_AS(expand_series(P({1}), P({0, 1}), 3), InputError);
}

TEST_CASE("limit_series examples") {
    const auto k = param_kac(kronecker(1), {{2, 2}}, {"arrow"});
    const auto lk = limit_series(k, LimitSpec::all_infinite(k));
    CHECK(lk.coefficients == prefix("K(2,2)"));
    CHECK(lk.numerator == -P({1, 2}));
    CHECK(lk.survivors == std::vector<std::size_t>{0});

    const auto s = param_kac(multiloop(1), {{3}}, {"loop"});
    const auto ls = limit_series(s, LimitSpec::direction({{0}}, {{1}}));
    CHECK(ls.coefficients == prefix("S3"));
    CHECK(ls.slope == 3);
    CHECK(ls.offset == -2);

    const auto t = param_kac(tennis_racket(1, 1), {{2, 3}}, {"alpha", "beta"});
    const auto lt = limit_series(t, LimitSpec::direction({{0, 0}}, {{1, 1}}));
    CHECK(lt.coefficients == prefix("T(2,3)"));
    CHECK(limit_series(t, LimitSpec::all_infinite(t, 10, true)).coefficients == prefix("T(2,3)"));
}

TEST_CASE("componentwise limits on loops need the acknowledgment") {
    const auto s = param_kac(multiloop(1), {{2}}, {"loop"});
    CHECK_THROWS_AS(limit_series(s, LimitSpec::all_infinite(s)), InputError);
    CHECK(limit_series(s, LimitSpec::all_infinite(s, 10, true)).coefficients == prefix("S2"));
}

TEST_CASE("componentwise limit with a fixed arrow") {
    // n_alpha fixed at 1: A_{(1,1)} = q^{n_beta}, renormalized to 1
    const auto t = param_kac(tennis_racket(1, 1), {{1, 1}}, {"alpha", "beta"});
    const auto l = limit_series(t, LimitSpec::componentwise({{1, kInfinite}}, 5, true));
    CHECK(l.coefficients == oracle::integers({1, 0, 0, 0, 0, 0}));
}

TEST_CASE("limit prefix agrees with large finite instances") {
    const auto k = param_kac(kronecker(1), {{2, 3}}, {"arrow"});
    const auto l = limit_series(k, LimitSpec::all_infinite(k));
    CHECK(l.coefficients == prefix("K(2,3)"));
    const Poly a = kac_direct(kronecker(14), {{2, 3}}).poly;
    CHECK_FALSE(prefix_rate(a, l.coefficients).has_value());
}

TEST_CASE("reciprocal limits") {
    const auto k = param_kac(kronecker(1), {{1, 1}}, {"arrow"});
    const auto rk = reciprocal_limit(k, LimitSpec::all_infinite(k));
    CHECK(rk.coefficients == oracle::inverse_product({{1, 1}}, 10));

    const auto s = param_kac(multiloop(1), {{2}}, {"loop"});
    const auto rs = reciprocal_limit(s, LimitSpec::direction({{0}}, {{1}}));
    CHECK(rs.coefficients == oracle::inverse_product({{2, 1}}, 10));
    CHECK(rs.coefficients[0] == 1);

    const auto t = param_kac(tennis_racket(1, 1), {{2, 2}}, {"alpha", "beta"});
    CHECK(reciprocal_limit(t, LimitSpec::direction({{0, 0}}, {{1, 1}})).coefficients[0] == 1);
}

TEST_CASE("degree exponent") {
    const auto k = param_kac(kronecker(1), {{2, 2}}, {"arrow"});
    const auto e = degree_exponent(k);
    CHECK(e.constant == -7);
    CHECK(e.linear_coefficient("arrow") == 4);
}

TEST_CASE("rates on the Kronecker family") {
    const auto k = param_kac(kronecker(1), {{2, 2}}, {"arrow"});
    const auto spec = LimitSpec::all_infinite(k);
    const auto rate = predicted_rate(k, spec);
    CHECK(rate.slope == 1);
    CHECK(rate.offset == -1);
    const auto lim = limit_series(k, spec);
    for (std::int64_t r = 3; r <= 8; ++r) {
        CHECK(path_point(k, spec, r) == MultVector{{r}});
        const Poly a = kac_direct(kronecker(r), {{2, 2}}).poly;
        CHECK(measured_rate(a, 0, lim) == r - 1);
        CHECK(prefix_rate(a, lim.coefficients) == r - 1);
    }
}

TEST_CASE("rates on the multiloop family") {
    const auto s2 = param_kac(multiloop(1), {{2}}, {"loop"});
    const auto spec = LimitSpec::direction({{0}}, {{1}});
    const auto rate = predicted_rate(s2, spec);
    const auto lim = limit_series(s2, spec);
    for (std::int64_t g = 1; g <= 5; ++g) {
        const Poly a = kac_direct(multiloop(g), {{2}}).poly;
        CHECK(measured_rate(a, lim.slope * g + lim.offset, lim) == rate.at(g));
        CHECK(rate.at(g) == 2 * g);
    }
    const auto s1 = param_kac(multiloop(1), {{1}}, {"loop"});
    CHECK_THROWS_AS(predicted_rate(s1, spec), LimitError);
}

TEST_CASE("valuation report") {
    for (const auto& r : valuation_report(multiloop(1), {{4}}, 3, 2)) {
        CHECK(r.match);
        CHECK(r.actual == 1 + r.d.entries[0] * (r.n.entries[0] - 1));
    }
    const auto tennis = valuation_report(tennis_racket(1, 1), {{2, 2}}, 2);
    CHECK_FALSE(tennis.empty());
    for (const auto& r : tennis) {
        CHECK(r.match);
        if (r.d.entries[1] >= 1) CHECK(r.actual == 1 + r.d.entries[1] * (r.n.entries[1] - 1));
    }
    for (const auto& r : valuation_report(kronecker(1), {{2, 2}}, 3)) CHECK(r.actual == 0);
}

TEST_CASE("witt_dim") {
    CHECK(witt_dim({1, 0}) == 1);
    CHECK(witt_dim({2, 2}) == 1);
    CHECK(witt_dim({3, 5}) == 7);
    for (std::int64_t a = 1; a <= 6; ++a)
        for (std::int64_t b = 1; b <= 6; ++b) CHECK(witt_dim({a, b}) == oracle::witt_by_necklaces({a, b}));
    CHECK(witt_dim({2, 2, 2}) == oracle::witt_by_necklaces({2, 2, 2}));
}
