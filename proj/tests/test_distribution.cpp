#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "kacpoly/distribution.hpp"
#include "kacpoly/error.hpp"

using namespace kacpoly;

namespace {

const Poly k4_23 = Poly::from_integers({2, 4, 9, 12, 15, 14, 13, 9, 7, 4, 3, 1, 1});

std::vector<GraphPoint> points(std::initializer_list<std::pair<Rational, Rational>> xy) {
    std::vector<GraphPoint> out;
    for (const auto& [x, y] : xy) out.push_back({x, y});
    return out;
}

}  // namespace

TEST_CASE("coefficient_graph examples") {
    const Poly q = Poly::q_power(1);
    CHECK(coefficient_graph(q, Parity::even).points == points({{0, 1}}));
    CHECK(coefficient_graph(q, Parity::odd).points.empty());

    CHECK(coefficient_graph(k4_23, Parity::even).points ==
          points({{0, Rational(2, 15)},
                  {Rational(1, 6), Rational(3, 5)},
                  {Rational(1, 3), 1},
                  {Rational(1, 2), Rational(13, 15)},
                  {Rational(2, 3), Rational(7, 15)},
                  {Rational(5, 6), Rational(1, 5)},
                  {1, Rational(1, 15)}}));
    CHECK(coefficient_graph(k4_23, Parity::odd).points ==
          points({{Rational(1, 12), Rational(4, 15)},
                  {Rational(1, 4), Rational(4, 5)},
                  {Rational(5, 12), Rational(14, 15)},
                  {Rational(7, 12), Rational(3, 5)},
                  {Rational(3, 4), Rational(4, 15)},
                  {Rational(11, 12), Rational(1, 15)}}));
    CHECK_THROWS_AS(coefficient_graph(Poly(), Parity::even), ZeroPolynomial);
}

TEST_CASE("merging parities recovers the coefficients") {
    const Poly a = Poly::from_integers({0, 0, 3, 1, 4, 1, 5, 9, 2, 6});
    const auto even = coefficient_graph(a, Parity::even), odd = coefficient_graph(a, Parity::odd);
    const std::int64_t span = a.degree() - a.valuation();
    std::vector<Rational> merged(static_cast<std::size_t>(span + 1));
    Rational top = 0;
    for (const auto* g : {&even, &odd})
        for (const auto& p : g->points) {
            merged[static_cast<std::size_t>(Rational(p.x * span).get_num().get_si())] = p.y;
            top = std::max(top, p.y);
        }
    CHECK(top == 1);
    for (std::int64_t j = 0; j <= span; ++j)
        CHECK(merged[static_cast<std::size_t>(j)] * 9 == a.coefficient(j + a.valuation()));
}

TEST_CASE("unimodality_check examples") {
    const auto even = unimodality_check(k4_23, Parity::even);
    CHECK(even.unimodal);
    CHECK(even.peak_index == 2);
    CHECK(unimodality_check(k4_23, Parity::odd).unimodal);
    const auto c = unimodality_check(Poly(5L), Parity::even);
    CHECK(c.unimodal);
    CHECK(c.peak_index == 0);
    CHECK_FALSE(unimodality_check(std::vector<Integer>{1, 3, 2, 4}).unimodal);
    CHECK(unimodality_check(std::vector<Integer>{1, 2, 2, 1}).unimodal);
    CHECK(unimodality_check(std::vector<Integer>{}).unimodal);
    CHECK_THROWS_AS(unimodality_check(Poly(), Parity::odd), ZeroPolynomial);
}

TEST_CASE("distribution CSV") {
    std::ostringstream os;
    write_distribution_csv(os, {coefficient_graph(Poly::from_integers({1, 2, 1}), Parity::even),
                                coefficient_graph(Poly::from_integers({1, 2, 1}), Parity::odd)});
    CHECK(os.str() ==
          "parity,x_num,x_den,y_num,y_den,x_float,y_float\n"
          "even,0,1,1,2,0,0.5\n"
          "even,1,1,1,2,1,0.5\n"
          "odd,1,2,1,1,0.5,1\n");
}
