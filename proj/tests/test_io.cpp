#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "kacpoly/cache.hpp"
#include "kacpoly/error.hpp"
#include "kacpoly/io.hpp"

using namespace kacpoly;

TEST_CASE("quiver documents") {
    const Quiver q = parse_quiver(R"({"vertices": ["1", "2"],
        "arrows": [{"name": "alpha", "from": "1", "to": "2"}, {"name": "beta", "from": "2", "to": "2", "mult": 3}]})");
    CHECK(q == families::tennis_racket(1, 3));
    CHECK(parse_quiver(quiver_to_json(q).dump()) == q);
    CHECK(load_quiver(std::string(KACPOLY_DATA_DIR) + "/quivers/K4.quiver") == families::kronecker(4));
    CHECK(load_quiver(std::string(KACPOLY_DATA_DIR) + "/quivers/S1.quiver") == families::multiloop(1));
    CHECK(load_quiver(std::string(KACPOLY_DATA_DIR) + "/quivers/tennis-racket.quiver") == families::tennis_racket(1, 1));
}

TEST_CASE("quiver parse errors") {
    try {
        parse_quiver("{\n  \"vertices\": [\"1\"],\n  \"arrows\": [,]\n}");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 14);
    }
    CHECK_THROWS_AS(parse_quiver(R"({"vertices": ["1"], "edges": []})"), ParseError);
    CHECK_THROWS_AS(parse_quiver(R"({"vertices": ["1"], "arrows": [{"name": "a", "from": "1", "to": "1", "w": 1}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_quiver(R"({"arrows": []})"), ParseError);
    CHECK_THROWS_AS(parse_quiver(R"({"vertices": [1]})"), ParseError);
    CHECK_THROWS_AS(parse_quiver(R"({"vertices": ["1"], "arrows": [{"name": "a", "from": "1", "to": "1", "mult": "2"}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_quiver(R"({"vertices": ["1"], "arrows": [{"name": "a", "from": "1", "to": "3"}]})"),
                    InputError);
    CHECK_THROWS_AS(load_quiver("/nonexistent/file.quiver"), InputError);
}

TEST_CASE("command-line vectors") {
    const Quiver t = families::tennis_racket(1, 1);
    CHECK(parse_dim(t, "2, 3") == DimVector{{2, 3}});
    CHECK_THROWS_AS(parse_dim(t, "2"), KeyMismatch);
    CHECK_THROWS_AS(parse_dim(t, "2,x"), InputError);
    CHECK(parse_mult(t, "inf,2") == MultVector{{kInfinite, 2}});
    CHECK_THROWS_AS(parse_mult(t, "1,-1"), InputError);
    CHECK(parse_names("beta, alpha") == std::vector<std::string>{"beta", "alpha"});
}

TEST_CASE("polynomial records") {
    const Poly p = Poly::from_rationals({0, 0, Rational(3, 2), -7});
    const Json rec = poly_record(p);
    CHECK(rec.dump() == R"({"valuation":2,"coefficients":["3/2","-7"]})");
    CHECK(poly_from_record(rec) == p);
    CHECK(poly_record(Poly()).dump() == R"({"valuation":0,"coefficients":[]})");
    CHECK(poly_from_record(poly_record(Poly())).is_zero());
    CHECK_THROWS_AS(poly_from_record(Json::parse(R"({"valuation":0,"coefficients":["x"]})")), ParseError);
}

TEST_CASE("decomposition documents") {
    const auto dec = param_kac(families::multiloop(1), {{2}}, {"loop"});
    const Json j = decomposition_to_json(dec);
    CHECK(j["denominator"] == poly_record(dec.denominator));
    CHECK(j["groups"].size() == 2);
    CHECK(j["groups"][0]["linear"]["loop"] == 2);
    CHECK(decomposition_text(dec) ==
          "denominator: -1 + q^2\ncyclotomic: Phi_1 Phi_2\nq^(2*n_loop - 1) * (-1)\nq^(4*n_loop - 1) * (1)\n");
}

TEST_CASE("result cache") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    const auto dir = std::filesystem::temp_directory_path() / "kacpoly-cache-test";
    std::filesystem::remove_all(dir);
    ResultCache cache(dir, true);
    const auto key = ResultCache::key("compute|K1|2,2");
    CHECK_FALSE(cache.get(key).has_value());
    cache.put(key, "payload\nwith lines\n");
    CHECK(cache.get(key) == std::optional<std::string>("payload\nwith lines\n"));
    CHECK(ResultCache::key("a") != ResultCache::key("b"));

    ResultCache off(dir, false);
    CHECK_FALSE(off.get(key).has_value());
    std::filesystem::remove_all(dir);
}
