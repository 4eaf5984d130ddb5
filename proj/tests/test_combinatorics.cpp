#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "kacpoly/arith.hpp"
#include "kacpoly/error.hpp"
#include "kacpoly/partition.hpp"
#include "oracles.hpp"

using namespace kacpoly;

TEST_CASE("partitions_up_to examples") {
    const auto zero = partitions_up_to(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());

    const auto four = partitions_up_to(4);
    CHECK(four.size() == 12);
    std::vector<int> per_size(5, 0);
    for (const auto& p : four) ++per_size[static_cast<std::size_t>(p.size())];
    CHECK(per_size == std::vector<int>{1, 1, 2, 3, 5});

    CHECK(partitions_of(10).size() == 42);
}

TEST_CASE("partition counts agree with the pentagonal recurrence") {
    const auto p = oracle::partition_counts(25);
    for (int n = 0; n <= 25; ++n) {
        const auto parts = partitions_of(n);
        CHECK(static_cast<long>(parts.size()) == p[static_cast<std::size_t>(n)]);
        std::set<Partition> distinct(parts.begin(), parts.end());
        CHECK(distinct.size() == parts.size());
        for (std::size_t i = 1; i < parts.size(); ++i) CHECK(parts[i - 1] > parts[i]);
        for (const auto& lam : parts) CHECK(lam.size() == n);
    }
}

TEST_CASE("conjugation and multiplicities") {
    const Partition lam{4, 2, 2, 1};
    CHECK(lam.conjugate() == Partition{4, 3, 1, 1});
    CHECK(lam.multiplicity(2) == 2);
    CHECK(lam.multiplicities() == std::vector<int>{1, 2, 0, 1});
    for (const auto& mu : partitions_up_to(9)) CHECK(mu.conjugate().conjugate() == mu);
    CHECK_THROWS_AS(Partition({1, 2}), InputError);
    CHECK_THROWS_AS(Partition({2, 0}), InputError);
}

TEST_CASE("pairing examples") {
    CHECK(pairing(Partition{1}, Partition{1}) == 1);
    CHECK(pairing(Partition{}, Partition{3, 1}) == 0);
    CHECK(pairing(Partition{2, 1}, Partition{2}) == 3);
}

TEST_CASE("the two pairing formulas agree") {
    const auto all = partitions_up_to(7);
    for (const auto& a : all)
        for (const auto& b : all) {
            CHECK(pairing(a, b) == pairing_by_multiplicities(a, b));
            CHECK(pairing(a, b) == pairing(b, a));
        }
}

TEST_CASE("phi and b examples") {
    const Poly qm1 = Poly::from_integers({-1, 1});
    CHECK(phi(0) == RationalFunction(1L));
    CHECK(phi(1) == ratfn_reduce(qm1, Poly::q_power(1)));
    CHECK(phi(2) == ratfn_reduce(qm1 * Poly::from_integers({-1, 0, 1}), Poly::q_power(3)));
    CHECK(b_of(Partition{}) == RationalFunction(1L));
    CHECK(b_of(Partition{1, 1}) == phi(2));
    CHECK(b_of(Partition{2, 1}) == phi(1) * phi(1));
    for (const auto& lam : partitions_up_to(8)) CHECK(b_of(lam) == b_of_conjugate(lam));
}

TEST_CASE("moebius and divisors") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(6) == 1);
    CHECK(divisors(1) == std::vector<std::int64_t>{1});
    CHECK(divisors(6) == std::vector<std::int64_t>{1, 2, 3, 6});
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    for (std::int64_t n = 1; n <= 300; ++n) {
        CHECK(divisors(n) == oracle::trial_divisors(n));
        CHECK(moebius(n) == oracle::trial_moebius(n));
        int mu_sum = 0;
        std::int64_t phi_sum = 0;
        for (auto d : divisors(n)) {
            mu_sum += moebius(d);
            phi_sum += totient(d);
        }
        CHECK(mu_sum == (n == 1 ? 1 : 0));
        CHECK(phi_sum == n);
    }
    CHECK_THROWS_AS(moebius(0), InputError);
    CHECK(gcd_all({4, 6, 10}) == 2);
    CHECK(gcd_all({0, 0}) == 0);
}
