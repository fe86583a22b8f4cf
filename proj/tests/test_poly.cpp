#include <doctest.h>

#include "flcc/poly.hpp"
#include "flcc/rng.hpp"

using namespace flcc;

TEST_CASE("evaluation") {
    PrimeField f(17);
    CHECK(poly_eval(f, {0}, 5) == 0);
    CHECK(poly_eval(f, {1, 1}, 10) == 11);
    CHECK(poly_eval(f, {1, 1}, 1) == 2);
    CHECK(poly_eval(f, {}, 3) == 0);
    // trailing zeros do not change evaluation
    CHECK(poly_eval(f, {4, 2, 0, 0}, 9) == poly_eval(f, {4, 2}, 9));
}

TEST_CASE("lagrange monomials") {
    PrimeField f(17);
    SUBCASE("single node is the constant 1") {
        std::vector<Fe> nodes{5};
        Poly l0 = lagrange_monomial(f, 0, nodes);
        CHECK(poly_eval(f, l0, 3) == 1);
        CHECK(poly_degree(l0) == 0);
    }
    SUBCASE("defining property on two and three nodes") {
        std::vector<Fe> two{1, 2};
        Poly l = lagrange_monomial(f, 0, two);
        CHECK(poly_eval(f, l, 1) == 1);
        CHECK(poly_eval(f, l, 2) == 0);

        std::vector<Fe> three{1, 2, 3};
        Poly l2 = lagrange_monomial(f, 1, three);
        CHECK(poly_eval(f, l2, 2) == 1);
        CHECK(poly_eval(f, l2, 1) == 0);
        CHECK(poly_eval(f, l2, 3) == 0);
        CHECK(poly_degree(l2) == 2);
    }
    SUBCASE("duplicate nodes rejected") {
        std::vector<Fe> dup{4, 4};
        CHECK_THROWS_AS(lagrange_monomial(f, 0, dup), std::invalid_argument);
    }
}

TEST_CASE("lagrange basis partitions unity") {
    PrimeField f(257);
    std::vector<Fe> nodes{3, 9, 27, 81, 100};
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Fe x = random_fe(rng, f);
        Fe sum = 0;
        for (std::size_t j = 0; j < nodes.size(); ++j)
            sum = f.add(sum, poly_eval(f, lagrange_monomial(f, j, nodes), x));
        CHECK(sum == 1);
    }
}

TEST_CASE("interpolation") {
    PrimeField f(17);
    SUBCASE("single point gives a constant") {
        std::vector<std::pair<Fe, Fe>> pts{{4, 9}};
        CHECK(poly_equal(interpolate(f, pts), {9}));
    }
    SUBCASE("two points") {
        std::vector<std::pair<Fe, Fe>> pts{{0, 1}, {1, 2}};
        CHECK(poly_equal(interpolate(f, pts), {1, 1}));
    }
    SUBCASE("duplicate x rejected") {
        std::vector<std::pair<Fe, Fe>> pts{{4, 0}, {4, 0}};
        CHECK_THROWS_AS(interpolate(f, pts), std::invalid_argument);
    }
}

TEST_CASE("interpolate/eval round trip on random polynomials") {
    PrimeField f(257);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t deg = uniform_below(rng, 8);
        Poly p(deg + 1);
        for (auto& c : p) c = random_fe(rng, f);
        std::vector<std::pair<Fe, Fe>> pts;
        Fe x = 1;
        for (std::size_t i = 0; i <= deg; ++i) {
            pts.emplace_back(x, poly_eval(f, p, x));
            x = f.mul(x, f.gamma());
        }
        CHECK(poly_equal(interpolate(f, pts), p));
    }
}
