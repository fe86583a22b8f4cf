#include <doctest.h>

#include "flcc/linalg.hpp"
#include "flcc/rng.hpp"

using namespace flcc;

namespace {

MatFq random_mat(std::mt19937_64& rng, const PrimeField& f, std::size_t r, std::size_t c) {
    MatFq m(r, c);
    for (auto& v : m.data) v = random_fe(rng, f);
    return m;
}

}  // namespace

TEST_CASE("rref basics") {
    PrimeField f(17);
    SUBCASE("identity is fixed") {
        auto [r, piv] = rref(f, MatFq::identity(4));
        CHECK(piv == std::vector<std::size_t>{0, 1, 2, 3});
        CHECK(r.data == MatFq::identity(4).data);
    }
    SUBCASE("zero matrix") {
        auto [r, piv] = rref(f, MatFq(3, 3));
        CHECK(piv.empty());
    }
    SUBCASE("dependent rows collapse") {
        MatFq a(2, 2);
        a.at(0, 0) = 1; a.at(0, 1) = 2;
        a.at(1, 0) = 2; a.at(1, 1) = 4;
        CHECK(rank(f, a) == 1);
    }
}

TEST_CASE("solve_affine") {
    PrimeField f(17);
    SUBCASE("invertible system has empty basis") {
        std::vector<Fe> b{5, 7, 11};
        auto sol = solve_affine(f, MatFq::identity(3), b);
        REQUIRE(sol);
        CHECK(sol->particular == b);
        CHECK(sol->dimension() == 0);
    }
    SUBCASE("zero system spans everything") {
        std::vector<Fe> b{0, 0};
        auto sol = solve_affine(f, MatFq(2, 3), b);
        REQUIRE(sol);
        CHECK(sol->dimension() == 3);
        // identity sits on the free rows
        for (std::size_t j = 0; j < 3; ++j) CHECK(sol->basis.at(sol->free_rows[j], j) == 1);
    }
    SUBCASE("underdetermined 1x2 system, exhaustive verification") {
        MatFq a(1, 2);
        a.at(0, 0) = 1; a.at(0, 1) = 1;
        std::vector<Fe> b{3};
        auto sol = solve_affine(f, a, b);
        REQUIRE(sol);
        CHECK(sol->dimension() == 1);
        for (Fe x = 0; x < 17; ++x) {
            std::vector<Fe> xs{x};
            auto v = sol->point(f, xs);
            CHECK(f.add(v[0], v[1]) == 3);
        }
    }
    SUBCASE("inconsistent system reports nullopt") {
        MatFq a(2, 1);
        a.at(0, 0) = 1;
        a.at(1, 0) = 1;
        std::vector<Fe> b{1, 2};
        CHECK_FALSE(solve_affine(f, a, b));
    }
}

TEST_CASE("null space") {
    PrimeField f(17);
    SUBCASE("full column rank gives zero width") {
        CHECK(null_space(f, MatFq::identity(3)).cols == 0);
    }
    SUBCASE("zero matrix gives identity") {
        MatFq ns = null_space(f, MatFq(4, 4));
        CHECK(ns.cols == 4);
        CHECK(ns.data == MatFq::identity(4).data);
    }
    SUBCASE("1x2 example") {
        MatFq a(1, 2);
        a.at(0, 0) = 1; a.at(0, 1) = 2;
        MatFq ns = null_space(f, a);
        REQUIRE(ns.cols == 1);
        CHECK(f.add(ns.at(0, 0), f.mul(2, ns.at(1, 0))) == 0);
        CHECK((ns.at(0, 0) != 0 || ns.at(1, 0) != 0));
    }
}

TEST_CASE("vandermonde") {
    PrimeField f(17);
    std::vector<Fe> nodes{1, 2};
    MatFq v = vandermonde(f, nodes, 3);
    CHECK(v.data == std::vector<Fe>{1, 1, 1, 1, 2, 4});
    SUBCASE("k=1 is the all-ones column") {
        MatFq v1 = vandermonde(f, nodes, 1);
        CHECK(v1.data == std::vector<Fe>{1, 1});
    }
    SUBCASE("square vandermonde on distinct nodes is invertible") {
        std::vector<Fe> four{3, 5, 7, 11};
        CHECK(rank(f, vandermonde(f, four, 4)) == 4);
    }
}

TEST_CASE("randomized structure properties") {
    PrimeField f(257);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + uniform_below(rng, 6), c = 1 + uniform_below(rng, 6);
        MatFq a = random_mat(rng, f, r, c);
        // rank is invariant under rref
        auto [rr, piv] = rref(f, a);
        CHECK(rank(f, rr) == piv.size());

        // null-space columns are annihilated and independent
        MatFq ns = null_space(f, a);
        CHECK(ns.cols == c - piv.size());
        if (ns.cols > 0) {
            MatFq prod = mat_mul(f, a, ns);
            CHECK(std::all_of(prod.data.begin(), prod.data.end(), [](Fe v) { return v == 0; }));
            CHECK(rank(f, ns) == ns.cols);
        }

        // affine parametrization satisfies the system for random x
        std::vector<Fe> x0(c);
        for (auto& v : x0) v = random_fe(rng, f);
        std::vector<Fe> b = mat_vec(f, a, x0);
        auto sol = solve_affine(f, a, b);
        REQUIRE(sol);
        std::vector<Fe> xs(sol->dimension());
        for (auto& v : xs) v = random_fe(rng, f);
        auto pt = sol->point(f, xs);
        CHECK(mat_vec(f, a, pt) == b);
        CHECK(sol->contains(f, x0));
    }
}

TEST_CASE("vandermonde rank is min(nodes, k)") {
    PrimeField f(101);
    std::vector<Fe> nodes;
    Fe v = 1;
    for (int i = 0; i < 7; ++i) {
        nodes.push_back(v);
        v = f.mul(v, f.gamma());
    }
    for (std::size_t k = 1; k <= 10; ++k)
        CHECK(rank(f, vandermonde(f, nodes, k)) == std::min<std::size_t>(nodes.size(), k));
}
