#include <doctest.h>

#include <set>

#include "flcc/flcc.hpp"
#include "flcc/rng.hpp"

using namespace flcc;

namespace {

OptimalS exhaustive_optimal_s(std::int64_t m, const Rational& r) {
    OptimalS best{1, radius_fraction(m, r, 1)};
    for (std::int64_t s = 2; s <= m; ++s) {
        Rational a = radius_fraction(m, r, s);
        if (a > best.a) best = {s, a};
    }
    return best;
}

MatFq random_mat(std::mt19937_64& rng, const PrimeField& f, std::size_t r, std::size_t c) {
    MatFq m(r, c);
    for (auto& v : m.data) v = random_fe(rng, f);
    return m;
}

}  // namespace

TEST_CASE("lcc threshold") {
    CHECK(lcc_threshold(1000, 180, 11, 20, 2) == 299);
    CHECK(lcc_threshold(1002, 180, 11, 20, 2) == 300);  // two workers buy one adversary
    // boundary: N exactly (K+T-1)D2 + S + 1
    CHECK(lcc_threshold((180 + 11 - 1) * 2 + 20 + 1, 180, 11, 20, 2) == 0);
    CHECK_THROWS_AS(lcc_threshold(10, 180, 11, 20, 2), std::invalid_argument);
}

TEST_CASE("modified rate") {
    CHECK(modified_rate(1000, 180, 11, 20, 2, 1) == Rational((180 + 11 - 1) * 2 + 1, 980));
    CHECK(modified_rate(1000, 180, 11, 20, 2, 100) == Rational(38298, 98000));
    CHECK(modified_rate(40, 2, 1, 2, 2, 4) == Rational(13, 76));
    CHECK_THROWS_AS(modified_rate(20, 2, 1, 20, 2, 4), std::invalid_argument);
}

TEST_CASE("optimal fold-aggregation order") {
    SUBCASE("m = 1 collapses to unique decoding") {
        Rational r(1, 3);
        OptimalS o = optimal_s(1, r);
        CHECK(o.s_star == 1);
        CHECK(o.a == (1 - r) / 2);
    }
    SUBCASE("figure family at m = 100") {
        OptimalS o = optimal_s(100, Rational(38298, 98000));
        CHECK(o.s_star == 10);
        CHECK(to_double(o.a) == doctest::Approx(0.5187).epsilon(1e-3));
    }
    SUBCASE("low-rate family at m = 4 picks the interior maximum") {
        OptimalS o = optimal_s(4, Rational(13, 76));
        OptimalS ex = exhaustive_optimal_s(4, Rational(13, 76));
        CHECK(o.s_star == ex.s_star);
        CHECK(o.a == ex.a);
    }
    SUBCASE("matches exhaustive argmax across a parameter grid") {
        std::vector<Rational> rates;
        for (std::int64_t num = 1; num <= 19; num += 2) rates.emplace_back(num, 20);
        rates.emplace_back(1, 1000);
        rates.emplace_back(999, 1000);
        for (std::int64_t m = 1; m <= 200; m += (m < 20 ? 1 : 7)) {
            for (const auto& r : rates) {
                OptimalS got = optimal_s(m, r);
                OptimalS want = exhaustive_optimal_s(m, r);
                CAPTURE(m);
                CAPTURE(to_double(r));
                CHECK(got.s_star == want.s_star);
                CHECK(got.a == want.a);
            }
        }
    }
    SUBCASE("degenerate mr = 1") {
        for (std::int64_t m : {4, 9, 100}) {
            Rational r(1, m);
            OptimalS got = optimal_s(m, r);
            OptimalS want = exhaustive_optimal_s(m, r);
            CHECK(got.s_star == want.s_star);
            CHECK(got.a == want.a);
        }
    }
}

TEST_CASE("flcc thresholds") {
    SUBCASE("m = 1 equals the LCC threshold across a grid") {
        int checked = 0;
        for (std::int64_t N : {100, 400, 1000}) {
            for (std::int64_t K : {5, 50, 180}) {
                for (std::int64_t T : {0, 3, 11}) {
                    for (std::int64_t S : {0, 20}) {
                        for (std::int64_t D2 : {1, 2}) {
                            if (N < (K + T - 1) * D2 + S + 1) continue;
                            std::int64_t lcc = lcc_threshold(N, K, T, S, D2);
                            CHECK(flcc_threshold_paper(N, K, T, S, D2, 1) == lcc);
                            CHECK(flcc_threshold_exact(N, K, T, S, D2, 1) == lcc);
                            ++checked;
                        }
                    }
                }
            }
        }
        CHECK(checked >= 50);
    }
    SUBCASE("figure family") {
        CHECK(flcc_threshold_paper(1000, 180, 11, 20, 2, 100) == 508);
        CHECK(flcc_threshold_exact(1000, 180, 11, 20, 2, 100) == 508);
        CHECK(flcc_threshold_paper(1000, 180, 11, 20, 2, 10000) == 587);
        double ratio = static_cast<double>(flcc_threshold_paper(1000, 180, 11, 20, 2, 10000)) /
                       static_cast<double>(lcc_threshold(1000, 180, 11, 20, 2));
        CHECK(ratio == doctest::Approx(1.963).epsilon(1e-3));
    }
    SUBCASE("desk-size family") {
        // a(s*) = 0.514... at s* = 2 for this family; 19 of 38 non-stragglers
        CHECK(flcc_threshold_exact(40, 2, 1, 2, 2, 4) == 19);
        CHECK(flcc_threshold_exact(40, 2, 1, 2, 2, 4) >= lcc_threshold(40, 2, 1, 2, 2));
    }
}

TEST_CASE("normalized extra computation") {
    CHECK(normalized_extra_computation(1, 1) == 0);
    std::int64_t s100 = optimal_s(100, modified_rate(1000, 180, 11, 20, 2, 100)).s_star;
    Rational nec100 = normalized_extra_computation(100, s100);
    CHECK(nec100 <= Rational(1, 10));
    std::int64_t s10k = optimal_s(10000, modified_rate(1000, 180, 11, 20, 2, 10000)).s_star;
    CHECK(normalized_extra_computation(10000, s10k) < nec100);
    CHECK_THROWS_AS(normalized_extra_computation(4, 5), std::invalid_argument);
}

TEST_CASE("parameter validation names the violated invariant") {
    PrimeField f257(257);
    CHECK_THROWS_WITH_AS(FlccParams(f257, 4, 1, 1, 4, 1, 1), doctest::Contains("S must be smaller"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(FlccParams(f257, 300, 1, 1, 0, 1, 1), doctest::Contains("q-1 < N*m"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(FlccParams(f257, 255, 1, 1, 0, 1, 1), doctest::Contains("disjoint"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(FlccParams(f257, 4, 5, 0, 0, 4, 2), doctest::Contains("composed degree"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(FlccParams(f257, 4, 0, 1, 0, 1, 1), doctest::Contains(">= 1"),
                         std::invalid_argument);

    FlccParams ok(f257, 40, 2, 1, 2, 4, 2);
    CHECK(ok.eval_points.size() == 160);
    CHECK(ok.interp_points.size() == 12);
    CHECK(ok.composed_degree() == 22);
    CHECK(ok.decoder_k() == 23);
    CHECK(ok.s_star() == 2);
    // E_m and I_m disjoint and individually distinct
    std::set<Fe> all(ok.eval_points.begin(), ok.eval_points.end());
    for (Fe p : ok.interp_points) CHECK(all.insert(p).second);
    CHECK(all.size() == 172);
}

TEST_CASE("encoder interpolation property") {
    PrimeField f(257);
    FlccParams params(f, 10, 2, 1, 0, 2, 2);
    std::mt19937_64 rng(5);
    std::vector<MatFq> inputs;
    for (int j = 0; j < 4; ++j) inputs.push_back(random_mat(rng, f, 2, 3));
    FlccEncoder enc(params, inputs, /*mask_seed=*/99);
    // u_m passes through the data at the first mK interpolation points
    for (std::size_t j = 0; j < 4; ++j)
        CHECK(enc.encode_at(params.interp_points[j]).data == inputs[j].data);
    // share stacking matches encode_at on E_m
    auto sh = enc.share(3);
    REQUIRE(sh.size() == 2);
    CHECK(sh[0].data == enc.encode_at(params.eval_points[6]).data);
    CHECK(sh[1].data == enc.encode_at(params.eval_points[7]).data);
    CHECK_THROWS_AS(enc.share(10), std::out_of_range);
}

TEST_CASE("encoding without privacy is deterministic") {
    PrimeField f(257);
    FlccParams params(f, 10, 2, 0, 0, 2, 2);
    std::mt19937_64 rng(6);
    std::vector<MatFq> inputs;
    for (int j = 0; j < 4; ++j) inputs.push_back(random_mat(rng, f, 2, 2));
    FlccEncoder a(params, inputs, 1);
    FlccEncoder b(params, inputs, 2);
    for (std::size_t w = 0; w < 10; ++w) {
        auto sa = a.share(w), sb = b.share(w);
        for (std::size_t t = 0; t < sa.size(); ++t) CHECK(sa[t].data == sb[t].data);
    }
}

TEST_CASE("encoding round-trips through any m(K+T) evaluations") {
    PrimeField f(257);
    FlccParams params(f, 8, 1, 1, 0, 2, 2);
    std::mt19937_64 rng(7);
    std::vector<MatFq> inputs{random_mat(rng, f, 2, 2), random_mat(rng, f, 2, 2)};
    FlccEncoder enc(params, inputs, 11);
    // m(K+T) = 4 distinct points determine each degree-3 entry polynomial
    std::vector<Fe> pts{params.eval_points[0], params.eval_points[3], params.eval_points[7],
                        params.eval_points[12]};
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            std::vector<std::pair<Fe, Fe>> samples;
            for (Fe x : pts) samples.emplace_back(x, enc.encode_at(x).at(r, c));
            Poly p = interpolate(f, samples);
            for (std::size_t w = 0; w < 8; ++w)
                for (std::size_t t = 0; t < 2; ++t)
                    CHECK(poly_eval(f, p, params.eval_points[w * 2 + t]) ==
                          enc.share(w)[t].at(r, c));
        }
    }
}

TEST_CASE("jobs") {
    PrimeField f(17);
    MatFq x(2, 2);
    x.at(0, 0) = 1; x.at(0, 1) = 2;
    x.at(1, 0) = 3; x.at(1, 1) = 4;
    SUBCASE("identity") {
        auto ret = worker_compute(0, {x}, job_identity(2, 2), f);
        CHECK(ret.mats[0].data == x.data);
        CHECK_FALSE(ret.straggler);
    }
    SUBCASE("entry-wise square") {
        auto ret = worker_compute(1, {x}, job_entrywise_square(2, 2), f);
        CHECK(ret.mats[0].data == std::vector<Fe>{1, 4, 9, 16});
    }
    SUBCASE("gram matrix") {
        // X^T X = [[10,14],[14,20]] = [[10,14],[14,3]] mod 17
        auto ret = worker_compute(2, {x}, job_xtx(2, 2), f);
        CHECK(ret.mats[0].data == std::vector<Fe>{10, 14, 14, 3});
    }
}

TEST_CASE("single-worker share is perfectly masked") {
    PrimeField f(17);
    FlccParams params(f, 3, 1, 1, 0, 1, 1);
    for (Fe x = 0; x < 17; ++x) {
        for (std::size_t w = 0; w < 3; ++w) {
            std::vector<int> hist(17, 0);
            for (Fe z = 0; z < 17; ++z) {
                MatFq in(1, 1), mask(1, 1);
                in.at(0, 0) = x;
                mask.at(0, 0) = z;
                FlccEncoder enc(params, {in}, std::vector<MatFq>{mask});
                ++hist[enc.share(w)[0].at(0, 0)];
            }
            for (int c : hist) CHECK(c == 1);  // exactly uniform
        }
    }
}

TEST_CASE("end-to-end decode") {
    PrimeField f(257);
    FlccParams params(f, 40, 2, 1, 2, 4, 2);
    std::mt19937_64 rng(13);
    const std::size_t mk = 8;
    std::vector<MatFq> inputs;
    for (std::size_t j = 0; j < mk; ++j) inputs.push_back(random_mat(rng, f, 2, 2));
    PolynomialJob job = job_entrywise_square(2, 2);
    FlccEncoder enc(params, inputs, 21);
    auto side_info = [&](Fe z) { return job.evaluate(f, enc.encode_at(z)); };

    std::vector<WorkerReturn> returns;
    for (std::size_t w = 0; w < 40; ++w)
        returns.push_back(worker_compute(w, enc.share(w), job, f));

    SUBCASE("clean run recovers all outputs exactly") {
        auto res = master_decode(params, job, returns, side_info, DecodeMode::deterministic());
        REQUIRE(res.ok);
        REQUIRE(res.outputs.size() == mk);
        for (std::size_t j = 0; j < mk; ++j)
            CHECK(res.outputs[j].data == job.evaluate(f, inputs[j]).data);
        CHECK(res.max_dimension <= 1);
        CHECK(res.side_info_evals <= 4 * res.max_dimension);  // union over the 4 entries
    }
    SUBCASE("stragglers and adversaries at the threshold") {
        returns[4].straggler = true;
        returns[4].mats.clear();
        returns[9].straggler = true;
        returns[9].mats.clear();
        std::int64_t A = flcc_threshold_exact(40, 2, 1, 2, 2, 4);
        REQUIRE(A == 19);
        std::size_t corrupted = 0;
        for (std::size_t w = 0; w < 40 && corrupted < static_cast<std::size_t>(A); ++w) {
            if (returns[w].straggler) continue;
            for (auto& mat : returns[w].mats)
                for (auto& v : mat.data) v = random_fe(rng, f);
            ++corrupted;
        }
        auto res = master_decode(params, job, returns, side_info, DecodeMode::deterministic());
        REQUIRE(res.ok);
        for (std::size_t j = 0; j < mk; ++j)
            CHECK(res.outputs[j].data == job.evaluate(f, inputs[j]).data);
    }
    SUBCASE("probabilistic mode with ample points") {
        returns[0].straggler = true;
        returns[0].mats.clear();
        for (auto& mat : returns[3].mats)
            for (auto& v : mat.data) v = random_fe(rng, f);
        auto res = master_decode(params, job, returns, side_info, DecodeMode::random(6, 77));
        REQUIRE(res.ok);
        CHECK(res.side_info_evals == 6);
        for (std::size_t j = 0; j < mk; ++j)
            CHECK(res.outputs[j].data == job.evaluate(f, inputs[j]).data);
    }
}
