#include <cmath>

#include "cb/cover2d.hpp"
#include "cb/rng.hpp"
#include "doctest.h"
#include "test_util.hpp"

using cb::BivariatePoly;
using cb::Complex;

namespace {

BivariatePoly zpoly() { return BivariatePoly::monomial(1, 0); }
BivariatePoly wpoly() { return BivariatePoly::monomial(0, 1); }

}  // namespace

TEST_SUITE_BEGIN("cover2d");

TEST_CASE("coordinate pair collapses to one input ball") {
    const auto data = cb::estimate_inputs(zpoly(), wpoly(), 1e-12, 44);
    CHECK(data.K1 == 1);
    CHECK(cb::norm(data.input_cover.balls[0].center) < 2.0 * std::exp(-data.H1));
    CHECK(data.gates_ok);
    CHECK(data.H0 >= data.ratio * data.H1);
}

TEST_CASE("rotated linear pair still collapses to one ball") {
    const BivariatePoly f1 = cb::normalize_on_ball(zpoly() - wpoly());
    const BivariatePoly f2 = cb::normalize_on_ball(zpoly() + wpoly());
    const auto data = cb::estimate_inputs(f1, f2, 1e-12, 44);
    CHECK(data.K1 == 1);
    CHECK(cb::norm(data.input_cover.balls[0].center) < 2.0 * std::exp(-data.H1));
}

TEST_CASE("a repeated function never coarsens") {
    const BivariatePoly f = cb::normalize_on_ball(
        BivariatePoly::monomial(1, 1) - BivariatePoly::constant(0.01));
    CHECK_THROWS_AS(cb::estimate_inputs(f, f, 1e-12, 40), cb::Error);
}

TEST_CASE("zero-free pairs give an empty input cover and a trivial run") {
    const BivariatePoly f1 =
        cb::normalize_on_ball(zpoly() + BivariatePoly::constant(2.0));
    const BivariatePoly f2 =
        cb::normalize_on_ball(wpoly() + BivariatePoly::constant(2.0));
    const auto data = cb::estimate_inputs(f1, f2, 1e-12, 30);
    CHECK(data.K1 == 0);
    const auto res = cb::build_cover(f1, f2, data, 5.0);
    CHECK(res.cover.balls.empty());
    const auto rep = cb::verify_cover(f1, f2, res, 20000, 99);
    CHECK(rep.violations == 0);
}

TEST_CASE("linear pair yields a single ball and a clean verification") {
    const BivariatePoly f1 = cb::normalize_on_ball(zpoly() - wpoly());
    const BivariatePoly f2 = cb::normalize_on_ball(zpoly() + wpoly());
    const auto data = cb::estimate_inputs(f1, f2, 1e-12, 44);
    const auto res = cb::build_cover(f1, f2, data, 5.0);
    REQUIRE(res.cover.balls.size() == 1);
    CHECK(cb::norm(res.cover.balls[0].center) < std::exp(-5.0));
    CHECK(res.cover.balls[0].radius == doctest::Approx(std::exp(-5.0)));
    CHECK(res.coverage_ok);
    res.cover.validate();

    const auto rep = cb::verify_cover(f1, f2, res, 20000, 7);
    CHECK(rep.samples == 20000);
    CHECK(rep.violations == 0);
}

TEST_CASE("identical inputs degenerate at the resultant stage") {
    const BivariatePoly f = cb::normalize_on_ball(
        BivariatePoly::monomial(1, 1) - BivariatePoly::constant(0.1));
    // the probe ball must sit on the zero curve zw = 0.1 so that both
    // prepared factors are nontrivial
    cb::TransversalityData data;
    data.B0 = 1.0;
    data.H0 = 20.0;
    data.H1 = 2.0;
    data.K1 = 1;
    data.input_cover.H = 2.0;
    data.input_cover.K = 1;
    data.input_cover.balls.emplace_back(cb::C2{Complex{0.4, 0.0}, Complex{0.25, 0.0}},
                                        std::exp(-2.0));
    CHECK_THROWS_AS(cb::build_cover(f, f, data, 5.0), cb::Error);
}

TEST_CASE("quadratic transversal pair builds a valid cover") {
    const BivariatePoly f1 =
        cb::normalize_on_ball(BivariatePoly::monomial(2, 0) + wpoly());
    const BivariatePoly f2 = cb::normalize_on_ball(
        BivariatePoly::monomial(1, 1) - BivariatePoly::constant(0.05));
    const auto data = cb::estimate_inputs(f1, f2, 1e-14, 44);
    const auto res = cb::build_cover(f1, f2, data, 6.0);
    res.cover.validate();
    CHECK(res.cover.K == static_cast<int>(res.cover.balls.size()));
    const auto rep = cb::verify_cover(f1, f2, res, 10000, 11);
    CHECK(rep.violations == 0);
    // every near-zero of F inside B(0,1/4) must be covered
    for (const auto& b : data.input_cover.balls) {
        if (cb::norm(b.center) < 0.25)
            CHECK(res.cover.contains(b.center));
    }
}

TEST_CASE("negative control: a shrunken cover leaks violations near the zero") {
    const BivariatePoly f1 = cb::normalize_on_ball(zpoly() - wpoly());
    const BivariatePoly f2 = cb::normalize_on_ball(zpoly() + wpoly());
    // constructed data with unit-scale constants puts the certified level
    // within reach of the sampler
    cb::TransversalityData data;
    data.B0 = 1.0;
    data.H0 = 1.9;
    data.H1 = 2.0;
    data.K1 = 1;
    data.ratio = 1.0;
    data.input_cover.H = 2.0;
    data.input_cover.K = 1;
    data.input_cover.balls.emplace_back(cb::C2{}, std::exp(-2.0));

    const auto res = cb::build_cover(f1, f2, data, 2.0, cb::BuildOptions{});
    REQUIRE_FALSE(res.cover.balls.empty());
    const auto good = cb::verify_cover(f1, f2, res, 20000, 13);
    CHECK(good.violations == 0);

    cb::CoverResult shrunk = res;
    for (auto& b : shrunk.cover.balls) b.radius /= 10.0;
    shrunk.cover.H = res.cover.H + std::log(10.0);
    const cb::C2 focus{};
    const auto bad =
        cb::verify_cover(f1, f2, shrunk, 20000, 13, &focus, 3.0 * std::exp(-2.0) / 10.0);
    CHECK(bad.violations > 0);
}

TEST_CASE("two seeds give two valid covers") {
    const BivariatePoly f1 = cb::normalize_on_ball(zpoly() - wpoly());
    const BivariatePoly f2 = cb::normalize_on_ball(zpoly() + wpoly());
    const auto data = cb::estimate_inputs(f1, f2, 1e-12, 44);
    cb::BuildOptions o1, o2;
    o1.seed = 101;
    o2.seed = 202;
    const auto r1 = cb::build_cover(f1, f2, data, 5.0, o1);
    const auto r2 = cb::build_cover(f1, f2, data, 5.0, o2);
    r1.cover.validate();
    r2.cover.validate();
    CHECK(cb::verify_cover(f1, f2, r1, 10000, 1).violations == 0);
    CHECK(cb::verify_cover(f1, f2, r2, 10000, 2).violations == 0);
}

TEST_CASE("ball count scales within the recorded pipeline constant") {
    const BivariatePoly f1 = cb::normalize_on_ball(zpoly() - wpoly());
    const BivariatePoly f2 = cb::normalize_on_ball(zpoly() + wpoly());
    const auto data = cb::estimate_inputs(f1, f2, 1e-12, 44);
    for (const double H : {5.0, 8.0, 12.0}) {
        const auto res = cb::build_cover(f1, f2, data, H);
        CHECK(res.c_pipeline <= 1.0);
        res.cover.validate();
    }
}

TEST_SUITE_END();
