#include "cb/json_io.hpp"
#include "cb/rng.hpp"
#include "doctest.h"
#include "test_util.hpp"

using cb::Complex;

TEST_SUITE_BEGIN("json_io");

TEST_CASE("polynomials round-trip exactly") {
    cb::Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const cb::BivariatePoly f = cbt::random_bipoly(rng, 3, 2);
        const auto j = cb::to_json(f);
        const std::string text = j.dump();
        const cb::BivariatePoly back = cb::bivariate_from_json(cb::json::parse(text));
        REQUIRE(back.degz() == f.degz());
        REQUIRE(back.degw() == f.degw());
        for (int i = 0; i <= f.degz(); ++i)
            for (int k = 0; k <= f.degw(); ++k) CHECK(back.coeff(i, k) == f.coeff(i, k));
    }
    // univariate through the same schema with degw = 0
    const cb::UnivariatePoly p({Complex{0.1234567890123456789, -3.0}, Complex{1e-17, 1.0}});
    const cb::UnivariatePoly q = cb::univariate_from_json(cb::json::parse(cb::to_json(p).dump()));
    REQUIRE(q.degree() == p.degree());
    for (int i = 0; i <= p.degree(); ++i) CHECK(q.coeff(i) == p.coeff(i));
}

TEST_CASE("covers round-trip") {
    cb::Car1Cover c;
    c.H = 3.0;
    c.K = 2;
    c.disks.emplace_back(Complex{0.1, -0.2}, 0.004);
    c.disks.emplace_back(Complex{-0.7, 0.3}, 0.0012);
    const cb::Car1Cover back = cb::car1_from_json(cb::json::parse(cb::to_json(c).dump()));
    REQUIRE(back.disks.size() == 2);
    CHECK(back.H == c.H);
    CHECK(back.disks[1].center == c.disks[1].center);
    CHECK(back.disks[1].radius == c.disks[1].radius);

    cb::Car20Cover b;
    b.H = 5.0;
    b.K = 1;
    b.balls.emplace_back(cb::C2{Complex{0.1, 0.2}, Complex{-0.3, 0.4}}, std::exp(-5.0));
    const cb::Car20Cover bb = cb::car20_from_json(cb::json::parse(cb::to_json(b).dump()));
    REQUIRE(bb.balls.size() == 1);
    CHECK(bb.balls[0].center.w == b.balls[0].center.w);
    CHECK(bb.balls[0].radius == b.balls[0].radius);
}

TEST_CASE("serialization is deterministic") {
    cb::Rng rng(32);
    const cb::BivariatePoly f = cbt::random_bipoly(rng, 4, 4);
    CHECK(cb::to_json(f).dump(2) == cb::to_json(f).dump(2));
}

TEST_CASE("reports serialize with verdict fields") {
    const cb::UnivariatePoly f({-1.0, 1.0});
    const cb::UnivariatePoly g({Complex{-1.0 - 1e-6, 0.0}, 1.0});
    const auto rep = cb::check_resultant_witnesses(f, g, 1e-3);
    const auto j = cb::to_json(rep);
    CHECK(j.at("part1").at("applies").get<bool>());
    CHECK(j.at("part1").at("holds").get<bool>());
    CHECK(j.contains("bounds"));
}

TEST_SUITE_END();
