#include <cmath>

#include "cb/resultant.hpp"
#include "cb/rng.hpp"
#include "doctest.h"
#include "test_util.hpp"

using cb::Complex;
using cb::UnivariatePoly;

TEST_SUITE_BEGIN("resultant");

TEST_CASE("hand values") {
    // f = z - 1, g = z - 2: det [[1,1],[-1,-2]]
    const UnivariatePoly f({-1.0, 1.0});
    const UnivariatePoly g({-2.0, 1.0});
    CHECK(std::abs(cb::resultant_sylvester(f, g) - Complex{-1.0, 0.0}) < 1e-14);

    // f = z^2 - 1, g = z^2 - 4: product of root differences = 9
    const UnivariatePoly f2({-1.0, 0.0, 1.0});
    const UnivariatePoly g2({-4.0, 0.0, 1.0});
    CHECK(std::abs(cb::resultant_sylvester(f2, g2) - Complex{9.0, 0.0}) < 1e-12);
    CHECK(std::abs(cb::resultant_product_oracle(f2, g2) - Complex{9.0, 0.0}) < 1e-10);

    // f = z - w0, g = z + w0 at w0 = 0.3
    const UnivariatePoly fw({Complex{-0.3, 0.0}, 1.0});
    const UnivariatePoly gw({Complex{0.3, 0.0}, 1.0});
    CHECK(std::abs(cb::resultant_sylvester(fw, gw) - Complex{0.6, 0.0}) < 1e-14);

    // common roots force zero
    CHECK(std::abs(cb::resultant_sylvester(f2, f2)) < 1e-12);
}

TEST_CASE("the three product forms agree and match the determinant") {
    {
        const UnivariatePoly f({0.0, 1.0});        // z
        const UnivariatePoly g({-1.0, 1.0});       // z - 1
        const auto forms = cb::resultant_forms(f, g);
        CHECK(std::abs(forms.via_root_products - Complex{-1.0, 0.0}) < 1e-12);
        CHECK(std::abs(forms.via_f_at_roots_of_g - forms.via_root_products) < 1e-12);
        CHECK(std::abs(forms.via_g_at_roots_of_f - forms.via_root_products) < 1e-12);
        CHECK(std::abs(cb::resultant_sylvester(f, g) - forms.via_root_products) < 1e-12);
    }
    cb::Rng rng(707);
    for (int trial = 0; trial < 50; ++trial) {
        const UnivariatePoly f = cbt::random_poly(rng, 1 + static_cast<int>(rng.next() % 5), 0.1);
        const UnivariatePoly g = cbt::random_poly(rng, 1 + static_cast<int>(rng.next() % 5), 0.1);
        const auto forms = cb::resultant_forms(f, g);
        const double scale = std::abs(forms.via_root_products) + 1e-12;
        CHECK(std::abs(forms.via_f_at_roots_of_g - forms.via_root_products) / scale < 1e-7);
        CHECK(std::abs(forms.via_g_at_roots_of_f - forms.via_root_products) / scale < 1e-7);
    }
}

TEST_CASE("sylvester agrees with the product oracle on random pairs") {
    cb::Rng rng(808);
    for (int trial = 0; trial < 200; ++trial) {
        const UnivariatePoly f = cbt::random_poly(rng, 1 + static_cast<int>(rng.next() % 6), 0.1);
        const UnivariatePoly g = cbt::random_poly(rng, 1 + static_cast<int>(rng.next() % 6), 0.1);
        const Complex a = cb::resultant_sylvester(f, g);
        const Complex b = cb::resultant_product_oracle(f, g);
        CHECK(std::abs(a - b) <= 1e-8 * (std::abs(a) + std::abs(b) + 1e-12));
    }
}

TEST_CASE("antisymmetry up to the degree sign") {
    cb::Rng rng(909);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 4);
        const int m = 1 + static_cast<int>(rng.next() % 4);
        const UnivariatePoly f = cbt::random_poly(rng, n, 0.1);
        const UnivariatePoly g = cbt::random_poly(rng, m, 0.1);
        const Complex ab = cb::resultant_sylvester(f, g);
        const Complex ba = cb::resultant_sylvester(g, f);
        const double sign = (n % 2 == 1 && m % 2 == 1) ? -1.0 : 1.0;
        CHECK(std::abs(ab - sign * ba) <= 1e-10 * (std::abs(ab) + 1e-12));
    }
}

TEST_CASE("multiplicative in the first argument") {
    cb::Rng rng(1010);
    for (int trial = 0; trial < 25; ++trial) {
        const UnivariatePoly f1 = cbt::random_poly(rng, 2, 0.2);
        const UnivariatePoly f2 = cbt::random_poly(rng, 2, 0.2);
        const UnivariatePoly g = cbt::random_poly(rng, 3, 0.2);
        const Complex lhs = cb::resultant_sylvester(f1 * f2, g);
        const Complex rhs = cb::resultant_sylvester(f1, g) * cb::resultant_sylvester(f2, g);
        CHECK(std::abs(lhs - rhs) <= 1e-8 * (std::abs(lhs) + std::abs(rhs) + 1e-12));
    }
}

TEST_CASE("hadamard-type magnitude sanity") {
    cb::Rng rng(1111);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 6);
        const int m = 1 + static_cast<int>(rng.next() % 6);
        const UnivariatePoly f = cbt::random_poly(rng, n, 0.1);
        const UnivariatePoly g = cbt::random_poly(rng, m, 0.1);
        double fact = 1.0;
        for (int i = 2; i <= n + m; ++i) fact *= i;
        const double cap = fact * std::pow(std::max(f.max_abs_coeff(), g.max_abs_coeff()), n + m);
        CHECK(std::abs(cb::resultant_sylvester(f, g)) <= cap * (1.0 + 1e-9));
    }
}

TEST_CASE("quantitative report on hand instances") {
    // well-separated roots: part 1 hypothesis fails (vacuous)
    {
        const UnivariatePoly f({-1.0, 0.0, 1.0});
        const UnivariatePoly g({-4.0, 0.0, 1.0});
        const auto rep = cb::check_resultant_witnesses(f, g, 0.5);
        CHECK(rep.part0_holds);
        CHECK_FALSE(rep.part1_applies);
        CHECK(rep.part1_holds);
    }
    // near-common root: part 1 produces a witness
    {
        const UnivariatePoly f({-1.0, 1.0});
        const UnivariatePoly g({Complex{-1.0 - 1e-6, 0.0}, 1.0});
        const auto rep = cb::check_resultant_witnesses(f, g, 1e-3);
        CHECK(rep.part0_holds);
        CHECK(rep.part1_applies);
        CHECK(rep.part1_holds);
        REQUIRE(rep.part1_witness.has_value());
        CHECK(std::abs(*rep.part1_witness - Complex{1.0 + 1e-6, 0.0}) < 1e-9);
        CHECK(rep.part1_witness_value < 1e-3);
    }
    // exact common root: part 2 hypothesis holds and the bound absorbs it
    {
        const UnivariatePoly f = UnivariatePoly::from_roots({Complex{1.0, 0.0}, Complex{-0.4, 0.2}});
        const auto rep = cb::check_resultant_witnesses(f, f, 0.5);
        CHECK(rep.part2_applies);
        CHECK(rep.part2_holds);
    }
}

TEST_CASE("quantitative sweep has no false assertions") {
    cb::Rng rng(1212);
    for (int trial = 0; trial < 150; ++trial) {
        const UnivariatePoly f = cbt::random_poly(rng, 1 + static_cast<int>(rng.next() % 4), 0.1);
        const UnivariatePoly g = cbt::random_poly(rng, 1 + static_cast<int>(rng.next() % 4), 0.1);
        const double delta = 0.05 + 0.9 * rng.uniform();
        const auto rep = cb::check_resultant_witnesses(f, g, delta);
        CHECK(rep.part0_holds);
        CHECK(rep.part1_holds);
        CHECK(rep.part2_holds);
    }
}

TEST_SUITE_END();
