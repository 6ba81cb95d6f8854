#include "doctest.h"

#include <stdexcept>
#include <algorithm>
#include <cmath>

#include "permaspin/cubic.hpp"

using namespace permaspin;

TEST_SUITE("cubic") {

TEST_CASE("coefficients and linear factors") {
    const CubicPoint unit = s3_cubic(1.0, 1.0);
    CHECK(unit.t.bp == doctest::Approx(-6.0));
    CHECK(unit.t.cp == doctest::Approx(0.0));
    CHECK(unit.t.dp == doctest::Approx(0.0));
    CHECK(unit.lambda4 == doctest::Approx(0.0));
    CHECK(unit.lambda5 == doctest::Approx(0.0));

    const CubicPoint p = s3_cubic(1.0, 4.0);
    CHECK(p.t.bp == doctest::Approx(-27.0));
    CHECK(p.t.cp == doctest::Approx(-333.0));
    CHECK(p.t.dp == doctest::Approx(4455.0));
    CHECK(p.lambda4 == doctest::Approx(9.0));
    CHECK(p.lambda5 == doctest::Approx(-15.0));

    CHECK_THROWS_AS(s3_cubic(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(s3_cubic(1.0, -0.5), std::invalid_argument);
}

TEST_CASE("discriminants") {
    const DiscriminantTriple unit = discriminants(s3_cubic(1.0, 1.0).t);
    CHECK(unit.d0 == doctest::Approx(36.0));
    CHECK(unit.d1 == doctest::Approx(-432.0));
    CHECK(unit.d2 == doctest::Approx(0.0));

    for (double c : {0.1, 0.7, 1.5}) {
        for (double d : {0.3, 1.0, 1.8}) {
            const DiscriminantTriple ds = discriminants(s3_cubic(c, d).t);
            CHECK(ds.d2 ==
                  doctest::Approx(ds.d1 * ds.d1 - 4 * ds.d0 * ds.d0 * ds.d0).epsilon(1e-12));
        }
    }
}

TEST_CASE("bisection root finder on known cubics") {
    // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
    CubicFactor t{-6.0, 11.0, -6.0};
    const auto roots = cubic_real_roots_bisect(t);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(roots[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(roots[2] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(max_real_root_bisect(t) == doctest::Approx(3.0).epsilon(1e-12));

    // Double root at 0, simple at 6.
    CubicFactor shifted{-6.0, 0.0, 0.0};
    CHECK(max_real_root_bisect(shifted) == doctest::Approx(6.0).epsilon(1e-12));

    // One real root: x^3 + x + 10 has root -2 (x^2 - 2x + 5 is irreducible).
    CubicFactor single{0.0, 1.0, 10.0};
    const auto one = cubic_real_roots_bisect(single);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("closed roots reproduce factored examples") {
    // c=1, d=4: roots of x^3 - 27x^2 - 333x + 4455... trace identity instead:
    // the three roots sum to -bp.
    for (double c : {0.2, 1.0, 1.9}) {
        for (double d : {0.1, 0.9, 1.7}) {
            const CubicPoint point = s3_cubic(c, d);
            const auto roots = cubic_roots_closed(point.t);
            double sum = 0.0;
            for (double r : roots) {
                sum += r;
                CHECK(std::abs(point.t.evaluate(r)) <=
                      1e-8 * std::max(1.0, std::abs(point.t.dp) + std::abs(point.t.cp)
                                               + std::abs(point.t.bp)));
            }
            CHECK(sum == doctest::Approx(-point.t.bp).epsilon(1e-10));
        }
    }

    // c=1, d=2 factors as (x-13)(x-1)(x+3).
    auto roots = cubic_roots_closed(s3_cubic(1.0, 2.0).t);
    std::sort(roots.begin(), roots.end());
    CHECK(roots[0] == doctest::Approx(-3.0).epsilon(1e-10));
    CHECK(roots[1] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(roots[2] == doctest::Approx(13.0).epsilon(1e-10));
}

TEST_CASE("lambda_star") {
    CHECK(lambda_star(1.0, 1.0).value == doctest::Approx(6.0).epsilon(1e-12));
    CHECK_FALSE(lambda_star(1.0, 1.0).used_fallback);
    CHECK(lambda_star(1.0, 2.0).value == doctest::Approx(13.0).epsilon(1e-10));

    for (int i = 0; i < 25; ++i) {
        for (int j = 0; j < 25; ++j) {
            const double c = 0.05 + (2.0 - 0.05) * i / 24.0;
            const double d = 0.05 + (2.0 - 0.05) * j / 24.0;
            const LambdaStar star = lambda_star(c, d);
            const CubicPoint point = s3_cubic(c, d);
            const double oracle = max_real_root_bisect(point.t);
            CHECK(std::abs(star.value - oracle) <= 1e-8 * std::max(1.0, std::abs(oracle)));
            CHECK(star.value >= point.lambda4);
            CHECK(star.value >= point.lambda5);
        }
    }
}

TEST_CASE("full spectrum multiplicities match the numeric eigensolve") {
    const SpinSet s3 = SpinSet::full(3);
    for (double a : {0.5, 1.0, 1.3}) {
        for (double b : {0.4, 1.0, 1.6}) {
            TransferParams tp;
            tp.a = a;
            tp.b = b;
            const auto numeric = eig_numeric(TransferMatrix::numeric(s3, StatKind::Destat, tp));
            const auto closed = s3_full_spectrum(tp.c(), tp.d());
            REQUIRE(closed.eigenvalues.size() == 6);
            double scale = 1.0;
            for (double v : numeric.eigenvalues) scale = std::max(scale, std::abs(v));
            for (int i = 0; i < 6; ++i)
                CHECK(std::abs(closed.eigenvalues[static_cast<size_t>(i)]
                               - numeric.eigenvalues[static_cast<size_t>(i)]) <= 1e-8 * scale);
        }
    }

    // The double eigenvalue is lambda5 = c(1-d^2), lambda4 simple. Pin that
    // at a generic point where neither coincides with a cubic root.
    const double c = 0.8, d = 1.7;
    TransferParams tp;
    tp.a = std::pow(c, 0.25);
    tp.b = std::sqrt(d);
    const CubicPoint point = s3_cubic(c, d);
    const auto numeric = eig_numeric(TransferMatrix::numeric(s3, StatKind::Destat, tp));
    int near_lambda5 = 0, near_lambda4 = 0;
    for (double v : numeric.eigenvalues) {
        if (std::abs(v - point.lambda5) < 1e-6) ++near_lambda5;
        if (std::abs(v - point.lambda4) < 1e-6) ++near_lambda4;
    }
    for (double r : cubic_roots_closed(point.t)) {
        CHECK(std::abs(r - point.lambda5) > 1e-3);
        CHECK(std::abs(r - point.lambda4) > 1e-3);
    }
    CHECK(near_lambda5 == 2);
    CHECK(near_lambda4 == 1);
}

TEST_CASE("surface grid") {
    const auto rows = surface_grid(0.05, 2.0, 0.05, 2.0, 40);
    REQUIRE(rows.size() == 1600);
    double delta1_max = -1e300;
    for (const auto& row : rows) {
        CHECK(row.delta0 >= 0.0);
        CHECK(row.delta2 <= 1e-9);
        CHECK(row.lambda_star >= std::max(row.lambda4, row.lambda5));
        delta1_max = std::max(delta1_max, row.delta1);
    }
    // Recorded observation: the grid maximum of delta1 is small and positive.
    MESSAGE("max delta1 over [0.05,2]^2: ", delta1_max);
    CHECK(delta1_max <= 1.0);
    CHECK_THROWS_AS(surface_grid(0.0, 2.0, 0.05, 2.0, 40), std::invalid_argument);

    // The c=d=1 row sits on the default grid: (1,1,6,0,0,36,-432,0).
    bool found = false;
    for (const auto& row : rows) {
        if (std::abs(row.c - 1.0) < 1e-12 && std::abs(row.d - 1.0) < 1e-12) {
            found = true;
            CHECK(row.lambda_star == doctest::Approx(6.0).epsilon(1e-10));
            CHECK(row.lambda4 == doctest::Approx(0.0));
            CHECK(row.lambda5 == doctest::Approx(0.0));
            CHECK(row.delta0 == doctest::Approx(36.0));
            CHECK(row.delta1 == doctest::Approx(-432.0));
            CHECK(std::abs(row.delta2) <= 1e-8);
        }
    }
    CHECK(found);
}

}  // TEST_SUITE
