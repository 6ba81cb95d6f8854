#include "doctest.h"

#include <stdexcept>
#include <cmath>
#include <random>

#include "permaspin/meanfield.hpp"

using namespace permaspin;

namespace {

MeanFieldParams make_mf(int n, int q, double beta, double coupling, double field) {
    MeanFieldParams mp;
    mp.n = n;
    mp.q = q;
    mp.beta = beta;
    mp.coupling = coupling;
    mp.field = field;
    return mp;
}

}  // namespace

TEST_SUITE("meanfield") {

TEST_CASE("g_sum small cases") {
    CHECK(g_sum(0, 1.5, 2.0) == doctest::Approx(std::pow(2.0, 2.25)));
    CHECK(g_sum(1, 0.0, 3.0) == doctest::Approx(6.0));          // 2x
    CHECK(g_sum(2, 0.0, 2.0) == doctest::Approx(2.0 + 2.0 * 16.0));  // 2 + 2x^4
    CHECK_THROWS_AS(g_sum(-1, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(g_sum(2, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("g_sum at x=1 counts subsets") {
    for (int m = 0; m <= 12; ++m) CHECK(g_sum(m, 0.0, 1.0) == doctest::Approx(std::pow(2.0, m)));
}

TEST_CASE("count-based hamiltonian special cases") {
    // All species equally occupied: only the -n term survives.
    const MeanFieldParams even = make_mf(12, 2, 1.0, 1.0, 0.8);
    CountVector balanced;
    balanced.counts = {2, 2, 2, 2, 2, 2};
    CHECK(mean_hamiltonian_counts(balanced, even) ==
          doctest::Approx(2.0 * 1.0 * 12 / (2.0 * 11)));

    // Single species: -qJn/2 - Hn.
    const MeanFieldParams mp = make_mf(5, 3, 1.0, 1.2, 0.4);
    CountVector pure;
    pure.counts = {5, 0, 0, 0, 0, 0};
    CHECK(mean_hamiltonian_counts(pure, mp) ==
          doctest::Approx(-3 * 1.2 * 5 / 2.0 - 0.4 * 5));

    CountVector bad;
    bad.counts = {1, 0, 0, 0, 0, 0};
    CHECK_THROWS_AS(mean_hamiltonian_counts(bad, mp), std::invalid_argument);
}

TEST_CASE("count-based hamiltonian equals the pairwise one") {
    // Every 6^n assignment, grouped by counts, must give the same energy.
    const SpinSet s3 = SpinSet::full(3);
    const PhiTables tables = make_phi_tables(s3, StatKind::Destat);
    for (int n : {2, 3, 4}) {
        const MeanFieldParams mp = make_mf(n, 2, 1.0, 0.9, -0.3);
        std::vector<int> idx(static_cast<size_t>(n), 0);
        while (true) {
            CountVector cv;
            for (int s : idx) ++cv.counts[static_cast<size_t>(s)];
            double pair_sum = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    pair_sum += tables.pair_at(idx[static_cast<size_t>(i)],
                                               idx[static_cast<size_t>(j)]);
            double field_sum = 0.0;
            for (int s : idx) field_sum += tables.single[static_cast<size_t>(s)];
            const double pairwise = -mp.q * mp.coupling / (mp.n - 1) * pair_sum
                                    - mp.field * field_sum;
            CHECK(mean_hamiltonian_counts(cv, mp) ==
                  doctest::Approx(pairwise).epsilon(1e-12));

            int pos = n - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == 5) {
                idx[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
        }
    }
}

TEST_CASE("completed square identity") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unit(0.1, 3.0);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 49);
        MeanFieldParams mp = make_mf(n, 1 + static_cast<int>(rng() % 4), unit(rng), unit(rng),
                                     unit(rng) - 1.5);
        CountVector cv;
        long long remaining = n;
        for (int s = 0; s < 5; ++s) {
            cv.counts[static_cast<size_t>(s)] =
                remaining > 0 ? static_cast<long long>(rng() % (remaining + 1)) : 0;
            remaining -= cv.counts[static_cast<size_t>(s)];
        }
        cv.counts[5] = remaining;
        const double h1 = mean_hamiltonian_counts(cv, mp);
        const double h2 = mean_hamiltonian_completed(cv, mp);
        CHECK(std::abs(h1 - h2) <= 1e-9 * std::max(1.0, std::abs(h1)));
    }
}

TEST_CASE("factorized sum equals the direct sum") {
    for (int n = 2; n <= 8; ++n) {
        for (int q : {2, 4}) {
            for (auto [beta, coupling, field] :
                 {std::tuple{1.0, 1.0, 0.0}, {1.0, 1.0, 0.5}, {0.5, 2.0, -1.0}}) {
                const MeanFieldParams mp = make_mf(n, q, beta, coupling, field);
                const double factorized = mean_z_factorized(mp);
                const double direct = mean_z_direct(mp);
                CHECK(std::abs(factorized - direct) <= 1e-9 * direct);
            }
        }
    }
}

TEST_CASE("both sums match the configuration oracle") {
    for (int n : {2, 3, 4}) {
        const MeanFieldParams mp = make_mf(n, 2, 1.0, 1.0, 0.0);
        const double config = mean_z_config_oracle(mp);
        CHECK(mean_z_direct(mp) == doctest::Approx(config).epsilon(1e-12));
        CHECK(mean_z_factorized(mp) == doctest::Approx(config).epsilon(1e-12));

        const MeanFieldParams shifted = make_mf(n, 2, 0.7, 1.3, 0.6);
        CHECK(mean_z_direct(shifted) ==
              doctest::Approx(mean_z_config_oracle(shifted)).epsilon(1e-12));
    }
}

TEST_CASE("high-temperature limit") {
    const MeanFieldParams mp = make_mf(5, 2, 1e-10, 1.0, 0.0);
    CHECK(mean_z_factorized(mp) == doctest::Approx(std::pow(6.0, 5)).epsilon(1e-8));
    CHECK(mean_z_direct(mp) == doctest::Approx(std::pow(6.0, 5)).epsilon(1e-8));
    CHECK(dominant_term_estimate(mp) == doctest::Approx(std::pow(6.0, 5)).epsilon(1e-8));
}

TEST_CASE("field symmetry") {
    for (int n = 2; n <= 6; ++n) {
        for (double field : {0.3, 1.0, 2.2}) {
            const double plus = mean_z_direct(make_mf(n, 2, 0.8, 1.0, field));
            const double minus = mean_z_direct(make_mf(n, 2, 0.8, 1.0, -field));
            CHECK(plus == doctest::Approx(minus).epsilon(1e-12));
        }
    }
}

TEST_CASE("dominant term estimate") {
    const MeanFieldParams mp = make_mf(6, 2, 1.0, 1.0, 0.0);
    CHECK(dominant_term_estimate(mp) ==
          doctest::Approx(std::pow(6.0, 6) * std::exp(-1.2)).epsilon(1e-13));
    for (int n : {3, 6, 9}) {
        const MeanFieldParams p = make_mf(n, 2, 1.0, 1.0, 0.0);
        MESSAGE("dominant/factorized at n=", n, ": ",
                dominant_term_estimate(p) / mean_z_factorized(p));
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(mean_z_factorized(make_mf(1, 2, 1.0, 1.0, 0.0)), std::invalid_argument);
    CHECK_THROWS_AS(mean_z_factorized(make_mf(4, 2, 1.0, 0.0, 0.0)), std::invalid_argument);
    CHECK_THROWS_AS(mean_z_factorized(make_mf(4, 2, 1.0, -1.0, 0.0)), std::invalid_argument);
    CHECK_THROWS_AS(mean_z_direct(make_mf(200, 2, 1.0, 1.0, 0.0)), std::length_error);
}

}  // TEST_SUITE
