#pragma once

#include <array>

#include "permaspin/model.hpp"

namespace permaspin {

// Mean-field model on n sites where every site couples to every other at
// strength qJ/(n-1); q = 2 mimics the 1D ring, q = 4 the 2D lattice.
struct MeanFieldParams {
    int n = 2;       // sites, >= 2
    int q = 2;       // nearest-neighbor count, >= 1
    double coupling = 1.0;  // J, > 0
    double field = 0.0;     // H
    double beta = 1.0;      // > 0

    void validate() const;
};

// Species counts (n_123, n_132, n_213, n_231, n_312, n_321), lexicographic.
struct CountVector {
    std::array<long long, 6> counts{};
    long long total() const;
};

// G_m(l; x) = sum_i C(m, i) x^{(2i - m + l)^2}; l may be real.
double g_sum(int m, double ell, double x);

// Count-based Hamiltonian, pre-completed-square form:
// -qJ/(2(n-1)) ((n123-n321)^2 + (n132-n231)^2 + (n213-n312)^2 - n) - H(n123-n321).
double mean_hamiltonian_counts(const CountVector& cv, const MeanFieldParams& mp);

// Completed-square form; algebraically identical to the above.
double mean_hamiltonian_completed(const CountVector& cv, const MeanFieldParams& mp);

// Factorized partition sum: prefactor times the triple-composition sum of
// multinomials against G_a(H(n-1)/(qJ); x) G_b(0; x) G_c(0; x),
// x = e^{beta q J / (2(n-1))}.
double mean_z_factorized(const MeanFieldParams& mp);

// Direct sum over count vectors with exact multinomial weights;
// C(n+5,5) <= 1e7.
double mean_z_direct(const MeanFieldParams& mp);

// Sum over all 6^n spin assignments of e^{-beta H_mean}, with the pairwise
// Hamiltonian evaluated configuration-wise; n <= 8.
double mean_z_config_oracle(const MeanFieldParams& mp);

// 6^n e^{-beta n q J / (2(n-1))}; the center-term estimate. Independent of
// how n splits into the three composition parts.
double dominant_term_estimate(const MeanFieldParams& mp);

}  // namespace permaspin
