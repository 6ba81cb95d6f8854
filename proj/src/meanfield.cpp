#include "permaspin/meanfield.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "permaspin/bigint.hpp"

namespace permaspin {

void MeanFieldParams::validate() const {
    if (n < 2) throw std::invalid_argument("MeanFieldParams: n must be >= 2");
    if (q < 1) throw std::invalid_argument("MeanFieldParams: q must be >= 1");
    if (!(coupling > 0.0)) throw std::invalid_argument("MeanFieldParams: J must be > 0");
    if (!(beta > 0.0)) throw std::invalid_argument("MeanFieldParams: beta must be > 0");
}

long long CountVector::total() const {
    long long t = 0;
    for (long long c : counts) t += c;
    return t;
}

double g_sum(int m, double ell, double x) {
    if (m < 0) throw std::invalid_argument("g_sum: m must be >= 0");
    if (!(x > 0.0)) throw std::invalid_argument("g_sum: x must be > 0");
    const double log_x = std::log(x);
    double total = 0.0;
    for (int i = 0; i <= m; ++i) {
        const double shift = 2.0 * i - m + ell;
        total += binomial(m, i).to_double() * std::exp(log_x * shift * shift);
    }
    return total;
}

double mean_hamiltonian_counts(const CountVector& cv, const MeanFieldParams& mp) {
    mp.validate();
    if (cv.total() != mp.n)
        throw std::invalid_argument("mean_hamiltonian_counts: counts must sum to n");
    const double d1 = static_cast<double>(cv.counts[0] - cv.counts[5]);  // n123 - n321
    const double d2 = static_cast<double>(cv.counts[1] - cv.counts[3]);  // n132 - n231
    const double d3 = static_cast<double>(cv.counts[2] - cv.counts[4]);  // n213 - n312
    const double front = mp.q * mp.coupling / (2.0 * (mp.n - 1));
    return -front * (d1 * d1 + d2 * d2 + d3 * d3 - mp.n) - mp.field * d1;
}

double mean_hamiltonian_completed(const CountVector& cv, const MeanFieldParams& mp) {
    mp.validate();
    if (cv.total() != mp.n)
        throw std::invalid_argument("mean_hamiltonian_completed: counts must sum to n");
    const double d1 = static_cast<double>(cv.counts[0] - cv.counts[5]);
    const double d2 = static_cast<double>(cv.counts[1] - cv.counts[3]);
    const double d3 = static_cast<double>(cv.counts[2] - cv.counts[4]);
    const double front = mp.q * mp.coupling / (2.0 * (mp.n - 1));
    const double ell = mp.field * (mp.n - 1) / (mp.q * mp.coupling);
    return mp.n * mp.q * mp.coupling / (2.0 * (mp.n - 1))
           + mp.field * mp.field * (mp.n - 1) / (2.0 * mp.q * mp.coupling)
           - front * ((d1 + ell) * (d1 + ell) + d2 * d2 + d3 * d3);
}

double mean_z_factorized(const MeanFieldParams& mp) {
    mp.validate();
    const int n = mp.n;
    const double ell = mp.field * (n - 1) / (mp.q * mp.coupling);
    const double x = std::exp(mp.beta * mp.q * mp.coupling / (2.0 * (n - 1)));
    const double prefactor = std::exp(-0.5 * mp.beta
                                      * (static_cast<double>(n) * mp.q * mp.coupling / (n - 1)
                                         + mp.field * mp.field * (n - 1)
                                               / (mp.q * mp.coupling)));

    std::vector<double> g_shifted(static_cast<size_t>(n) + 1);
    std::vector<double> g_centered(static_cast<size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        g_shifted[static_cast<size_t>(m)] = g_sum(m, ell, x);
        g_centered[static_cast<size_t>(m)] = g_sum(m, 0.0, x);
    }

    double total = 0.0;
    for (int a = 0; a <= n; ++a) {
        for (int b = 0; b <= n - a; ++b) {
            const int c = n - a - b;
            const double weight = multinomial(n, {a, b, c}).to_double();
            total += weight * g_shifted[static_cast<size_t>(a)]
                     * g_centered[static_cast<size_t>(b)] * g_centered[static_cast<size_t>(c)];
        }
    }
    return prefactor * total;
}

double mean_z_direct(const MeanFieldParams& mp) {
    mp.validate();
    const int n = mp.n;
    if (binomial(n + 5, 5).to_double() > 1e7)
        throw std::length_error("mean_z_direct: count-vector space exceeds cap");
    double total = 0.0;
    CountVector cv;
    for (int c0 = 0; c0 <= n; ++c0)
        for (int c1 = 0; c1 <= n - c0; ++c1)
            for (int c2 = 0; c2 <= n - c0 - c1; ++c2)
                for (int c3 = 0; c3 <= n - c0 - c1 - c2; ++c3)
                    for (int c4 = 0; c4 <= n - c0 - c1 - c2 - c3; ++c4) {
                        const int c5 = n - c0 - c1 - c2 - c3 - c4;
                        cv.counts = {c0, c1, c2, c3, c4, c5};
                        const double weight =
                            multinomial(n, {c0, c1, c2, c3, c4, c5}).to_double();
                        total += weight * std::exp(-mp.beta * mean_hamiltonian_counts(cv, mp));
                    }
    return total;
}

double mean_z_config_oracle(const MeanFieldParams& mp) {
    mp.validate();
    if (mp.n > 8) throw std::length_error("mean_z_config_oracle: 6^n too large");
    const SpinSet s3 = SpinSet::full(3);
    const PhiTables tables = make_phi_tables(s3, StatKind::Destat);
    const double pair_coupling = mp.q * mp.coupling / (mp.n - 1);

    double total = 0.0;
    std::vector<int> idx(static_cast<size_t>(mp.n), 0);
    while (true) {
        double pair_sum = 0.0;
        for (int i = 0; i < mp.n; ++i)
            for (int j = i + 1; j < mp.n; ++j)
                pair_sum += tables.pair_at(idx[static_cast<size_t>(i)],
                                           idx[static_cast<size_t>(j)]);
        double field_sum = 0.0;
        for (int s : idx) field_sum += tables.single[static_cast<size_t>(s)];
        const double energy = -pair_coupling * pair_sum - mp.field * field_sum;
        total += std::exp(-mp.beta * energy);

        int pos = mp.n - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == 5) {
            idx[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
    }
    return total;
}

double dominant_term_estimate(const MeanFieldParams& mp) {
    mp.validate();
    return std::exp(mp.n * std::log(6.0)
                    - mp.beta * mp.n * mp.q * mp.coupling / (2.0 * (mp.n - 1)));
}

}  // namespace permaspin
