#include "permaspin/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

namespace permaspin {

namespace {
constexpr std::uint64_t kRecomputeInterval = 256;  // sweeps between full recomputes
}

MetropolisChain::MetropolisChain(const Graph& g, const SpinSet& p_set, const ModelParams& p,
                                 std::uint64_t seed)
    : n_(g.n),
      set_size_(p_set.size()),
      adjacency_(g.adjacency()),
      tables_(make_phi_tables(p_set, p.stat)),
      beta_(p.beta),
      coupling_(p.coupling),
      field_(p.field),
      spins_(static_cast<size_t>(g.n), 0),
      rng_(seed) {
    p.validate();
    g.validate();
    if (set_size_ < 2) throw std::invalid_argument("MetropolisChain: need |P| >= 2");
    energy_ = recompute_energy();
}

double MetropolisChain::recompute_energy() const {
    double edge_sum = 0.0;
    for (int u = 0; u < n_; ++u)
        for (int v : adjacency_[static_cast<size_t>(u)])
            if (v > u) edge_sum += tables_.pair_at(spins_[static_cast<size_t>(u)],
                                                   spins_[static_cast<size_t>(v)]);
    double vertex_sum = 0.0;
    for (int s : spins_) vertex_sum += tables_.single[static_cast<size_t>(s)];
    return -coupling_ * edge_sum - field_ * vertex_sum;
}

void MetropolisChain::sweep() {
    // Draws come straight from the generator so a seed pins the trajectory
    // independently of the standard library's distribution algorithms.
    auto pick = [this] { return static_cast<int>(rng_() % static_cast<std::uint64_t>(set_size_)); };
    auto unit = [this] { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; };
    for (int site = 0; site < n_; ++site) {
        const int old_spin = spins_[static_cast<size_t>(site)];
        const int new_spin = pick();
        ++proposals_;

        double delta_edges = 0.0;
        for (int v : adjacency_[static_cast<size_t>(site)]) {
            const int neighbor = spins_[static_cast<size_t>(v)];
            delta_edges += tables_.pair_at(new_spin, neighbor) - tables_.pair_at(old_spin, neighbor);
        }
        const double delta_field = tables_.single[static_cast<size_t>(new_spin)]
                                   - tables_.single[static_cast<size_t>(old_spin)];
        const double delta_h = -coupling_ * delta_edges - field_ * delta_field;

        bool accept = delta_h <= 0.0;
        if (!accept) accept = unit() < std::exp(-beta_ * delta_h);
        if (accept) {
            spins_[static_cast<size_t>(site)] = new_spin;
            energy_ += delta_h;
            ++accepted_;
        }
    }
    ++sweeps_;
    if (sweeps_ % kRecomputeInterval == 0) energy_ = recompute_energy();
}

double MetropolisChain::order_parameter() const {
    double total = 0.0;
    for (int s : spins_) total += tables_.single[static_cast<size_t>(s)];
    return total / n_;
}

McReport sample_observables(const Graph& g, const SpinSet& p_set, const ModelParams& p,
                            std::uint64_t sweeps, std::uint64_t burn_in, std::uint64_t seed) {
    if (sweeps <= burn_in)
        throw std::invalid_argument("sample_observables: sweeps must exceed burn_in");
    MetropolisChain chain(g, p_set, p, seed);
    for (std::uint64_t s = 0; s < burn_in; ++s) chain.sweep();

    const std::uint64_t measure = sweeps - burn_in;
    const std::uint64_t batches = std::min<std::uint64_t>(32, measure);
    std::vector<double> energy_batch(static_cast<size_t>(batches), 0.0);
    std::vector<double> order_batch(static_cast<size_t>(batches), 0.0);
    std::vector<std::uint64_t> batch_count(static_cast<size_t>(batches), 0);

    for (std::uint64_t s = 0; s < measure; ++s) {
        chain.sweep();
        const size_t b = static_cast<size_t>(s * batches / measure);
        energy_batch[b] += chain.energy_per_site();
        order_batch[b] += chain.order_parameter();
        ++batch_count[b];
    }

    auto batch_stats = [&](const std::vector<double>& sums, double& mean, double& se) {
        std::vector<double> means(sums.size());
        double total = 0.0;
        for (size_t b = 0; b < sums.size(); ++b) {
            means[b] = sums[b] / static_cast<double>(batch_count[b]);
            total += means[b];
        }
        mean = total / static_cast<double>(means.size());
        double var = 0.0;
        for (double m : means) var += (m - mean) * (m - mean);
        if (means.size() > 1) {
            var /= static_cast<double>(means.size() - 1);
            se = std::sqrt(var / static_cast<double>(means.size()));
        } else {
            se = 0.0;
        }
    };

    McReport report;
    batch_stats(energy_batch, report.mean_energy_per_site, report.se_energy);
    batch_stats(order_batch, report.mean_order, report.se_order);
    report.acceptance_rate =
        static_cast<double>(chain.accepted()) / static_cast<double>(chain.proposals());
    report.sweeps = sweeps;
    report.burn_in = burn_in;
    return report;
}

}  // namespace permaspin
