#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "permaspin/model.hpp"

namespace permaspin {

// Single-site Metropolis chain. Proposals are uniform over P (including the
// current spin), acceptance min(1, e^{-beta dH}) with dH from the proposed
// site's incident edges and field term only. Fixed seed gives a bit-identical
// trajectory.
class MetropolisChain {
public:
    MetropolisChain(const Graph& g, const SpinSet& p_set, const ModelParams& p,
                    std::uint64_t seed);

    // One sweep = n single-site updates, sites visited in order.
    void sweep();

    double energy() const { return energy_; }
    double energy_per_site() const { return energy_ / n_; }
    // Mean phi(pi, id) over sites.
    double order_parameter() const;
    const std::vector<int>& spin_indices() const { return spins_; }
    std::uint64_t sweep_count() const { return sweeps_; }
    std::uint64_t proposals() const { return proposals_; }
    std::uint64_t accepted() const { return accepted_; }

    // Full O(n + |E|) energy recomputation; the sweep loop calls this
    // periodically to stop incremental drift.
    double recompute_energy() const;

private:
    int n_;
    int set_size_;
    std::vector<std::vector<int>> adjacency_;
    PhiTables tables_;
    double beta_, coupling_, field_;
    std::vector<int> spins_;
    double energy_;
    std::uint64_t sweeps_ = 0;
    std::uint64_t proposals_ = 0;
    std::uint64_t accepted_ = 0;
    std::mt19937_64 rng_;
};

struct McReport {
    double mean_energy_per_site = 0.0;
    double se_energy = 0.0;
    double mean_order = 0.0;
    double se_order = 0.0;
    double acceptance_rate = 0.0;
    std::uint64_t sweeps = 0;
    std::uint64_t burn_in = 0;
};

// Runs burn_in + measurement sweeps and estimates the mean energy per site
// and mean order parameter, standard errors via batch means.
McReport sample_observables(const Graph& g, const SpinSet& p_set, const ModelParams& p,
                            std::uint64_t sweeps, std::uint64_t burn_in, std::uint64_t seed);

}  // namespace permaspin
