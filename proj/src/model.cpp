#include "permaspin/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace permaspin {

void ModelParams::validate() const {
    if (!(beta > 0.0)) throw std::invalid_argument("ModelParams: beta must be > 0");
}

Graph Graph::ring(int n) {
    if (n < 3) throw std::invalid_argument("Graph::ring: n must be >= 3");
    Graph g;
    g.n = n;
    for (int i = 0; i < n; ++i) {
        int u = i, v = (i + 1) % n;
        g.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    g.validate();
    return g;
}

Graph Graph::path(int n) {
    if (n < 1) throw std::invalid_argument("Graph::path: n must be >= 1");
    Graph g;
    g.n = n;
    for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

Graph Graph::complete(int n) {
    if (n < 1) throw std::invalid_argument("Graph::complete: n must be >= 1");
    Graph g;
    g.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
    return g;
}

Graph Graph::parse_edge_list(std::string_view text, int n_override) {
    Graph g;
    int max_vertex = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u)) continue;  // blank
        if (!(ls >> v)) throw std::invalid_argument("Graph::parse_edge_list: expected 'u v' pair");
        if (u < 1 || v < 1) throw std::invalid_argument("Graph::parse_edge_list: vertices are 1-based");
        max_vertex = std::max(max_vertex, static_cast<int>(std::max(u, v)));
        g.edges.emplace_back(static_cast<int>(std::min(u, v)) - 1,
                             static_cast<int>(std::max(u, v)) - 1);
    }
    g.n = std::max(max_vertex, n_override);
    if (g.n == 0) throw std::invalid_argument("Graph::parse_edge_list: no vertices");
    g.validate();
    return g;
}

void Graph::validate() const {
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph: vertex out of range");
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw std::invalid_argument("Graph: duplicate edge");
    }
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (auto [u, v] : edges) {
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    return adj;
}

double phi_pair(const Permutation& alpha, const Permutation& beta, StatKind stat) {
    if (alpha.size() != beta.size()) throw std::invalid_argument("phi_pair: length mismatch");
    const int smax = stat_max(stat, alpha.size());
    if (smax == 0) throw std::invalid_argument("phi_pair: statistic has empty range for this k");
    const int s = statistic(stat, compose(alpha.inverse(), beta));
    return 1.0 - 2.0 * s / smax;
}

double phi_single(const Permutation& pi, StatKind stat) {
    const int smax = stat_max(stat, pi.size());
    if (smax == 0) throw std::invalid_argument("phi_single: statistic has empty range for this k");
    return 1.0 - 2.0 * statistic(stat, pi) / smax;
}

double hamiltonian(const Graph& g, std::span<const Permutation> spins, const ModelParams& p) {
    if (static_cast<int>(spins.size()) != g.n)
        throw std::invalid_argument("hamiltonian: configuration size does not match graph");
    double edge_sum = 0.0;
    for (auto [u, v] : g.edges)
        edge_sum += phi_pair(spins[static_cast<size_t>(u)], spins[static_cast<size_t>(v)], p.stat);
    double vertex_sum = 0.0;
    for (const auto& s : spins) vertex_sum += phi_single(s, p.stat);
    return -p.coupling * edge_sum - p.field * vertex_sum;
}

PhiTables make_phi_tables(const SpinSet& p_set, StatKind stat) {
    PhiTables t;
    t.size = p_set.size();
    t.pair.resize(static_cast<size_t>(t.size) * t.size);
    t.single.resize(static_cast<size_t>(t.size));
    std::vector<Permutation> inverses;
    inverses.reserve(static_cast<size_t>(t.size));
    for (const auto& pi : p_set.members()) inverses.push_back(pi.inverse());
    const int smax = stat_max(stat, p_set.k());
    if (smax == 0) throw std::invalid_argument("make_phi_tables: statistic has empty range");
    for (int i = 0; i < t.size; ++i) {
        for (int j = 0; j < t.size; ++j) {
            const int s = statistic(stat, compose(inverses[static_cast<size_t>(i)], p_set.member(j)));
            t.pair[static_cast<size_t>(i) * t.size + j] = 1.0 - 2.0 * s / smax;
        }
        t.single[static_cast<size_t>(i)] = phi_single(p_set.member(i), stat);
    }
    return t;
}

namespace {

// Streams every configuration of P^n in mixed-radix lexicographic order.
// visit(indices, energy) is called once per configuration.
template <typename Visit>
void enumerate_configurations(const Graph& g, const SpinSet& p_set, const ModelParams& p,
                              double cap, Visit&& visit) {
    p.validate();
    g.validate();
    const int m = p_set.size();
    const int n = g.n;
    if (m == 0) throw std::invalid_argument("enumerate: empty spin set");
    if (n * std::log(static_cast<double>(m)) > std::log(cap) + 1e-12)
        throw std::length_error("enumerate: configuration count exceeds cap");

    PhiTables tables = make_phi_tables(p_set, p.stat);
    std::vector<int> idx(static_cast<size_t>(n), 0);
    while (true) {
        double edge_sum = 0.0;
        for (auto [u, v] : g.edges)
            edge_sum += tables.pair_at(idx[static_cast<size_t>(u)], idx[static_cast<size_t>(v)]);
        double vertex_sum = 0.0;
        for (int s : idx) vertex_sum += tables.single[static_cast<size_t>(s)];
        visit(std::span<const int>(idx), -p.coupling * edge_sum - p.field * vertex_sum);

        int pos = n - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == m - 1) {
            idx[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
    }
}

}  // namespace

PartitionReport brute_force_z(const Graph& g, const SpinSet& p_set, const ModelParams& p,
                              const BruteForceOptions& opts) {
    double z = 0.0;
    enumerate_configurations(g, p_set, p, opts.config_cap,
                             [&](std::span<const int>, double energy) {
                                 z += std::exp(-p.beta * energy);
                             });
    PartitionReport report;
    report.z = z;
    report.ln_z = std::log(z);
    report.f_density = -report.ln_z / (p.beta * g.n);
    report.method = Method::BruteForce;
    return report;
}

double brute_force_z_filtered(const Graph& g, const SpinSet& p_set, const ModelParams& p,
                              const std::function<bool(std::span<const int>)>& filter,
                              const BruteForceOptions& opts) {
    double z = 0.0;
    enumerate_configurations(g, p_set, p, opts.config_cap,
                             [&](std::span<const int> idx, double energy) {
                                 if (filter(idx)) z += std::exp(-p.beta * energy);
                             });
    return z;
}

std::vector<double> boltzmann_probabilities(const Graph& g, const SpinSet& p_set,
                                            const ModelParams& p) {
    std::vector<double> weights;
    enumerate_configurations(g, p_set, p, 1e6, [&](std::span<const int>, double energy) {
        weights.push_back(std::exp(-p.beta * energy));
    });
    double z = 0.0;
    for (double w : weights) z += w;
    for (double& w : weights) w /= z;
    return weights;
}

const char* method_name(Method m) {
    switch (m) {
        case Method::Trace: return "trace";
        case Method::ClosedForm: return "closed-form";
        case Method::BruteForce: return "brute-force";
        case Method::MeanField: return "mean-field";
        case Method::LowTemp: return "low-temp";
    }
    return "?";
}

}  // namespace permaspin
