#pragma once

#include <functional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "permaspin/perm.hpp"

namespace permaspin {

struct ModelParams {
    double beta = 1.0;      // inverse temperature, > 0
    double coupling = 1.0;  // J; ferromagnetic when > 0 (sign not restricted)
    double field = 0.0;     // H
    StatKind stat = StatKind::Destat;

    void validate() const;
};

// Simple graph; vertices are 0-based internally, 1-based in text form.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // normalized u < v

    static Graph ring(int n);      // n >= 3
    static Graph path(int n);      // n >= 1
    static Graph complete(int n);  // n >= 1
    // One "u v" pair per line, 1-based; blank lines and '#' comments skipped.
    // n_override extends the vertex count beyond the largest endpoint.
    static Graph parse_edge_list(std::string_view text, int n_override = 0);

    std::vector<std::vector<int>> adjacency() const;
    void validate() const;
};

// Interaction energy 1 - (2/s_max) stat(alpha^{-1} beta), in [-1, 1].
double phi_pair(const Permutation& alpha, const Permutation& beta, StatKind stat);
// Field energy of a single spin: phi_pair(id, pi).
double phi_single(const Permutation& pi, StatKind stat);

// -J * sum over edges of phi_pair - H * sum over vertices of phi_single.
double hamiltonian(const Graph& g, std::span<const Permutation> spins, const ModelParams& p);

enum class Method { Trace, ClosedForm, BruteForce, MeanField, LowTemp };
const char* method_name(Method m);

struct PartitionReport {
    double z = 0.0;
    double ln_z = 0.0;
    double f_density = 0.0;  // finite-size density -ln Z / (beta n)
    Method method = Method::BruteForce;
};

struct BruteForceOptions {
    double config_cap = 1e8;  // maximum |P|^n enumerated
};

// Exact sum of exp(-beta H) over all configurations in P^n, enumerated as a
// mixed-radix counter in lexicographic order (first vertex most significant).
PartitionReport brute_force_z(const Graph& g, const SpinSet& p_set, const ModelParams& p,
                              const BruteForceOptions& opts = {});

// Same enumeration restricted to configurations accepted by `filter`
// (spin indices into P, one per vertex). Returns the raw weight sum.
double brute_force_z_filtered(const Graph& g, const SpinSet& p_set, const ModelParams& p,
                              const std::function<bool(std::span<const int>)>& filter,
                              const BruteForceOptions& opts = {});

// Per-configuration Boltzmann probabilities in enumeration order; |P|^n <= 1e6.
std::vector<double> boltzmann_probabilities(const Graph& g, const SpinSet& p_set,
                                            const ModelParams& p);

// Tables used by the enumeration and sampler fast paths.
struct PhiTables {
    std::vector<double> pair;     // size |P|^2, row-major
    std::vector<double> single;   // size |P|
    int size = 0;
    double pair_at(int i, int j) const { return pair[static_cast<size_t>(i) * size + j]; }
};
PhiTables make_phi_tables(const SpinSet& p_set, StatKind stat);

}  // namespace permaspin
