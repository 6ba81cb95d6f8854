#include "doctest.h"

#include <stdexcept>
#include <cmath>
#include <random>

#include "permaspin/model.hpp"

using namespace permaspin;

namespace {

Permutation pp(const char* text) { return Permutation::parse(text); }

ModelParams destat_params(double beta, double coupling, double field) {
    ModelParams p;
    p.beta = beta;
    p.coupling = coupling;
    p.field = field;
    p.stat = StatKind::Destat;
    return p;
}

// phi(sigma, pi) over S3, rows/columns lexicographic.
const double kPhiTable[6][6] = {
    {1, 0, 0, 0, 0, -1},
    {0, 1, 0, -1, 0, 0},
    {0, 0, 1, 0, -1, 0},
    {0, -1, 0, 1, 0, 0},
    {0, 0, -1, 0, 1, 0},
    {-1, 0, 0, 0, 0, 1},
};

}  // namespace

TEST_SUITE("model") {

TEST_CASE("graph builders") {
    const Graph ring = Graph::ring(4);
    CHECK(ring.n == 4);
    CHECK(ring.edges.size() == 4);
    CHECK(Graph::path(5).edges.size() == 4);
    CHECK(Graph::path(1).edges.empty());
    CHECK(Graph::complete(5).edges.size() == 10);
    CHECK_THROWS_AS(Graph::ring(2), std::invalid_argument);

    const Graph parsed = Graph::parse_edge_list("1 2\n2 3\n# comment\n3 1\n");
    CHECK(parsed.n == 3);
    CHECK(parsed.edges.size() == 3);
    CHECK(Graph::parse_edge_list("1 2\n", 5).n == 5);
    CHECK_THROWS_AS(Graph::parse_edge_list("1 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(Graph::parse_edge_list("1 2\n2 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(Graph::parse_edge_list("0 2\n"), std::invalid_argument);
}

TEST_CASE("phi values") {
    CHECK(phi_pair(pp("123"), pp("321"), StatKind::Destat) == doctest::Approx(-1.0));
    CHECK(phi_pair(pp("231"), pp("231"), StatKind::Destat) == doctest::Approx(1.0));
    CHECK(phi_pair(pp("132"), pp("213"), StatKind::Destat) == doctest::Approx(0.0));
    CHECK(phi_single(pp("123"), StatKind::Destat) == doctest::Approx(1.0));
    CHECK(phi_single(pp("321"), StatKind::Destat) == doctest::Approx(-1.0));
    CHECK(phi_single(pp("231"), StatKind::Destat) == doctest::Approx(0.0));
    CHECK_THROWS_AS(phi_pair(pp("12"), pp("123"), StatKind::Destat), std::invalid_argument);
    CHECK_THROWS_AS(phi_single(pp("1"), StatKind::Destat), std::invalid_argument);

    const SpinSet s3 = SpinSet::full(3);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            CHECK(phi_pair(s3.member(i), s3.member(j), StatKind::Destat) ==
                  doctest::Approx(kPhiTable[i][j]));
}

TEST_CASE("phi symmetry and range for symmetric statistics") {
    for (int k = 2; k <= 6; ++k) {
        const SpinSet all = SpinSet::full(k);
        for (StatKind kind : {StatKind::Inv, StatKind::Destat}) {
            for (const auto& alpha : all.members()) {
                for (const auto& beta : all.members()) {
                    const double ab = phi_pair(alpha, beta, kind);
                    CHECK(ab == doctest::Approx(phi_pair(beta, alpha, kind)).epsilon(1e-15));
                    CHECK(ab >= -1.0);
                    CHECK(ab <= 1.0);
                }
            }
        }
    }
}

TEST_CASE("hamiltonian examples") {
    const ModelParams p = destat_params(1.0, 2.0, 0.7);
    const Graph ring3 = Graph::ring(3);
    const std::vector<Permutation> uniform = {pp("123"), pp("123"), pp("123")};
    CHECK(hamiltonian(ring3, uniform, p) == doctest::Approx(-3 * 2.0 - 3 * 0.7));

    const Graph path2 = Graph::path(2);
    const std::vector<Permutation> opposed = {pp("123"), pp("321")};
    CHECK(hamiltonian(path2, opposed, p) == doctest::Approx(+2.0));  // fields cancel

    const Graph ring4 = Graph::ring(4);
    const std::vector<Permutation> blocks = {pp("123"), pp("123"), pp("321"), pp("321")};
    CHECK(hamiltonian(ring4, blocks, destat_params(1.0, 1.0, 0.0)) == doctest::Approx(0.0));

    CHECK_THROWS_AS(hamiltonian(ring4, uniform, p), std::invalid_argument);
}

TEST_CASE("hamiltonian is invariant under vertex relabeling") {
    std::mt19937_64 rng(3);
    const SpinSet s3 = SpinSet::full(3);
    const ModelParams p = destat_params(0.8, 1.1, -0.4);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 3);
        Graph g;
        g.n = n;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.edges.emplace_back(u, v);
        std::vector<Permutation> spins;
        for (int i = 0; i < n; ++i) spins.push_back(s3.member(static_cast<int>(rng() % 6)));

        std::vector<int> relabel(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) relabel[static_cast<size_t>(i)] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(relabel[static_cast<size_t>(i)], relabel[rng() % (i + 1)]);

        Graph h;
        h.n = n;
        for (auto [u, v] : g.edges) {
            const int ru = relabel[static_cast<size_t>(u)], rv = relabel[static_cast<size_t>(v)];
            h.edges.emplace_back(std::min(ru, rv), std::max(ru, rv));
        }
        std::vector<Permutation> relabeled_spins(spins);
        for (int i = 0; i < n; ++i)
            relabeled_spins[static_cast<size_t>(relabel[static_cast<size_t>(i)])] =
                spins[static_cast<size_t>(i)];

        CHECK(hamiltonian(g, spins, p) ==
              doctest::Approx(hamiltonian(h, relabeled_spins, p)).epsilon(1e-12));
    }
}

TEST_CASE("brute force classical ring identity") {
    const SpinSet s2 = SpinSet::full(2);
    const ModelParams p = destat_params(1.0, 1.0, 0.0);
    const double z = brute_force_z(Graph::ring(3), s2, p).z;
    const double expected = std::pow(2 * std::cosh(1.0), 3) + std::pow(2 * std::sinh(1.0), 3);
    CHECK(z == doctest::Approx(expected).epsilon(1e-13));

    // The same eight terms, written out directly.
    double direct = 0.0;
    const Graph ring = Graph::ring(3);
    for (int c = 0; c < 8; ++c) {
        std::vector<Permutation> spins;
        for (int site = 0; site < 3; ++site)
            spins.push_back((c >> site) & 1 ? pp("21") : pp("12"));
        direct += std::exp(-p.beta * hamiltonian(ring, spins, p));
    }
    CHECK(z == doctest::Approx(direct).epsilon(1e-13));
}

TEST_CASE("brute force with zero couplings counts configurations") {
    const SpinSet s3 = SpinSet::full(3);
    const ModelParams p = destat_params(2.0, 0.0, 0.0);
    CHECK(brute_force_z(Graph::ring(4), s3, p).z == doctest::Approx(std::pow(6.0, 4)));
    CHECK(brute_force_z(Graph::path(3), s3, p).z == doctest::Approx(216.0));
}

TEST_CASE("brute force cap") {
    BruteForceOptions opts;
    opts.config_cap = 100.0;
    const SpinSet s3 = SpinSet::full(3);
    CHECK_THROWS_AS(brute_force_z(Graph::ring(3), s3, destat_params(1, 1, 0), opts),
                    std::length_error);
}

TEST_CASE("boltzmann probabilities sum to one") {
    const SpinSet s3 = SpinSet::full(3);
    const auto probs = boltzmann_probabilities(Graph::ring(3), s3, destat_params(1.2, 0.9, 0.3));
    REQUIRE(probs.size() == 216);
    double total = 0.0;
    for (double w : probs) {
        CHECK(w > 0.0);
        total += w;
    }
    CHECK(std::abs(total - 1.0) <= 1e-12);
}

TEST_CASE("enumeration order is the mixed-radix counter") {
    // With J=0, H chosen so each configuration weight encodes its spins, the
    // probability vector layout pins the counter order.
    const SpinSet s2 = SpinSet::full(2);
    ModelParams p = destat_params(1.0, 0.0, std::log(2.0));
    const auto probs = boltzmann_probabilities(Graph::path(2), s2, p);
    REQUIRE(probs.size() == 4);
    // Weights: e^{beta H phi} per site with phi(12)=1, phi(21)=-1 -> 2 or 1/2.
    const double z = 4.0 + 1.0 + 1.0 + 0.25;
    CHECK(probs[0] == doctest::Approx(4.0 / z));    // (12,12)
    CHECK(probs[1] == doctest::Approx(1.0 / z));    // (12,21)
    CHECK(probs[2] == doctest::Approx(1.0 / z));    // (21,12)
    CHECK(probs[3] == doctest::Approx(0.25 / z));   // (21,21)
}

TEST_CASE("log Z is convex in beta") {
    const SpinSet s3 = SpinSet::full(3);
    const Graph ring = Graph::ring(4);
    for (double beta1 : {0.2, 0.5, 1.0}) {
        const double beta3 = beta1 * 4.0;
        const double beta2 = 0.5 * (beta1 + beta3);
        const double l1 = brute_force_z(ring, s3, destat_params(beta1, 1.0, 0.4)).ln_z;
        const double l2 = brute_force_z(ring, s3, destat_params(beta2, 1.0, 0.4)).ln_z;
        const double l3 = brute_force_z(ring, s3, destat_params(beta3, 1.0, 0.4)).ln_z;
        CHECK(l2 <= 0.5 * (l1 + l3) + 1e-12);
    }
}

TEST_CASE("filtered sum splits the full sum") {
    const SpinSet s3 = SpinSet::full(3);
    const Graph ring = Graph::ring(4);
    const ModelParams p = destat_params(0.9, 1.0, 0.2);
    const double all = brute_force_z(ring, s3, p).z;
    const double uniform = brute_force_z_filtered(ring, s3, p, [](std::span<const int> idx) {
        for (int s : idx)
            if (s != idx[0]) return false;
        return true;
    });
    const double rest = brute_force_z_filtered(ring, s3, p, [](std::span<const int> idx) {
        for (int s : idx)
            if (s != idx[0]) return true;
        return false;
    });
    CHECK(all == doctest::Approx(uniform + rest).epsilon(1e-13));
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(destat_params(0.0, 1.0, 0.0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(destat_params(-1.0, 1.0, 0.0).validate(), std::invalid_argument);
}

}  // TEST_SUITE
