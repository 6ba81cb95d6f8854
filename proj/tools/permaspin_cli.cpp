// permaspin-lab command line: reproducible, scriptable runs over the C API.
// Every computation lives behind libpermaspin; this binary only parses flags,
// schedules sweep points, and formats CSV/JSON.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "permaspin.h"

namespace {

using nlohmann::json;

constexpr const char* kHeader = "# permaspin-lab v1";

// Round-trip float formatting; identical inputs give identical bytes.
std::string g17(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

// Bad flag values (exit 2), as opposed to runtime failures (exit 1).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] void fail(const std::string& message) {
    throw std::runtime_error(message);
}

[[noreturn]] void usage_fail(const std::string& message) {
    throw UsageError(message);
}

void check(ps_status status, const char* what) {
    if (status != PS_OK)
        fail(std::string(what) + ": " + ps_status_name(status) + " (" + ps_last_error() + ")");
}

// "lo:hi:steps" (inclusive endpoints) or a scalar.
std::vector<double> parse_sweep(const std::string& text, const char* flag) {
    std::vector<double> values;
    const size_t first = text.find(':');
    if (first == std::string::npos) {
        try {
            size_t used = 0;
            const double v = std::stod(text, &used);
            if (used != text.size()) usage_fail(std::string(flag) + ": trailing characters");
            return {v};
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception&) {
            usage_fail(std::string(flag) + ": expected a number or lo:hi:steps");
        }
    }
    const size_t second = text.find(':', first + 1);
    if (second == std::string::npos) usage_fail(std::string(flag) + ": expected lo:hi:steps");
    try {
        const double lo = std::stod(text.substr(0, first));
        const double hi = std::stod(text.substr(first + 1, second - first - 1));
        const long steps = std::stol(text.substr(second + 1));
        if (steps < 1) usage_fail(std::string(flag) + ": steps must be >= 1");
        if (steps == 1) {
            values.push_back(lo);
            return values;
        }
        if (!(lo < hi)) usage_fail(std::string(flag) + ": need lo < hi");
        for (long i = 0; i < steps; ++i)
            values.push_back(lo + (hi - lo) * static_cast<double>(i)
                                      / static_cast<double>(steps - 1));
        return values;
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception&) {
        usage_fail(std::string(flag) + ": expected lo:hi:steps");
    }
}

ps_stat_kind parse_stat(const std::string& name) {
    if (name == "destat") return PS_STAT_DESTAT;
    if (name == "inv") return PS_STAT_INV;
    usage_fail("--stat: expected destat or inv");
}

int worker_count(size_t jobs) {
    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (const char* env = std::getenv("PERMASPIN_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned long>(cap) < workers)
            workers = static_cast<unsigned>(cap);
    }
    if (jobs < workers) workers = static_cast<unsigned>(jobs);
    return static_cast<int>(workers == 0 ? 1 : workers);
}

// Runs fn(i) for i in [0, jobs) across threads; results must be written into
// pre-sized slots so the output order stays deterministic.
template <typename Fn>
void parallel_for(size_t jobs, Fn&& fn) {
    const int workers = worker_count(jobs);
    if (workers <= 1) {
        for (size_t i = 0; i < jobs; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (size_t i = static_cast<size_t>(w); i < jobs; i += static_cast<size_t>(workers))
                fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

struct SpinSetHandle {
    ps_spinset* ptr = nullptr;
    ~SpinSetHandle() { ps_spinset_free(ptr); }
};

struct GraphHandle {
    ps_graph* ptr = nullptr;
    ~GraphHandle() { ps_graph_free(ptr); }
};

void make_spinset(int k, const std::string& avoid, SpinSetHandle& out) {
    if (avoid.empty())
        check(ps_spinset_full(k, &out.ptr), "spin set");
    else
        check(ps_spinset_avoiding(k, avoid.c_str(), &out.ptr), "spin set");
}

std::string spinset_label(const ps_spinset* set) {
    char buf[256];
    check(ps_spinset_label(set, buf, sizeof buf), "spin set label");
    return buf;
}

void make_graph(const std::string& selector, int n, GraphHandle& out) {
    if (selector == "ring") {
        check(ps_graph_ring(n, &out.ptr), "graph");
    } else if (selector == "path") {
        check(ps_graph_path(n, &out.ptr), "graph");
    } else if (selector == "complete") {
        check(ps_graph_complete(n, &out.ptr), "graph");
    } else if (selector.rfind("file:", 0) == 0) {
        const std::string path = selector.substr(5);
        std::ifstream in(path);
        if (!in) fail("--graph: cannot open " + path);
        std::stringstream text;
        text << in.rdbuf();
        check(ps_graph_parse(text.str().c_str(), n, &out.ptr), "graph");
    } else {
        usage_fail("--graph: expected ring, path, complete or file:<path>");
    }
}

// Output sink: stdout or --out path.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) fail("--out: cannot open " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string csv_quote(const std::string& text) { return "\"" + text + "\""; }

// ---- subcommand payloads ---------------------------------------------------

struct GfOptions {
    int k = 3;
    std::string stat = "destat";
    std::string out;
    std::string format = "csv";
};

int run_gf(const GfOptions& opt) {
    const ps_stat_kind kind = parse_stat(opt.stat);
    char gf_buf[4096];
    check(ps_stat_gf(kind, opt.k, gf_buf, sizeof gf_buf), "stat_gf");
    std::string closed;
    if (kind == PS_STAT_DESTAT) {
        char series_buf[4096];
        check(ps_cddes_closed_form(opt.k, series_buf, sizeof series_buf), "cddes");
        closed = series_buf;
    }

    Sink sink(opt.out);
    if (opt.format == "json") {
        json rows = json::array();
        rows.push_back({{"k", opt.k}, {"stat", opt.stat}, {"method", "enumeration"},
                        {"polynomial", gf_buf}});
        if (!closed.empty())
            rows.push_back({{"k", opt.k}, {"stat", opt.stat}, {"method", "closed-form"},
                            {"polynomial", closed}});
        sink.stream() << json{{"format", "permaspin-lab v1"}, {"rows", rows}}.dump(2) << "\n";
        return 0;
    }
    sink.stream() << kHeader << "\nk,stat,method,polynomial\n";
    sink.stream() << opt.k << "," << opt.stat << ",enumeration," << csv_quote(gf_buf) << "\n";
    if (!closed.empty())
        sink.stream() << opt.k << "," << opt.stat << ",closed-form," << csv_quote(closed) << "\n";
    return 0;
}

struct ExactOptions {
    int k = 3;
    int n = 10;
    std::string beta = "1";
    double coupling = 1.0;
    double field = 0.0;
    std::string avoid;
    std::string stat = "destat";
    std::string out;
    std::string format = "csv";
};

int run_exact(const ExactOptions& opt) {
    const ps_stat_kind kind = parse_stat(opt.stat);
    const std::vector<double> betas = parse_sweep(opt.beta, "--beta");
    SpinSetHandle set;
    make_spinset(opt.k, opt.avoid, set);
    const std::string label = spinset_label(set.ptr);

    struct Row {
        double beta, z, ln_z, f;
    };
    std::vector<Row> rows(betas.size());
    std::vector<std::string> errors(betas.size());
    parallel_for(betas.size(), [&](size_t i) {
        ps_params p{betas[i], opt.coupling, opt.field, kind};
        Row& row = rows[i];
        row.beta = betas[i];
        const ps_status rc = ps_ring_exact(set.ptr, &p, opt.n, &row.z, &row.ln_z, &row.f);
        if (rc != PS_OK) errors[i] = ps_last_error();
    });
    for (const auto& e : errors)
        if (!e.empty()) fail("exact: " + e);

    Sink sink(opt.out);
    if (opt.format == "json") {
        json out_rows = json::array();
        for (const Row& r : rows)
            out_rows.push_back({{"beta", r.beta}, {"J", opt.coupling}, {"H", opt.field},
                                {"k", opt.k}, {"n", opt.n}, {"stat", opt.stat}, {"set", label},
                                {"Z", r.z}, {"ln_Z", r.ln_z}, {"f", r.f}});
        sink.stream() << json{{"format", "permaspin-lab v1"}, {"rows", out_rows}}.dump(2) << "\n";
        return 0;
    }
    sink.stream() << kHeader << "\nbeta,J,H,k,n,stat,set,Z,ln_Z,f\n";
    for (const Row& r : rows)
        sink.stream() << g17(r.beta) << "," << g17(opt.coupling) << "," << g17(opt.field) << ","
                      << opt.k << "," << opt.n << "," << opt.stat << "," << csv_quote(label)
                      << "," << g17(r.z) << "," << g17(r.ln_z) << "," << g17(r.f) << "\n";
    return 0;
}

struct SpectrumOptions {
    int k = 3;
    double beta = 1.0;
    double coupling = 1.0;
    double field = 0.0;
    std::string avoid;
    std::string stat = "destat";
    std::string out;
    std::string format = "json";
};

int run_spectrum(const SpectrumOptions& opt) {
    const ps_stat_kind kind = parse_stat(opt.stat);
    SpinSetHandle set;
    make_spinset(opt.k, opt.avoid, set);
    const std::string label = spinset_label(set.ptr);
    const ps_params p{opt.beta, opt.coupling, opt.field, kind};
    double a = 0, b = 0;
    check(ps_transfer_ab(&p, opt.k, &a, &b), "transfer variables");

    struct Entry {
        ps_spectrum_method method;
        std::vector<double> eigenvalues;
    };
    std::vector<Entry> entries;
    const int size = ps_spinset_size(set.ptr);
    std::vector<double> eigenvalues(static_cast<size_t>(size));
    int count = 0;
    check(ps_spectrum(set.ptr, &p, PS_SPECTRUM_NUMERIC, eigenvalues.data(), size, &count),
          "spectrum");
    entries.push_back({PS_SPECTRUM_NUMERIC,
                       {eigenvalues.begin(), eigenvalues.begin() + count}});
    const int closed = ps_spectrum_closed_method(set.ptr, kind);
    if (closed >= 0) {
        const auto method = static_cast<ps_spectrum_method>(closed);
        check(ps_spectrum(set.ptr, &p, method, eigenvalues.data(), size, &count),
              "closed-form spectrum");
        entries.push_back({method, {eigenvalues.begin(), eigenvalues.begin() + count}});
    }

    Sink sink(opt.out);
    if (opt.format == "csv") {
        sink.stream() << kHeader << "\nmethod,index,eigenvalue\n";
        for (const Entry& entry : entries)
            for (size_t i = 0; i < entry.eigenvalues.size(); ++i)
                sink.stream() << ps_spectrum_method_name(entry.method) << "," << i << ","
                              << g17(entry.eigenvalues[i]) << "\n";
        return 0;
    }
    json result = json::array();
    for (const Entry& entry : entries) {
        result.push_back({{"params",
                           {{"beta", opt.beta}, {"J", opt.coupling}, {"H", opt.field},
                            {"k", opt.k}, {"stat", opt.stat}, {"set", label}, {"a", a},
                            {"b", b}}},
                          {"eigenvalues", entry.eigenvalues},
                          {"method", ps_spectrum_method_name(entry.method)}});
    }
    sink.stream() << result.dump(2) << "\n";
    return 0;
}

struct SurfaceOptions {
    std::string grid = "0.05:2:40";
    std::string out;
    std::string format = "csv";
};

int run_surfaces(const SurfaceOptions& opt) {
    const std::vector<double> axis = parse_sweep(opt.grid, "--grid");
    if (axis.size() < 2) fail("--grid: need at least 2 steps");
    const size_t jobs = axis.size() * axis.size();
    std::vector<ps_cubic_point> points(jobs);
    std::vector<std::string> errors(jobs);
    parallel_for(jobs, [&](size_t i) {
        const double c = axis[i / axis.size()];
        const double d = axis[i % axis.size()];
        if (ps_cubic_eval(c, d, &points[i]) != PS_OK) errors[i] = ps_last_error();
    });
    for (const auto& e : errors)
        if (!e.empty()) fail("surfaces: " + e);

    Sink sink(opt.out);
    if (opt.format == "json") {
        json rows = json::array();
        for (const auto& pt : points)
            rows.push_back({{"c", pt.c}, {"d", pt.d}, {"lambda_star", pt.lambda_star},
                            {"lambda4", pt.lambda4}, {"lambda5", pt.lambda5},
                            {"delta0", pt.delta0}, {"delta1", pt.delta1},
                            {"delta2", pt.delta2}});
        sink.stream() << json{{"format", "permaspin-lab v1"}, {"rows", rows}}.dump(2) << "\n";
        return 0;
    }
    sink.stream() << kHeader << "\nc,d,lambda_star,lambda4,lambda5,delta0,delta1,delta2\n";
    for (const auto& pt : points)
        sink.stream() << g17(pt.c) << "," << g17(pt.d) << "," << g17(pt.lambda_star) << ","
                      << g17(pt.lambda4) << "," << g17(pt.lambda5) << "," << g17(pt.delta0)
                      << "," << g17(pt.delta1) << "," << g17(pt.delta2) << "\n";
    return 0;
}

struct MeanFieldOptions {
    int n = 6;
    int q = 2;
    std::string beta = "1";
    double coupling = 1.0;
    double field = 0.0;
    std::string out;
    std::string format = "csv";
};

int run_meanfield(const MeanFieldOptions& opt) {
    const std::vector<double> betas = parse_sweep(opt.beta, "--beta");
    std::vector<ps_meanfield_report> reports(betas.size());
    std::vector<std::string> errors(betas.size());
    parallel_for(betas.size(), [&](size_t i) {
        const ps_params p{betas[i], opt.coupling, opt.field, PS_STAT_DESTAT};
        if (ps_meanfield(opt.n, opt.q, &p, &reports[i]) != PS_OK) errors[i] = ps_last_error();
    });
    for (const auto& e : errors)
        if (!e.empty()) fail("meanfield: " + e);

    Sink sink(opt.out);
    if (opt.format == "json") {
        json rows = json::array();
        for (size_t i = 0; i < betas.size(); ++i)
            rows.push_back({{"n", opt.n}, {"q", opt.q}, {"beta", betas[i]},
                            {"J", opt.coupling}, {"H", opt.field},
                            {"Z_factorized", reports[i].z_factorized},
                            {"Z_direct", reports[i].z_direct},
                            {"dominant_estimate", reports[i].dominant_estimate},
                            {"f", reports[i].f}});
        sink.stream() << json{{"format", "permaspin-lab v1"}, {"rows", rows}}.dump(2) << "\n";
        return 0;
    }
    sink.stream() << kHeader
                  << "\nn,q,beta,J,H,Z_factorized,Z_direct,dominant_estimate,f\n";
    for (size_t i = 0; i < betas.size(); ++i)
        sink.stream() << opt.n << "," << opt.q << "," << g17(betas[i]) << ","
                      << g17(opt.coupling) << "," << g17(opt.field) << ","
                      << g17(reports[i].z_factorized) << "," << g17(reports[i].z_direct) << ","
                      << g17(reports[i].dominant_estimate) << "," << g17(reports[i].f) << "\n";
    return 0;
}

struct LowTempOptions {
    int n = 5;
    std::string beta = "5";
    double coupling = 1.0;
    double field = 0.0;
    std::string out;
    std::string format = "csv";
};

int run_lowtemp(const LowTempOptions& opt) {
    const std::vector<double> betas = parse_sweep(opt.beta, "--beta");
    std::vector<ps_lowtemp_report> reports(betas.size());
    std::vector<std::string> errors(betas.size());
    parallel_for(betas.size(), [&](size_t i) {
        const ps_params p{betas[i], opt.coupling, opt.field, PS_STAT_DESTAT};
        if (ps_lowtemp(opt.n, &p, &reports[i]) != PS_OK) errors[i] = ps_last_error();
    });
    for (const auto& e : errors)
        if (!e.empty()) fail("lowtemp: " + e);

    Sink sink(opt.out);
    if (opt.format == "json") {
        json rows = json::array();
        for (size_t i = 0; i < betas.size(); ++i)
            rows.push_back({{"n", opt.n}, {"beta", betas[i]}, {"J", opt.coupling},
                            {"H", opt.field}, {"z_uniform", reports[i].z_uniform},
                            {"z_wall", reports[i].z_domain_wall},
                            {"z_exact", reports[i].z_exact}, {"f6", reports[i].f_simple},
                            {"f7", reports[i].f_lambda4}, {"f_exact", reports[i].f_exact}});
        sink.stream() << json{{"format", "permaspin-lab v1"}, {"rows", rows}}.dump(2) << "\n";
        return 0;
    }
    sink.stream() << kHeader << "\nn,beta,J,H,z_uniform,z_wall,z_exact,f6,f7,f_exact\n";
    for (size_t i = 0; i < betas.size(); ++i)
        sink.stream() << opt.n << "," << g17(betas[i]) << "," << g17(opt.coupling) << ","
                      << g17(opt.field) << "," << g17(reports[i].z_uniform) << ","
                      << g17(reports[i].z_domain_wall) << "," << g17(reports[i].z_exact) << ","
                      << g17(reports[i].f_simple) << "," << g17(reports[i].f_lambda4) << ","
                      << g17(reports[i].f_exact) << "\n";
    return 0;
}

struct McOptions {
    int k = 3;
    int n = 8;
    std::string graph = "ring";
    std::string avoid;
    std::string stat = "destat";
    double beta = 1.0;
    double coupling = 1.0;
    double field = 0.0;
    std::uint64_t seed = 1;
    std::uint64_t sweeps = 10000;
    std::uint64_t burn_in = 1000;
    std::string out;
};

int run_mc(const McOptions& opt) {
    const ps_stat_kind kind = parse_stat(opt.stat);
    SpinSetHandle set;
    make_spinset(opt.k, opt.avoid, set);
    GraphHandle graph;
    make_graph(opt.graph, opt.n, graph);
    const ps_params p{opt.beta, opt.coupling, opt.field, kind};

    ps_chain* chain = nullptr;
    check(ps_chain_new(graph.ptr, set.ptr, &p, opt.seed, &chain), "chain");
    const std::unique_ptr<ps_chain, void (*)(ps_chain*)> chain_guard(chain, ps_chain_free);

    Sink sink(opt.out);
    sink.stream() << kHeader << "\n# seed=" << opt.seed << " sweeps=" << opt.sweeps
                  << " burn_in=" << opt.burn_in << "\nsweep,energy,order_parameter\n";
    for (std::uint64_t s = 1; s <= opt.sweeps; ++s) {
        double energy = 0, order = 0;
        check(ps_chain_sweep(chain, &energy, &order), "sweep");
        sink.stream() << s << "," << g17(energy) << "," << g17(order) << "\n";
    }

    if (opt.sweeps > opt.burn_in) {
        ps_mc_summary summary;
        check(ps_mc_sample(graph.ptr, set.ptr, &p, opt.sweeps, opt.burn_in, opt.seed, &summary),
              "summary");
        sink.stream() << "# mean_energy_per_site=" << g17(summary.mean_energy_per_site)
                      << " se_energy=" << g17(summary.se_energy)
                      << " mean_order=" << g17(summary.mean_order)
                      << " se_order=" << g17(summary.se_order)
                      << " acceptance=" << g17(summary.acceptance_rate) << "\n";
    }
    return 0;
}

int run_verify(bool quick) {
    struct State {
        int lines = 0;
    } state;
    int failures = 0;
    const ps_status rc = ps_verify(
        quick ? 1 : 0,
        [](const char* name, const char* detail, int pass, int informational, void* user) {
            auto* s = static_cast<State*>(user);
            ++s->lines;
            std::printf("[%s] %s: %s\n", informational ? "info" : (pass ? "PASS" : "FAIL"),
                        name, detail);
            std::fflush(stdout);
        },
        &state, &failures);
    check(rc, "verify");
    std::printf("verify: %s (%d checks reported)\n", failures == 0 ? "all checks passed" : "FAILURES",
                state.lines);
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permaspin-lab: exact and approximate computation for a permutation-spin "
                 "Ising-type model"};
    app.require_subcommand(1);

    GfOptions gf;
    CLI::App* gf_cmd = app.add_subcommand("gf", "Permutation-statistic generating functions");
    gf_cmd->add_option("--k", gf.k, "Permutation length");
    gf_cmd->add_option("--stat", gf.stat, "Statistic: destat or inv")
        ->check(CLI::IsMember({"destat", "inv"}));
    gf_cmd->add_option("--out", gf.out, "Output path (default stdout)");
    gf_cmd->add_option("--format", gf.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    ExactOptions exact;
    CLI::App* exact_cmd =
        app.add_subcommand("exact", "Ring partition function and free energy via the trace");
    exact_cmd->add_option("--k", exact.k, "Permutation length");
    exact_cmd->add_option("--n", exact.n, "Ring size (>= 3)");
    exact_cmd->add_option("--beta", exact.beta, "Inverse temperature, scalar or lo:hi:steps");
    exact_cmd->add_option("--J", exact.coupling, "Coupling energy");
    exact_cmd->add_option("--H", exact.field, "External field energy");
    exact_cmd->add_option("--avoid", exact.avoid, "Forbidden patterns, e.g. 123,321");
    exact_cmd->add_option("--stat", exact.stat, "Statistic: destat or inv")
        ->check(CLI::IsMember({"destat", "inv"}));
    exact_cmd->add_option("--out", exact.out, "Output path (default stdout)");
    exact_cmd->add_option("--format", exact.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    SpectrumOptions spectrum;
    CLI::App* spectrum_cmd =
        app.add_subcommand("spectrum", "Transfer-matrix eigenvalues, numeric and closed-form");
    spectrum_cmd->add_option("--k", spectrum.k, "Permutation length");
    spectrum_cmd->add_option("--beta", spectrum.beta, "Inverse temperature");
    spectrum_cmd->add_option("--J", spectrum.coupling, "Coupling energy");
    spectrum_cmd->add_option("--H", spectrum.field, "External field energy");
    spectrum_cmd->add_option("--avoid", spectrum.avoid, "Forbidden patterns");
    spectrum_cmd->add_option("--stat", spectrum.stat, "Statistic: destat or inv")
        ->check(CLI::IsMember({"destat", "inv"}));
    spectrum_cmd->add_option("--out", spectrum.out, "Output path (default stdout)");
    spectrum_cmd->add_option("--format", spectrum.format, "json or csv")
        ->check(CLI::IsMember({"csv", "json"}));

    SurfaceOptions surfaces;
    CLI::App* surfaces_cmd =
        app.add_subcommand("surfaces", "lambda_star/lambda4/lambda5 and discriminant grids");
    surfaces_cmd->add_option("--grid", surfaces.grid, "Axis range lo:hi:steps for both c and d");
    surfaces_cmd->add_option("--out", surfaces.out, "Output path (default stdout)");
    surfaces_cmd->add_option("--format", surfaces.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    MeanFieldOptions meanfield;
    CLI::App* meanfield_cmd =
        app.add_subcommand("meanfield", "Mean-field partition sums (factorized and direct)");
    meanfield_cmd->add_option("--n", meanfield.n, "Sites (>= 2)");
    meanfield_cmd->add_option("--q", meanfield.q, "Nearest-neighbor count (2 for 1D, 4 for 2D)");
    meanfield_cmd->add_option("--beta", meanfield.beta, "Inverse temperature, scalar or sweep");
    meanfield_cmd->add_option("--J", meanfield.coupling, "Coupling energy (> 0)");
    meanfield_cmd->add_option("--H", meanfield.field, "External field energy");
    meanfield_cmd->add_option("--out", meanfield.out, "Output path (default stdout)");
    meanfield_cmd->add_option("--format", meanfield.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    LowTempOptions lowtemp;
    CLI::App* lowtemp_cmd =
        app.add_subcommand("lowtemp", "Low-temperature class sums vs the exact ring");
    lowtemp_cmd->add_option("--n", lowtemp.n, "Ring size (>= 3)");
    lowtemp_cmd->add_option("--beta", lowtemp.beta, "Inverse temperature, scalar or sweep");
    lowtemp_cmd->add_option("--J", lowtemp.coupling, "Coupling energy");
    lowtemp_cmd->add_option("--H", lowtemp.field, "External field energy");
    lowtemp_cmd->add_option("--out", lowtemp.out, "Output path (default stdout)");
    lowtemp_cmd->add_option("--format", lowtemp.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    McOptions mc;
    CLI::App* mc_cmd = app.add_subcommand("mc", "Metropolis sampler time series");
    mc_cmd->add_option("--k", mc.k, "Permutation length");
    mc_cmd->add_option("--n", mc.n, "Vertex count");
    mc_cmd->add_option("--graph", mc.graph, "ring, path, complete or file:<path>")
        ->check([](const std::string& v) -> std::string {
            if (v == "ring" || v == "path" || v == "complete" || v.rfind("file:", 0) == 0)
                return {};
            return "expected ring, path, complete or file:<path>";
        });
    mc_cmd->add_option("--avoid", mc.avoid, "Forbidden patterns");
    mc_cmd->add_option("--stat", mc.stat, "Statistic: destat or inv")
        ->check(CLI::IsMember({"destat", "inv"}));
    mc_cmd->add_option("--beta", mc.beta, "Inverse temperature");
    mc_cmd->add_option("--J", mc.coupling, "Coupling energy");
    mc_cmd->add_option("--H", mc.field, "External field energy");
    mc_cmd->add_option("--seed", mc.seed, "RNG seed (64-bit)");
    mc_cmd->add_option("--sweeps", mc.sweeps, "Total sweeps to emit");
    mc_cmd->add_option("--burn-in", mc.burn_in, "Sweeps discarded by the summary");
    mc_cmd->add_option("--out", mc.out, "Output path (default stdout)");

    bool verify_quick = false;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Run the full cross-validation suite (nonzero exit on failure)");
    verify_cmd->add_flag("--quick", verify_quick, "Smaller enumerations and grids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (gf_cmd->parsed()) return run_gf(gf);
        if (exact_cmd->parsed()) return run_exact(exact);
        if (spectrum_cmd->parsed()) return run_spectrum(spectrum);
        if (surfaces_cmd->parsed()) return run_surfaces(surfaces);
        if (meanfield_cmd->parsed()) return run_meanfield(meanfield);
        if (lowtemp_cmd->parsed()) return run_lowtemp(lowtemp);
        if (mc_cmd->parsed()) return run_mc(mc);
        if (verify_cmd->parsed()) return run_verify(verify_quick);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\nRun with --help for usage.\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
