#include "permaspin.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>

#include "permaspin/cubic.hpp"
#include "permaspin/lowtemp.hpp"
#include "permaspin/meanfield.hpp"
#include "permaspin/model.hpp"
#include "permaspin/montecarlo.hpp"
#include "permaspin/poly.hpp"
#include "permaspin/transfer.hpp"
#include "permaspin/verify.hpp"

using namespace permaspin;

struct ps_spinset {
    SpinSet set;
};

struct ps_graph {
    Graph graph;
};

struct ps_chain {
    MetropolisChain chain;
};

namespace {

thread_local std::string t_last_error;

void set_error(const char* message) { t_last_error = message; }

// Runs `body`, translating exceptions into status codes.
template <typename Body>
ps_status guarded(Body&& body) {
    try {
        return body();
    } catch (const std::length_error& e) {
        set_error(e.what());
        return PS_ERR_CAP_EXCEEDED;
    } catch (const std::domain_error& e) {
        set_error(e.what());
        return PS_ERR_NUMERIC;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return PS_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return PS_ERR_NUMERIC;
    } catch (const std::exception& e) {
        set_error(e.what());
        return PS_ERR_INVALID_ARGUMENT;
    }
}

ps_status copy_string(const std::string& text, char* buf, size_t buflen) {
    if (buf == nullptr || buflen < text.size() + 1) {
        set_error("output buffer too small");
        return PS_ERR_BUFFER_TOO_SMALL;
    }
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return PS_OK;
}

ps_status require(bool condition, const char* message) {
    if (condition) return PS_OK;
    set_error(message);
    return PS_ERR_INVALID_ARGUMENT;
}

StatKind to_stat(ps_stat_kind kind) {
    switch (kind) {
        case PS_STAT_DES: return StatKind::Des;
        case PS_STAT_INV: return StatKind::Inv;
        case PS_STAT_DESTAT: return StatKind::Destat;
    }
    throw std::invalid_argument("unknown statistic kind");
}

ModelParams to_model(const ps_params& p) {
    ModelParams m;
    m.beta = p.beta;
    m.coupling = p.coupling;
    m.field = p.field;
    m.stat = to_stat(p.stat);
    m.validate();
    return m;
}

std::vector<Permutation> parse_patterns(const char* csv) {
    if (csv == nullptr) throw std::invalid_argument("pattern list is null");
    std::vector<Permutation> patterns;
    std::string_view text(csv);
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        const std::string_view token = text.substr(start, comma - start);
        if (!token.empty()) patterns.push_back(Permutation::parse(token));
        if (comma == text.size()) break;
        start = comma + 1;
    }
    return patterns;
}

}  // namespace

extern "C" {

const char* ps_last_error(void) { return t_last_error.c_str(); }

const char* ps_status_name(ps_status status) {
    switch (status) {
        case PS_OK: return "ok";
        case PS_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case PS_ERR_CAP_EXCEEDED: return "cap-exceeded";
        case PS_ERR_NUMERIC: return "numeric-failure";
        case PS_ERR_BUFFER_TOO_SMALL: return "buffer-too-small";
    }
    return "unknown";
}

ps_status ps_spinset_full(int k, ps_spinset** out) {
    return guarded([&] {
        if (auto rc = require(out != nullptr, "out pointer is null")) return rc;
        *out = new ps_spinset{SpinSet::full(k)};
        return PS_OK;
    });
}

ps_status ps_spinset_avoiding(int k, const char* patterns_csv, ps_spinset** out) {
    return guarded([&] {
        if (auto rc = require(out != nullptr, "out pointer is null")) return rc;
        *out = new ps_spinset{SpinSet::avoiding(k, parse_patterns(patterns_csv))};
        return PS_OK;
    });
}

void ps_spinset_free(ps_spinset* set) { delete set; }

int ps_spinset_k(const ps_spinset* set) { return set ? set->set.k() : 0; }

int ps_spinset_size(const ps_spinset* set) { return set ? set->set.size() : 0; }

ps_status ps_spinset_member(const ps_spinset* set, int index, char* buf, size_t buflen) {
    return guarded([&] {
        if (auto rc = require(set != nullptr, "spin set is null")) return rc;
        if (auto rc = require(index >= 0 && index < set->set.size(), "member index out of range"))
            return rc;
        return copy_string(set->set.member(index).to_string(), buf, buflen);
    });
}

ps_status ps_spinset_label(const ps_spinset* set, char* buf, size_t buflen) {
    return guarded([&] {
        if (auto rc = require(set != nullptr, "spin set is null")) return rc;
        return copy_string(set->set.label(), buf, buflen);
    });
}

ps_status ps_statistic(ps_stat_kind kind, const char* perm, int* out) {
    return guarded([&] {
        if (auto rc = require(perm != nullptr && out != nullptr, "null argument")) return rc;
        *out = statistic(to_stat(kind), Permutation::parse(perm));
        return PS_OK;
    });
}

ps_status ps_stat_gf(ps_stat_kind kind, int k, char* buf, size_t buflen) {
    return guarded([&] { return copy_string(stat_gf(to_stat(kind), k).to_string(), buf, buflen); });
}

ps_status ps_cddes_closed_form(int n, char* buf, size_t buflen) {
    return guarded([&] { return copy_string(cddes_closed_form(n).to_string(), buf, buflen); });
}

ps_status ps_graph_ring(int n, ps_graph** out) {
    return guarded([&] {
        if (auto rc = require(out != nullptr, "out pointer is null")) return rc;
        *out = new ps_graph{Graph::ring(n)};
        return PS_OK;
    });
}

ps_status ps_graph_path(int n, ps_graph** out) {
    return guarded([&] {
        if (auto rc = require(out != nullptr, "out pointer is null")) return rc;
        *out = new ps_graph{Graph::path(n)};
        return PS_OK;
    });
}

ps_status ps_graph_complete(int n, ps_graph** out) {
    return guarded([&] {
        if (auto rc = require(out != nullptr, "out pointer is null")) return rc;
        *out = new ps_graph{Graph::complete(n)};
        return PS_OK;
    });
}

ps_status ps_graph_parse(const char* edge_list_text, int n_override, ps_graph** out) {
    return guarded([&] {
        if (auto rc = require(edge_list_text != nullptr && out != nullptr, "null argument"))
            return rc;
        *out = new ps_graph{Graph::parse_edge_list(edge_list_text, n_override)};
        return PS_OK;
    });
}

void ps_graph_free(ps_graph* graph) { delete graph; }

int ps_graph_n(const ps_graph* graph) { return graph ? graph->graph.n : 0; }

int ps_graph_edge_count(const ps_graph* graph) {
    return graph ? static_cast<int>(graph->graph.edges.size()) : 0;
}

ps_status ps_brute_force_z(const ps_graph* graph, const ps_spinset* set,
                           const ps_params* params, double* z_out) {
    return guarded([&] {
        if (auto rc = require(graph && set && params && z_out, "null argument")) return rc;
        *z_out = brute_force_z(graph->graph, set->set, to_model(*params)).z;
        return PS_OK;
    });
}

ps_status ps_ring_exact(const ps_spinset* set, const ps_params* params, int n,
                        double* z_out, double* ln_z_out, double* f_out) {
    return guarded([&] {
        if (auto rc = require(set && params, "null argument")) return rc;
        const ModelParams p = to_model(*params);
        const TransferMatrix a =
            TransferMatrix::numeric(set->set, p.stat, TransferParams::from_model(p, set->set.k()));
        const PartitionReport report = ring_z(a, n, p);
        if (z_out) *z_out = report.z;
        if (ln_z_out) *ln_z_out = report.ln_z;
        if (f_out) *f_out = free_energy_ring(set->set, p.stat, p);
        return PS_OK;
    });
}

ps_status ps_free_energy_ring(const ps_spinset* set, const ps_params* params, double* f_out) {
    return guarded([&] {
        if (auto rc = require(set && params && f_out, "null argument")) return rc;
        const ModelParams p = to_model(*params);
        *f_out = free_energy_ring(set->set, p.stat, p);
        return PS_OK;
    });
}

ps_status ps_zero_field_z(int k, const ps_params* params, int n, double* z_out) {
    return guarded([&] {
        if (auto rc = require(params && z_out, "null argument")) return rc;
        *z_out = zero_field_z_product_form(k, n, to_model(*params)).z;
        return PS_OK;
    });
}

ps_status ps_zero_field_f(int k, const ps_params* params, double* f_out) {
    return guarded([&] {
        if (auto rc = require(params && f_out, "null argument")) return rc;
        *f_out = zero_field_f(k, to_model(*params));
        return PS_OK;
    });
}

ps_status ps_transfer_ab(const ps_params* params, int k, double* a_out, double* b_out) {
    return guarded([&] {
        if (auto rc = require(params && a_out && b_out, "null argument")) return rc;
        const TransferParams tp = TransferParams::from_model(to_model(*params), k);
        *a_out = tp.a;
        *b_out = tp.b;
        return PS_OK;
    });
}

int ps_spectrum_closed_method(const ps_spinset* set, ps_stat_kind stat) {
    if (set == nullptr) return -1;
    StatKind kind;
    try {
        kind = to_stat(stat);
    } catch (const std::exception&) {
        return -1;
    }
    const auto method = closed_form_for(set->set, kind);
    if (!method) return -1;
    switch (*method) {
        case SpectrumMethod::ClosedFormNoMonotone: return PS_SPECTRUM_CLOSED_NO_MONOTONE;
        case SpectrumMethod::ClosedFormNoIdentity: return PS_SPECTRUM_CLOSED_NO_IDENTITY;
        case SpectrumMethod::CubicPlusLinear: return PS_SPECTRUM_CUBIC_PLUS_LINEAR;
        case SpectrumMethod::Numeric: break;
    }
    return -1;
}

const char* ps_spectrum_method_name(ps_spectrum_method method) {
    switch (method) {
        case PS_SPECTRUM_NUMERIC: return spectrum_method_name(SpectrumMethod::Numeric);
        case PS_SPECTRUM_CLOSED_NO_MONOTONE:
            return spectrum_method_name(SpectrumMethod::ClosedFormNoMonotone);
        case PS_SPECTRUM_CLOSED_NO_IDENTITY:
            return spectrum_method_name(SpectrumMethod::ClosedFormNoIdentity);
        case PS_SPECTRUM_CUBIC_PLUS_LINEAR:
            return spectrum_method_name(SpectrumMethod::CubicPlusLinear);
    }
    return "?";
}

ps_status ps_spectrum(const ps_spinset* set, const ps_params* params,
                      ps_spectrum_method method, double* eigenvalues, int capacity,
                      int* count_out) {
    return guarded([&] {
        if (auto rc = require(set && params && eigenvalues && count_out, "null argument"))
            return rc;
        const ModelParams p = to_model(*params);
        const TransferParams tp = TransferParams::from_model(p, set->set.k());

        SpectrumResult result;
        if (method == PS_SPECTRUM_NUMERIC) {
            result = eig_numeric(TransferMatrix::numeric(set->set, p.stat, tp));
        } else {
            if (ps_spectrum_closed_method(set, params->stat) != static_cast<int>(method)) {
                set_error("closed form does not apply to this spin set / statistic");
                return PS_ERR_INVALID_ARGUMENT;
            }
            switch (method) {
                case PS_SPECTRUM_CLOSED_NO_MONOTONE:
                    result = eig_closed_no_monotone(tp);
                    break;
                case PS_SPECTRUM_CLOSED_NO_IDENTITY:
                    result = eig_closed_no_identity(tp);
                    break;
                case PS_SPECTRUM_CUBIC_PLUS_LINEAR:
                    result = s3_full_spectrum(tp.c(), tp.d());
                    break;
                default:
                    set_error("unknown spectrum method");
                    return PS_ERR_INVALID_ARGUMENT;
            }
        }
        *count_out = static_cast<int>(result.eigenvalues.size());
        if (capacity < *count_out) {
            set_error("eigenvalue buffer too small");
            return PS_ERR_BUFFER_TOO_SMALL;
        }
        for (int i = 0; i < *count_out; ++i)
            eigenvalues[i] = result.eigenvalues[static_cast<size_t>(i)];
        return PS_OK;
    });
}

ps_status ps_cubic_eval(double c, double d, ps_cubic_point* out) {
    return guarded([&] {
        if (auto rc = require(out != nullptr, "out pointer is null")) return rc;
        const CubicPoint point = s3_cubic(c, d);
        const DiscriminantTriple ds = discriminants(point.t);
        const LambdaStar star = lambda_star(c, d);
        out->c = c;
        out->d = d;
        out->lambda_star = star.value;
        out->lambda4 = point.lambda4;
        out->lambda5 = point.lambda5;
        out->delta0 = ds.d0;
        out->delta1 = ds.d1;
        out->delta2 = ds.d2;
        out->used_fallback = star.used_fallback ? 1 : 0;
        return PS_OK;
    });
}

ps_status ps_cubic_max_root_bisect(double c, double d, double* out) {
    return guarded([&] {
        if (auto rc = require(out != nullptr, "out pointer is null")) return rc;
        *out = max_real_root_bisect(s3_cubic(c, d).t);
        return PS_OK;
    });
}

ps_status ps_lowtemp(int n, const ps_params* params, ps_lowtemp_report* out) {
    return guarded([&] {
        if (auto rc = require(params && out, "null argument")) return rc;
        const ModelParams p = to_model(*params);
        const LowTempReport report = lowtemp_z(n, p);
        const LowTempFVariants fv = lowtemp_f_variants(p);
        out->z_uniform = report.z_uniform;
        out->z_domain_wall = report.z_domain_wall;
        out->z_approx = report.z_approx;
        out->z_exact = report.z_exact;
        out->ln_ratio = report.ln_ratio;
        out->field_case = report.field_case == FieldCase::Zero
                              ? 0
                              : (report.field_case == FieldCase::Positive ? 1 : -1);
        out->f_simple = fv.f_simple;
        out->f_lambda4 = fv.f_lambda4;
        out->f_exact = free_energy_ring(SpinSet::full(3), StatKind::Destat, p);
        return PS_OK;
    });
}

ps_status ps_meanfield(int n, int q, const ps_params* params, ps_meanfield_report* out) {
    return guarded([&] {
        if (auto rc = require(params && out, "null argument")) return rc;
        MeanFieldParams mp;
        mp.n = n;
        mp.q = q;
        mp.beta = params->beta;
        mp.coupling = params->coupling;
        mp.field = params->field;
        out->z_factorized = mean_z_factorized(mp);
        out->z_direct = mean_z_direct(mp);
        out->dominant_estimate = dominant_term_estimate(mp);
        out->f = -std::log(out->z_factorized) / (mp.beta * mp.n);
        return PS_OK;
    });
}

ps_status ps_chain_new(const ps_graph* graph, const ps_spinset* set,
                       const ps_params* params, uint64_t seed, ps_chain** out) {
    return guarded([&] {
        if (auto rc = require(graph && set && params && out, "null argument")) return rc;
        *out = new ps_chain{MetropolisChain(graph->graph, set->set, to_model(*params), seed)};
        return PS_OK;
    });
}

void ps_chain_free(ps_chain* chain) { delete chain; }

ps_status ps_chain_sweep(ps_chain* chain, double* energy_out, double* order_out) {
    return guarded([&] {
        if (auto rc = require(chain != nullptr, "chain is null")) return rc;
        chain->chain.sweep();
        if (energy_out) *energy_out = chain->chain.energy();
        if (order_out) *order_out = chain->chain.order_parameter();
        return PS_OK;
    });
}

ps_status ps_mc_sample(const ps_graph* graph, const ps_spinset* set,
                       const ps_params* params, uint64_t sweeps, uint64_t burn_in,
                       uint64_t seed, ps_mc_summary* out) {
    return guarded([&] {
        if (auto rc = require(graph && set && params && out, "null argument")) return rc;
        const McReport report =
            sample_observables(graph->graph, set->set, to_model(*params), sweeps, burn_in, seed);
        out->mean_energy_per_site = report.mean_energy_per_site;
        out->se_energy = report.se_energy;
        out->mean_order = report.mean_order;
        out->se_order = report.se_order;
        out->acceptance_rate = report.acceptance_rate;
        out->sweeps = report.sweeps;
        out->burn_in = report.burn_in;
        return PS_OK;
    });
}

ps_status ps_verify(int quick, ps_verify_callback callback, void* user, int* failures_out) {
    return guarded([&] {
        verify::Options options;
        options.quick = quick != 0;
        const int failures = verify::run_suite(options, [&](const verify::CheckResult& result) {
            if (callback)
                callback(result.name.c_str(), result.detail.c_str(), result.pass ? 1 : 0,
                         result.informational ? 1 : 0, user);
        });
        if (failures_out) *failures_out = failures;
        return PS_OK;
    });
}

}  // extern "C"
