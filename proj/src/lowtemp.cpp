#include "permaspin/lowtemp.hpp"

#include <cmath>
#include <stdexcept>

#include "permaspin/transfer.hpp"

namespace permaspin {

namespace {

void require_destat(const ModelParams& p, const char* where) {
    p.validate();
    if (p.stat != StatKind::Destat)
        throw std::invalid_argument(std::string(where) + ": defined for the destat statistic");
}

}  // namespace

const char* field_case_name(FieldCase f) {
    switch (f) {
        case FieldCase::Zero: return "zero";
        case FieldCase::Positive: return "positive";
        case FieldCase::Negative: return "negative";
    }
    return "?";
}

double uniform_contribution(int n, const ModelParams& p) {
    require_destat(p, "uniform_contribution");
    if (n < 1) throw std::invalid_argument("uniform_contribution: n must be >= 1");
    const double bh = p.beta * p.field;
    return std::exp(n * p.beta * p.coupling) * (std::exp(-n * bh) + 4.0 + std::exp(n * bh));
}

double domain_wall_contribution(int n, const ModelParams& p) {
    require_destat(p, "domain_wall_contribution");
    if (n < 2) throw std::invalid_argument("domain_wall_contribution: n must be >= 2");
    const double bj = p.beta * p.coupling;
    const double bh = p.beta * p.field;
    double sym_sum = 0.0;    // sum of e^{k bh} + e^{-k bh}
    double shift_sum = 0.0;  // sum of e^{(n-2k) bh}
    for (int k = 1; k <= n - 1; ++k) {
        sym_sum += std::exp(k * bh) + std::exp(-k * bh);
        shift_sum += std::exp((n - 2 * k) * bh);
    }
    const double bracket = (8.0 + 4.0 * std::exp(-2.0 * bj)) * (n - 1)
                           + 8.0 * sym_sum
                           + 2.0 * std::exp(-2.0 * bj) * shift_sum;
    return 0.5 * n * std::exp(bj * (n - 2)) * bracket;
}

LowTempReport lowtemp_z(int n, const ModelParams& p) {
    require_destat(p, "lowtemp_z");
    if (n < 3) throw std::invalid_argument("lowtemp_z: ring comparison needs n >= 3");

    LowTempReport report;
    report.z_uniform = uniform_contribution(n, p);
    report.z_domain_wall = domain_wall_contribution(n, p);

    const double nbj = n * p.beta * p.coupling;
    const double nbh = n * p.beta * p.field;
    if (p.field == 0.0) {
        report.field_case = FieldCase::Zero;
        report.z_approx = 6.0 * std::exp(nbj);
    } else if (p.field > 0.0) {
        report.field_case = FieldCase::Positive;
        report.z_approx = std::exp(nbj) * (4.0 + std::exp(nbh));
    } else {
        report.field_case = FieldCase::Negative;
        report.z_approx = std::exp(nbj) * (std::exp(-nbh) + 4.0);
    }

    const SpinSet s3 = SpinSet::full(3);
    const TransferParams tp = TransferParams::from_model(p, 3);
    const TransferMatrix a = TransferMatrix::numeric(s3, StatKind::Destat, tp);
    report.z_exact = ring_z(a, n, p).z;
    report.ln_ratio = std::log(report.z_approx) / std::log(report.z_exact);
    return report;
}

LowTempFVariants lowtemp_f_variants(const ModelParams& p) {
    require_destat(p, "lowtemp_f_variants");
    LowTempFVariants out;
    out.f_simple = -(p.coupling + std::abs(p.field));

    // lambda4 = c(1-d)^2 under the oracle-validated convention (k=3):
    // c = e^{-beta H}, d = e^{-beta J}.
    const TransferParams tp = TransferParams::from_model(p, 3);
    const double lam4 = tp.c() * (1.0 - tp.d()) * (1.0 - tp.d());
    if (!(lam4 > 0.0))
        throw std::domain_error("lowtemp_f_variants: lambda4 <= 0 (need J > 0)");
    out.f_lambda4 = -(p.coupling + p.field) - std::log(lam4) / p.beta;

    // Alternative convention: c = e^{-2 beta H}, d = e^{-2 beta J}.
    const double c_alt = std::exp(-2.0 * p.beta * p.field);
    const double d_alt = std::exp(-2.0 * p.beta * p.coupling);
    const double lam4_alt = c_alt * (1.0 - d_alt) * (1.0 - d_alt);
    out.f_lambda4_alt = -(p.coupling + p.field) - std::log(lam4_alt) / p.beta;
    return out;
}

}  // namespace permaspin
