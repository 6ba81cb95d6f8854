#include "permaspin/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace permaspin {

TransferParams TransferParams::from_model(const ModelParams& p, int k) {
    p.validate();
    const int smax = stat_max(p.stat, k);
    if (smax == 0) throw std::invalid_argument("TransferParams: statistic has empty range");
    TransferParams tp;
    tp.a = std::exp(-p.beta * p.field / smax);
    tp.b = std::exp(-2.0 * p.beta * p.coupling / smax);
    return tp;
}

TransferMatrix TransferMatrix::numeric(const SpinSet& p_set, StatKind stat,
                                       const TransferParams& tp) {
    if (!inversion_symmetric(stat))
        throw std::invalid_argument("TransferMatrix: statistic must satisfy stat(pi)=stat(pi^{-1})");
    if (!(tp.a > 0.0) || !(tp.b > 0.0))
        throw std::invalid_argument("TransferMatrix: a and b must be > 0");
    if (p_set.size() > 1000)
        throw std::length_error("TransferMatrix: spin set too large for a dense matrix");
    TransferMatrix out(p_set, stat);
    const int m = p_set.size();
    out.numeric_ = Matrix(m);
    std::vector<int> stats(static_cast<size_t>(m));
    std::vector<Permutation> inverses;
    inverses.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        stats[static_cast<size_t>(i)] = statistic(stat, p_set.member(i));
        inverses.push_back(p_set.member(i).inverse());
    }
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            const int a_exp = stats[static_cast<size_t>(i)] + stats[static_cast<size_t>(j)];
            const int b_exp = statistic(stat, compose(inverses[static_cast<size_t>(i)],
                                                      p_set.member(j)));
            const double value = std::pow(tp.a, a_exp) * std::pow(tp.b, b_exp);
            out.numeric_.at(i, j) = value;
            out.numeric_.at(j, i) = value;
        }
    }
    return out;
}

TransferMatrix TransferMatrix::symbolic(const SpinSet& p_set, StatKind stat) {
    if (!inversion_symmetric(stat))
        throw std::invalid_argument("TransferMatrix: statistic must satisfy stat(pi)=stat(pi^{-1})");
    TransferMatrix out(p_set, stat);
    const int m = p_set.size();
    out.symbolic_.emplace(static_cast<size_t>(m) * m);
    std::vector<int> stats(static_cast<size_t>(m));
    std::vector<Permutation> inverses;
    inverses.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        stats[static_cast<size_t>(i)] = statistic(stat, p_set.member(i));
        inverses.push_back(p_set.member(i).inverse());
    }
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            auto& entry = (*out.symbolic_)[static_cast<size_t>(i) * m + j];
            entry.a_exp = stats[static_cast<size_t>(i)] + stats[static_cast<size_t>(j)];
            entry.b_exp = statistic(stat, compose(inverses[static_cast<size_t>(i)],
                                                  p_set.member(j)));
        }
    }
    return out;
}

const Matrix& TransferMatrix::values() const {
    if (is_symbolic()) throw std::logic_error("TransferMatrix: symbolic matrix has no values");
    return numeric_;
}

SymbolicEntry TransferMatrix::exponent(int i, int j) const {
    if (!is_symbolic()) throw std::logic_error("TransferMatrix: numeric matrix has no exponents");
    return (*symbolic_)[static_cast<size_t>(i) * size() + j];
}

const char* spectrum_method_name(SpectrumMethod m) {
    switch (m) {
        case SpectrumMethod::Numeric: return "numeric";
        case SpectrumMethod::ClosedFormNoMonotone: return "closed-form-no-monotone";
        case SpectrumMethod::ClosedFormNoIdentity: return "closed-form-no-identity";
        case SpectrumMethod::CubicPlusLinear: return "cubic-plus-linear";
    }
    return "?";
}

SpectrumResult eig_numeric(const TransferMatrix& a) {
    if (a.is_symbolic()) throw std::invalid_argument("eig_numeric: symbolic matrix");
    SpectrumResult out;
    out.eigenvalues = jacobi_eigen(a.values()).values;
    out.method = SpectrumMethod::Numeric;
    return out;
}

SpectrumResult eig_closed_no_monotone(const TransferParams& tp) {
    const double a4 = tp.c();
    const double b2 = tp.d();
    const double l1 = a4 * (1.0 - b2) * (1.0 + b2);  // double eigenvalue
    const double l2 = a4 * (b2 - 1.0) * (b2 - 1.0);
    const double l3 = a4 * (b2 + 1.0) * (b2 + 1.0);  // always the maximum
    SpectrumResult out;
    out.eigenvalues = {l1, l1, l2, l3};
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
    out.method = SpectrumMethod::ClosedFormNoMonotone;
    return out;
}

SpectrumResult eig_closed_no_identity(const TransferParams& tp) {
    const double a4 = tp.c();
    const double b2 = tp.d();
    const double base = a4 + (1.0 + b2) * (1.0 + b2);
    const double disc = base * base + 4.0 * a4 * (1.0 + 3.0 * b2) * (b2 - 1.0);
    const double root = std::sqrt(std::max(0.0, disc));
    const double l1 = 0.5 * a4 * (base - root);
    const double l2 = 0.5 * a4 * (base + root);  // always the maximum
    const double l3 = a4 * (1.0 - b2 * b2);      // double eigenvalue
    const double l4 = a4 * (1.0 - b2) * (1.0 - b2);
    SpectrumResult out;
    out.eigenvalues = {l1, l2, l3, l3, l4};
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
    out.method = SpectrumMethod::ClosedFormNoIdentity;
    return out;
}

std::optional<SpectrumMethod> closed_form_for(const SpinSet& p_set, StatKind stat) {
    if (stat != StatKind::Destat || p_set.k() != 3) return std::nullopt;
    auto members_are = [&](std::initializer_list<const char*> expected) {
        if (p_set.size() != static_cast<int>(expected.size())) return false;
        int i = 0;
        for (const char* text : expected)
            if (!(p_set.member(i++) == Permutation::parse(text))) return false;
        return true;
    };
    if (members_are({"132", "213", "231", "312"})) return SpectrumMethod::ClosedFormNoMonotone;
    if (members_are({"132", "213", "231", "312", "321"})) return SpectrumMethod::ClosedFormNoIdentity;
    if (members_are({"123", "132", "213", "231", "312", "321"}))
        return SpectrumMethod::CubicPlusLinear;
    return std::nullopt;
}

PartitionReport ring_z(const TransferMatrix& a, int n, const ModelParams& p) {
    p.validate();
    if (a.is_symbolic()) throw std::invalid_argument("ring_z: symbolic matrix");
    if (n < 3) throw std::invalid_argument("ring_z: ring needs n >= 3");
    const SpectrumResult spectrum = eig_numeric(a);

    double lam_scale = 0.0;
    for (double lam : spectrum.eigenvalues) lam_scale = std::max(lam_scale, std::abs(lam));
    if (lam_scale <= 0.0) throw std::domain_error("ring_z: zero spectrum");
    double scaled_sum = 0.0;  // sum of (lambda_i / lam_scale)^n
    for (double lam : spectrum.eigenvalues) {
        double r = std::pow(std::abs(lam) / lam_scale, n);
        if (lam < 0.0 && n % 2 != 0) r = -r;
        scaled_sum += r;
    }
    if (!(scaled_sum > 0.0)) throw std::domain_error("ring_z: nonpositive trace");

    PartitionReport report;
    report.ln_z = p.beta * (p.coupling + p.field) * n + n * std::log(lam_scale)
                  + std::log(scaled_sum);
    report.z = std::exp(report.ln_z);
    report.f_density = -report.ln_z / (p.beta * n);
    report.method = Method::Trace;
    return report;
}

double free_energy_ring(const SpinSet& p_set, StatKind stat, const ModelParams& p) {
    p.validate();
    ModelParams params = p;
    params.stat = stat;
    const TransferParams tp = TransferParams::from_model(params, p_set.k());
    const TransferMatrix a = TransferMatrix::numeric(p_set, stat, tp);
    const SpectrumResult spectrum = eig_numeric(a);
    const double lam_max = spectrum.eigenvalues.front();
    if (!(lam_max > 0.0)) throw std::domain_error("free_energy_ring: lambda_max <= 0");
    return -(params.coupling + params.field) - std::log(lam_max) / params.beta;
}

PartitionReport zero_field_z_product_form(int k, int n, const ModelParams& p) {
    p.validate();
    if (p.field != 0.0) throw std::invalid_argument("zero_field_z_product_form: H must be 0");
    if (n < 1) throw std::invalid_argument("zero_field_z_product_form: n must be >= 1");
    const int smax = stat_max(p.stat, k);
    if (smax == 0) throw std::invalid_argument("zero_field_z_product_form: statistic has empty range");
    const IntPolynomial gf = stat_gf(p.stat, k);
    const double x = std::exp(-2.0 * p.beta * p.coupling / smax);
    const double row_sum = std::exp(p.beta * p.coupling) * gf.evaluate(x);
    double k_factorial = 1.0;
    for (int i = 2; i <= k; ++i) k_factorial *= i;

    PartitionReport report;
    report.ln_z = std::log(k_factorial) + p.beta * p.coupling + (n - 1) * std::log(row_sum);
    report.z = std::exp(report.ln_z);
    report.f_density = -report.ln_z / (p.beta * n);
    report.method = Method::ClosedForm;
    return report;
}

double zero_field_f(int k, const ModelParams& p) {
    p.validate();
    if (p.field != 0.0) throw std::invalid_argument("zero_field_f: H must be 0");
    const int smax = stat_max(p.stat, k);
    if (smax == 0) throw std::invalid_argument("zero_field_f: statistic has empty range");
    const IntPolynomial gf = stat_gf(p.stat, k);
    const double x = std::exp(-2.0 * p.beta * p.coupling / smax);
    return -std::log(std::exp(p.beta * p.coupling) * gf.evaluate(x)) / p.beta;
}

double s3_destat_charpoly_factored(double c, double d, double lambda) {
    const double cubic = lambda * lambda * lambda
                         - (c * d * d + c * c + 2.0 * c * d + c + 1.0) * lambda * lambda
                         - c * (c * d * d * d + 3.0 * c * c * d + c * d * d + c * c + c * d + c
                                + 3.0 * d + 1.0) * (d - 1.0) * lambda
                         + (d * d + 4.0 * d + 1.0) * c * c * c * (d + 1.0)
                               * (d - 1.0) * (d - 1.0) * (d - 1.0);
    const double linear_simple = c * d * d - 2.0 * c * d + c - lambda;   // root c(1-d)^2
    const double linear_double = c * d * d - c + lambda;                 // root c(1-d^2), squared
    return -cubic * linear_simple * linear_double * linear_double;
}

double s3_inv_charpoly_factored(double a, double b, double lambda) {
    const double a2 = a * a, a4 = a2 * a2, a6 = a4 * a2, a8 = a4 * a4, a12 = a6 * a6;
    const double b2 = b * b, b4 = b2 * b2;
    const double bp1 = b + 1.0, bm1 = b - 1.0;

    const double quartic =
        (b2 + b + 1.0) * (b2 - b + 1.0) * a12 * bp1 * bp1 * bp1 * bp1 * bm1 * bm1 * bm1 * bm1
        - lambda * (a4 * b2 - a2 * b4 + a4 + b2 + 1.0) * (a2 + 1.0) * a6 * bp1 * bp1 * bm1 * bm1
        - lambda * lambda
              * (a8 + 2.0 * a6 * b2 + 2.0 * a4 * b4 + a6 + 3.0 * a4 * b2 + 2.0 * a4
                 + 2.0 * a2 * b2 + a2 + 1.0) * a2 * (b2 - 1.0)
        - lambda * lambda * lambda * (a4 + a2 * b2 + 1.0) * (a2 + 1.0)
        + lambda * lambda * lambda * lambda;
    const double quadratic = a6 * (1.0 + b) * (1.0 + b) * (1.0 + b)
                                 * (1.0 - b) * (1.0 - b) * (1.0 - b)
                             + lambda * (a2 + 1.0) * a2 * (b + 1.0) * (b - 1.0)
                             + lambda * lambda;
    return quartic * quadratic;
}

}  // namespace permaspin
