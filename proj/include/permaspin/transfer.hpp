#pragma once

#include <optional>
#include <vector>

#include "permaspin/linalg.hpp"
#include "permaspin/model.hpp"
#include "permaspin/perm.hpp"
#include "permaspin/poly.hpp"

namespace permaspin {

// Variables of the transfer matrix A_{pi,sigma} = a^{stat(pi)+stat(sigma)} *
// b^{stat(pi^{-1} sigma)}, derived from the model as
//   a = e^{H'/2} = e^{-beta H / s_max},  b = e^{J'} = e^{-2 beta J / s_max}.
// This is the convention under which e^{beta(J+H)n} Tr(A^n) reproduces the
// brute-force partition function exactly. Convenience variables: c = a^4,
// d = b^2.
struct TransferParams {
    double a = 1.0;
    double b = 1.0;

    static TransferParams from_model(const ModelParams& p, int k);
    double c() const { return a * a * a * a; }
    double d() const { return b * b; }
};

struct SymbolicEntry {
    int a_exp = 0;  // stat(pi) + stat(sigma)
    int b_exp = 0;  // stat(pi^{-1} sigma)
    friend bool operator==(SymbolicEntry, SymbolicEntry) = default;
};

// |P| x |P| symmetric transfer matrix, rows/columns in P's lexicographic
// order. Numeric mode carries evaluated entries; symbolic mode carries the
// monomial exponent pairs a^i b^j for exact entrywise comparisons.
class TransferMatrix {
public:
    static TransferMatrix numeric(const SpinSet& p_set, StatKind stat, const TransferParams& tp);
    static TransferMatrix symbolic(const SpinSet& p_set, StatKind stat);

    bool is_symbolic() const { return symbolic_.has_value(); }
    int size() const { return set_.size(); }
    const SpinSet& spin_set() const { return set_; }
    StatKind stat() const { return stat_; }
    const Matrix& values() const;
    SymbolicEntry exponent(int i, int j) const;

private:
    TransferMatrix(SpinSet set, StatKind stat) : set_(std::move(set)), stat_(stat) {}

    SpinSet set_;
    StatKind stat_;
    Matrix numeric_;
    std::optional<std::vector<SymbolicEntry>> symbolic_;
};

enum class SpectrumMethod {
    Numeric,
    ClosedFormNoMonotone,  // P = S3(123,321): both monotone spins forbidden
    ClosedFormNoIdentity,  // P = S3(123): identity spin forbidden
    CubicPlusLinear        // P = S3: cubic factor plus explicit linear factors
};
const char* spectrum_method_name(SpectrumMethod m);

struct SpectrumResult {
    std::vector<double> eigenvalues;  // descending
    SpectrumMethod method = SpectrumMethod::Numeric;
};

// Symmetric eigensolve of a numeric transfer matrix, eigenvalues descending.
SpectrumResult eig_numeric(const TransferMatrix& a);

// Closed spectrum for P = S3(123,321), destat: {a^4(1-b^2)(1+b^2) twice,
// a^4(b^2-1)^2, a^4(b^2+1)^2}; the last is always the maximum.
SpectrumResult eig_closed_no_monotone(const TransferParams& tp);

// Closed spectrum for P = S3(123), destat: the two roots of the quadratic
// factor, a^4(1-b^4) twice, and a^4(1-b^2)^2; the larger quadratic root is
// always the maximum.
SpectrumResult eig_closed_no_identity(const TransferParams& tp);

// Which closed form, if any, covers this spin set / statistic.
std::optional<SpectrumMethod> closed_form_for(const SpinSet& p_set, StatKind stat);

// Ring partition function e^{beta(J+H)n} Tr(A^n) from the numeric spectrum;
// requires n >= 3 and a numeric matrix.
PartitionReport ring_z(const TransferMatrix& a, int n, const ModelParams& p);

// Free-energy density of the ring: -(J+H) - ln(lambda_max)/beta, with
// lambda_max taken from the numeric spectrum.
double free_energy_ring(const SpinSet& p_set, StatKind stat, const ModelParams& p);

// Zero-field product form k! e^{beta J} (e^{beta J} Stat_k(e^{-2 beta J/s_max}))^{n-1}.
// At finite n this differs from the ring trace (the ratio is recorded by the
// verification suite, not asserted); the free-energy densities agree and are
// asserted.
PartitionReport zero_field_z_product_form(int k, int n, const ModelParams& p);
double zero_field_f(int k, const ModelParams& p);

// Factored closed forms of det(A - lambda I), used to cross-check the LU
// determinant. The destat form is written in c = a^4, d = b^2.
double s3_destat_charpoly_factored(double c, double d, double lambda);
double s3_inv_charpoly_factored(double a, double b, double lambda);

}  // namespace permaspin
