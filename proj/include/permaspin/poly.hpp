#pragma once

#include <string>
#include <vector>

#include "permaspin/bigint.hpp"
#include "permaspin/perm.hpp"

namespace permaspin {

// Polynomial with exact integer coefficients, index = exponent.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);

    static IntPolynomial monomial(BigInt coefficient, int exponent);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero poly
    const BigInt& coeff(int exponent) const;
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial operator*(const IntPolynomial& rhs) const;
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

    BigInt sum_of_coefficients() const;
    double evaluate(double x) const;
    // "1 + 4x^2 + x^4"; "0" for the zero polynomial.
    std::string to_string() const;

private:
    std::vector<BigInt> coeffs_;  // normalized: trailing coefficient nonzero
    void trim();
};

// Stat_k(x) = sum over S_k of x^{stat(pi)}, by direct enumeration; k <= 10.
IntPolynomial stat_gf(StatKind kind, int k);

// Double Eulerian generating function from the closed-form double series:
// (1-u)^{2n+2} * sum_{i,j>=1} C(ij+n-1, n) u^{i+j-2}, truncated at the true
// degree 2(n-1) before the product. Exact integer arithmetic; n <= 10.
IntPolynomial cddes_closed_form(int n);

}  // namespace permaspin
