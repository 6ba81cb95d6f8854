#include "permaspin/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace permaspin {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

IntPolynomial IntPolynomial::monomial(BigInt coefficient, int exponent) {
    if (exponent < 0) throw std::invalid_argument("IntPolynomial::monomial: negative exponent");
    std::vector<BigInt> coeffs(static_cast<size_t>(exponent) + 1);
    coeffs.back() = std::move(coefficient);
    return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const BigInt& IntPolynomial::coeff(int exponent) const {
    static const BigInt zero;
    if (exponent < 0 || exponent > degree()) return zero;
    return coeffs_[static_cast<size_t>(exponent)];
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return IntPolynomial();
    std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::sum_of_coefficients() const {
    BigInt total;
    for (const auto& c : coeffs_) total += c;
    return total;
}

double IntPolynomial::evaluate(double x) const {
    double value = 0.0;
    for (size_t i = coeffs_.size(); i-- > 0;) value = value * x + coeffs_[i].to_double();
    return value;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int e = 0; e <= degree(); ++e) {
        const BigInt& c = coeffs_[static_cast<size_t>(e)];
        if (c.is_zero()) continue;
        const bool negative = c.signum() < 0;
        std::string mag = (negative ? -c : c).to_string();
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (e == 0) {
            out += mag;
        } else {
            if (mag != "1") out += mag;
            out += "x";
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

IntPolynomial stat_gf(StatKind kind, int k) {
    if (k < 1 || k > 10) throw std::invalid_argument("stat_gf: k out of range [1,10]");
    std::vector<long long> counts(static_cast<size_t>(stat_max(kind, k)) + 1, 0);
    std::vector<int> images(static_cast<size_t>(k));
    std::iota(images.begin(), images.end(), 1);
    do {
        Permutation pi(images);
        ++counts[static_cast<size_t>(statistic(kind, pi))];
    } while (std::next_permutation(images.begin(), images.end()));
    std::vector<BigInt> coeffs;
    coeffs.reserve(counts.size());
    for (long long c : counts) coeffs.emplace_back(c);
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial cddes_closed_form(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("cddes_closed_form: n out of range [1,10]");
    const int target_degree = 2 * (n - 1);

    // Truncated double series: s_e = sum over i+j-2 = e of C(ij+n-1, n).
    std::vector<BigInt> series(static_cast<size_t>(target_degree) + 1);
    for (int e = 0; e <= target_degree; ++e) {
        for (int i = 1; i <= e + 1; ++i) {
            const int j = e + 2 - i;
            series[static_cast<size_t>(e)] += binomial(i * j + n - 1, n);
        }
    }

    // (1-u)^{2n+2}, alternating binomial coefficients.
    std::vector<BigInt> window(static_cast<size_t>(2 * n + 2) + 1);
    for (int t = 0; t <= 2 * n + 2; ++t) {
        BigInt c = binomial(2 * n + 2, t);
        window[static_cast<size_t>(t)] = (t % 2 == 0) ? c : -c;
    }

    // Product, discarding everything above the true degree.
    std::vector<BigInt> out(static_cast<size_t>(target_degree) + 1);
    for (int m = 0; m <= target_degree; ++m) {
        for (int t = 0; t <= std::min(m, 2 * n + 2); ++t)
            out[static_cast<size_t>(m)] +=
                window[static_cast<size_t>(t)] * series[static_cast<size_t>(m - t)];
    }
    return IntPolynomial(std::move(out));
}

}  // namespace permaspin
