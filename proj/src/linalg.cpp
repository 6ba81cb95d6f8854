#include "permaspin/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace permaspin {

double Matrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double x : v_) m = std::max(m, std::abs(x));
    return m;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (double x : v_) s += x * x;
    return std::sqrt(s);
}

bool Matrix::is_symmetric(double tol) const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (std::abs(at(i, j) - at(j, i)) > tol) return false;
    return true;
}

EigenDecomposition jacobi_eigen(const Matrix& input) {
    const int n = input.size();
    if (n == 0) throw std::invalid_argument("jacobi_eigen: empty matrix");
    if (!input.is_symmetric(1e-12 * std::max(1.0, input.max_abs())))
        throw std::invalid_argument("jacobi_eigen: matrix is not symmetric");

    Matrix a = input;
    Matrix v(n);
    for (int i = 0; i < n; ++i) v.at(i, i) = 1.0;

    auto off_norm = [&] {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += a.at(i, j) * a.at(i, j);
        return std::sqrt(2.0 * s);
    };

    const double scale = std::max(1.0, a.frobenius_norm());
    for (int sweep = 0; sweep < 100 && off_norm() > 1e-15 * scale; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a.at(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int i = 0; i < n; ++i) {
                    const double aip = a.at(i, p);
                    const double aiq = a.at(i, q);
                    a.at(i, p) = c * aip - s * aiq;
                    a.at(i, q) = s * aip + c * aiq;
                }
                for (int j = 0; j < n; ++j) {
                    const double apj = a.at(p, j);
                    const double aqj = a.at(q, j);
                    a.at(p, j) = c * apj - s * aqj;
                    a.at(q, j) = s * apj + c * aqj;
                }
                for (int i = 0; i < n; ++i) {
                    const double vip = v.at(i, p);
                    const double viq = v.at(i, q);
                    v.at(i, p) = c * vip - s * viq;
                    v.at(i, q) = s * vip + c * viq;
                }
            }
        }
    }

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return a.at(x, x) > a.at(y, y); });

    EigenDecomposition out;
    out.values.reserve(static_cast<size_t>(n));
    out.vectors = Matrix(n);
    for (int j = 0; j < n; ++j) {
        out.values.push_back(a.at(order[static_cast<size_t>(j)], order[static_cast<size_t>(j)]));
        for (int i = 0; i < n; ++i)
            out.vectors.at(i, j) = v.at(i, order[static_cast<size_t>(j)]);
    }
    return out;
}

double determinant_shifted(const Matrix& input, double lambda) {
    const int n = input.size();
    Matrix a = input;
    for (int i = 0; i < n; ++i) a.at(i, i) -= lambda;

    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a.at(r, col)) > std::abs(a.at(pivot, col))) pivot = r;
        if (a.at(pivot, col) == 0.0) return 0.0;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            det = -det;
        }
        det *= a.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            const double factor = a.at(r, col) / a.at(col, col);
            if (factor == 0.0) continue;
            for (int j = col; j < n; ++j) a.at(r, j) -= factor * a.at(col, j);
        }
    }
    return det;
}

}  // namespace permaspin
