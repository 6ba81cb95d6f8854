#pragma once

#include <vector>

namespace permaspin {

// Dense square matrix of doubles, row major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), v_(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0) {}

    int size() const { return n_; }
    double& at(int i, int j) { return v_[static_cast<size_t>(i) * n_ + j]; }
    double at(int i, int j) const { return v_[static_cast<size_t>(i) * n_ + j]; }

    double trace() const;
    double max_abs() const;
    double frobenius_norm() const;
    bool is_symmetric(double tol) const;

private:
    int n_ = 0;
    std::vector<double> v_;
};

struct EigenDecomposition {
    std::vector<double> values;  // descending
    Matrix vectors;              // column j pairs with values[j]
};

// Cyclic Jacobi for symmetric matrices. Small dense inputs only; iterates
// until the off-diagonal mass is at rounding level.
EigenDecomposition jacobi_eigen(const Matrix& symmetric);

// det(A - lambda*I) by LU with partial pivoting.
double determinant_shifted(const Matrix& a, double lambda);

}  // namespace permaspin
