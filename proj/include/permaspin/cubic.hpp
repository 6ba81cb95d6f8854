#pragma once

#include <array>
#include <vector>

#include "permaspin/transfer.hpp"

namespace permaspin {

// Monic cubic factor t(lambda) = lambda^3 + Bp lambda^2 + Cp lambda + Dp of
// the S3/destat characteristic polynomial, in c = a^4, d = b^2.
struct CubicFactor {
    double bp = 0.0;
    double cp = 0.0;
    double dp = 0.0;

    double evaluate(double lambda) const {
        return ((lambda + bp) * lambda + cp) * lambda + dp;
    }
};

struct CubicPoint {
    CubicFactor t;
    double lambda4 = 0.0;  // c(1-d)^2, simple
    double lambda5 = 0.0;  // c(1-d^2), double
};

// Cubic coefficients plus the two explicit linear-factor eigenvalues.
CubicPoint s3_cubic(double c, double d);

struct DiscriminantTriple {
    double d0 = 0.0;  // Bp^2 - 3 Cp
    double d1 = 0.0;  // 2 Bp^3 - 9 Bp Cp + 27 Dp
    double d2 = 0.0;  // d1^2 - 4 d0^3
};
DiscriminantTriple discriminants(const CubicFactor& t);

// All three (real) roots via the complex cube-root construction: E is the
// principal cube root of (d1 + i sqrt(-d2))/2, the other two are rotations
// by 2pi/3, and root_i = -(Bp + 2 Re(E_i))/3. Requires d2 <= 0.
std::array<double, 3> cubic_roots_closed(const CubicFactor& t);

struct LambdaStar {
    double value = 0.0;
    bool used_fallback = false;  // d2 > 0 beyond tolerance; bisection used
};

// Largest root of t as the E_2 branch (argument in [2pi/3, pi]) of the
// construction above; falls back to the bisection solver when d2 > 0.
LambdaStar lambda_star(double c, double d);

// Independent root finder: derivative-bracketing bisection. Kept free of the
// complex construction so it can serve as its oracle.
std::vector<double> cubic_real_roots_bisect(const CubicFactor& t);
double max_real_root_bisect(const CubicFactor& t);

// All six S3/destat eigenvalues at (c, d): three cubic roots, lambda4 once,
// lambda5 twice. Descending.
SpectrumResult s3_full_spectrum(double c, double d);

struct SurfaceRow {
    double c = 0.0, d = 0.0;
    double lambda_star = 0.0, lambda4 = 0.0, lambda5 = 0.0;
    double delta0 = 0.0, delta1 = 0.0, delta2 = 0.0;
};

// Inclusive steps x steps grid over [c_lo,c_hi] x [d_lo,d_hi].
std::vector<SurfaceRow> surface_grid(double c_lo, double c_hi, double d_lo, double d_hi,
                                     int steps);

}  // namespace permaspin
