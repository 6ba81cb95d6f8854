#include "permaspin/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace permaspin {

CubicPoint s3_cubic(double c, double d) {
    if (!(c > 0.0) || !(d > 0.0)) throw std::invalid_argument("s3_cubic: c and d must be > 0");
    CubicPoint out;
    out.t.bp = -(c * d * d + c * c + 2.0 * c * d + c + 1.0);
    out.t.cp = -c * (c * d * d * d + 3.0 * c * c * d + c * d * d + c * c + c * d + c
                     + 3.0 * d + 1.0) * (d - 1.0);
    out.t.dp = (d * d + 4.0 * d + 1.0) * c * c * c * (d + 1.0) * (d - 1.0) * (d - 1.0) * (d - 1.0);
    out.lambda4 = c * (1.0 - d) * (1.0 - d);
    out.lambda5 = c * (1.0 - d * d);
    return out;
}

DiscriminantTriple discriminants(const CubicFactor& t) {
    DiscriminantTriple out;
    out.d0 = t.bp * t.bp - 3.0 * t.cp;
    out.d1 = 2.0 * t.bp * t.bp * t.bp - 9.0 * t.bp * t.cp + 27.0 * t.dp;
    out.d2 = out.d1 * out.d1 - 4.0 * out.d0 * out.d0 * out.d0;
    return out;
}

std::array<double, 3> cubic_roots_closed(const CubicFactor& t) {
    const DiscriminantTriple ds = discriminants(t);
    const std::complex<double> z(0.5 * ds.d1, 0.5 * std::sqrt(std::max(0.0, -ds.d2)));
    // z sits in the closed upper half plane, so the principal cube root has
    // argument in [0, pi/3] -- the E_1 branch.
    const std::complex<double> e1 = std::pow(z, 1.0 / 3.0);
    const std::complex<double> rot(-0.5, 0.5 * std::sqrt(3.0));
    const std::complex<double> e2 = e1 * rot;
    const std::complex<double> e3 = e1 * rot * rot;
    return {-(t.bp + 2.0 * e1.real()) / 3.0,
            -(t.bp + 2.0 * e2.real()) / 3.0,
            -(t.bp + 2.0 * e3.real()) / 3.0};
}

namespace {

double bisect_root(const CubicFactor& t, double lo, double hi) {
    double flo = t.evaluate(lo);
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double fmid = t.evaluate(mid);
        if ((flo <= 0.0) == (fmid <= 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> cubic_real_roots_bisect(const CubicFactor& t) {
    const double bound =
        1.0 + std::max({std::abs(t.bp), std::abs(t.cp), std::abs(t.dp)});  // Cauchy bound
    const double scale = std::max(1.0, std::max({std::abs(t.bp), std::abs(t.cp), std::abs(t.dp)}));
    const double zero_tol = 1e-11 * scale * scale;

    // Critical points of the monic cubic split the line into monotone pieces.
    std::vector<double> cuts = {-bound};
    const double disc = t.bp * t.bp - 3.0 * t.cp;
    if (disc > 0.0) {
        const double s = std::sqrt(disc);
        cuts.push_back((-t.bp - s) / 3.0);
        cuts.push_back((-t.bp + s) / 3.0);
    }
    cuts.push_back(bound);

    std::vector<double> roots;
    auto push_root = [&](double r) {
        for (double existing : roots)
            if (std::abs(existing - r) <= 1e-9 * std::max(1.0, std::abs(r))) return;
        roots.push_back(r);
    };
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i], hi = cuts[i + 1];
        const double flo = t.evaluate(lo), fhi = t.evaluate(hi);
        if (std::abs(flo) <= zero_tol) push_root(lo);
        if (std::abs(fhi) <= zero_tol) push_root(hi);
        if ((flo < 0.0 && fhi > 0.0) || (flo > 0.0 && fhi < 0.0))
            push_root(bisect_root(t, lo, hi));
    }
    std::sort(roots.begin(), roots.end());
    if (roots.empty()) throw std::domain_error("cubic_real_roots_bisect: no real root located");
    return roots;
}

double max_real_root_bisect(const CubicFactor& t) { return cubic_real_roots_bisect(t).back(); }

LambdaStar lambda_star(double c, double d) {
    const CubicPoint point = s3_cubic(c, d);
    const DiscriminantTriple ds = discriminants(point.t);
    LambdaStar out;
    const double scale = std::max(1.0, std::abs(ds.d1));
    if (ds.d2 > 1e-9 * scale * scale) {
        out.value = max_real_root_bisect(point.t);
        out.used_fallback = true;
        return out;
    }
    const std::array<double, 3> roots = cubic_roots_closed(point.t);
    out.value = roots[1];  // the E_2 branch
    return out;
}

SpectrumResult s3_full_spectrum(double c, double d) {
    const CubicPoint point = s3_cubic(c, d);
    const std::array<double, 3> roots = cubic_roots_closed(point.t);
    SpectrumResult out;
    out.eigenvalues = {roots[0], roots[1], roots[2], point.lambda4, point.lambda5, point.lambda5};
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
    out.method = SpectrumMethod::CubicPlusLinear;
    return out;
}

std::vector<SurfaceRow> surface_grid(double c_lo, double c_hi, double d_lo, double d_hi,
                                     int steps) {
    if (!(c_lo > 0.0) || !(d_lo > 0.0) || !(c_hi > c_lo) || !(d_hi > d_lo) || steps < 2)
        throw std::invalid_argument("surface_grid: need positive ranges and steps >= 2");
    std::vector<SurfaceRow> rows;
    rows.reserve(static_cast<size_t>(steps) * steps);
    for (int i = 0; i < steps; ++i) {
        const double c = c_lo + (c_hi - c_lo) * i / (steps - 1);
        for (int j = 0; j < steps; ++j) {
            const double d = d_lo + (d_hi - d_lo) * j / (steps - 1);
            const CubicPoint point = s3_cubic(c, d);
            const DiscriminantTriple ds = discriminants(point.t);
            SurfaceRow row;
            row.c = c;
            row.d = d;
            row.lambda_star = lambda_star(c, d).value;
            row.lambda4 = point.lambda4;
            row.lambda5 = point.lambda5;
            row.delta0 = ds.d0;
            row.delta1 = ds.d1;
            row.delta2 = ds.d2;
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace permaspin
