#pragma once
// Reference values computed independently of the library code paths.

#include <cmath>
#include <functional>

namespace oracle {

inline constexpr double pi = 3.14159265358979323846;

/// Plain bisection on [lo, hi]; f must change sign.
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// n-th root of lambda tan(lambda) = 1/zeta, written as lambda sin - cos/zeta
/// to stay finite, bracketed in (n pi, n pi + pi/2).
inline double robin_root(double zeta, int n = 0) {
    return bisect([&](double l) { return l * std::sin(l) - std::cos(l) / zeta; }, n * pi + 1e-14,
                  n * pi + pi / 2 - 1e-14);
}

/// Two-sided 95% Student t quantile with 3 degrees of freedom.
inline constexpr double t975_dof3 = 3.182446305284263;

/// Exact solution of E' = M (E + E^2), E(0) = e0.
inline double riccati(double e0, double m, double t) {
    return 1.0 / ((1.0 + 1.0 / e0) * std::exp(-m * t) - 1.0);
}

} // namespace oracle
