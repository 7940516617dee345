#pragma once

#include <vector>

namespace navslip::quad {

struct Rule1D {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule with n nodes on [a, b].
Rule1D gauss_legendre(int n, double a = -1.0, double b = 1.0);

/// Periodic trapezoid rule with n equispaced nodes on [a, a + period).
Rule1D trapezoid_periodic(int n, double a, double period);

} // namespace navslip::quad
