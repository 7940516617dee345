#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace navslip::cheb {

// All routines work with n Gauss-Lobatto nodes z_j = cos(pi j / (n - 1)),
// j = 0..n-1 (so z descends from +1 to -1), and the matching n Chebyshev
// coefficients a_0..a_{n-1}.

std::vector<double> nodes(int n);

/// d/dz in coefficient space via the backward recurrence
/// c_{k-1} b_{k-1} = b_{k+1} + 2 k a_k.
template <class T>
void differentiate(const T* a, T* b, int n) {
    if (n <= 0) {
        return;
    }
    T next{};  // b_{k+1}
    T cur{};   // b_k
    for (int k = n - 1; k >= 1; --k) {
        const T prev = next + static_cast<double>(2 * k) * a[k];
        next = cur;
        cur = prev;
        b[k - 1] = prev;
    }
    b[n - 1] = T{};
    b[0] *= 0.5;
}

/// Coefficient-space differentiation matrix.
Eigen::MatrixXd diff_matrix(int n);

/// T_k(z_j), row j, column k.
Eigen::MatrixXd values_matrix(int n);

/// Inverse of values_matrix built from the discrete cosine sums.
Eigen::MatrixXd analysis_matrix(int n);

/// Integral of T_k over [-1, 1].
Eigen::VectorXd integrals(int n);

/// int T_m T_n dz.
Eigen::MatrixXd gram(int n);

/// Clenshaw-Curtis weights on the Gauss-Lobatto nodes.
Eigen::VectorXd clenshaw_curtis(int n);

/// Row r with r . a = (d/dz)^order of the series at z = side (side = +1 or -1),
/// order in {0, 1, 2}.
Eigen::RowVectorXd boundary_row(int n, int side, int order);

double eval(const Eigen::VectorXd& a, double z);

} // namespace navslip::cheb
