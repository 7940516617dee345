#include "navslip/chebyshev.hpp"

#include <cmath>
#include <numbers>

namespace navslip::cheb {

std::vector<double> nodes(int n) {
    std::vector<double> z(n);
    if (n == 1) {
        z[0] = 0.0;
        return z;
    }
    const int m = n - 1;
    for (int j = 0; j < n; ++j) {
        // sin form keeps the nodes exactly antisymmetric
        z[j] = std::sin(std::numbers::pi * (m - 2.0 * j) / (2.0 * m));
    }
    return z;
}

Eigen::MatrixXd diff_matrix(int n) {
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd e(n), b(n);
    for (int j = 0; j < n; ++j) {
        e.setZero();
        e[j] = 1.0;
        differentiate(e.data(), b.data(), n);
        d.col(j) = b;
    }
    return d;
}

Eigen::MatrixXd values_matrix(int n) {
    const auto z = nodes(n);
    Eigen::MatrixXd t(n, n);
    for (int j = 0; j < n; ++j) {
        t(j, 0) = 1.0;
        if (n > 1) {
            t(j, 1) = z[j];
        }
        for (int k = 2; k < n; ++k) {
            t(j, k) = 2.0 * z[j] * t(j, k - 1) - t(j, k - 2);
        }
    }
    return t;
}

Eigen::MatrixXd analysis_matrix(int n) {
    const int m = n - 1;
    Eigen::MatrixXd a(n, n);
    for (int k = 0; k < n; ++k) {
        const double ck = (k == 0 || k == m) ? 2.0 : 1.0;
        for (int j = 0; j < n; ++j) {
            const double cj = (j == 0 || j == m) ? 2.0 : 1.0;
            a(k, j) = 2.0 / (m * ck * cj) * std::cos(std::numbers::pi * j * k / m);
        }
    }
    return a;
}

Eigen::VectorXd integrals(int n) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    for (int k = 0; k < n; k += 2) {
        v[k] = 2.0 / (1.0 - static_cast<double>(k) * k);
    }
    return v;
}

Eigen::MatrixXd gram(int n) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if ((i + j) % 2 != 0) {
                continue;
            }
            const double s = i + j;
            const double d = i - j;
            g(i, j) = 1.0 / (1.0 - s * s) + 1.0 / (1.0 - d * d);
        }
    }
    return g;
}

Eigen::VectorXd clenshaw_curtis(int n) {
    return analysis_matrix(n).transpose() * integrals(n);
}

Eigen::RowVectorXd boundary_row(int n, int side, int order) {
    Eigen::RowVectorXd r(n);
    for (int k = 0; k < n; ++k) {
        const double kk = static_cast<double>(k) * k;
        double v = 1.0;
        if (order == 1) {
            v = kk;
        } else if (order == 2) {
            v = kk * (kk - 1.0) / 3.0;
        }
        // T_k^{(p)}(-1) = (-1)^{k+p} T_k^{(p)}(1)
        if (side < 0 && ((k + order) % 2 != 0)) {
            v = -v;
        }
        r[k] = v;
    }
    return r;
}

double eval(const Eigen::VectorXd& a, double z) {
    // Clenshaw
    double b1 = 0.0, b2 = 0.0;
    for (Eigen::Index k = a.size() - 1; k >= 1; --k) {
        const double b0 = 2.0 * z * b1 - b2 + a[k];
        b2 = b1;
        b1 = b0;
    }
    return (a.size() > 0 ? a[0] : 0.0) + z * b1 - b2;
}

} // namespace navslip::cheb
