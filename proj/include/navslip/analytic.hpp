#pragma once

#include <array>
#include <string>
#include <vector>

#include "navslip/geometry.hpp"

namespace navslip {

/// One-dimensional building block x^p * g(x) with g one of 1, cos(k x + phase + q pi/2)
/// or exp(a x). Derivatives of every order stay in this family (via Leibniz).
struct Factor {
    enum class Kind { One, Cos, Exp };

    int power = 0;
    Kind kind = Kind::One;
    double rate = 0.0;  // k for Cos, a for Exp
    double phase = 0.0; // Cos only
    int quarter = 0;    // Cos only, normalised to {0, 1}

    static Factor one() { return {}; }
    static Factor monomial(int p) { return Factor{p}; }
    static Factor cosine(double k, double phase = 0.0);
    static Factor sine(double k, double phase = 0.0);
    static Factor exponential(double a);

    double eval(double x) const { return derivative_value(x, 0); }
    double derivative_value(double x, int order) const;

    bool same_shape(const Factor& other) const;
};

/// c * f_x(x) * f_y(y) * f_z(z).
struct Term {
    double coeff = 0.0;
    std::array<Factor, 3> factors{};
};

/// Finite sum of separable terms.
class ScalarExpr {
public:
    ScalarExpr() = default;
    explicit ScalarExpr(std::vector<Term> terms) : terms_(std::move(terms)) {}

    static ScalarExpr constant(double c);
    static ScalarExpr coordinate(int axis);
    static ScalarExpr term(double coeff, Factor fx, Factor fy, Factor fz);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }

    double eval(const Vec3& x) const;
    /// d^{a0+a1+a2} / dx^a0 dy^a1 dz^a2 evaluated at x.
    double derivative_value(const Vec3& x, const std::array<int, 3>& alpha) const;

    ScalarExpr derivative(int axis, int order = 1) const;

    ScalarExpr& operator+=(const ScalarExpr& other);
    ScalarExpr& operator-=(const ScalarExpr& other);
    ScalarExpr& operator*=(double s);
    friend ScalarExpr operator+(ScalarExpr a, const ScalarExpr& b) { return a += b; }
    friend ScalarExpr operator-(ScalarExpr a, const ScalarExpr& b) { return a -= b; }
    friend ScalarExpr operator*(ScalarExpr a, double s) { return a *= s; }
    friend ScalarExpr operator*(double s, ScalarExpr a) { return a *= s; }
    /// Product; supported when, slot by slot, at least one factor is polynomial
    /// or both are exponentials.
    friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);

    /// Merge terms with identical factors and drop zeros.
    ScalarExpr& simplify();

private:
    std::vector<Term> terms_;
};

using Hessian3 = std::array<Mat3, 3>; // [i](j, k) = d_j d_k u_i

/// Vector field with closed-form derivatives of every order.
class AnalyticField {
public:
    AnalyticField() = default;
    AnalyticField(std::array<ScalarExpr, 3> components, std::string label, bool solenoidal = false);

    static AnalyticField zero();

    const std::string& label() const noexcept { return label_; }
    bool solenoidal() const noexcept { return solenoidal_; }
    const ScalarExpr& component(int i) const { return comps_[i]; }

    Vec3 value(const Vec3& x) const;
    /// J(i, j) = d u_i / d x_j.
    Mat3 jacobian(const Vec3& x) const;
    Hessian3 hessian(const Vec3& x) const;
    double derivative_value(int component, const Vec3& x, const std::array<int, 3>& alpha) const;
    double divergence(const Vec3& x) const;

    AnalyticField curl() const;
    AnalyticField iterated_curl(int r) const;
    ScalarExpr divergence_expr() const;

    AnalyticField& operator+=(const AnalyticField& other);
    AnalyticField& operator*=(double s);
    friend AnalyticField operator+(AnalyticField a, const AnalyticField& b) { return a += b; }
    friend AnalyticField operator*(double s, AnalyticField a) { return a *= s; }

    AnalyticField relabeled(std::string label) const;

private:
    std::array<ScalarExpr, 3> comps_{};
    std::string label_ = "zero";
    bool solenoidal_ = false;
};

/// Gradient of a scalar expression as a vector field.
AnalyticField gradient_of(const ScalarExpr& h, std::string label);

/// grad(f) x grad(g); divergence-free, and tangent to every level set of g.
/// Requires the slot-wise products to be representable (see operator*).
AnalyticField cross_of_gradients(const ScalarExpr& f, const ScalarExpr& g, std::string label);

/// n-th positive root (n = 0, 1, ...) of lambda tan(lambda) = 1 / zeta.
/// zeta = +inf gives n * pi.
double robin_root(double zeta, int n = 0);

} // namespace navslip
