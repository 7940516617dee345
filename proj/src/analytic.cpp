#include "navslip/analytic.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include <boost/math/tools/roots.hpp>

#include "navslip/error.hpp"

namespace navslip {

namespace {

double falling(int p, int j) {
    double r = 1.0;
    for (int i = 0; i < j; ++i) {
        r *= (p - i);
    }
    return r;
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

double cos_quarter(double theta, int q) {
    switch (((q % 4) + 4) % 4) {
    case 0: return std::cos(theta);
    case 1: return -std::sin(theta);
    case 2: return -std::cos(theta);
    default: return std::sin(theta);
    }
}

// m-th derivative of the non-polynomial part g.
double g_derivative(const Factor& f, double x, int m) {
    switch (f.kind) {
    case Factor::Kind::One: return m == 0 ? 1.0 : 0.0;
    case Factor::Kind::Cos: return std::pow(f.rate, m) * cos_quarter(f.rate * x + f.phase, f.quarter + m);
    case Factor::Kind::Exp: return std::pow(f.rate, m) * std::exp(f.rate * x);
    }
    return 0.0;
}

// Moves the sign of cos(theta + q pi/2) for q >= 2 into the coefficient.
void normalise(Term& t) {
    for (auto& f : t.factors) {
        if (f.kind != Factor::Kind::Cos) {
            f.quarter = 0;
            f.phase = 0.0;
            continue;
        }
        f.quarter = ((f.quarter % 4) + 4) % 4;
        if (f.quarter >= 2) {
            f.quarter -= 2;
            t.coeff = -t.coeff;
        }
    }
}

// d/dx of x^p g(x): p x^{p-1} g + x^p g'.
std::vector<std::pair<double, Factor>> factor_derivative(const Factor& f) {
    std::vector<std::pair<double, Factor>> out;
    if (f.power > 0) {
        Factor a = f;
        a.power -= 1;
        out.emplace_back(static_cast<double>(f.power), a);
    }
    switch (f.kind) {
    case Factor::Kind::One: break;
    case Factor::Kind::Cos: {
        Factor b = f;
        b.quarter += 1;
        out.emplace_back(f.rate, b);
        break;
    }
    case Factor::Kind::Exp: out.emplace_back(f.rate, f); break;
    }
    return out;
}

std::vector<std::pair<double, Factor>> factor_product(const Factor& a, const Factor& b) {
    Factor base;
    base.power = a.power + b.power;
    if (a.kind == Factor::Kind::One || b.kind == Factor::Kind::One) {
        const Factor& g = (a.kind == Factor::Kind::One) ? b : a;
        base.kind = g.kind;
        base.rate = g.rate;
        base.phase = g.phase;
        base.quarter = g.quarter;
        return {{1.0, base}};
    }
    if (a.kind == Factor::Kind::Exp && b.kind == Factor::Kind::Exp) {
        base.kind = Factor::Kind::Exp;
        base.rate = a.rate + b.rate;
        return {{1.0, base}};
    }
    if (a.kind == Factor::Kind::Cos && b.kind == Factor::Kind::Cos) {
        Factor s = base;
        s.kind = Factor::Kind::Cos;
        s.rate = a.rate + b.rate;
        s.phase = a.phase + b.phase;
        s.quarter = a.quarter + b.quarter;
        Factor d = base;
        d.kind = Factor::Kind::Cos;
        d.rate = a.rate - b.rate;
        d.phase = a.phase - b.phase;
        d.quarter = a.quarter - b.quarter;
        return {{0.5, s}, {0.5, d}};
    }
    throw std::logic_error("product of cosine and exponential factors is not representable");
}

} // namespace

Factor Factor::cosine(double k, double phase) {
    Factor f;
    f.kind = Kind::Cos;
    f.rate = k;
    f.phase = phase;
    return f;
}

Factor Factor::sine(double k, double phase) {
    Factor f = cosine(k, phase);
    f.quarter = 3; // cos(theta + 3 pi / 2) = sin(theta)
    return f;
}

Factor Factor::exponential(double a) {
    Factor f;
    f.kind = Kind::Exp;
    f.rate = a;
    return f;
}

double Factor::derivative_value(double x, int order) const {
    double sum = 0.0;
    const int jmax = std::min(order, power);
    for (int j = 0; j <= jmax; ++j) {
        const double g = g_derivative(*this, x, order - j);
        if (g == 0.0) {
            continue;
        }
        sum += binomial(order, j) * falling(power, j) * std::pow(x, power - j) * g;
    }
    return sum;
}

bool Factor::same_shape(const Factor& other) const {
    if (power != other.power || kind != other.kind) {
        return false;
    }
    switch (kind) {
    case Kind::One: return true;
    case Kind::Exp: return rate == other.rate;
    case Kind::Cos: return rate == other.rate && phase == other.phase && quarter == other.quarter;
    }
    return false;
}

ScalarExpr ScalarExpr::constant(double c) { return term(c, Factor::one(), Factor::one(), Factor::one()); }

ScalarExpr ScalarExpr::coordinate(int axis) {
    std::array<Factor, 3> f{};
    f[axis] = Factor::monomial(1);
    Term t{1.0, f};
    return ScalarExpr({t});
}

ScalarExpr ScalarExpr::term(double coeff, Factor fx, Factor fy, Factor fz) {
    Term t{coeff, {fx, fy, fz}};
    normalise(t);
    return ScalarExpr({t});
}

double ScalarExpr::eval(const Vec3& x) const {
    double sum = 0.0;
    for (const auto& t : terms_) {
        sum += t.coeff * t.factors[0].eval(x[0]) * t.factors[1].eval(x[1]) * t.factors[2].eval(x[2]);
    }
    return sum;
}

double ScalarExpr::derivative_value(const Vec3& x, const std::array<int, 3>& alpha) const {
    double sum = 0.0;
    for (const auto& t : terms_) {
        double v = t.coeff;
        for (int i = 0; i < 3 && v != 0.0; ++i) {
            v *= t.factors[i].derivative_value(x[i], alpha[i]);
        }
        sum += v;
    }
    return sum;
}

ScalarExpr ScalarExpr::derivative(int axis, int order) const {
    std::vector<Term> current = terms_;
    for (int o = 0; o < order; ++o) {
        std::vector<Term> next;
        next.reserve(current.size() * 2);
        for (const auto& t : current) {
            for (const auto& [c, f] : factor_derivative(t.factors[axis])) {
                Term d = t;
                d.coeff *= c;
                d.factors[axis] = f;
                normalise(d);
                next.push_back(d);
            }
        }
        current = std::move(next);
    }
    ScalarExpr out(std::move(current));
    out.simplify();
    return out;
}

ScalarExpr& ScalarExpr::operator+=(const ScalarExpr& other) {
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    return simplify();
}

ScalarExpr& ScalarExpr::operator-=(const ScalarExpr& other) {
    for (Term t : other.terms_) {
        t.coeff = -t.coeff;
        terms_.push_back(t);
    }
    return simplify();
}

ScalarExpr& ScalarExpr::operator*=(double s) {
    for (auto& t : terms_) {
        t.coeff *= s;
    }
    return simplify();
}

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
    std::vector<Term> out;
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            std::vector<Term> partial{Term{ta.coeff * tb.coeff, {}}};
            for (int i = 0; i < 3; ++i) {
                std::vector<Term> grown;
                for (const auto& [c, f] : factor_product(ta.factors[i], tb.factors[i])) {
                    for (Term p : partial) {
                        p.coeff *= c;
                        p.factors[i] = f;
                        grown.push_back(p);
                    }
                }
                partial = std::move(grown);
            }
            for (auto& p : partial) {
                normalise(p);
                out.push_back(p);
            }
        }
    }
    ScalarExpr r(std::move(out));
    r.simplify();
    return r;
}

ScalarExpr& ScalarExpr::simplify() {
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto t : terms_) {
        normalise(t);
        bool found = false;
        for (auto& m : merged) {
            if (m.factors[0].same_shape(t.factors[0]) && m.factors[1].same_shape(t.factors[1]) &&
                m.factors[2].same_shape(t.factors[2])) {
                m.coeff += t.coeff;
                found = true;
                break;
            }
        }
        if (!found) {
            merged.push_back(t);
        }
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff == 0.0; });
    terms_ = std::move(merged);
    return *this;
}

AnalyticField::AnalyticField(std::array<ScalarExpr, 3> components, std::string label, bool solenoidal)
    : comps_(std::move(components)), label_(std::move(label)), solenoidal_(solenoidal) {
    for (auto& c : comps_) {
        c.simplify();
    }
}

AnalyticField AnalyticField::zero() { return AnalyticField({}, "zero", true); }

Vec3 AnalyticField::value(const Vec3& x) const {
    return Vec3(comps_[0].eval(x), comps_[1].eval(x), comps_[2].eval(x));
}

Mat3 AnalyticField::jacobian(const Vec3& x) const {
    Mat3 j;
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < 3; ++k) {
            std::array<int, 3> alpha{0, 0, 0};
            alpha[k] = 1;
            j(i, k) = comps_[i].derivative_value(x, alpha);
        }
    }
    return j;
}

Hessian3 AnalyticField::hessian(const Vec3& x) const {
    Hessian3 h;
    for (int i = 0; i < 3; ++i) {
        for (int a = 0; a < 3; ++a) {
            for (int b = a; b < 3; ++b) {
                std::array<int, 3> alpha{0, 0, 0};
                alpha[a] += 1;
                alpha[b] += 1;
                h[i](a, b) = h[i](b, a) = comps_[i].derivative_value(x, alpha);
            }
        }
    }
    return h;
}

double AnalyticField::derivative_value(int component, const Vec3& x, const std::array<int, 3>& alpha) const {
    return comps_[component].derivative_value(x, alpha);
}

double AnalyticField::divergence(const Vec3& x) const { return jacobian(x).trace(); }

AnalyticField AnalyticField::curl() const {
    std::array<ScalarExpr, 3> c{
        comps_[2].derivative(1) - comps_[1].derivative(2),
        comps_[0].derivative(2) - comps_[2].derivative(0),
        comps_[1].derivative(0) - comps_[0].derivative(1),
    };
    return AnalyticField(std::move(c), "curl(" + label_ + ")", true);
}

AnalyticField AnalyticField::iterated_curl(int r) const {
    if (r < 0) {
        throw Error(Errc::DomainError, "iterated curl order must be non-negative");
    }
    AnalyticField out = *this;
    for (int i = 0; i < r; ++i) {
        out = out.curl();
    }
    return out;
}

ScalarExpr AnalyticField::divergence_expr() const {
    return comps_[0].derivative(0) + comps_[1].derivative(1) + comps_[2].derivative(2);
}

AnalyticField& AnalyticField::operator+=(const AnalyticField& other) {
    for (int i = 0; i < 3; ++i) {
        comps_[i] += other.comps_[i];
    }
    solenoidal_ = solenoidal_ && other.solenoidal_;
    label_ = label_ + "+" + other.label_;
    return *this;
}

AnalyticField& AnalyticField::operator*=(double s) {
    for (auto& c : comps_) {
        c *= s;
    }
    return *this;
}

AnalyticField AnalyticField::relabeled(std::string label) const {
    AnalyticField f = *this;
    f.label_ = std::move(label);
    return f;
}

AnalyticField gradient_of(const ScalarExpr& h, std::string label) {
    return AnalyticField({h.derivative(0), h.derivative(1), h.derivative(2)}, std::move(label), false);
}

AnalyticField cross_of_gradients(const ScalarExpr& f, const ScalarExpr& g, std::string label) {
    const std::array<ScalarExpr, 3> a{f.derivative(0), f.derivative(1), f.derivative(2)};
    const std::array<ScalarExpr, 3> b{g.derivative(0), g.derivative(1), g.derivative(2)};
    std::array<ScalarExpr, 3> c{
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    };
    return AnalyticField(std::move(c), std::move(label), true);
}

double robin_root(double zeta, int n) {
    if (!(zeta > 0.0)) {
        throw Error(Errc::NonpositiveSlipLength, "slip length must be positive");
    }
    if (n < 0) {
        throw Error(Errc::DomainError, "root index must be non-negative");
    }
    const double lo = n * std::numbers::pi;
    if (std::isinf(zeta)) {
        return lo;
    }
    // lambda sin(lambda) - cos(lambda) / zeta changes sign on [n pi, n pi + pi/2].
    const auto f = [zeta](double x) { return x * std::sin(x) - std::cos(x) / zeta; };
    const double hi = lo + 0.5 * std::numbers::pi;
    boost::uintmax_t iters = 200;
    const auto [a, b] = boost::math::tools::toms748_solve(
        f, lo, hi, boost::math::tools::eps_tolerance<double>(std::numeric_limits<double>::digits - 1), iters);
    return 0.5 * (a + b);
}

} // namespace navslip
