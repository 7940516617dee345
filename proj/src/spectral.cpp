#include "navslip/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <tuple>

#include <fftw3.h>

#include "navslip/chebyshev.hpp"
#include "navslip/error.hpp"

namespace navslip {

namespace {

constexpr cplx I{0.0, 1.0};

// FFTW's planner is not re-entrant.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

// Owns aligned scratch buffers plus the plans that act on them. One instance
// per thread and grid shape.
class Transform {
public:
    explicit Transform(const ChannelSpec& s) : spec_(s) {
        const std::size_t np = s.grid_points();
        const std::size_t ns = s.spectral_points();
        rbuf_ = fftw_alloc_real(np);
        cbuf_ = fftw_alloc_complex(ns);
        std::lock_guard<std::mutex> lock(planner_mutex());
        const int nz = s.nz;
        const fftw_r2r_kind kind = FFTW_REDFT00;
        dct_ = fftw_plan_many_r2r(1, &nz, s.nx * s.ny, rbuf_, nullptr, 1, nz, rbuf_, nullptr, 1, nz, &kind,
                                  FFTW_ESTIMATE);
        const int n[2] = {s.nx, s.ny};
        const int rem[2] = {s.nx, s.ny};
        const int cem[2] = {s.nx, s.nyh()};
        r2c_ = fftw_plan_many_dft_r2c(2, n, nz, rbuf_, rem, nz, 1, cbuf_, cem, nz, 1, FFTW_ESTIMATE);
        c2r_ = fftw_plan_many_dft_c2r(2, n, nz, cbuf_, cem, nz, 1, rbuf_, rem, nz, 1, FFTW_ESTIMATE);
        if (!dct_ || !r2c_ || !c2r_) {
            throw Error(Errc::ConfigInvalid, "FFTW could not plan the channel transforms");
        }
        const int m = nz - 1;
        fwd_scale_.resize(nz);
        inv_scale_.resize(nz);
        for (int k = 0; k < nz; ++k) {
            const bool edge = (k == 0 || k == m);
            fwd_scale_[k] = 1.0 / (static_cast<double>(s.nx) * s.ny * m * (edge ? 2.0 : 1.0));
            inv_scale_[k] = edge ? 1.0 : 0.5;
        }
    }

    ~Transform() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(dct_);
        fftw_destroy_plan(r2c_);
        fftw_destroy_plan(c2r_);
        fftw_free(rbuf_);
        fftw_free(cbuf_);
    }

    Transform(const Transform&) = delete;
    Transform& operator=(const Transform&) = delete;

    void forward(const double* in, cplx* out) {
        std::copy(in, in + spec_.grid_points(), rbuf_);
        fftw_execute(dct_);
        fftw_execute(r2c_);
        const auto* c = reinterpret_cast<const cplx*>(cbuf_);
        const int nz = spec_.nz;
        const std::size_t nmodes = static_cast<std::size_t>(spec_.nx) * spec_.nyh();
        for (std::size_t p = 0; p < nmodes; ++p) {
            for (int k = 0; k < nz; ++k) {
                out[p * nz + k] = c[p * nz + k] * fwd_scale_[k];
            }
        }
    }

    void inverse(const cplx* in, double* out) {
        auto* c = reinterpret_cast<cplx*>(cbuf_);
        const int nz = spec_.nz;
        const std::size_t nmodes = static_cast<std::size_t>(spec_.nx) * spec_.nyh();
        for (std::size_t p = 0; p < nmodes; ++p) {
            for (int k = 0; k < nz; ++k) {
                c[p * nz + k] = in[p * nz + k] * inv_scale_[k];
            }
        }
        fftw_execute(c2r_);
        fftw_execute(dct_);
        std::copy(rbuf_, rbuf_ + spec_.grid_points(), out);
    }

private:
    ChannelSpec spec_;
    double* rbuf_ = nullptr;
    fftw_complex* cbuf_ = nullptr;
    fftw_plan dct_ = nullptr;
    fftw_plan r2c_ = nullptr;
    fftw_plan c2r_ = nullptr;
    std::vector<double> fwd_scale_;
    std::vector<double> inv_scale_;
};

Transform& transform_for(const ChannelSpec& s) {
    using Key = std::tuple<int, int, int>;
    thread_local std::map<Key, std::unique_ptr<Transform>> cache;
    auto& slot = cache[Key{s.nx, s.ny, s.nz}];
    if (!slot) {
        slot = std::make_unique<Transform>(s);
    }
    return *slot;
}

const Eigen::MatrixXd& gram_for(int nz) {
    thread_local std::map<int, Eigen::MatrixXd> cache;
    auto it = cache.find(nz);
    if (it == cache.end()) {
        it = cache.emplace(nz, cheb::gram(nz)).first;
    }
    return it->second;
}

const Eigen::MatrixXd& diff_for(int nz) {
    thread_local std::map<int, Eigen::MatrixXd> cache;
    auto it = cache.find(nz);
    if (it == cache.end()) {
        it = cache.emplace(nz, cheb::diff_matrix(nz)).first;
    }
    return it->second;
}

double mode_weight(const ChannelSpec& s, int iy) {
    return (iy == 0 || (s.ny % 2 == 0 && iy == s.ny / 2)) ? 1.0 : 2.0;
}

void dz(const cplx* a, cplx* b, int nz) { cheb::differentiate(a, b, nz); }

void require_same_shape(const SpectralField& a, const SpectralField& b) {
    if (!(a.spec() == b.spec()) || a.ncomp() != b.ncomp()) {
        throw Error(Errc::ConfigInvalid, "spectral fields have different shapes");
    }
}

using CVec = Eigen::VectorXcd;

CVec solve_complex(const Eigen::PartialPivLU<Eigen::MatrixXd>& lu, const CVec& rhs) {
    const Eigen::VectorXd re = lu.solve(rhs.real());
    const Eigen::VectorXd im = lu.solve(rhs.imag());
    CVec out(rhs.size());
    out.real() = re;
    out.imag() = im;
    return out;
}

} // namespace

double ChannelSpec::kx(int ix) const noexcept { return 2.0 * std::numbers::pi / lx * mx(ix); }
double ChannelSpec::ky(int iy) const noexcept { return 2.0 * std::numbers::pi / ly * my(iy); }

bool ChannelSpec::is_nyquist(int ix, int iy) const noexcept {
    return (nx % 2 == 0 && ix == nx / 2) || (ny % 2 == 0 && iy == ny / 2);
}

bool ChannelSpec::retained(int ix, int iy) const noexcept {
    return !is_nyquist(ix, iy) && 3 * std::abs(mx(ix)) <= nx && 3 * std::abs(my(iy)) <= ny;
}

double ChannelSpec::z(int iz) const {
    const int m = nz - 1;
    return std::sin(std::numbers::pi * (m - 2.0 * iz) / (2.0 * m));
}

void ChannelSpec::validate() const {
    if (nx < 2 || ny < 2 || nz < 5) {
        throw Error(Errc::ConfigInvalid, "channel grid needs nx, ny >= 2 and nz >= 5");
    }
    if (!(lx > 0.0) || !(ly > 0.0)) {
        throw Error(Errc::ConfigInvalid, "channel periods must be positive");
    }
}

SpectralField::SpectralField(const ChannelSpec& spec, int ncomp)
    : spec_(spec), ncomp_(ncomp), coeffs_(spec.spectral_points() * ncomp, cplx{}) {
    spec_.validate();
}

SpectralField SpectralField::from_grid(const ChannelSpec& spec, const std::vector<double>& values, int ncomp) {
    SpectralField f(spec, ncomp);
    if (values.size() != spec.grid_points() * ncomp) {
        throw Error(Errc::ConfigInvalid, "grid value count does not match the channel shape");
    }
    auto& tr = transform_for(spec);
    for (int c = 0; c < ncomp; ++c) {
        tr.forward(values.data() + c * spec.grid_points(), f.coeffs_.data() + c * spec.spectral_points());
    }
    f.enforce_hermitian();
    return f;
}

SpectralField SpectralField::sample(const AnalyticField& u, const ChannelSpec& spec) {
    spec.validate();
    const std::size_t np = spec.grid_points();
    std::vector<double> v(3 * np);
    std::vector<double> zs(spec.nz);
    for (int iz = 0; iz < spec.nz; ++iz) {
        zs[iz] = spec.z(iz);
    }
    for (int ix = 0; ix < spec.nx; ++ix) {
        for (int iy = 0; iy < spec.ny; ++iy) {
            for (int iz = 0; iz < spec.nz; ++iz) {
                const std::size_t p = (static_cast<std::size_t>(ix) * spec.ny + iy) * spec.nz + iz;
                const Vec3 val = u.value(Vec3(spec.x(ix), spec.y(iy), zs[iz]));
                v[p] = val.x();
                v[np + p] = val.y();
                v[2 * np + p] = val.z();
            }
        }
    }
    return from_grid(spec, v, 3);
}

SpectralField SpectralField::sample_scalar(const std::function<double(const Vec3&)>& f, const ChannelSpec& spec) {
    spec.validate();
    std::vector<double> v(spec.grid_points());
    for (int ix = 0; ix < spec.nx; ++ix) {
        for (int iy = 0; iy < spec.ny; ++iy) {
            for (int iz = 0; iz < spec.nz; ++iz) {
                v[(static_cast<std::size_t>(ix) * spec.ny + iy) * spec.nz + iz] =
                    f(Vec3(spec.x(ix), spec.y(iy), spec.z(iz)));
            }
        }
    }
    return from_grid(spec, v, 1);
}

std::vector<double> SpectralField::to_grid() const {
    const std::size_t np = spec_.grid_points();
    std::vector<double> v(np * ncomp_);
    auto& tr = transform_for(spec_);
    for (int c = 0; c < ncomp_; ++c) {
        tr.inverse(coeffs_.data() + c * spec_.spectral_points(), v.data() + c * np);
    }
    return v;
}

SpectralField& SpectralField::apply_dealias() {
    for (int c = 0; c < ncomp_; ++c) {
        for (int ix = 0; ix < spec_.nx; ++ix) {
            for (int iy = 0; iy < spec_.nyh(); ++iy) {
                if (!spec_.retained(ix, iy)) {
                    std::fill_n(mode(c, ix, iy), spec_.nz, cplx{});
                }
            }
        }
    }
    dealiased_ = true;
    return *this;
}

SpectralField& SpectralField::enforce_hermitian() {
    const int nz = spec_.nz;
    for (int c = 0; c < ncomp_; ++c) {
        for (int ix = 0; ix < spec_.nx; ++ix) {
            for (int iy = 0; iy < spec_.nyh(); ++iy) {
                if (spec_.is_nyquist(ix, iy)) {
                    std::fill_n(mode(c, ix, iy), nz, cplx{});
                }
            }
        }
        cplx* a0 = mode(c, 0, 0);
        for (int k = 0; k < nz; ++k) {
            a0[k] = cplx(a0[k].real(), 0.0);
        }
        for (int ix = 1; ix < (spec_.nx + 1) / 2; ++ix) {
            cplx* a = mode(c, ix, 0);
            cplx* b = mode(c, spec_.nx - ix, 0);
            for (int k = 0; k < nz; ++k) {
                const cplx avg = 0.5 * (a[k] + std::conj(b[k]));
                a[k] = avg;
                b[k] = std::conj(avg);
            }
        }
    }
    return *this;
}

SpectralField SpectralField::component(int c) const {
    SpectralField s(spec_, 1);
    const std::size_t ns = spec_.spectral_points();
    std::copy_n(coeffs_.begin() + c * ns, ns, s.coeffs_.begin());
    s.dealiased_ = dealiased_;
    return s;
}

void SpectralField::set_component(int c, const SpectralField& scalar) {
    const std::size_t ns = spec_.spectral_points();
    std::copy_n(scalar.coeffs_.begin(), ns, coeffs_.begin() + c * ns);
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
    require_same_shape(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
    require_same_shape(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    return *this;
}

SpectralField& SpectralField::operator*=(double s) {
    for (auto& c : coeffs_) {
        c *= s;
    }
    return *this;
}

SpectralField SpectralField::derivative(int axis, int order) const {
    SpectralField out = *this;
    if (order == 0) {
        return out;
    }
    const int nz = spec_.nz;
    std::vector<cplx> tmp(nz);
    for (int c = 0; c < ncomp_; ++c) {
        for (int ix = 0; ix < spec_.nx; ++ix) {
            for (int iy = 0; iy < spec_.nyh(); ++iy) {
                cplx* a = out.mode(c, ix, iy);
                if (axis == 2) {
                    for (int o = 0; o < order; ++o) {
                        dz(a, tmp.data(), nz);
                        std::copy(tmp.begin(), tmp.end(), a);
                    }
                    continue;
                }
                const double k = (axis == 0) ? spec_.kx(ix) : spec_.ky(iy);
                const cplx mult = std::pow(I * k, order);
                for (int j = 0; j < nz; ++j) {
                    a[j] *= mult;
                }
            }
        }
    }
    return out;
}

SpectralField SpectralField::partial(const std::array<int, 3>& alpha) const {
    return derivative(0, alpha[0]).derivative(1, alpha[1]).derivative(2, alpha[2]);
}

double SpectralField::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : coeffs_) {
        m = std::max(m, std::abs(c));
    }
    return m;
}

SpectralField curl(const SpectralField& u) {
    if (u.ncomp() != 3) {
        throw Error(Errc::ConfigInvalid, "curl needs a three-component field");
    }
    const SpectralField ux = u.component(0), uy = u.component(1), uz = u.component(2);
    SpectralField w(u.spec(), 3);
    w.set_component(0, uz.derivative(1) - uy.derivative(2));
    w.set_component(1, ux.derivative(2) - uz.derivative(0));
    w.set_component(2, uy.derivative(0) - ux.derivative(1));
    return w;
}

SpectralField iterated_curl(const SpectralField& u, int r) {
    if (r < 0 || r > u.spec().nz / 4) {
        throw Error(Errc::OrderTooHigh, "iterated curl order " + std::to_string(r) + " exceeds nz/4");
    }
    SpectralField q = u;
    for (int l = 0; l < r; ++l) {
        q = curl(q);
    }
    return q;
}

SpectralField divergence(const SpectralField& u) {
    SpectralField d = u.component(0).derivative(0);
    d += u.component(1).derivative(1);
    d += u.component(2).derivative(2);
    return d;
}

SpectralField gradient(const SpectralField& u) {
    SpectralField g(u.spec(), 3 * u.ncomp());
    for (int j = 0; j < 3; ++j) {
        const SpectralField dj = u.derivative(j);
        for (int i = 0; i < u.ncomp(); ++i) {
            g.set_component(3 * i + j, dj.component(i));
        }
    }
    return g;
}

SpectralField laplacian(const SpectralField& u) {
    return u.derivative(0, 2) + u.derivative(1, 2) + u.derivative(2, 2);
}

SpectralField leray_project(const SpectralField& u, SpectralField* pressure) {
    if (u.ncomp() != 3) {
        throw Error(Errc::ConfigInvalid, "leray_project needs a three-component field");
    }
    const ChannelSpec& s = u.spec();
    const int n = s.nz;
    const Eigen::MatrixXd& d = diff_for(n);
    const Eigen::MatrixXd d2 = d * d;
    const Eigen::RowVectorXd top = cheb::boundary_row(n, 1, 1);
    const Eigen::RowVectorXd bot = cheb::boundary_row(n, -1, 1);
    std::map<double, Eigen::PartialPivLU<Eigen::MatrixXd>> lus;

    SpectralField out(s, 3);
    if (pressure) {
        *pressure = SpectralField(s, 1);
    }
    for (int ix = 0; ix < s.nx; ++ix) {
        for (int iy = 0; iy < s.nyh(); ++iy) {
            if (s.is_nyquist(ix, iy)) {
                continue;
            }
            const double kx = s.kx(ix), ky = s.ky(iy);
            const double k2 = kx * kx + ky * ky;
            const CVec uh = Eigen::Map<const CVec>(u.mode(0, ix, iy), n);
            const CVec vh = Eigen::Map<const CVec>(u.mode(1, ix, iy), n);
            const CVec wh = Eigen::Map<const CVec>(u.mode(2, ix, iy), n);
            Eigen::Map<CVec> uo(out.mode(0, ix, iy), n), vo(out.mode(1, ix, iy), n), wo(out.mode(2, ix, iy), n);

            if (k2 == 0.0) {
                // Horizontal means are already solenoidal; the mean wall-normal
                // velocity is a pure gradient.
                uo = uh;
                vo = vh;
                wo.setZero();
                if (pressure) {
                    // p' = w, fixed to zero mean
                    Eigen::Map<CVec> po(pressure->mode(0, ix, iy), n);
                    CVec p = CVec::Zero(n);
                    for (int k = 1; k < n; ++k) {
                        const cplx prev = (k - 1 == 0 ? 2.0 : 1.0) * wh[k - 1];
                        const cplx next = (k + 1 < n) ? wh[k + 1] : cplx{};
                        p[k] = (prev - next) / (2.0 * k);
                    }
                    const Eigen::VectorXd ints = cheb::integrals(n);
                    cplx mean = 0.0;
                    for (int k = 1; k < n; ++k) {
                        mean += ints[k] * p[k];
                    }
                    p[0] = -mean / 2.0;
                    po = p;
                }
                continue;
            }

            auto it = lus.find(k2);
            if (it == lus.end()) {
                Eigen::MatrixXd a = d2 - k2 * Eigen::MatrixXd::Identity(n, n);
                a.row(n - 2) = top;
                a.row(n - 1) = bot;
                it = lus.emplace(k2, Eigen::PartialPivLU<Eigen::MatrixXd>(a)).first;
                if (std::abs(it->second.determinant()) == 0.0) {
                    throw Error(Errc::SingularMode, "pressure system singular at k^2 = " + std::to_string(k2));
                }
            }
            const CVec dw = d * wh;
            CVec rhs = I * kx * uh + I * ky * vh + dw;
            rhs[n - 2] = wh.sum();
            cplx wb = 0.0;
            for (int k = 0; k < n; ++k) {
                wb += (k % 2 == 0 ? 1.0 : -1.0) * wh[k];
            }
            rhs[n - 1] = wb;
            const CVec p = solve_complex(it->second, rhs);
            const CVec wn = wh - d * p;
            const CVec chi = -(d * wn);
            const CVec eta = I * kx * vh - I * ky * uh;
            wo = wn;
            uo = -I * (kx * chi - ky * eta) / k2;
            vo = -I * (ky * chi + kx * eta) / k2;
            if (pressure) {
                Eigen::Map<CVec>(pressure->mode(0, ix, iy), n) = p;
            }
        }
    }
    out.enforce_hermitian();
    if (pressure) {
        pressure->enforce_hermitian();
    }
    return out;
}

double inner(const SpectralField& u, const SpectralField& v) {
    require_same_shape(u, v);
    const ChannelSpec& s = u.spec();
    const int n = s.nz;
    const Eigen::Index nmodes = static_cast<Eigen::Index>(s.nx) * s.nyh();
    const Eigen::MatrixXd& g = gram_for(n);
    Eigen::VectorXd w(nmodes);
    for (int ix = 0; ix < s.nx; ++ix) {
        for (int iy = 0; iy < s.nyh(); ++iy) {
            w[ix * s.nyh() + iy] = mode_weight(s, iy);
        }
    }
    double total = 0.0;
    for (int c = 0; c < u.ncomp(); ++c) {
        Eigen::Map<const Eigen::MatrixXcd> a(u.mode(c, 0, 0), n, nmodes);
        Eigen::Map<const Eigen::MatrixXcd> b(v.mode(c, 0, 0), n, nmodes);
        const Eigen::MatrixXd br = b.real(), bi = b.imag();
        const Eigen::MatrixXd gr = g * br;
        const Eigen::MatrixXd gi = g * bi;
        const Eigen::RowVectorXd per_mode =
            (a.real().cwiseProduct(gr) + a.imag().cwiseProduct(gi)).colwise().sum();
        total += per_mode.dot(w.transpose());
    }
    return total * s.lx * s.ly;
}

double l2_norm_sq(const SpectralField& u) { return inner(u, u); }

double l2_norm_sq_grid(const SpectralField& u) {
    const ChannelSpec& s = u.spec();
    const Eigen::VectorXd cc = cheb::clenshaw_curtis(s.nz);
    const auto v = u.to_grid();
    const std::size_t np = s.grid_points();
    double total = 0.0;
    for (int c = 0; c < u.ncomp(); ++c) {
        for (std::size_t p = 0; p < np; ++p) {
            const double x = v[c * np + p];
            total += cc[static_cast<Eigen::Index>(p % s.nz)] * x * x;
        }
    }
    return total * s.lx * s.ly / (static_cast<double>(s.nx) * s.ny);
}

double linf_norm(const SpectralField& u) {
    const auto v = u.to_grid();
    const std::size_t np = u.spec().grid_points();
    double m = 0.0;
    for (std::size_t p = 0; p < np; ++p) {
        double sq = 0.0;
        for (int c = 0; c < u.ncomp(); ++c) {
            sq += v[c * np + p] * v[c * np + p];
        }
        m = std::max(m, sq);
    }
    return std::sqrt(m);
}

double wall_l2_sq(const SpectralField& u) {
    const ChannelSpec& s = u.spec();
    double total = 0.0;
    for (int c = 0; c < u.ncomp(); ++c) {
        for (int ix = 0; ix < s.nx; ++ix) {
            for (int iy = 0; iy < s.nyh(); ++iy) {
                const cplx* a = u.mode(c, ix, iy);
                cplx top = 0.0, bot = 0.0;
                for (int k = 0; k < s.nz; ++k) {
                    top += a[k];
                    bot += (k % 2 == 0 ? 1.0 : -1.0) * a[k];
                }
                total += mode_weight(s, iy) * (std::norm(top) + std::norm(bot));
            }
        }
    }
    return total * s.lx * s.ly;
}

double max_wall_normal(const SpectralField& u) {
    const ChannelSpec& s = u.spec();
    const auto v = u.to_grid();
    const std::size_t np = s.grid_points();
    double m = 0.0;
    for (std::size_t col = 0; col < static_cast<std::size_t>(s.nx) * s.ny; ++col) {
        m = std::max(m, std::abs(v[2 * np + col * s.nz]));
        m = std::max(m, std::abs(v[2 * np + col * s.nz + s.nz - 1]));
    }
    return m;
}

std::vector<std::array<int, 3>> multi_indices(int l) {
    std::vector<std::array<int, 3>> out;
    for (int a = l; a >= 0; --a) {
        for (int b = l - a; b >= 0; --b) {
            out.push_back({a, b, l - a - b});
        }
    }
    return out;
}

double multinomial(const std::array<int, 3>& alpha) {
    const auto fact = [](int k) { return std::tgamma(k + 1.0); };
    return fact(alpha[0] + alpha[1] + alpha[2]) / (fact(alpha[0]) * fact(alpha[1]) * fact(alpha[2]));
}

SobolevNorm sobolev_norm(const SpectralField& u, int r) {
    if (r < 0 || r > u.spec().nz / 4) {
        throw Error(Errc::OrderTooHigh, "Sobolev order " + std::to_string(r) + " exceeds nz/4");
    }
    SobolevNorm out;
    out.order = r;
    out.variant = "multi_index";
    double total = 0.0;
    for (int l = 0; l <= r; ++l) {
        double part = 0.0;
        for (const auto& alpha : multi_indices(l)) {
            part += l2_norm_sq(u.partial(alpha));
        }
        out.breakdown.push_back(part);
        total += part;
    }
    out.value = std::sqrt(total);
    return out;
}

SobolevNorm curl_sobolev_norm(const SpectralField& u, int r) {
    if (r < 0 || r > u.spec().nz / 4) {
        throw Error(Errc::OrderTooHigh, "curl order " + std::to_string(r) + " exceeds nz/4");
    }
    SobolevNorm out;
    out.order = r;
    out.variant = "curl";
    SpectralField q = u;
    double total = 0.0;
    for (int l = 0; l <= r; ++l) {
        const double part = l2_norm_sq(q);
        out.breakdown.push_back(part);
        total += part;
        if (l < r) {
            q = curl(q);
        }
    }
    out.value = std::sqrt(total);
    return out;
}

double derivative_tensor_norm_sq(const SpectralField& u, int k) {
    if (k < 0 || k > u.spec().nz / 4) {
        throw Error(Errc::OrderTooHigh, "derivative order " + std::to_string(k) + " exceeds nz/4");
    }
    double total = 0.0;
    for (const auto& alpha : multi_indices(k)) {
        total += multinomial(alpha) * l2_norm_sq(u.partial(alpha));
    }
    return total;
}

} // namespace navslip
