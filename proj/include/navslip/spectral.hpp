#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "navslip/analytic.hpp"

namespace navslip {

using cplx = std::complex<double>;

/// Periodic channel [0, lx) x [0, ly) x [-1, 1] with walls at z = +-1.
struct ChannelSpec {
    int nx = 32;
    int ny = 32;
    int nz = 65;
    double lx = 2.0 * 3.14159265358979323846;
    double ly = 2.0 * 3.14159265358979323846;

    int nyh() const noexcept { return ny / 2 + 1; }
    std::size_t grid_points() const noexcept { return static_cast<std::size_t>(nx) * ny * nz; }
    std::size_t spectral_points() const noexcept { return static_cast<std::size_t>(nx) * nyh() * nz; }

    /// Signed mode numbers and wavenumbers of the half spectrum.
    int mx(int ix) const noexcept { return ix <= nx / 2 ? ix : ix - nx; }
    int my(int iy) const noexcept { return iy; }
    double kx(int ix) const noexcept;
    double ky(int iy) const noexcept;
    bool is_nyquist(int ix, int iy) const noexcept;
    /// Inside the 2/3-rule band |m| <= n/3 in both periodic directions.
    bool retained(int ix, int iy) const noexcept;

    double x(int ix) const noexcept { return lx * ix / nx; }
    double y(int iy) const noexcept { return ly * iy / ny; }
    double z(int iz) const;

    /// Throws ConfigInvalid for unusable sizes.
    void validate() const;
    bool operator==(const ChannelSpec&) const = default;
};

/// Fourier x Fourier x Chebyshev coefficients of an ncomp-component real field.
/// Storage is the r2c half spectrum in y: index ((c * nx + ix) * nyh + iy) * nz + k.
/// Physical grid values use ((c * nx + ix) * ny + iy) * nz + iz with z nodes
/// descending from +1.
class SpectralField {
public:
    SpectralField() = default;
    explicit SpectralField(const ChannelSpec& spec, int ncomp = 3);

    static SpectralField sample(const AnalyticField& u, const ChannelSpec& spec);
    static SpectralField sample_scalar(const std::function<double(const Vec3&)>& f, const ChannelSpec& spec);
    static SpectralField from_grid(const ChannelSpec& spec, const std::vector<double>& values, int ncomp);

    std::vector<double> to_grid() const;

    const ChannelSpec& spec() const noexcept { return spec_; }
    int ncomp() const noexcept { return ncomp_; }
    bool dealiased() const noexcept { return dealiased_; }

    cplx* mode(int c, int ix, int iy) { return coeffs_.data() + offset(c, ix, iy); }
    const cplx* mode(int c, int ix, int iy) const { return coeffs_.data() + offset(c, ix, iy); }
    std::vector<cplx>& coeffs() noexcept { return coeffs_; }
    const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }

    /// Zero every mode outside the 2/3-rule band.
    SpectralField& apply_dealias();
    /// Make the ky = 0 plane Hermitian and zero the Nyquist modes.
    SpectralField& enforce_hermitian();

    SpectralField component(int c) const;
    void set_component(int c, const SpectralField& scalar);

    SpectralField& operator+=(const SpectralField& o);
    SpectralField& operator-=(const SpectralField& o);
    SpectralField& operator*=(double s);
    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(double s, SpectralField a) { return a *= s; }

    /// d^order / dx_axis^order of every component.
    SpectralField derivative(int axis, int order = 1) const;
    SpectralField partial(const std::array<int, 3>& alpha) const;

    double max_abs_coeff() const;

private:
    std::size_t offset(int c, int ix, int iy) const noexcept {
        return ((static_cast<std::size_t>(c) * spec_.nx + ix) * spec_.nyh() + iy) * spec_.nz;
    }

    ChannelSpec spec_;
    int ncomp_ = 0;
    bool dealiased_ = false;
    std::vector<cplx> coeffs_;
};

SpectralField curl(const SpectralField& u);
/// Throws OrderTooHigh for r > nz / 4.
SpectralField iterated_curl(const SpectralField& u, int r);
SpectralField divergence(const SpectralField& u);
/// Nine components, index 3 i + j holding d_j u_i.
SpectralField gradient(const SpectralField& u);
SpectralField laplacian(const SpectralField& u);

/// u - grad p with lap p = div u and dp/dz = u_z on the walls, solved mode by
/// mode. The horizontal part is rebuilt from the projected wall-normal velocity
/// and the unchanged vertical vorticity, so the result is divergence-free to
/// round-off. The pressure is returned through `pressure` when non-null.
SpectralField leray_project(const SpectralField& u, SpectralField* pressure = nullptr);

/// int u . v over the channel, from coefficients (Parseval in x, y and the
/// exact Chebyshev Gram matrix in z).
double inner(const SpectralField& u, const SpectralField& v);
double l2_norm_sq(const SpectralField& u);
/// Same integral from grid values with trapezoid x trapezoid x Clenshaw-Curtis.
double l2_norm_sq_grid(const SpectralField& u);
/// max over grid points of the Euclidean norm across components.
double linf_norm(const SpectralField& u);
/// int over both walls of |u|^2.
double wall_l2_sq(const SpectralField& u);
/// max |u_z| on either wall.
double max_wall_normal(const SpectralField& u);

struct SobolevNorm {
    int order = 0;
    double value = 0.0;
    /// breakdown[l] = contribution of derivative order l (squared).
    std::vector<double> breakdown;
    std::string variant;  // "multi_index" or "curl"
};

/// (sum_{|alpha| <= r} ||d^alpha u||^2)^{1/2}; OrderTooHigh for r > nz / 4.
SobolevNorm sobolev_norm(const SpectralField& u, int r);
/// (sum_{l <= r} ||curl^l u||^2)^{1/2}.
SobolevNorm curl_sobolev_norm(const SpectralField& u, int r);
/// ||grad^k u||^2 with every ordered k-tuple of partials counted.
double derivative_tensor_norm_sq(const SpectralField& u, int k);

/// Multi-indices of total order l in lexicographic order, with multinomial weights.
std::vector<std::array<int, 3>> multi_indices(int l);
double multinomial(const std::array<int, 3>& alpha);

} // namespace navslip
