#include "navslip/snapshot.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

#include "navslip/error.hpp"

namespace navslip {

namespace {

static_assert(std::endian::native == std::endian::little || std::endian::native == std::endian::big);

template <class T>
void put(std::string& buf, T v) {
    unsigned char bytes[sizeof(T)];
    std::memcpy(bytes, &v, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) {
        std::reverse(std::begin(bytes), std::end(bytes));
    }
    buf.append(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <class T>
T get(const std::string& buf, std::size_t& at) {
    unsigned char bytes[sizeof(T)];
    std::memcpy(bytes, buf.data() + at, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) {
        std::reverse(std::begin(bytes), std::end(bytes));
    }
    at += sizeof(T);
    T v;
    std::memcpy(&v, bytes, sizeof(T));
    return v;
}

} // namespace

ChannelSpec Snapshot::spec() const {
    ChannelSpec s;
    s.nx = static_cast<int>(header.nx);
    s.ny = static_cast<int>(header.ny);
    s.nz = static_cast<int>(header.nz);
    s.lx = header.lx;
    s.ly = header.ly;
    return s;
}

SpectralField Snapshot::field() const {
    const ChannelSpec s = spec();
    s.validate();
    return SpectralField::from_grid(s, from_file_order(s, values), 3);
}

std::vector<double> to_file_order(const SpectralField& u) {
    const ChannelSpec& s = u.spec();
    const std::vector<double> g = u.to_grid();
    std::vector<double> out(g.size());
    const std::size_t nx = s.nx, ny = s.ny, nz = s.nz;
    for (std::size_t c = 0; c < static_cast<std::size_t>(u.ncomp()); ++c) {
        for (std::size_t ix = 0; ix < nx; ++ix) {
            for (std::size_t iy = 0; iy < ny; ++iy) {
                for (std::size_t iz = 0; iz < nz; ++iz) {
                    out[((c * nz + iz) * ny + iy) * nx + ix] = g[((c * nx + ix) * ny + iy) * nz + iz];
                }
            }
        }
    }
    return out;
}

std::vector<double> from_file_order(const ChannelSpec& s, const std::vector<double>& values) {
    std::vector<double> g(values.size());
    const std::size_t nx = s.nx, ny = s.ny, nz = s.nz;
    const std::size_t ncomp = values.size() / (nx * ny * nz);
    for (std::size_t c = 0; c < ncomp; ++c) {
        for (std::size_t ix = 0; ix < nx; ++ix) {
            for (std::size_t iy = 0; iy < ny; ++iy) {
                for (std::size_t iz = 0; iz < nz; ++iz) {
                    g[((c * nx + ix) * ny + iy) * nz + iz] = values[((c * nz + iz) * ny + iy) * nx + ix];
                }
            }
        }
    }
    return g;
}

void write_snapshot(const std::string& path, const Snapshot& snap) {
    const auto& h = snap.header;
    std::string buf;
    buf.reserve(kSnapshotHeaderBytes + 8 * snap.values.size());
    buf.append("VFLD", 4);
    put<std::uint32_t>(buf, h.version);
    put<std::uint8_t>(buf, static_cast<std::uint8_t>(h.domain_kind));
    put<std::uint32_t>(buf, h.nx);
    put<std::uint32_t>(buf, h.ny);
    put<std::uint32_t>(buf, h.nz);
    for (double v : {h.lx, h.ly, h.t, h.nu, h.zeta}) {
        put<double>(buf, v);
    }
    for (double v : snap.values) {
        put<double>(buf, v);
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(Errc::IoError, "cannot open " + path + " for writing");
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) {
        throw Error(Errc::IoError, "write failed for " + path);
    }
}

void write_snapshot(const std::string& path, const SpectralField& u, double t, double nu, double zeta) {
    if (u.ncomp() != 3) {
        throw Error(Errc::IoError, "snapshots hold three-component fields");
    }
    Snapshot s;
    const ChannelSpec& c = u.spec();
    s.header.nx = static_cast<std::uint32_t>(c.nx);
    s.header.ny = static_cast<std::uint32_t>(c.ny);
    s.header.nz = static_cast<std::uint32_t>(c.nz);
    s.header.lx = c.lx;
    s.header.ly = c.ly;
    s.header.t = t;
    s.header.nu = nu;
    s.header.zeta = zeta;
    s.values = to_file_order(u);
    write_snapshot(path, s);
}

void write_snapshot(const std::string& path, const SolverState& state, const SimConfig& config) {
    write_snapshot(path, state.u, state.t, config.nu, config.zeta);
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::IoError, "cannot open " + path);
    }
    const std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (buf.size() < 4 || buf.compare(0, 4, "VFLD") != 0) {
        throw Error(Errc::BadMagic, path + " does not start with VFLD");
    }
    if (buf.size() < kSnapshotHeaderBytes) {
        throw Error(Errc::TruncatedPayload, path + " ends inside the header");
    }
    Snapshot s;
    auto& h = s.header;
    std::size_t at = 4;
    h.version = get<std::uint32_t>(buf, at);
    if (h.version != kSnapshotVersion) {
        throw Error(Errc::VersionUnsupported, "snapshot version " + std::to_string(h.version));
    }
    const auto kind = get<std::uint8_t>(buf, at);
    if (kind != static_cast<std::uint8_t>(DomainKind::Channel)) {
        throw Error(Errc::VersionUnsupported, "unknown domain kind " + std::to_string(kind));
    }
    h.domain_kind = static_cast<DomainKind>(kind);
    h.nx = get<std::uint32_t>(buf, at);
    h.ny = get<std::uint32_t>(buf, at);
    h.nz = get<std::uint32_t>(buf, at);
    h.lx = get<double>(buf, at);
    h.ly = get<double>(buf, at);
    h.t = get<double>(buf, at);
    h.nu = get<double>(buf, at);
    h.zeta = get<double>(buf, at);
    const std::size_t n = 3ull * h.nx * h.ny * h.nz;
    const std::size_t payload = buf.size() - kSnapshotHeaderBytes;
    if (payload < 8 * n) {
        throw Error(Errc::TruncatedPayload, path + ": payload holds " + std::to_string(payload / 8) + " of " +
                                                std::to_string(n) + " values");
    }
    if (payload > 8 * n) {
        throw Error(Errc::TruncatedPayload, path + ": trailing bytes after payload");
    }
    s.values.resize(n);
    for (auto& v : s.values) {
        v = get<double>(buf, at);
    }
    return s;
}

} // namespace navslip
