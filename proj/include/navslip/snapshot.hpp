#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "navslip/solver.hpp"
#include "navslip/spectral.hpp"

namespace navslip {

inline constexpr std::uint32_t kSnapshotVersion = 1;
inline constexpr std::size_t kSnapshotHeaderBytes = 61;

enum class DomainKind : std::uint8_t { Channel = 0 };

struct SnapshotHeader {
    std::uint32_t version = kSnapshotVersion;
    DomainKind domain_kind = DomainKind::Channel;
    std::uint32_t nx = 0, ny = 0, nz = 0;
    double lx = 0.0, ly = 0.0;
    double t = 0.0;
    double nu = 0.0;
    double zeta = 0.0;
};

struct Snapshot {
    SnapshotHeader header;
    /// Grid values, component-major then x fastest, y, z slowest; z nodes run
    /// from +1 down to -1.
    std::vector<double> values;

    ChannelSpec spec() const;
    SpectralField field() const;
};

/// Layout conversion between SpectralField grids and the file order.
std::vector<double> to_file_order(const SpectralField& u);
std::vector<double> from_file_order(const ChannelSpec& spec, const std::vector<double>& values);

/// Throws IoError.
void write_snapshot(const std::string& path, const SpectralField& u, double t, double nu, double zeta);
void write_snapshot(const std::string& path, const SolverState& state, const SimConfig& config);
void write_snapshot(const std::string& path, const Snapshot& snap);

/// Throws IoError, BadMagic, VersionUnsupported, TruncatedPayload.
Snapshot read_snapshot(const std::string& path);

} // namespace navslip
