#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "navslip/catalog.hpp"
#include "navslip/config.hpp"
#include "navslip/error.hpp"
#include "navslip/report.hpp"
#include "navslip/snapshot.hpp"

using namespace navslip;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "navslip_cli_io";
    fs::create_directories(dir);
    return dir / name;
}

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return Errc::DomainError;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void spit(const fs::path& p, const std::string& bytes) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << bytes;
}

} // namespace

TEST_CASE("config basics") {
    const auto doc = parse_config("[solver]\nnu = 0.001\n");
    REQUIRE(doc.sections.size() == 2);
    CHECK(doc.sections[1].name == "solver");
    REQUIRE(doc.sections[1].entries.size() == 1);
    CHECK(std::get<double>(doc.sections[1].entries[0].value) == 0.001);

    const auto ladder = parse_config("nu_ladder = 1e-2, 1e-3, 1e-4");
    CHECK(ladder.get_reals("nu_ladder") == std::vector<double>{1e-2, 1e-3, 1e-4});

    CHECK(code_of([] { parse_config("nu = banana"); }) == Errc::TypeMismatch);
}

TEST_CASE("config diagnostics carry line numbers") {
    try {
        parse_config("# header\n[solver]\n\nviscosity = 1\n");
        FAIL("expected UnknownKey");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnknownKey);
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
    try {
        parse_config("[solver\n");
        FAIL("expected SyntaxError");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SyntaxError);
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
    CHECK(code_of([] { parse_config("nu 0.1"); }) == Errc::SyntaxError);
    CHECK(code_of([] { parse_config("nx = 3.5"); }) == Errc::TypeMismatch);
    CHECK(code_of([] { parse_config("error_orders = 1, x"); }) == Errc::TypeMismatch);
    CHECK(code_of([] { load_config("/nonexistent/navslip.cfg"); }) == Errc::IoError);
}

TEST_CASE("config builders") {
    const auto doc = parse_config(
        "[domain]\nnx = 8\nny = 8\nnz = 17  # walls\n[solver]\nnu = 0.01\nzeta = inf\ndt = 0.01\nT = 0.1\n"
        "[field]\nfield = taylor_green_2d\nseed = 7\n");
    const SimConfig c = sim_config_from(doc);
    CHECK(c.domain.nz == 17);
    CHECK(c.free_slip());
    CHECK(c.initial == "taylor_green_2d");
    CHECK(c.initial_params.seed == 7);
    CHECK(code_of([] { sim_config_from(parse_config("dt = -1")); }) == Errc::ConfigInvalid);

    const auto spec = campaign_from(parse_config("[campaign]\nnu_ladder = 0.1, 0.01, 0.001\nerror_orders = 1, 2\n"));
    CHECK(spec.nu_ladder.size() == 3);
    CHECK(spec.error_orders == std::vector<int>{1, 2});
    CHECK(code_of([] { campaign_from(parse_config("nu_ladder = 0.1, 0.2, 0.01")); }) == Errc::ConfigInvalid);
}

TEST_CASE("snapshot round trip is bit exact") {
    ChannelSpec s;
    s.nx = 8;
    s.ny = 6;
    s.nz = 9;
    CatalogParams p;
    p.seed = 17;
    const auto u = SpectralField::sample(catalog_field("channel_solenoidal", p), s);
    const auto path = scratch("rt.vfld");
    write_snapshot(path.string(), u, 0.25, 1e-3, 0.5);
    const Snapshot snap = read_snapshot(path.string());
    CHECK(fs::file_size(path) == kSnapshotHeaderBytes + 8 * 3 * 8 * 6 * 9);
    CHECK(snap.header.t == 0.25);
    CHECK(snap.header.nu == 1e-3);
    CHECK(snap.header.zeta == 0.5);
    CHECK(snap.spec() == s);
    const auto ref = to_file_order(u);
    REQUIRE(snap.values.size() == ref.size());
    double worst = 0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        worst = std::max(worst, std::abs(ref[i] - snap.values[i]));
    }
    CHECK(worst == 0.0);
    // and rewriting what was read reproduces the file byte for byte
    write_snapshot(scratch("rt2.vfld").string(), snap);
    CHECK(slurp(path) == slurp(scratch("rt2.vfld")));
    CHECK(linf_norm(snap.field() - u) < 1e-13);
}

TEST_CASE("snapshot layout is little-endian and x-fastest") {
    ChannelSpec s;
    s.nx = 4;
    s.ny = 4;
    s.nz = 5;
    const auto u = SpectralField::sample(catalog_field("taylor_green"), s);
    const auto path = scratch("layout.vfld");
    write_snapshot(path.string(), u, 0.0, 0.0, 1.0);
    const std::string b = slurp(path);
    CHECK(b.substr(0, 4) == "VFLD");
    CHECK(static_cast<unsigned char>(b[4]) == 1);  // version, low byte first
    CHECK(static_cast<unsigned char>(b[9]) == 4);  // Nx
    // second payload value is u_x at (x1, y0, z0 = +1)
    double v;
    std::memcpy(&v, b.data() + kSnapshotHeaderBytes + 8, 8);
    CHECK(v == doctest::Approx(std::sin(s.x(1)) * std::cos(1.0)).epsilon(1e-14));
}

TEST_CASE("snapshot errors") {
    ChannelSpec s;
    s.nx = 4;
    s.ny = 4;
    s.nz = 5;
    const auto path = scratch("bad.vfld");
    write_snapshot(path.string(), SpectralField(s), 0.0, 0.0, 1.0);
    const std::string good = slurp(path);

    std::string magic = good;
    magic[0] = 'X';
    spit(path, magic);
    CHECK(code_of([&] { read_snapshot(path.string()); }) == Errc::BadMagic);

    spit(path, good.substr(0, good.size() - 8));
    CHECK(code_of([&] { read_snapshot(path.string()); }) == Errc::TruncatedPayload);

    std::string version = good;
    version[4] = 2;
    spit(path, version);
    CHECK(code_of([&] { read_snapshot(path.string()); }) == Errc::VersionUnsupported);

    CHECK(code_of([] { read_snapshot("/nonexistent/x.vfld"); }) == Errc::IoError);
}

TEST_CASE("energy report csv") {
    EnergyReport r;
    CHECK(to_csv(r) == "t,E0,diss,wall,Er,balance_residual\n");
    r.rows.push_back({0.1, 1.0 / 3.0, 2.0, 0.0, 1e-300, -0.0});
    const std::string csv = to_csv(r);
    const auto line = csv.substr(csv.find('\n') + 1);
    double t, e0;
    char comma;
    std::istringstream in(line);
    in >> t >> comma >> e0;
    CHECK(t == 0.1);
    CHECK(e0 == 1.0 / 3.0);
    const auto path = scratch("energy.csv");
    emit_report(r, ReportFormat::Csv, path.string());
    CHECK(slurp(path) == csv);
}

TEST_CASE("json reports keep their key order") {
    RateFit f;
    f.slope = 0.5;
    const Json j = to_json(f);
    CHECK(j.contains("slope"));
    CHECK(j.begin().key() == "slope");
    const auto path = scratch("fit.json");
    emit_report(f, ReportFormat::Json, path.string());
    CHECK(Json::parse(slurp(path))["slope"] == 0.5);
    EnergyReport e;
    e.zeta = std::numeric_limits<double>::infinity();
    CHECK(to_json(e)["zeta"] == "inf");
    CHECK(code_of([&] { emit_report(f, ReportFormat::Json, "/nonexistent/dir/f.json"); }) == Errc::IoError);
}

TEST_CASE("campaign outputs") {
    CampaignResult c;
    c.error_orders = {2, 3};
    c.raw.push_back({0.01, 0.0, {1e-3, 2e-3}, 0.5});
    const std::string raw = campaign_raw_csv(c);
    CHECK(raw.substr(0, raw.find('\n')) == "nu,t,err_H2,err_H3,grad_inf");
    const auto dir = scratch("campaign");
    write_campaign(c, dir.string());
    CHECK(fs::exists(dir / "raw.csv"));
    CHECK(fs::exists(dir / "rates.dat"));
    CHECK(Json::parse(slurp(dir / "ratefit.json")).contains("slope"));
}
