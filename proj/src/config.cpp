#include "navslip/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "navslip/error.hpp"

namespace navslip {

namespace {

const std::map<std::string, ValueType, std::less<>>& schema() {
    static const std::map<std::string, ValueType, std::less<>> s = {
        // domain
        {"nx", ValueType::Integer}, {"ny", ValueType::Integer}, {"nz", ValueType::Integer},
        {"lx", ValueType::Real}, {"ly", ValueType::Real},
        // solver
        {"nu", ValueType::Real}, {"zeta", ValueType::Real}, {"dt", ValueType::Real}, {"T", ValueType::Real},
        {"r", ValueType::Integer}, {"save_every", ValueType::Integer}, {"cfl", ValueType::Real},
        {"normalize_er", ValueType::Real}, {"initial", ValueType::String},
        // fields and surfaces
        {"field", ValueType::String}, {"partner", ValueType::String}, {"seed", ValueType::Integer},
        {"degree", ValueType::Integer}, {"root", ValueType::Integer}, {"amplitude", ValueType::Real},
        {"surface", ValueType::String}, {"radius", ValueType::Real}, {"axes", ValueType::RealList},
        {"z0", ValueType::Real}, {"point", ValueType::RealList}, {"samples", ValueType::Integer},
        {"sigma", ValueType::Integer}, {"tolerance", ValueType::Real}, {"condition", ValueType::String},
        {"check", ValueType::String}, {"corpus_size", ValueType::Integer},
        // experiments
        {"nu_ladder", ValueType::RealList}, {"error_orders", ValueType::IntList}, {"zeta_list", ValueType::RealList},
        {"eta", ValueType::Real}, {"M", ValueType::Real}, {"E0", ValueType::Real},
        // quadrature
        {"n1", ValueType::Integer}, {"n2", ValueType::Integer}, {"n3", ValueType::Integer},
        {"s1", ValueType::Integer}, {"s2", ValueType::Integer},
    };
    return s;
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::optional<double> parse_real(std::string_view s) {
    s = trim(s);
    if (s.empty()) {
        return std::nullopt;
    }
    if (s == "inf" || s == "+inf") {
        return std::numeric_limits<double>::infinity();
    }
    double v = 0.0;
    const char* first = s.data();
    if (*first == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

std::optional<long> parse_int(std::string_view s) {
    s = trim(s);
    long v = 0;
    const char* first = s.data();
    if (!s.empty() && *first == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

template <class T, class F>
std::optional<std::vector<T>> parse_list(std::string_view s, F one) {
    std::vector<T> out;
    while (true) {
        const auto comma = s.find(',');
        auto v = one(s.substr(0, comma));
        if (!v) {
            return std::nullopt;
        }
        out.push_back(*v);
        if (comma == std::string_view::npos) {
            return out;
        }
        s.remove_prefix(comma + 1);
    }
}

[[noreturn]] void mismatch(std::string_view key, std::string_view want) {
    throw Error(Errc::TypeMismatch, "key '" + std::string(key) + "' expects " + std::string(want));
}

ConfigValue convert(std::string_view key, ValueType type, std::string_view raw) {
    switch (type) {
    case ValueType::String: {
        if (raw.size() >= 2 && raw.front() == '"' && raw.back() == '"') {
            raw = raw.substr(1, raw.size() - 2);
        }
        if (raw.empty()) {
            mismatch(key, "a non-empty string");
        }
        return std::string(raw);
    }
    case ValueType::Integer:
        if (auto v = parse_int(raw)) {
            return *v;
        }
        mismatch(key, "an integer");
    case ValueType::Real:
        if (auto v = parse_real(raw)) {
            return *v;
        }
        mismatch(key, "a real");
    case ValueType::RealList:
        if (auto v = parse_list<double>(raw, parse_real)) {
            return *v;
        }
        mismatch(key, "a comma-separated list of reals");
    case ValueType::IntList:
        if (auto v = parse_list<long>(raw, parse_int)) {
            return *v;
        }
        mismatch(key, "a comma-separated list of integers");
    }
    mismatch(key, "a known type");
}

std::string where(const ConfigDocument& doc, const ConfigEntry& e) {
    return doc.source + ":" + std::to_string(e.line);
}

template <class T>
const T& as(const ConfigDocument& doc, const ConfigEntry& e, std::string_view want) {
    if (const T* p = std::get_if<T>(&e.value)) {
        return *p;
    }
    throw Error(Errc::TypeMismatch, "key '" + e.key + "' at " + where(doc, e) + " is not " + std::string(want));
}

const ConfigEntry& require(const ConfigDocument& doc, std::string_view key,
                           std::initializer_list<std::string_view> prefer) {
    if (const ConfigEntry* e = doc.find(key, prefer)) {
        return *e;
    }
    throw Error(Errc::ConfigInvalid, "missing required key '" + std::string(key) + "' in " + doc.source);
}

int to_int(long v, std::string_view key) {
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
        throw Error(Errc::ConfigInvalid, "key '" + std::string(key) + "' out of range");
    }
    return static_cast<int>(v);
}

} // namespace

std::optional<ValueType> key_type(std::string_view key) {
    const auto& s = schema();
    if (auto it = s.find(key); it != s.end()) {
        return it->second;
    }
    return std::nullopt;
}

std::vector<std::string> known_keys() {
    std::vector<std::string> out;
    for (const auto& [k, t] : schema()) {
        out.push_back(k);
    }
    return out;
}

ConfigDocument parse_config(std::string_view text, std::string source) {
    ConfigDocument doc;
    doc.source = std::move(source);
    doc.sections.push_back({"", {}});
    int line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const std::string at = doc.source + ":" + std::to_string(line_no);
        if (line.front() == '[') {
            if (line.back() != ']' || trim(line.substr(1, line.size() - 2)).empty()) {
                throw Error(Errc::SyntaxError, "line " + std::to_string(line_no) + ": malformed section header (" + at + ")");
            }
            const std::string name(trim(line.substr(1, line.size() - 2)));
            auto it = std::find_if(doc.sections.begin(), doc.sections.end(),
                                   [&](const ConfigSection& s) { return s.name == name; });
            if (it == doc.sections.end()) {
                doc.sections.push_back({name, {}});
            } else {
                // reopening a section appends to it
                std::rotate(it, it + 1, doc.sections.end());
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw Error(Errc::SyntaxError, "line " + std::to_string(line_no) + ": expected 'key = value' (" + at + ")");
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view raw = trim(line.substr(eq + 1));
        if (key.empty() || raw.empty()) {
            throw Error(Errc::SyntaxError, "line " + std::to_string(line_no) + ": empty key or value (" + at + ")");
        }
        const auto type = key_type(key);
        if (!type) {
            throw Error(Errc::UnknownKey, "line " + std::to_string(line_no) + ": unknown key '" + std::string(key) +
                                              "' (" + at + ")");
        }
        auto& entries = doc.sections.back().entries;
        ConfigEntry entry{std::string(key), convert(key, *type, raw), line_no};
        auto dup = std::find_if(entries.begin(), entries.end(), [&](const ConfigEntry& e) { return e.key == key; });
        if (dup != entries.end()) {
            *dup = std::move(entry);  // last assignment wins
        } else {
            entries.push_back(std::move(entry));
        }
    }
    return doc;
}

ConfigDocument load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::IoError, "cannot open config " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path);
}

const ConfigEntry* ConfigDocument::find(std::string_view key, std::initializer_list<std::string_view> prefer) const {
    for (std::string_view sec : prefer) {
        for (const auto& s : sections) {
            if (s.name != sec) {
                continue;
            }
            for (const auto& e : s.entries) {
                if (e.key == key) {
                    return &e;
                }
            }
        }
    }
    for (const auto& s : sections) {
        for (const auto& e : s.entries) {
            if (e.key == key) {
                return &e;
            }
        }
    }
    return nullptr;
}

std::string ConfigDocument::get_string(std::string_view key, std::initializer_list<std::string_view> prefer) const {
    return as<std::string>(*this, require(*this, key, prefer), "a string");
}

long ConfigDocument::get_int(std::string_view key, std::initializer_list<std::string_view> prefer) const {
    return as<long>(*this, require(*this, key, prefer), "an integer");
}

double ConfigDocument::get_real(std::string_view key, std::initializer_list<std::string_view> prefer) const {
    const ConfigEntry& e = require(*this, key, prefer);
    if (const long* i = std::get_if<long>(&e.value)) {
        return static_cast<double>(*i);
    }
    return as<double>(*this, e, "a real");
}

std::vector<double> ConfigDocument::get_reals(std::string_view key,
                                              std::initializer_list<std::string_view> prefer) const {
    return as<std::vector<double>>(*this, require(*this, key, prefer), "a real list");
}

std::vector<long> ConfigDocument::get_ints(std::string_view key, std::initializer_list<std::string_view> prefer) const {
    return as<std::vector<long>>(*this, require(*this, key, prefer), "an integer list");
}

std::optional<std::string> ConfigDocument::opt_string(std::string_view key,
                                                      std::initializer_list<std::string_view> prefer) const {
    return find(key, prefer) ? std::optional(get_string(key, prefer)) : std::nullopt;
}

std::optional<long> ConfigDocument::opt_int(std::string_view key, std::initializer_list<std::string_view> prefer) const {
    return find(key, prefer) ? std::optional(get_int(key, prefer)) : std::nullopt;
}

std::optional<double> ConfigDocument::opt_real(std::string_view key,
                                               std::initializer_list<std::string_view> prefer) const {
    return find(key, prefer) ? std::optional(get_real(key, prefer)) : std::nullopt;
}

CatalogParams catalog_params_from(const ConfigDocument& doc, CatalogParams p) {
    if (auto v = doc.opt_int("seed", {"field"})) {
        if (*v < 0) {
            throw Error(Errc::ConfigInvalid, "seed must be non-negative");
        }
        p.seed = static_cast<std::uint64_t>(*v);
    }
    if (auto v = doc.opt_int("degree", {"field"})) {
        p.degree = to_int(*v, "degree");
    }
    if (auto v = doc.opt_real("zeta", {"field"})) {
        p.zeta = *v;
    }
    if (auto v = doc.opt_int("root", {"field"})) {
        p.root = to_int(*v, "root");
    }
    if (auto v = doc.opt_real("amplitude", {"field"})) {
        p.amplitude = *v;
    }
    if (doc.has("surface")) {
        p.surface = surface_from(doc);
    }
    return p;
}

Surface surface_from(const ConfigDocument& doc, std::string_view fallback) {
    const std::string name = doc.opt_string("surface", {"surface", "geom"}).value_or(std::string(fallback));
    if (name == "unit_sphere") {
        return Surface::unit_sphere();
    }
    if (name == "sphere") {
        return Surface::sphere(doc.opt_real("radius", {"surface", "geom"}).value_or(1.0));
    }
    if (name == "ellipsoid") {
        const auto a = doc.find("axes") ? doc.get_reals("axes", {"surface", "geom"}) : std::vector<double>{1.5, 1.0, 0.75};
        if (a.size() != 3) {
            throw Error(Errc::ConfigInvalid, "axes needs three values");
        }
        return Surface::ellipsoid(a[0], a[1], a[2]);
    }
    if (name == "top_wall" || name == "bottom_wall") {
        const bool top = name == "top_wall";
        const double z0 = doc.opt_real("z0", {"surface", "geom"}).value_or(top ? 1.0 : -1.0);
        return Surface::flat_wall(z0, top ? 1 : -1);
    }
    throw Error(Errc::ConfigInvalid, "unknown surface '" + name + "'");
}

SimConfig sim_config_from(const ConfigDocument& doc, SimConfig c) {
    if (auto v = doc.opt_int("nx", {"domain"})) c.domain.nx = to_int(*v, "nx");
    if (auto v = doc.opt_int("ny", {"domain"})) c.domain.ny = to_int(*v, "ny");
    if (auto v = doc.opt_int("nz", {"domain"})) c.domain.nz = to_int(*v, "nz");
    if (auto v = doc.opt_real("lx", {"domain"})) c.domain.lx = *v;
    if (auto v = doc.opt_real("ly", {"domain"})) c.domain.ly = *v;
    if (auto v = doc.opt_real("nu", {"solver"})) c.nu = *v;
    if (auto v = doc.opt_real("zeta", {"solver"})) c.zeta = *v;
    if (auto v = doc.opt_real("dt", {"solver"})) c.dt = *v;
    if (auto v = doc.opt_real("T", {"solver"})) c.T = *v;
    if (auto v = doc.opt_int("r", {"solver"})) c.r = to_int(*v, "r");
    if (auto v = doc.opt_int("save_every", {"solver"})) c.save_every = to_int(*v, "save_every");
    if (auto v = doc.opt_real("cfl", {"solver"})) c.cfl = *v;
    if (auto v = doc.opt_real("normalize_er", {"solver"})) c.normalize_er = *v;
    if (auto v = doc.opt_string("initial", {"solver"})) c.initial = *v;
    if (auto v = doc.opt_string("field", {"field"})) c.initial = *v;
    c.initial_params = catalog_params_from(doc, c.initial_params);
    c.validate();
    return c;
}

CampaignSpec campaign_from(const ConfigDocument& doc) {
    CampaignSpec spec = default_campaign();
    spec.base = sim_config_from(doc, spec.base);
    if (doc.has("nu_ladder")) {
        spec.nu_ladder = doc.get_reals("nu_ladder", {"campaign"});
    }
    if (auto v = doc.opt_real("zeta", {"campaign", "solver"})) {
        spec.zeta = *v;
        spec.base.zeta = *v;
    }
    if (doc.has("error_orders")) {
        spec.error_orders.clear();
        for (long o : doc.get_ints("error_orders", {"campaign"})) {
            spec.error_orders.push_back(to_int(o, "error_orders"));
        }
    }
    spec.validate();
    return spec;
}

} // namespace navslip
