#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "navslip/experiments.hpp"
#include "navslip/solver.hpp"

namespace navslip {

enum class ValueType { String, Integer, Real, RealList, IntList };

using ConfigValue = std::variant<std::string, long, double, std::vector<double>, std::vector<long>>;

struct ConfigEntry {
    std::string key;
    ConfigValue value;
    int line = 0;
};

struct ConfigSection {
    std::string name;  // "" for keys before the first [section]
    std::vector<ConfigEntry> entries;
};

struct ConfigDocument {
    std::vector<ConfigSection> sections;
    std::string source;

    /// First match among `prefer` (in order), then anywhere. Null when absent.
    const ConfigEntry* find(std::string_view key, std::initializer_list<std::string_view> prefer = {}) const;
    bool has(std::string_view key) const { return find(key) != nullptr; }

    // Typed getters throw TypeMismatch on a wrong type, ConfigInvalid when a
    // required key is missing.
    std::string get_string(std::string_view key, std::initializer_list<std::string_view> prefer = {}) const;
    long get_int(std::string_view key, std::initializer_list<std::string_view> prefer = {}) const;
    double get_real(std::string_view key, std::initializer_list<std::string_view> prefer = {}) const;
    std::vector<double> get_reals(std::string_view key, std::initializer_list<std::string_view> prefer = {}) const;
    std::vector<long> get_ints(std::string_view key, std::initializer_list<std::string_view> prefer = {}) const;

    std::optional<std::string> opt_string(std::string_view key, std::initializer_list<std::string_view> prefer = {}) const;
    std::optional<long> opt_int(std::string_view key, std::initializer_list<std::string_view> prefer = {}) const;
    std::optional<double> opt_real(std::string_view key, std::initializer_list<std::string_view> prefer = {}) const;
};

/// Type of every recognised key; nullopt for unknown keys.
std::optional<ValueType> key_type(std::string_view key);
std::vector<std::string> known_keys();

/// INI text: [section], key = value, '#' comments, comma-separated lists.
/// Throws SyntaxError, UnknownKey, TypeMismatch.
ConfigDocument parse_config(std::string_view text, std::string source = "<string>");

/// Throws IoError plus everything parse_config throws.
ConfigDocument load_config(const std::string& path);

/// Defaults for missing keys, then SimConfig::validate.
SimConfig sim_config_from(const ConfigDocument& doc, SimConfig defaults = {});

/// Starts from default_campaign(); keys override it.
CampaignSpec campaign_from(const ConfigDocument& doc);

/// surface = unit_sphere | sphere | ellipsoid | top_wall | bottom_wall, with
/// radius, axes and z0 where they apply. Throws ConfigInvalid.
Surface surface_from(const ConfigDocument& doc, std::string_view fallback = "unit_sphere");

/// Catalog parameters from field, seed, degree, zeta, root, amplitude, surface.
CatalogParams catalog_params_from(const ConfigDocument& doc, CatalogParams defaults = {});

} // namespace navslip
