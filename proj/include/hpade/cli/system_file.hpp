#pragma once

// JSON system descriptions: explicit coefficient lists or a named generator.
//
//   {"kind": "power", "series": [{"coeffs": ["1", "1/2", ...]}]}
//   {"kind": "trig",  "series": [{"a": [...], "b": [...]}]}
//   {"kind": "cheb",  "series": [{"a": [...]}]}
//   {"generator": {"family": "mittag-leffler-G", "gamma": "1", "lambdas": ["1"], "order": 24}}
//
// Coefficients are strings ("p/q", integers, decimals) or JSON numbers; all are
// converted to exact rationals. A series may set "terminating": true to mark
// its coefficients past the list as exactly zero.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hpade/cheb_hp.hpp"
#include "hpade/mittag_leffler.hpp"
#include "hpade/power_hp.hpp"
#include "hpade/trig_hp.hpp"

namespace hpade::cli {

using Json = nlohmann::ordered_json;

enum class SeriesKind { power, trig, cheb };

std::string to_string(SeriesKind kind);
SeriesKind parse_kind(const std::string& s);

struct FamilyInfo {
    std::string name;
    SeriesKind kind;
    std::string description;
};

const std::vector<FamilyInfo>& families();

struct Generator {
    std::string family;
    MLSpec spec;
    std::optional<long> order;
};

struct LoadedSystem {
    SeriesKind kind = SeriesKind::power;
    PowerSystem power;
    TrigSystem trig;
    ChebSystem cheb;

    std::size_t k() const;
    /// Smallest known order among the series (terminating series count as their list length).
    long order() const;
};

struct SystemFile {
    SeriesKind kind = SeriesKind::power;
    Json raw;
    Json metadata;
    std::optional<Generator> generator;
    /// Explicit series, already converted to `kind`.
    LoadedSystem explicit_system;

    std::size_t k() const;
    /// Builds the system; generators use `order`, then the file's order, then `fallback_order`.
    LoadedSystem materialize(std::optional<long> order, long fallback_order) const;
};

/// Throws ParseError on malformed input. `kind_override` re-reads explicit
/// series as another kind (for example cosine coefficients as Chebyshev ones).
SystemFile parse_system(const Json& j, std::optional<SeriesKind> kind_override = std::nullopt);
SystemFile load_system(const std::string& path, std::optional<SeriesKind> kind_override = std::nullopt);

Rational json_rational(const Json& v);

}  // namespace hpade::cli
