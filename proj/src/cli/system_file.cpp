#include "hpade/cli/system_file.hpp"

#include <algorithm>
#include <fstream>
#include <limits>

namespace hpade::cli {

std::string to_string(SeriesKind kind) {
    switch (kind) {
        case SeriesKind::power: return "power";
        case SeriesKind::trig: return "trig";
        case SeriesKind::cheb: return "cheb";
    }
    return "?";
}

SeriesKind parse_kind(const std::string& s) {
    if (s == "power") return SeriesKind::power;
    if (s == "trig") return SeriesKind::trig;
    if (s == "cheb") return SeriesKind::cheb;
    throw ParseError("unknown series kind '" + s + "' (expected power, trig or cheb)");
}

const std::vector<FamilyInfo>& families() {
    static const std::vector<FamilyInfo> list{
        {"mittag-leffler-E", SeriesKind::power, "E_gamma(lambda_j z) = sum lambda_j^l z^l / (gamma)_l"},
        {"mittag-leffler-G", SeriesKind::trig, "G_gamma(x; lambda_j) = sum lambda_j^l cos(lx) / (gamma)_l"},
        {"mittag-leffler-F", SeriesKind::cheb, "F_gamma(x; lambda_j) = sum lambda_j^l T_l(x) / (gamma)_l"},
        {"exponential", SeriesKind::power, "exp(lambda_j z), the gamma = 1 case of mittag-leffler-E"},
    };
    return list;
}

std::size_t LoadedSystem::k() const {
    switch (kind) {
        case SeriesKind::power: return power.k();
        case SeriesKind::trig: return trig.k();
        case SeriesKind::cheb: return cheb.k();
    }
    return 0;
}

long LoadedSystem::order() const {
    long K = std::numeric_limits<long>::max();
    switch (kind) {
        case SeriesKind::power:
            for (const auto& s : power.series) K = std::min(K, s.order());
            break;
        case SeriesKind::trig:
            for (const auto& s : trig.series) K = std::min(K, s.order());
            break;
        case SeriesKind::cheb:
            for (const auto& s : cheb.series) K = std::min(K, s.order());
            break;
    }
    return K;
}

std::size_t SystemFile::k() const { return generator ? generator->spec.k() : explicit_system.k(); }

Rational json_rational(const Json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number()) return parse_rational(v.dump());
    throw ParseError("expected a rational number, got " + v.dump());
}

namespace {

std::vector<Rational> rational_list(const Json& obj, const char* key, bool required) {
    if (!obj.contains(key)) {
        if (required) throw ParseError(std::string("series entry is missing \"") + key + "\"");
        return {};
    }
    const Json& arr = obj.at(key);
    if (!arr.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
    std::vector<Rational> out;
    for (const auto& v : arr) out.push_back(json_rational(v));
    return out;
}

const char* cosine_key(const Json& s) { return s.contains("a") ? "a" : "coeffs"; }

MLSpec parse_ml(const Json& g) {
    Rational gamma = g.contains("gamma") ? json_rational(g.at("gamma")) : Rational(1);
    std::vector<Rational> lambdas{Rational(1)};
    if (g.contains("lambdas")) {
        if (!g.at("lambdas").is_array()) throw ParseError("\"lambdas\" must be an array");
        lambdas.clear();
        for (const auto& v : g.at("lambdas")) lambdas.push_back(json_rational(v));
    }
    try {
        return MLSpec(gamma, lambdas);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("invalid generator parameters: ") + e.what());
    }
}

}  // namespace

SystemFile parse_system(const Json& j, std::optional<SeriesKind> kind_override) {
    if (!j.is_object()) throw ParseError("system description must be a JSON object");
    SystemFile out;
    out.raw = j;
    if (j.contains("metadata")) out.metadata = j.at("metadata");
    std::optional<SeriesKind> file_kind;
    if (j.contains("kind")) {
        if (!j.at("kind").is_string()) throw ParseError("\"kind\" must be a string");
        file_kind = parse_kind(j.at("kind").get<std::string>());
    }
    bool has_series = j.contains("series");
    bool has_gen = j.contains("generator");
    if (has_series == has_gen) throw ParseError("give exactly one of \"series\" and \"generator\"");

    if (has_gen) {
        const Json& g = j.at("generator");
        if (!g.is_object() || !g.contains("family") || !g.at("family").is_string()) {
            throw ParseError("generator needs a \"family\" string");
        }
        Generator gen;
        gen.family = g.at("family").get<std::string>();
        auto it = std::find_if(families().begin(), families().end(),
                               [&](const FamilyInfo& f) { return f.name == gen.family; });
        if (it == families().end()) throw ParseError("unknown generator family '" + gen.family + "'");
        if (file_kind && *file_kind != it->kind) {
            throw ParseError("family " + gen.family + " produces " + to_string(it->kind) + " series");
        }
        if (kind_override && *kind_override != it->kind) {
            throw ParseError("family " + gen.family + " cannot be read as " + to_string(*kind_override));
        }
        if (gen.family == "exponential" && g.contains("gamma") && json_rational(g.at("gamma")) != 1) {
            throw ParseError("the exponential family has gamma = 1");
        }
        gen.spec = parse_ml(g);
        if (g.contains("order")) {
            if (!g.at("order").is_number_integer() || g.at("order").get<long>() < 0) {
                throw ParseError("generator order must be a nonnegative integer");
            }
            gen.order = g.at("order").get<long>();
        }
        out.kind = it->kind;
        out.generator = std::move(gen);
        return out;
    }

    if (!file_kind && !kind_override) throw ParseError("explicit series need a \"kind\"");
    out.kind = kind_override ? *kind_override : *file_kind;
    const Json& arr = j.at("series");
    if (!arr.is_array() || arr.empty()) throw ParseError("\"series\" must be a nonempty array");
    LoadedSystem& sys = out.explicit_system;
    sys.kind = out.kind;
    for (const auto& s : arr) {
        if (!s.is_object()) throw ParseError("each series must be an object");
        bool term = s.value("terminating", false);
        switch (out.kind) {
            case SeriesKind::power: {
                auto c = rational_list(s, s.contains("coeffs") ? "coeffs" : "a", true);
                if (c.empty()) throw ParseError("empty coefficient list");
                sys.power.series.emplace_back(std::move(c), term);
                break;
            }
            case SeriesKind::trig: {
                auto a = rational_list(s, cosine_key(s), true);
                auto b = rational_list(s, "b", false);
                if (a.empty()) throw ParseError("empty coefficient list");
                if (b.size() > a.size()) throw ParseError("more sine than cosine coefficients");
                if (!b.empty() && b[0] != 0) throw ParseError("b_0 must be zero");
                sys.trig.series.push_back(trig_from_real(a, b, term));
                break;
            }
            case SeriesKind::cheb: {
                auto a = rational_list(s, cosine_key(s), true);
                for (const auto& x : rational_list(s, "b", false)) {
                    if (x != 0) throw ParseError("a Chebyshev series has no sine coefficients");
                }
                if (a.empty()) throw ParseError("empty coefficient list");
                sys.cheb.series.emplace_back(std::move(a), term);
                break;
            }
        }
    }
    return out;
}

SystemFile load_system(const std::string& path, std::optional<SeriesKind> kind_override) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
    return parse_system(j, kind_override);
}

LoadedSystem SystemFile::materialize(std::optional<long> order, long fallback_order) const {
    if (!generator) return explicit_system;
    long K = order ? *order : (generator->order ? *generator->order : fallback_order);
    LoadedSystem sys;
    sys.kind = kind;
    const auto& spec = generator->spec;
    switch (kind) {
        case SeriesKind::power: sys.power = power_system_E(spec, K); break;
        case SeriesKind::trig: sys.trig = cosine_system_G(spec, K); break;
        case SeriesKind::cheb: sys.cheb = cheb_system_F(spec, K); break;
    }
    return sys;
}

}  // namespace hpade::cli
