#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mtc/cyclo.hpp"
#include "mtc/fusion.hpp"
#include "mtc/moddata.hpp"

namespace mtc::io {

inline constexpr int kFormat = 1;

using nlohmann::json;

/// Malformed or unrecognized document.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline json integer_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return v.convert_to<std::int64_t>();
    }
    return v.str();
}

inline Integer integer_from(const json& j, const char* what) {
    if (j.is_number_integer()) {
        return Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
        if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos) {
            return Integer(s);
        }
    }
    throw FormatError(std::string(what) + " must be an integer");
}

inline void require_keys(const json& j, const std::set<std::string>& required, const std::set<std::string>& optional,
                         const char* what) {
    if (!j.is_object()) {
        throw FormatError(std::string(what) + " must be an object");
    }
    for (const auto& [k, v] : j.items()) {
        if (!required.count(k) && !optional.count(k)) {
            throw FormatError("unknown field '" + k + "' in " + what);
        }
    }
    for (const auto& k : required) {
        if (!j.contains(k)) {
            throw FormatError("missing field '" + k + "' in " + what);
        }
    }
}

inline int small_int(const json& j, const char* what) {
    if (!j.is_number_integer()) {
        throw FormatError(std::string(what) + " must be an integer");
    }
    const auto v = j.get<std::int64_t>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
        throw FormatError(std::string(what) + " is out of range");
    }
    return static_cast<int>(v);
}

inline std::vector<int> int_list(const json& j, const char* what) {
    if (!j.is_array()) {
        throw FormatError(std::string(what) + " must be an array");
    }
    std::vector<int> out;
    for (const auto& v : j) {
        out.push_back(small_int(v, what));
    }
    return out;
}

inline std::vector<std::string> name_list(const json& j) {
    if (!j.is_array()) {
        throw FormatError("names must be an array");
    }
    std::vector<std::string> out;
    for (const auto& v : j) {
        if (!v.is_string()) {
            throw FormatError("names must be strings");
        }
        out.push_back(v.get<std::string>());
    }
    return out;
}

inline void check_header(const json& j, const char* kind) {
    if (!j.is_object()) {
        throw FormatError("document must be a JSON object");
    }
    if (!j.contains("format") || !j["format"].is_number_integer() || j["format"].get<std::int64_t>() != kFormat) {
        throw FormatError("unsupported or missing format version (expected " + std::to_string(kFormat) + ")");
    }
    if (!j.contains("kind") || !j["kind"].is_string() || j["kind"].get<std::string>() != kind) {
        throw FormatError(std::string("document kind must be '") + kind + "'");
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Cyclotomic numbers: {"conductor": n, "terms": [[k, num, den], ...]} in the
// minimal field, each coefficient in lowest terms.

inline json to_json(const Cyclotomic& x) {
    const Cyclotomic m = x.minimized();
    json terms = json::array();
    for (const auto& t : m.terms()) {
        const Rational c(t.numerator, m.denominator());
        terms.push_back({t.exponent, detail::integer_json(boost::multiprecision::numerator(c)),
                         detail::integer_json(boost::multiprecision::denominator(c))});
    }
    return {{"conductor", m.conductor()}, {"terms", terms}};
}

inline Cyclotomic cyclotomic_from_json(const json& j) {
    detail::require_keys(j, {"conductor", "terms"}, {}, "cyclotomic number");
    const int n = detail::small_int(j["conductor"], "conductor");
    if (n < 1 || n > conductor_cap()) {
        throw FormatError("conductor out of range");
    }
    if (!j["terms"].is_array()) {
        throw FormatError("terms must be an array");
    }
    std::vector<std::pair<std::int64_t, Rational>> terms;
    for (const auto& t : j["terms"]) {
        if (!t.is_array() || t.size() != 3) {
            throw FormatError("each term must be [exponent, numerator, denominator]");
        }
        const int k = detail::small_int(t[0], "exponent");
        const Integer num = detail::integer_from(t[1], "numerator");
        const Integer den = detail::integer_from(t[2], "denominator");
        if (den <= 0) {
            throw FormatError("denominator must be positive");
        }
        terms.emplace_back(k, Rational(num, den));
    }
    return Cyclotomic::from_terms(n, terms);
}

// ---------------------------------------------------------------------------
// Fusion rings: coefficients as a sparse list of [a, b, c, N_ab^c].

inline json fusion_body(const FusionRing& ring) {
    json coeffs = json::array();
    const int r = ring.rank();
    for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) {
            for (auto [c, m] : ring.product(a, b)) {
                coeffs.push_back({a, b, c, m});
            }
        }
    }
    return {{"rank", r}, {"dual", ring.duals()}, {"names", ring.names()}, {"coeffs", coeffs}};
}

inline FusionRing fusion_from_body(const json& j) {
    detail::require_keys(j, {"rank", "dual", "names", "coeffs"}, {}, "fusion ring");
    const int r = detail::small_int(j["rank"], "rank");
    if (r < 1 || r > kMaxRank) {
        throw FormatError("rank out of range");
    }
    const auto dual = detail::int_list(j["dual"], "dual");
    const auto names = detail::name_list(j["names"]);
    if (!j["coeffs"].is_array()) {
        throw FormatError("coeffs must be an array");
    }
    std::vector<int> coeffs(static_cast<std::size_t>(r) * r * r, 0);
    for (const auto& e : j["coeffs"]) {
        const auto v = detail::int_list(e, "coefficient entry");
        if (v.size() != 4) {
            throw FormatError("each coefficient entry must be [a, b, c, value]");
        }
        for (int i = 0; i < 3; ++i) {
            if (v[i] < 0 || v[i] >= r) {
                throw FormatError("coefficient label out of range");
            }
        }
        if (v[3] < 0) {
            throw FormatError("fusion coefficients must be nonnegative");
        }
        coeffs[(static_cast<std::size_t>(v[0]) * r + v[1]) * r + v[2]] = v[3];
    }
    try {
        return FusionRing(r, dual, std::move(coeffs), names);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

inline json to_json(const FusionRing& ring) {
    json j = fusion_body(ring);
    j["format"] = kFormat;
    j["kind"] = "fusion_ring";
    return j;
}

inline FusionRing fusion_from_json(const json& j) {
    detail::check_header(j, "fusion_ring");
    json body = j;
    body.erase("format");
    body.erase("kind");
    return fusion_from_body(body);
}

// ---------------------------------------------------------------------------
// Modular data

inline json to_json(const ModularData& md) {
    json S = json::array();
    for (int a = 0; a < md.rank(); ++a) {
        json row = json::array();
        for (int b = 0; b < md.rank(); ++b) {
            row.push_back(to_json(md.S(a, b)));
        }
        S.push_back(std::move(row));
    }
    json T = json::array();
    for (const auto& t : md.T()) {
        T.push_back(to_json(t));
    }
    json j{{"format", kFormat}, {"kind", "modular_data"}, {"rank", md.rank()}, {"dual", md.duals()},
           {"names", md.names()}, {"S", S}, {"T", T}, {"modular", md.modular_flag()}};
    if (md.has_attached_fusion()) {
        j["fusion"] = fusion_body(md.fusion());
    }
    return j;
}

inline ModularData moddata_from_json(const json& j) {
    detail::check_header(j, "modular_data");
    detail::require_keys(j, {"format", "kind", "rank", "dual", "names", "S", "T", "modular"}, {"fusion"},
                         "modular data");
    const int r = detail::small_int(j["rank"], "rank");
    if (r < 1 || r > kMaxRank) {
        throw FormatError("rank out of range");
    }
    if (!j["S"].is_array() || j["S"].size() != static_cast<std::size_t>(r)) {
        throw FormatError("S must have rank rows");
    }
    CyclotomicMatrix S;
    for (const auto& row : j["S"]) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(r)) {
            throw FormatError("S must be square of size rank");
        }
        std::vector<Cyclotomic> out;
        for (const auto& x : row) {
            out.push_back(cyclotomic_from_json(x));
        }
        S.push_back(std::move(out));
    }
    if (!j["T"].is_array() || j["T"].size() != static_cast<std::size_t>(r)) {
        throw FormatError("T must have rank entries");
    }
    std::vector<Cyclotomic> T;
    for (const auto& x : j["T"]) {
        T.push_back(cyclotomic_from_json(x));
    }
    if (!j["modular"].is_boolean()) {
        throw FormatError("modular must be a boolean");
    }
    std::optional<FusionRing> ring;
    if (j.contains("fusion")) {
        ring = fusion_from_body(j["fusion"]);
    }
    try {
        return ModularData(std::move(S), std::move(T), detail::name_list(j["names"]), detail::int_list(j["dual"], "dual"),
                           std::move(ring), j["modular"].get<bool>());
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

/// Canonical text: sorted keys, two-space indent, trailing newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace mtc::io
