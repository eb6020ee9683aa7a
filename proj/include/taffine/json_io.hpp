#pragma once
/**
 * @file json_io.hpp
 * @brief JSON encoding of weights, roots, functionals, supports and reports.
 *
 * Every number leaves as an exact string: rationals as "p/q", weights as
 * canonical literals, polynomials in x as {"power": "coefficient"} maps.
 */

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "taffine/decomp.hpp"
#include "taffine/examplecase.hpp"
#include "taffine/supportcalc.hpp"

namespace taffine::json {

using nlohmann::json;

inline json rational(const Rational& q) { return to_string(q); }

inline json scalar(const Scalar& s) {
    json out = json::object();
    for (const auto& [power, c] : s.terms()) out[std::to_string(power)] = to_string(c);
    return out;
}

inline json weight(const Weight& w) { return w.str(); }
inline json root(const RootVec& a) { return a.str(); }

inline json roots(const std::vector<RootVec>& v) {
    json out = json::array();
    for (const auto& a : v) out.push_back(root(a));
    return out;
}

inline json progression(const Progression& p) { return {{"r", p.r}, {"k", p.k_off}}; }

inline json root_class(const RootClass& c) {
    json out{{"kind", std::string(to_string(c.kind))}};
    out["length"] = c.length_label ? json(std::string(to_string(*c.length_label))) : json(nullptr);
    out["progression"] = c.progression ? progression(*c.progression) : json(nullptr);
    return out;
}

inline Rational parse_rational_value(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw InvalidInput("expected an integer or a \"p/q\" string, got " + j.dump());
}

/// {"e1": v, "f2": v, "d": v}; missing symbols read as zero.
inline Functional functional(const json& j, int k, int l) {
    if (!j.is_object()) throw InvalidInput("functional must be a JSON object");
    Functional f(k, l);
    for (const auto& [key, value] : j.items()) {
        Rational v = parse_rational_value(value);
        auto index = [&](std::size_t from, int n) {
            const std::string digits = key.substr(from);
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
                throw InvalidInput("unknown functional symbol '" + key + "'");
            int i = std::stoi(digits);
            if (i < 1 || i > n) throw InvalidInput("functional symbol '" + key + "' out of range");
            return i;
        };
        if (key == "d")
            f.set_d(v);
        else if (key.size() > 1 && key[0] == 'e')
            f.set_e(index(1, k), v);
        else if (key.size() > 1 && key[0] == 'f')
            f.set_f(index(1, l), v);
        else
            throw InvalidInput("unknown functional symbol '" + key + "'");
    }
    return f;
}

inline json functional(const Functional& f) {
    json out = json::object();
    for (int i = 1; i <= f.k(); ++i) out["e" + std::to_string(i)] = rational(f.e(i));
    for (int p = 1; p <= f.l(); ++p) out["f" + std::to_string(p)] = rational(f.f(p));
    out["d"] = rational(f.d());
    return out;
}

/// Either {"outer": F, "inner": F} or a bare functional (inner = 0).
inline ParabolicSpec parabolic_spec(const json& j, int k, int l) {
    if (j.is_object() && (j.contains("outer") || j.contains("inner"))) {
        for (const auto& [key, value] : j.items())
            if (key != "outer" && key != "inner") throw InvalidInput("unknown parabolic key '" + key + "'");
        ParabolicSpec p{Functional(k, l), Functional(k, l)};
        if (j.contains("outer")) p.outer = functional(j.at("outer"), k, l);
        if (j.contains("inner")) p.inner = functional(j.at("inner"), k, l);
        return p;
    }
    return {functional(j, k, l), Functional(k, l)};
}

inline std::vector<Weight> weight_list(const json& j, int k, int l, const char* what) {
    if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array of weight literals");
    std::vector<Weight> out;
    for (const auto& w : j) {
        if (!w.is_string()) throw InvalidInput(std::string(what) + " entries must be strings");
        out.push_back(Weight::parse(w.get<std::string>(), k, l));
    }
    return out;
}

inline json weight_list(const std::vector<Weight>& ws) {
    json out = json::array();
    for (const auto& w : ws) out.push_back(weight(w));
    return out;
}

inline CosetSupport support(const json& j, int k, int l) {
    if (!j.is_object() || !j.contains("pieces")) throw InvalidInput("support must be an object with \"pieces\"");
    CosetSupport s(k, l);
    for (const auto& p : j.at("pieces")) {
        if (!p.is_object() || !p.contains("base")) throw InvalidInput("support piece needs a \"base\"");
        for (const auto& [key, value] : p.items())
            if (key != "base" && key != "zgens" && key != "ngens" && key != "offsets")
                throw InvalidInput("unknown support piece key '" + key + "'");
        SupportPiece piece{Weight::parse(p.at("base").get<std::string>(), k, l), {}, {}, {}};
        if (p.contains("zgens")) piece.zgens = weight_list(p.at("zgens"), k, l, "zgens");
        if (p.contains("ngens")) piece.ngens = weight_list(p.at("ngens"), k, l, "ngens");
        if (p.contains("offsets")) piece.offsets = weight_list(p.at("offsets"), k, l, "offsets");
        s.add_piece(std::move(piece));
    }
    return s;
}

inline json support(const CosetSupport& s) {
    json pieces = json::array();
    for (const auto& p : s.pieces())
        pieces.push_back({{"base", weight(p.base)},
                          {"zgens", weight_list(p.zgens)},
                          {"ngens", weight_list(p.ngens)},
                          {"offsets", weight_list(p.offsets)}});
    return {{"pieces", pieces}};
}

inline json levi(const LeviDescriptor& d) {
    json comps = json::array();
    for (const auto& c : d.components)
        comps.push_back({{"type", c.name()},
                         {"rank", c.rank},
                         {"roots", c.root_count},
                         {"has_nonsingular", c.has_nonsingular}});
    return {{"names", d.names()}, {"components", comps}};
}

inline json violation(const ParabolicViolation& v) {
    json out{{"kind", v.kind == ParabolicViolation::Kind::covering ? "covering" : "closure"}, {"a", root(v.a)}};
    if (v.b) out["b"] = root(*v.b);
    if (v.sum) out["sum"] = root(*v.sum);
    return out;
}

inline json violation(const ClosureViolation& v) {
    return {{"a", root(v.a)}, {"b", root(v.b)}, {"sum", root(v.sum)}};
}

inline json violation(const ShadowViolation& v) {
    return {{"kind", std::string(to_string(v.kind))}, {"root", root(v.root)}, {"in_B", v.in_b}, {"in_C", v.in_c}};
}

inline json step_results(const std::vector<example::StepResult>& steps) {
    json out = json::array();
    bool all = true;
    for (const auto& s : steps) {
        json w = json::array();
        for (const auto& [key, value] : s.witnesses) w.push_back({{"name", key}, {"value", value}});
        out.push_back({{"step", s.name}, {"status", s.pass ? "pass" : "fail"}, {"witnesses", w}});
        all = all && s.pass;
    }
    return {{"steps", out}, {"all_pass", all}};
}

}  // namespace taffine::json
