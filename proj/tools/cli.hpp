#pragma once
// Command dispatch for the `taffine` executable. Kept in a header so the test
// suite can drive it in-process.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "taffine/acceptance.hpp"
#include "taffine/json_io.hpp"
#include "taffine/taffine.hpp"

namespace taffine::cli {

enum ExitCode { kOk = 0, kInvalid = 1, kIndeterminate = 2, kCriteriaFailed = 3 };

namespace detail {

using nlohmann::json;
namespace tj = taffine::json;

struct Options {
    std::string family;
    int k = 0;
    int l = 0;
    int window = 6;
    int bound = 20;
    int index = 1;
    std::string kind = "S";
    std::string root;
    std::string weight;
    std::string functional;
    std::string support;
    std::string roots;
    std::string labeling;
    std::string parity = "super";
    std::string zeta = "1/2";
    std::string out = "json";
    bool example = false;
};

inline void emit(std::ostream& os, const json& j) { os << j.dump(2) << '\n'; }

inline json error_object(const std::string& type, const std::string& message) {
    return {{"error", {{"type", type}, {"message", message}}}};
}

inline json parse_json_flag(const std::string& text, const char* flag) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("--") + flag + " is not valid JSON: " + e.what());
    }
}

inline RootSystemSpec spec_of(const Options& o) {
    if (o.family.empty()) throw InvalidInput("--family is required");
    return RootSystemSpec(parse_family(o.family), o.k, o.l);
}

inline void require_window(const Options& o) {
    if (o.window < 0) throw InvalidInput("--window must be non-negative");
    if (o.bound < 0) throw InvalidInput("--bound must be non-negative");
}

inline std::string require(const std::string& value, const char* flag) {
    if (value.empty()) throw InvalidInput(std::string("--") + flag + " is required");
    return value;
}

inline example::ExampleParams example_params(const Options& o) {
    example::ExampleParams p;
    p.k = o.k == 0 ? 2 : o.k;
    p.zeta = parse_rational(o.zeta);
    p.validate();
    return p;
}

inline ActionLabeling parse_labeling(const json& j, const RootSystemSpec& spec) {
    if (!j.is_object()) throw InvalidInput("--labeling must be a JSON object {\"<root>\": \"ln\"|\"in\"}");
    ActionLabeling lab;
    for (const auto& [key, value] : j.items()) {
        RootVec a = taffine::detail::require_lattice(spec, Weight::parse(key, spec.k(), spec.l()));
        if (!is_root(spec, a) || a.norm2() == 0) throw InvalidInput("labeled element '" + key + "' is not a real root");
        const std::string v = value.is_string() ? value.get<std::string>() : "";
        if (v == "ln")
            lab.set(a, ActionLabel::ln);
        else if (v == "in")
            lab.set(a, ActionLabel::in);
        else
            throw InvalidInput("label for '" + key + "' must be \"ln\" or \"in\"");
    }
    return lab;
}

inline json cmd_roots(const Options& o) {
    require_window(o);
    return tj::roots(enumerate_window(spec_of(o), o.window));
}

inline json cmd_classify(const Options& o) {
    auto spec = spec_of(o);
    Weight w = Weight::parse(require(o.root, "root"), spec.k(), spec.l());
    json out = tj::root_class(classify(spec, w));
    out["root"] = tj::weight(w);
    out["norm"] = tj::rational(form_eval(w, w).constant());
    return out;
}

inline json cmd_salpha(const Options& o) {
    auto spec = spec_of(o);
    Weight w = Weight::parse(require(o.root, "root"), spec.k(), spec.l());
    json out = tj::progression(s_alpha(spec, w));
    out["root"] = tj::weight(w);
    return out;
}

inline json cmd_subsystem(const Options& o) {
    require_window(o);
    auto spec = spec_of(o);
    PieceKind kind;
    if (o.kind == "R")
        kind = PieceKind::R;
    else if (o.kind == "S")
        kind = PieceKind::S;
    else
        throw InvalidInput("--kind must be R or S");
    return tj::roots(subsystem_window(spec, SubsystemId(o.index), kind, o.window));
}

inline json cmd_closed(const Options& o) {
    require_window(o);
    auto spec = spec_of(o);
    SubsystemId id(o.index);
    auto v = check_closed(spec, [&](const RootVec& a) { return in_s_i(spec, id, a); }, o.window);
    json viol = json::array();
    for (const auto& x : v) viol.push_back(tj::violation(x));
    return {{"subsystem", "S(" + std::to_string(o.index) + ")"}, {"closed", v.empty()}, {"violations", viol}};
}

inline json cmd_triangular(const Options& o) {
    require_window(o);
    auto spec = spec_of(o);
    Functional f = tj::functional(parse_json_flag(require(o.functional, "functional"), "functional"), spec.k(), spec.l());
    auto split = triangular(enumerate_window(spec, o.window), f);
    return {{"plus", tj::roots(split.plus)},
            {"circ", tj::roots(split.circ)},
            {"minus", tj::roots(split.minus)},
            {"trivial", split.trivial()}};
}

inline ParabolicSpec parabolic_of(const Options& o, const RootSystemSpec& spec) {
    return tj::parabolic_spec(parse_json_flag(require(o.functional, "functional"), "functional"), spec.k(), spec.l());
}

inline json cmd_parabolic(const Options& o) {
    require_window(o);
    auto spec = spec_of(o);
    ParabolicSpec p = parabolic_of(o, spec);
    auto v = is_parabolic(spec, [&](const RootVec& a) { return p.contains(a); }, o.window);
    json viol = json::array();
    for (const auto& x : v) viol.push_back(tj::violation(x));
    return {{"P", tj::roots(parabolic_set(spec, p, o.window))}, {"parabolic", v.empty()}, {"violations", viol}};
}

inline RootParity parity_of(const Options& o) {
    if (o.parity == "super") return RootParity::super;
    if (o.parity == "even") return RootParity::even;
    throw InvalidInput("--parity must be super or even");
}

inline json cmd_levi(const Options& o) {
    require_window(o);
    auto spec = spec_of(o);
    auto core = levi_core(parabolic_set(spec, parabolic_of(o, spec), o.window));
    json out = tj::levi(recognize(core, parity_of(o)));
    out["core"] = tj::roots(core);
    return out;
}

inline json cmd_recognize(const Options& o) {
    if (o.k < 1 || o.l < 1) throw InvalidInput("--k and --l must be positive");
    json list = parse_json_flag(require(o.roots, "roots"), "roots");
    std::vector<RootVec> roots;
    for (const auto& w : tj::weight_list(list, o.k, o.l, "--roots")) roots.push_back(RootVec::from_weight(w));
    return tj::levi(recognize(roots, parity_of(o)));
}

inline json cmd_support(const Options& o) {
    if (o.k < 1 || o.l < 1) throw InvalidInput("--k and --l must be positive");
    require_window(o);
    CosetSupport s = tj::support(parse_json_flag(require(o.support, "support"), "support"), o.k, o.l);
    if (o.weight.empty() && o.root.empty()) throw InvalidInput("support needs --weight and/or --root");
    json out{{"support", tj::support(s)}};
    if (!o.weight.empty()) {
        Weight w = Weight::parse(o.weight, o.k, o.l);
        out["weight"] = tj::weight(w);
        out["member"] = member(s, w, o.bound);
    }
    if (!o.root.empty()) {
        Weight a = Weight::parse(o.root, o.k, o.l);
        out["alpha"] = tj::weight(a);
        out["in_B"] = b_set_member(a, s, o.bound);
        out["in_C"] = c_set_member(a, s, o.bound);
    }
    return out;
}

inline json cmd_tightness(const Options& o) {
    require_window(o);
    RootSystemSpec spec = o.example ? example_params(o).spec() : spec_of(o);
    ActionLabeling lab = o.example ? example::derived_labeling(example_params(o), o.window)
                                   : parse_labeling(parse_json_flag(require(o.labeling, "labeling"), "labeling"), spec);
    json out = json::object();
    for (int i : {1, 2}) {
        SubsystemId id(i);
        auto dir = hybrid_direction(spec, id, lab, o.window);
        out["S(" + std::to_string(i) + ")"] = {{"class", std::string(to_string(classify_tightness(spec, id, lab, o.window)))},
                                               {"direction", dir ? nlohmann::json(*dir) : nlohmann::json(nullptr)}};
    }
    auto t = quasi_integrable_check(spec, lab, o.window);
    out["quasi_integrable"] = t ? nlohmann::json(*t) : nlohmann::json(nullptr);
    return out;
}

inline json cmd_verify_example(const Options& o) {
    require_window(o);
    auto p = example_params(o);
    json out = tj::step_results(example::verify_example(p, o.window, o.bound));
    out["k"] = p.k;
    out["zeta"] = tj::rational(p.zeta);
    out["window"] = o.window;
    return out;
}

inline int cmd_selftest(const Options& o, std::ostream& os) {
    auto results = acceptance::run_all(acceptance::seed_from_env());
    bool all = true;
    for (const auto& r : results) all = all && r.pass;
    if (o.out == "json") {
        json arr = json::array();
        for (const auto& r : results)
            arr.push_back({{"criterion", r.id}, {"title", r.title}, {"status", r.pass ? "pass" : "fail"}, {"detail", r.detail}});
        emit(os, {{"criteria", arr}, {"all_pass", all}});
    } else if (o.out == "table") {
        for (const auto& r : results) os << acceptance::format_line(r) << '\n';
        int passed = 0;
        for (const auto& r : results) passed += r.pass;
        os << passed << "/" << results.size() << " criteria pass\n";
    } else {
        throw InvalidInput("--out must be table or json");
    }
    return all ? kOk : kCriteriaFailed;
}

}  // namespace detail

/// Runs one command line (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& os) {
    using detail::json;
    namespace tj = taffine::json;
    detail::Options o;
    CLI::App app{"Exact root-system and weight-support toolkit for twisted affine Lie superalgebras", "taffine"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* c, bool family, bool window) {
        if (family) c->add_option("--family", o.family, "A2ODD | A2MIX | A4 | D2");
        c->add_option("--k", o.k, "rank parameter k");
        c->add_option("--l", o.l, "rank parameter l");
        if (window) c->add_option("--window", o.window, "d-coefficient window N");
        c->add_option("--out", o.out, "output format");
    };
    auto* roots = app.add_subcommand("roots", "enumerate roots in a window");
    common(roots, true, true);
    auto* cls = app.add_subcommand("classify", "classify a root");
    common(cls, true, false);
    cls->add_option("--root", o.root, "weight literal");
    auto* sal = app.add_subcommand("salpha", "d-progression of a dot root");
    common(sal, true, false);
    sal->add_option("--root", o.root, "dot root literal");
    auto* sub = app.add_subcommand("subsystem", "R(i) or S(i) window");
    common(sub, true, true);
    sub->add_option("--index", o.index, "1 or 2");
    sub->add_option("--kind", o.kind, "R or S");
    auto* clo = app.add_subcommand("closed", "closedness certificate for S(i)");
    common(clo, true, true);
    clo->add_option("--index", o.index, "1 or 2");
    auto* tri = app.add_subcommand("triangular", "sign split by a functional");
    common(tri, true, true);
    tri->add_option("--functional", o.functional, "JSON map {\"e1\": \"1/2\", \"d\": 1}");
    auto* par = app.add_subcommand("parabolic", "parabolic set from a functional pair");
    common(par, true, true);
    par->add_option("--functional", o.functional, "JSON {\"outer\": {...}, \"inner\": {...}} or a bare functional");
    auto* lev = app.add_subcommand("levi", "Levi core of a parabolic set and its type");
    common(lev, true, true);
    lev->add_option("--functional", o.functional, "as for parabolic");
    lev->add_option("--parity", o.parity, "super or even");
    auto* rec = app.add_subcommand("recognize", "type of a finite root set");
    common(rec, true, false);
    rec->add_option("--roots", o.roots, "JSON array of weight literals");
    rec->add_option("--parity", o.parity, "super or even");
    auto* sup = app.add_subcommand("support", "membership, B-set and C-set queries");
    common(sup, true, false);
    sup->add_option("--support", o.support, "JSON {\"pieces\": [...]}");
    sup->add_option("--weight", o.weight, "weight literal to test for membership");
    sup->add_option("--root", o.root, "direction for the B/C predicates");
    sup->add_option("--bound", o.bound, "coefficient search bound");
    auto* tig = app.add_subcommand("tightness", "tight/hybrid classification of S(1), S(2)");
    common(tig, true, true);
    tig->add_option("--labeling", o.labeling, "JSON {\"<root>\": \"ln\"|\"in\"}");
    tig->add_flag("--example", o.example, "use the labeling derived for the worked example");
    tig->add_option("--zeta", o.zeta, "zeta for --example");
    auto* ver = app.add_subcommand("verify-example", "verify the worked example step by step");
    common(ver, false, true);
    ver->add_option("--zeta", o.zeta, "non-integer rational");
    ver->add_option("--bound", o.bound, "coefficient search bound");
    auto* self = app.add_subcommand("selftest", "run the acceptance suite");
    self->add_option("--out", o.out, "table or json");
    o.out = "json";

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        os << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            os << app.help();
            return kOk;
        }
        detail::emit(os, detail::error_object("invalid_input", e.what()));
        return kInvalid;
    }

    try {
        auto* cmd = app.get_subcommands().front();
        const std::string name = cmd->get_name();
        if (name == "selftest") {
            if (self->count("--out") == 0) o.out = "table";
            return detail::cmd_selftest(o, os);
        }
        if (o.out != "json") throw InvalidInput("--out supports only json for " + name);
        json result;
        if (name == "roots") result = detail::cmd_roots(o);
        else if (name == "classify") result = detail::cmd_classify(o);
        else if (name == "salpha") result = detail::cmd_salpha(o);
        else if (name == "subsystem") result = detail::cmd_subsystem(o);
        else if (name == "closed") result = detail::cmd_closed(o);
        else if (name == "triangular") result = detail::cmd_triangular(o);
        else if (name == "parabolic") result = detail::cmd_parabolic(o);
        else if (name == "levi") result = detail::cmd_levi(o);
        else if (name == "recognize") result = detail::cmd_recognize(o);
        else if (name == "support") result = detail::cmd_support(o);
        else if (name == "tightness") result = detail::cmd_tightness(o);
        else if (name == "verify-example") result = detail::cmd_verify_example(o);
        detail::emit(os, result);
        return kOk;
    } catch (const Indeterminate& e) {
        detail::emit(os, detail::error_object("indeterminate", e.what()));
        return kIndeterminate;
    } catch (const NotFound& e) {
        detail::emit(os, detail::error_object("not_found", e.what()));
        return kInvalid;
    } catch (const InvalidInput& e) {
        detail::emit(os, detail::error_object("invalid_input", e.what()));
        return kInvalid;
    } catch (const nlohmann::json::exception& e) {
        detail::emit(os, detail::error_object("invalid_input", e.what()));
        return kInvalid;
    } catch (const std::invalid_argument& e) {
        detail::emit(os, detail::error_object("invalid_input", e.what()));
        return kInvalid;
    } catch (const std::out_of_range& e) {
        detail::emit(os, detail::error_object("invalid_input", e.what()));
        return kInvalid;
    }
}

}  // namespace taffine::cli
