#pragma once

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "verify.hpp"

namespace segcalc {

using nlohmann::json;

inline constexpr const char* kScenarioSchema = "segcalc/1";

// ---- JSON <-> exact values ------------------------------------------------

inline json rational_to_json(const Rational& q) {
    if (is_integer(q)) {
        const Int num = numerator(q);
        if (num >= std::numeric_limits<std::int64_t>::min() && num <= std::numeric_limits<std::int64_t>::max())
            return json(num.convert_to<std::int64_t>());
    }
    return json(rational_str(q));
}

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            return Rational(s);
        } catch (const std::exception&) {
            throw error("invalid rational literal: " + s);
        }
    }
    throw error("expected an integer or a rational string");
}

// Classes cross the JSON boundary on standard projective bases only, keyed by
// dimension.
inline json class_to_json(const CycleClass& c) {
    const Basis& b = c.basis();
    if (!b.is_standard_projective()) throw error("only standard projective classes are serialized");
    json coeffs = json::object();
    for (const auto& [i, q] : c.coeffs())
        coeffs[std::to_string(b.element(i).dim)] = rational_to_json(q);
    return json{{"basis", b.name()}, {"coeffs", coeffs}, {"render", c.render()}};
}

inline CycleClass class_from_json(const json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("coeffs"))
        throw error("class object needs basis and coeffs");
    const std::string name = j.at("basis").get<std::string>();
    if (name.rfind("P^", 0) != 0) throw error("unknown basis: " + name);
    int n = 0;
    try {
        n = std::stoi(name.substr(2));
    } catch (const std::exception&) {
        throw error("unknown basis: " + name);
    }
    CycleClass c(projective_basis(n));
    for (const auto& [key, val] : j.at("coeffs").items()) {
        int dim = 0;
        try {
            dim = std::stoi(key);
        } catch (const std::exception&) {
            throw error("coefficient key must be a dimension: " + key);
        }
        if (dim < 0 || dim > n) throw error("coefficient dimension out of range: " + key);
        c.add_term(static_cast<std::size_t>(dim), rational_from_json(val));
    }
    return c;
}

// ---- center descriptors ----------------------------------------------------

namespace detail {

inline CycleClass class_from_label_map(const Basis& b, const json& j) {
    CycleClass c(b);
    for (const auto& [label, val] : j.items()) {
        std::optional<std::size_t> idx = b.index_of(label);
        if (!idx) throw error("unknown basis label: " + label);
        c.add_term(*idx, rational_from_json(val));
    }
    return c;
}

inline SplitCenter custom_center_from_json(int ambient, const json& j) {
    const json& jb = j.at("basis");
    std::vector<BasisElement> els;
    for (const json& e : jb.at("elements"))
        els.push_back({e.at("label").get<std::string>(), e.at("dim").get<int>()});
    Basis b(jb.value("name", std::string("custom_center")), jb.at("dim").get<int>(), std::move(els));

    std::vector<CycleClass> h_imgs;
    const json& jh = j.at("h_action");
    for (std::size_t i = 0; i < b.size(); ++i) {
        const std::string& label = b.element(i).label;
        h_imgs.push_back(jh.contains(label) ? class_from_label_map(b, jh.at(label)) : CycleClass::zero(b));
    }

    Basis pn = projective_basis(ambient);
    std::vector<CycleClass> push;
    const json& jp = j.at("pushforward");
    for (std::size_t i = 0; i < b.size(); ++i) {
        const std::string& label = b.element(i).label;
        CycleClass img(pn);
        if (jp.contains(label)) {
            const int dim = b.element(i).dim;
            img.add_term(static_cast<std::size_t>(dim), rational_from_json(jp.at(label)));
        }
        push.push_back(std::move(img));
    }

    CycleClass fundamental = CycleClass::zero(b);
    if (j.contains("fundamental")) {
        fundamental = class_from_label_map(b, j.at("fundamental"));
    } else {
        std::optional<std::size_t> top = b.unique_index_of_dim(b.ambient_dim());
        if (!top) throw error("custom center needs an explicit fundamental class");
        fundamental = CycleClass::generator(b, *top);
    }

    LinearMap h_action(b, b, std::move(h_imgs));
    LinearMap pushforward(b, pn, std::move(push));
    return SplitCenter::custom(ambient, j.at("normal_degrees").get<std::vector<int>>(), b,
                               std::move(h_action), std::move(pushforward), std::move(fundamental));
}

}  // namespace detail

inline std::optional<SplitCenter> center_from_json(int ambient, const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "empty") return std::nullopt;
        throw error("unknown center: " + j.get<std::string>());
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "linear") return SplitCenter::linear(ambient, j.at("dim").get<int>());
    if (kind == "quadric_surface") {
        if (ambient != 5) throw error("no resolving model available");
        return SplitCenter::quadric_surface();
    }
    if (kind == "complete_intersection")
        return SplitCenter::complete_intersection(ambient, j.at("degrees").get<std::vector<int>>());
    if (kind == "custom") return detail::custom_center_from_json(ambient, j);
    throw error("unknown center kind: " + kind);
}

// ---- scenarios ---------------------------------------------------------

struct LinesSpec {
    int count = 0;
    std::vector<int> subset;  // empty = all
};

struct Scenario {
    std::string name;
    int ambient = 0;
    bool center_is_empty = true;
    std::optional<SplitCenter> center;
    std::optional<std::vector<int>> hypersurfaces;
    std::optional<LinesSpec> lines;
    std::string op;
    int op_r = 0;          // r, r_max, or target dimension, depending on op
    unsigned op_trunc = 0; // identities only
    bool op_with_y = true; // identities only
    std::optional<json> expected;
};

inline Scenario parse_scenario(const json& j) {
    if (!j.is_object()) throw error("scenario must be a JSON object");
    if (j.value("schema", std::string()) != kScenarioSchema)
        throw error("unsupported scenario schema (want segcalc/1)");
    Scenario sc;
    sc.name = j.at("name").get<std::string>();
    sc.ambient = j.value("ambient", 0);

    if (j.contains("center")) {
        if (sc.ambient < 1) throw error("scenario needs a positive ambient dimension");
        sc.center = center_from_json(sc.ambient, j.at("center"));
        sc.center_is_empty = !sc.center.has_value();
    }

    if (j.contains("components")) {
        const json& jc = j.at("components");
        if (jc.contains("hypersurfaces"))
            sc.hypersurfaces = jc.at("hypersurfaces").get<std::vector<int>>();
        else if (jc.contains("lines")) {
            LinesSpec ls;
            ls.count = jc.at("lines").get<int>();
            if (jc.contains("subset")) ls.subset = jc.at("subset").get<std::vector<int>>();
            sc.lines = std::move(ls);
        } else {
            throw error("components must list hypersurfaces or lines");
        }
    }

    const json& jop = j.at("operation");
    if (jop.is_string()) {
        sc.op = jop.get<std::string>();
    } else {
        sc.op = jop.at("name").get<std::string>();
        if (jop.contains("r")) sc.op_r = jop.at("r").get<int>();
        if (jop.contains("r_max")) sc.op_r = jop.at("r_max").get<int>();
        if (jop.contains("target")) sc.op_r = jop.at("target").get<int>();
        if (jop.contains("truncation")) sc.op_trunc = jop.at("truncation").get<unsigned>();
        if (jop.contains("with_y")) sc.op_with_y = jop.at("with_y").get<bool>();
    }

    if (j.contains("expected")) sc.expected = j.at("expected");
    return sc;
}

struct ScenarioResult {
    struct Check {
        std::string name;
        bool pass = false;
        bool warning = false;
        std::string lhs;
        std::string rhs;
    };

    std::string name;
    std::optional<CycleClass> cls;
    std::vector<Rational> sequence;
    std::vector<Check> checks;

    bool failed() const {
        for (const Check& c : checks)
            if (!c.pass) return true;
        return false;
    }

    json to_json() const {
        json out{{"scenario", name}};
        if (cls) out["class"] = class_to_json(*cls);
        if (!sequence.empty()) {
            json seq = json::array();
            for (const Rational& q : sequence) seq.push_back(rational_to_json(q));
            out["sequence"] = seq;
        }
        json checks_json = json::array();
        for (const Check& c : checks)
            checks_json.push_back(json{{"name", c.name},
                                       {"status", c.pass ? (c.warning ? "warn" : "pass") : "fail"},
                                       {"lhs", c.lhs},
                                       {"rhs", c.rhs}});
        out["checks"] = checks_json;
        out["status"] = failed() ? "fail" : "pass";
        return out;
    }

    std::string to_text() const {
        std::ostringstream out;
        out << "scenario: " << name << "\n";
        if (cls) out << "class: " << cls->render() << "\n";
        if (!sequence.empty()) {
            out << "sequence:";
            for (const Rational& q : sequence) out << " " << rational_str(q);
            out << "\n";
        }
        for (const Check& c : checks) {
            out << (c.pass ? (c.warning ? "WARN" : "PASS") : "FAIL") << "  " << c.name;
            if (!c.lhs.empty() || !c.rhs.empty()) out << "  [" << c.lhs << " vs " << c.rhs << "]";
            out << "\n";
        }
        out << "result: " << (failed() ? "fail" : "pass") << "\n";
        return out.str();
    }
};

namespace detail {

inline void add_check(ScenarioResult& res, std::string name, const CycleClass& lhs, const CycleClass& rhs) {
    res.checks.push_back({std::move(name), lhs == rhs, false, lhs.render(), rhs.render()});
}

inline HypersurfaceUnion hypersurface_union_of(const Scenario& sc) {
    if (!sc.hypersurfaces) throw error("no components");
    return {sc.ambient, sc.center, *sc.hypersurfaces};
}

inline LinesUnion lines_union_of(const Scenario& sc) {
    if (!sc.lines) throw error("no components");
    if (sc.ambient != 3) throw error("no resolving model available");
    YMode mode = YMode::empty;
    if (sc.center) {
        const bool is_point = sc.center->kind() == CenterKind::linear && sc.center->dim() == 0;
        if (!is_point) throw error("no resolving model available");
        mode = YMode::point;
    }
    return {sc.lines->count, mode, sc.lines->subset};
}

template <typename Fn>
auto with_union(const Scenario& sc, Fn&& fn) {
    if (sc.lines) return fn(lines_union_of(sc));
    return fn(hypersurface_union_of(sc));
}

inline int single_degree_of(const Scenario& sc) {
    if (!sc.hypersurfaces || sc.hypersurfaces->size() != 1)
        throw error("operation needs exactly one hypersurface degree");
    return sc.hypersurfaces->front();
}

}  // namespace detail

inline ScenarioResult run_scenario(const Scenario& sc, std::optional<unsigned> truncation = std::nullopt) {
    ScenarioResult res;
    res.name = sc.name;

    if (sc.op != "identities" && sc.ambient < 1)
        throw error("scenario needs a positive ambient dimension");

    if (sc.op == "union_segre" || sc.op == "sm_segre") {
        res.cls = detail::with_union(sc, [](const auto& u) { return union_segre_of(u); });
    } else if (sc.op == "incl_excl") {
        res.cls = detail::with_union(sc, [](const auto& u) { return incl_excl_rhs_of(u); });
        if (sc.center)
            detail::add_check(res, "inclusion-exclusion equals s(Y, M)", *res.cls, segre_smooth(*sc.center));
    } else if (sc.op == "csm") {
        res.cls = detail::with_union(sc, [](const auto& u) { return csm_union(u); });
        const bool almost_nonsingular =
            sc.lines ? sc.center.has_value() : (sc.center.has_value() || (sc.hypersurfaces && sc.hypersurfaces->size() == 1));
        if (almost_nonsingular) {
            CycleClass relsm = detail::with_union(sc, [](const auto& u) { return csm_via_relsm(u); });
            detail::add_check(res, "c_SM routes agree (inclusion-exclusion vs resolving model)", *res.cls, relsm);
        }
    } else if (sc.op == "prop_fact") {
        if (!sc.center) throw error("no resolving model available");
        if (!sc.hypersurfaces) throw error("no components");
        auto [lhs, rhs] = prop_fact_defect(*sc.center, *sc.hypersurfaces);
        detail::add_check(res, "defect routes agree", lhs, rhs);
        res.cls = std::move(lhs);
    } else if (sc.op == "closed_form") {
        if (!sc.center) throw error("no resolving model available");
        if (!sc.hypersurfaces || sc.hypersurfaces->size() != 2)
            throw error("closed form needs exactly two hypersurface degrees");
        const int d1 = (*sc.hypersurfaces)[0];
        const int d2 = (*sc.hypersurfaces)[1];
        res.cls = closed_form_repr(sc.ambient, d1, d2, *sc.center);
        detail::add_check(res, "closed form equals the resolving model", *res.cls,
                          union_segre(*sc.center, *sc.hypersurfaces));
    } else if (sc.op == "approximation") {
        if (!sc.center) throw error("no resolving model available");
        res.cls = approximation(sc.op_r, *sc.center, detail::single_degree_of(sc));
    } else if (sc.op == "recursion") {
        if (!sc.center) throw error("no resolving model available");
        const int d = detail::single_degree_of(sc);
        BlowupModel model(*sc.center);
        auto repeated = [&](int s) { return model.pushforward_divisor_series(Int(d) * s, -Int(s - 1)); };
        std::vector<CycleClass> values;
        for (int s = 1; s <= sc.op_r; ++s) values.push_back(repeated(s));
        res.cls = recursion_next(values);
        detail::add_check(res, "prediction equals the direct computation", *res.cls, repeated(sc.op_r + 1));
    } else if (sc.op == "ambient_compare") {
        CycleClass c = detail::with_union(sc, [](const auto& u) { return union_segre_of(u); });
        res.cls = ambient_compare(c, sc.ambient, sc.op_r);
    } else if (sc.op == "euler_sequence") {
        res.sequence = euler_sequence(sc.ambient, detail::single_degree_of(sc), sc.op_r);
    } else if (sc.op == "identities") {
        DefectSeriesSpec spec{sc.op_r, truncation.value_or(sc.op_trunc), sc.op_with_y};
        std::optional<Exponents> offender = defect_series_offender(spec);
        std::ostringstream rhs;
        if (offender) {
            rhs << "offending exponents:";
            for (unsigned e : *offender) rhs << " " << e;
        }
        res.checks.push_back({"defect series divisible by R_1..R_" + std::to_string(spec.r),
                              !offender.has_value(), false, "", rhs.str()});
    } else {
        throw error("unknown operation: " + sc.op);
    }

    if (sc.expected) {
        const json& exp = *sc.expected;
        if (!exp.is_object()) throw error("expected must be an object");
        for (const auto& item : exp.items())
            if (item.key() != "coeffs" && item.key() != "basis" && item.key() != "sequence" &&
                item.key() != "divisible")
                throw error("unknown expected key: " + item.key());
        if (exp.contains("coeffs")) {
            if (!res.cls) throw error("scenario has no class to compare against expected coefficients");
            json shaped = exp;
            if (!shaped.contains("basis")) shaped["basis"] = res.cls->basis().name();
            detail::add_check(res, "matches expected class", *res.cls, class_from_json(shaped));
        }
        if (exp.contains("sequence")) {
            const json& jseq = exp.at("sequence");
            bool ok = jseq.is_array() && jseq.size() == res.sequence.size();
            std::ostringstream lhs, rhs;
            for (std::size_t i = 0; i < res.sequence.size(); ++i)
                lhs << (i ? "," : "") << rational_str(res.sequence[i]);
            if (jseq.is_array())
                for (std::size_t i = 0; i < jseq.size(); ++i) {
                    rhs << (i ? "," : "") << rational_from_json(jseq[i]).str();
                    if (ok) ok = rational_from_json(jseq[i]) == res.sequence[i];
                }
            res.checks.push_back({"matches expected sequence", ok, false, lhs.str(), rhs.str()});
        }
        if (exp.contains("divisible")) {
            bool want = exp.at("divisible").get<bool>();
            bool got = !res.checks.empty() && res.checks.front().pass;
            res.checks.push_back({"matches expected divisibility", want == got, false,
                                  got ? "divisible" : "not divisible", want ? "divisible" : "not divisible"});
        }
    }
    return res;
}

inline ScenarioResult run_scenario(const json& j, std::optional<unsigned> truncation = std::nullopt) {
    return run_scenario(parse_scenario(j), truncation);
}

}  // namespace segcalc
