#include "orlicz/config.hpp"

#include <cmath>
#include <sstream>

#include "orlicz/errors.hpp"

namespace orlicz::config {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

const json& require(const json& node, const char* field) {
    if (!node.is_object()) fail(std::string("expected an object containing field '") + field + "'");
    auto it = node.find(field);
    if (it == node.end()) fail(std::string("missing field '") + field + "'");
    return *it;
}

PointRule parse_rule(const json& node, const char* field) {
    const json& v = require(node, field);
    if (v.is_number()) return PointRule::constant(v.get<double>());
    if (v.is_string()) {
        auto name = v.get<std::string>();
        if (name == "inverse_square") return PointRule::inverse_square();
        if (name == "inverse") return PointRule::inverse();
        if (name == "identity") return PointRule::identity();
        if (name == "one") return PointRule::constant(1.0);
        fail(std::string("field '") + field + "': unknown rule '" + name + "'");
    }
    fail(std::string("field '") + field + "' must be a number or a rule name");
}

json rule_to_json(const PointRule& r) {
    if (r.kind() == PointRule::Kind::constant) return r.constant_value();
    return r.name();
}

std::vector<DilationTerm> parse_terms(const json& node) {
    const json& terms = require(node, "terms");
    if (!terms.is_array()) fail("field 'terms' must be an array of [coefficient, scale] pairs");
    std::vector<DilationTerm> out;
    for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number() || !t[1].is_number())
            fail("field 'terms' must be an array of [coefficient, scale] pairs");
        out.push_back({t[0].get<double>(), t[1].get<double>()});
    }
    return out;
}

json terms_to_json(const std::vector<DilationTerm>& terms) {
    json arr = json::array();
    for (const auto& t : terms) arr.push_back({t.coefficient, t.scale});
    return arr;
}

}  // namespace

double get_number(const json& node, const char* field) {
    const json& v = require(node, field);
    if (!v.is_number()) fail(std::string("field '") + field + "' must be a number");
    return v.get<double>();
}

double get_number_or(const json& node, const char* field, double fallback) {
    if (!node.is_object() || !node.contains(field)) return fallback;
    return get_number(node, field);
}

std::size_t get_count(const json& node, const char* field) {
    const json& v = require(node, field);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        fail(std::string("field '") + field + "' must be a nonnegative integer");
    return v.get<std::size_t>();
}

std::size_t get_count_or(const json& node, const char* field, std::size_t fallback) {
    if (!node.is_object() || !node.contains(field)) return fallback;
    return get_count(node, field);
}

std::string get_string_or(const json& node, const char* field, const std::string& fallback) {
    if (!node.is_object() || !node.contains(field)) return fallback;
    const json& v = node.at(field);
    if (!v.is_string()) fail(std::string("field '") + field + "' must be a string");
    return v.get<std::string>();
}

std::vector<double> get_numbers(const json& node, const char* field) {
    const json& v = require(node, field);
    if (!v.is_array()) fail(std::string("field '") + field + "' must be an array of numbers");
    std::vector<double> out;
    for (const auto& x : v) {
        if (!x.is_number()) fail(std::string("field '") + field + "' must be an array of numbers");
        out.push_back(x.get<double>());
    }
    return out;
}

DiscreteMeasureSpace parse_space(const json& node) {
    const json& kind = require(node, "space");
    if (!kind.is_string()) fail("field 'space' must be \"counting\" or \"grid\"");
    auto name = kind.get<std::string>();
    if (name == "counting") return DiscreteMeasureSpace::counting(get_count(node, "n"));
    if (name == "grid")
        return DiscreteMeasureSpace::grid(get_number(node, "a"), get_number(node, "b"), get_count(node, "cells"),
                                          get_count_or(node, "exhaustion_steps", 8));
    fail("field 'space': unknown kind '" + name + "'");
}

YoungFunction parse_young(const json& node) {
    auto family = get_string_or(node, "family", "");
    if (family == "power") return YoungFunction::power(get_number(node, "p"));
    if (family == "scaled_power") return YoungFunction::scaled_power(get_number(node, "c"), get_number(node, "p"));
    if (family == "power_log") return YoungFunction::power_log(get_number(node, "p"));
    if (family == "tabulated") return YoungFunction::tabulated(get_numbers(node, "t"), get_numbers(node, "v"));
    if (family == "sum") return YoungFunction::sum(parse_young(require(node, "first")), parse_young(require(node, "second")));
    if (family == "dilation_sum") return YoungFunction::dilation_sum(parse_young(require(node, "base")), parse_terms(node));
    if (family.empty()) fail("missing field 'family'");
    fail("field 'family': unknown Young family '" + family + "'");
}

GeneralizedPhi parse_phi(const json& node, const DiscreteMeasureSpace& space) {
    auto family = get_string_or(node, "family", "");
    if (family == "weighted_power")
        return GeneralizedPhi::weighted_power(parse_rule(node, "w"), parse_rule(node, "p"));
    if (family == "variable_power") {
        auto ps = get_numbers(node, "p");
        if (ps.size() != space.size()) fail("field 'p': variable_power needs one exponent per atom");
        std::vector<std::pair<double, YoungFunction>> entries;
        for (std::size_t i = 0; i < ps.size(); ++i) entries.emplace_back(space.atom(i).label, YoungFunction::power(ps[i]));
        return GeneralizedPhi::point_table(std::move(entries));
    }
    if (family == "point_table") {
        const json& arr = require(node, "entries");
        if (!arr.is_array()) fail("field 'entries' must be an array");
        std::vector<std::pair<double, YoungFunction>> entries;
        for (const auto& e : arr) entries.emplace_back(get_number(e, "x"), parse_young(require(e, "phi")));
        return GeneralizedPhi::point_table(std::move(entries));
    }
    if (family == "dilation_sum") return GeneralizedPhi::dilation_sum(parse_phi(require(node, "base"), space), parse_terms(node));
    return GeneralizedPhi::constant(parse_young(node));
}

json to_json(const YoungFunction& phi) {
    return std::visit(overloaded{
                          [](const YoungFunction::Power& f) { return json{{"family", "power"}, {"p", f.p}}; },
                          [](const YoungFunction::ScaledPower& f) {
                              return json{{"family", "scaled_power"}, {"c", f.c}, {"p", f.p}};
                          },
                          [](const YoungFunction::PowerLog& f) { return json{{"family", "power_log"}, {"p", f.p}}; },
                          [](const YoungFunction::Tabulated& f) {
                              return json{{"family", "tabulated"}, {"t", f.t}, {"v", f.v}};
                          },
                          [](const YoungFunction::Sum& f) {
                              return json{{"family", "sum"}, {"first", to_json(f.first)}, {"second", to_json(f.second)}};
                          },
                          [](const YoungFunction::DilationSum& f) {
                              return json{{"family", "dilation_sum"}, {"base", to_json(f.base)}, {"terms", terms_to_json(f.terms)}};
                          },
                      },
                      phi.repr().kind);
}

json to_json(const GeneralizedPhi& gp) {
    return std::visit(overloaded{
                          [](const GeneralizedPhi::Constant& r) { return to_json(r.phi); },
                          [](const GeneralizedPhi::WeightedPower& r) {
                              return json{{"family", "weighted_power"}, {"w", rule_to_json(r.weight)}, {"p", rule_to_json(r.exponent)}};
                          },
                          [](const GeneralizedPhi::PointTable& r) {
                              json entries = json::array();
                              for (const auto& [x, phi] : r.entries) entries.push_back({{"x", x}, {"phi", to_json(phi)}});
                              return json{{"family", "point_table"}, {"entries", entries}};
                          },
                          [](const GeneralizedPhi::DilationSum& r) {
                              return json{{"family", "dilation_sum"}, {"base", to_json(*r.base)}, {"terms", terms_to_json(r.terms)}};
                          },
                      },
                      gp.rule());
}

}  // namespace orlicz::config
