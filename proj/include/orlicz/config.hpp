#pragma once

#include <json.hpp>

#include "orlicz/generalized_phi.hpp"
#include "orlicz/space.hpp"

namespace orlicz::config {

using nlohmann::json;

/// {"space": "counting", "n": 64} or
/// {"space": "grid", "a": 0.01, "b": 200, "cells": 20000, "exhaustion_steps": 8}
DiscreteMeasureSpace parse_space(const json& node);

/// {"family": "power", "p": 2}, {"family": "scaled_power", "c": 0.5, "p": 2},
/// {"family": "power_log", "p": 1.5}, {"family": "tabulated", "t": [...], "v": [...]},
/// {"family": "sum", "first": {...}, "second": {...}},
/// {"family": "dilation_sum", "base": {...}, "terms": [[c, s], ...]}
YoungFunction parse_young(const json& node);

/// Every Young family above (applied at every point), plus
/// {"family": "weighted_power", "w": "inverse_square" | number, "p": number | rule},
/// {"family": "variable_power", "p": [p_1, ..., p_N]} (one exponent per atom),
/// {"family": "point_table", "entries": [{"x": label, "phi": {...}}, ...]}, and
/// {"family": "dilation_sum", "base": <generalized>, "terms": [[c, s], ...]}.
/// The space is needed to resolve per-atom forms.
GeneralizedPhi parse_phi(const json& node, const DiscreteMeasureSpace& space);

/// Config fragment that parse_phi / parse_young accept back.
json to_json(const YoungFunction& phi);
json to_json(const GeneralizedPhi& gp);

/// Field accessors that raise ConfigError naming the missing/mistyped field.
double get_number(const json& node, const char* field);
double get_number_or(const json& node, const char* field, double fallback);
std::size_t get_count(const json& node, const char* field);
std::size_t get_count_or(const json& node, const char* field, std::size_t fallback);
std::string get_string_or(const json& node, const char* field, const std::string& fallback);
std::vector<double> get_numbers(const json& node, const char* field);

}  // namespace orlicz::config
