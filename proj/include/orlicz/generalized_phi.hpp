#pragma once

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "orlicz/young_function.hpp"

namespace orlicz {

class DiscreteMeasureSpace;

/// A scalar function of the atom label, used for weights and exponents.
class PointRule {
public:
    enum class Kind { constant, identity, inverse, inverse_square };

    static PointRule constant(double c) { return PointRule(Kind::constant, c); }
    static PointRule identity() { return PointRule(Kind::identity, 0.0); }
    static PointRule inverse() { return PointRule(Kind::inverse, 0.0); }
    static PointRule inverse_square() { return PointRule(Kind::inverse_square, 0.0); }

    double operator()(double x) const;
    Kind kind() const { return kind_; }
    double constant_value() const { return value_; }
    std::string name() const;

private:
    PointRule(Kind k, double v) : kind_(k), value_(v) {}
    Kind kind_;
    double value_;
};

/// A point-indexed family x -> phi(x, .) of Young functions.
///
/// Rules: the same Young function everywhere, w(x) t^{p(x)}, an explicit
/// table keyed by atom label, or a dilation sum sum_n c_n phi(x, s_n t)
/// over another generalized function.
class GeneralizedPhi {
public:
    struct Constant {
        YoungFunction phi;
    };
    struct WeightedPower {
        PointRule weight;
        PointRule exponent;
    };
    struct PointTable {
        std::vector<std::pair<double, YoungFunction>> entries;  // sorted by label
    };
    struct DilationSum {
        std::shared_ptr<const GeneralizedPhi> base;
        std::vector<DilationTerm> terms;
    };
    using Rule = std::variant<Constant, WeightedPower, PointTable, DilationSum>;

    static GeneralizedPhi constant(YoungFunction phi);
    static GeneralizedPhi weighted_power(PointRule weight, PointRule exponent);
    static GeneralizedPhi point_table(std::vector<std::pair<double, YoungFunction>> entries);
    static GeneralizedPhi dilation_sum(GeneralizedPhi base, std::vector<DilationTerm> terms);

    /// phi(x, t). DomainError for t < 0, ConfigError if x does not resolve.
    double eval(double x, double t) const;
    double right_derivative(double x, double t) const;

    /// The Young function phi(x, .) as a standalone value.
    YoungFunction at(double x) const;

    /// Throws ConfigError unless every atom of the space resolves to a
    /// valid Young function.
    void validate_on(const DiscreteMeasureSpace& space) const;

    const Rule& rule() const { return rule_; }

private:
    explicit GeneralizedPhi(Rule r) : rule_(std::move(r)) {}
    const YoungFunction& lookup(const PointTable& table, double x) const;

    Rule rule_;
};

/// phi(x, t) for a given generalized function (free-function spelling).
double eval_phi(const GeneralizedPhi& gp, double x, double t);
double right_derivative(const GeneralizedPhi& gp, double x, double t);

}  // namespace orlicz
