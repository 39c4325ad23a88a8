#include "orlicz/generalized_phi.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orlicz/errors.hpp"
#include "orlicz/space.hpp"

namespace orlicz {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

double PointRule::operator()(double x) const {
    switch (kind_) {
        case Kind::constant:
            return value_;
        case Kind::identity:
            return x;
        case Kind::inverse:
            return 1.0 / x;
        case Kind::inverse_square:
            return 1.0 / (x * x);
    }
    return value_;
}

std::string PointRule::name() const {
    switch (kind_) {
        case Kind::constant:
            return "constant";
        case Kind::identity:
            return "identity";
        case Kind::inverse:
            return "inverse";
        case Kind::inverse_square:
            return "inverse_square";
    }
    return "constant";
}

GeneralizedPhi GeneralizedPhi::constant(YoungFunction phi) { return GeneralizedPhi(Constant{std::move(phi)}); }

GeneralizedPhi GeneralizedPhi::weighted_power(PointRule weight, PointRule exponent) {
    if (weight.kind() == PointRule::Kind::constant && !(weight.constant_value() > 0.0))
        throw ConfigError("weighted_power: weight must be > 0");
    if (exponent.kind() == PointRule::Kind::constant && !(exponent.constant_value() >= 1.0))
        throw ConfigError("weighted_power: exponent must be >= 1");
    return GeneralizedPhi(WeightedPower{weight, exponent});
}

GeneralizedPhi GeneralizedPhi::point_table(std::vector<std::pair<double, YoungFunction>> entries) {
    if (entries.empty()) throw ConfigError("point_table: no entries");
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (entries[i].first == entries[i - 1].first) throw ConfigError("point_table: duplicate atom label");
    }
    return GeneralizedPhi(PointTable{std::move(entries)});
}

GeneralizedPhi GeneralizedPhi::dilation_sum(GeneralizedPhi base, std::vector<DilationTerm> terms) {
    if (terms.empty()) throw ConfigError("dilation_sum: no terms");
    for (const auto& term : terms) {
        if (!(term.coefficient > 0.0) || !(term.scale > 0.0) || !std::isfinite(term.coefficient) ||
            !std::isfinite(term.scale))
            throw ConfigError("dilation_sum: coefficients and scales must be positive and finite");
    }
    return GeneralizedPhi(DilationSum{std::make_shared<const GeneralizedPhi>(std::move(base)), std::move(terms)});
}

const YoungFunction& GeneralizedPhi::lookup(const PointTable& table, double x) const {
    auto it = std::lower_bound(table.entries.begin(), table.entries.end(), x,
                               [](const auto& entry, double label) { return entry.first < label; });
    if (it == table.entries.end() || it->first != x) {
        std::ostringstream os;
        os << "point_table: atom label " << x << " has no Young function";
        throw ConfigError(os.str());
    }
    return it->second;
}

double GeneralizedPhi::eval(double x, double t) const {
    if (!(t >= 0.0)) throw DomainError("phi(x, t) evaluated at negative t");
    return std::visit(overloaded{
                          [t](const Constant& r) { return r.phi(t); },
                          [x, t](const WeightedPower& r) { return r.weight(x) * std::pow(t, r.exponent(x)); },
                          [this, x, t](const PointTable& r) { return lookup(r, x)(t); },
                          [x, t](const DilationSum& r) {
                              double acc = 0.0;
                              for (const auto& term : r.terms) acc += term.coefficient * r.base->eval(x, term.scale * t);
                              return acc;
                          },
                      },
                      rule_);
}

double GeneralizedPhi::right_derivative(double x, double t) const {
    if (!(t >= 0.0)) throw DomainError("right derivative requested at negative t");
    return std::visit(overloaded{
                          [t](const Constant& r) { return r.phi.right_derivative(t); },
                          [x, t](const WeightedPower& r) {
                              double p = r.exponent(x);
                              double w = r.weight(x);
                              return p == 1.0 ? w : w * p * std::pow(t, p - 1.0);
                          },
                          [this, x, t](const PointTable& r) { return lookup(r, x).right_derivative(t); },
                          [x, t](const DilationSum& r) {
                              double acc = 0.0;
                              for (const auto& term : r.terms)
                                  acc += term.coefficient * term.scale * r.base->right_derivative(x, term.scale * t);
                              return acc;
                          },
                      },
                      rule_);
}

YoungFunction GeneralizedPhi::at(double x) const {
    return std::visit(overloaded{
                          [](const Constant& r) { return r.phi; },
                          [x](const WeightedPower& r) {
                              double p = r.exponent(x);
                              double w = r.weight(x);
                              if (!std::isfinite(w) || !(w > 0.0) || !(p >= 1.0)) {
                                  std::ostringstream os;
                                  os << "weighted_power: invalid w=" << w << ", p=" << p << " at x=" << x;
                                  throw ConfigError(os.str());
                              }
                              return p == 1.0 && w == 1.0 ? YoungFunction::power(1.0)
                                                          : YoungFunction::scaled_power(w, p);
                          },
                          [this, x](const PointTable& r) { return lookup(r, x); },
                          [x](const DilationSum& r) { return YoungFunction::dilation_sum(r.base->at(x), r.terms); },
                      },
                      rule_);
}

void GeneralizedPhi::validate_on(const DiscreteMeasureSpace& space) const {
    for (const auto& atom : space.atoms()) (void)at(atom.label);
}

double eval_phi(const GeneralizedPhi& gp, double x, double t) { return gp.eval(x, t); }

double right_derivative(const GeneralizedPhi& gp, double x, double t) { return gp.right_derivative(x, t); }

}  // namespace orlicz
