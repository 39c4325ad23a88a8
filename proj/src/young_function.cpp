#include "orlicz/young_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_exponent(double p, double min, const char* family) {
    if (!std::isfinite(p) || p < min) {
        std::ostringstream os;
        os << family << ": exponent p=" << p << " must be >= " << min;
        throw ConfigError(os.str());
    }
}

// Index of the segment [t[k], t[k+1]] used for the value at t; the last
// segment also covers the extrapolation range.
std::size_t segment_of(const std::vector<double>& nodes, double t) {
    auto it = std::upper_bound(nodes.begin(), nodes.end(), t);
    auto k = static_cast<std::size_t>(std::distance(nodes.begin(), it));
    if (k == 0) return 0;
    return std::min(k - 1, nodes.size() - 2);
}

}  // namespace

YoungFunction YoungFunction::power(double p) {
    require_exponent(p, 1.0, "power");
    return YoungFunction(std::make_shared<detail::YoungRepr>(detail::YoungRepr{Power{p}}));
}

YoungFunction YoungFunction::scaled_power(double c, double p) {
    require_exponent(p, 1.0, "scaled_power");
    if (!std::isfinite(c) || c <= 0.0) throw ConfigError("scaled_power: c must be > 0");
    return YoungFunction(std::make_shared<detail::YoungRepr>(detail::YoungRepr{ScaledPower{c, p}}));
}

YoungFunction YoungFunction::power_log(double p) {
    if (!std::isfinite(p) || p <= 1.0) throw ConfigError("power_log: p must be > 1");
    return YoungFunction(std::make_shared<detail::YoungRepr>(detail::YoungRepr{PowerLog{p}}));
}

YoungFunction YoungFunction::tabulated(std::vector<double> t, std::vector<double> v) {
    if (t.size() != v.size()) throw ConfigError("tabulated: t and v differ in length");
    if (t.size() < 2) throw ConfigError("tabulated: need at least two nodes");
    if (t.front() != 0.0 || v.front() != 0.0) throw ConfigError("tabulated: table must start at (0, 0)");
    double prev_slope = 0.0;
    for (std::size_t k = 0; k + 1 < t.size(); ++k) {
        if (!(t[k + 1] > t[k])) throw ConfigError("tabulated: t grid must be strictly increasing");
        if (!std::isfinite(v[k + 1])) throw ConfigError("tabulated: values must be finite");
        double slope = (v[k + 1] - v[k]) / (t[k + 1] - t[k]);
        if (slope < 0.0) throw ConfigError("tabulated: values must be nondecreasing");
        if (slope < prev_slope - 1e-12 * std::max(1.0, prev_slope))
            throw ConfigError("tabulated: values must be convex");
        prev_slope = slope;
    }
    return YoungFunction(
        std::make_shared<detail::YoungRepr>(detail::YoungRepr{Tabulated{std::move(t), std::move(v)}}));
}

YoungFunction YoungFunction::sum(YoungFunction a, YoungFunction b) {
    return YoungFunction(
        std::make_shared<detail::YoungRepr>(detail::YoungRepr{Sum{std::move(a), std::move(b)}}));
}

YoungFunction YoungFunction::dilation_sum(YoungFunction base, std::vector<DilationTerm> terms) {
    if (terms.empty()) throw ConfigError("dilation_sum: no terms");
    for (const auto& term : terms) {
        if (!(term.coefficient > 0.0) || !(term.scale > 0.0) || !std::isfinite(term.coefficient) ||
            !std::isfinite(term.scale))
            throw ConfigError("dilation_sum: coefficients and scales must be positive and finite");
    }
    return YoungFunction(std::make_shared<detail::YoungRepr>(
        detail::YoungRepr{DilationSum{std::move(base), std::move(terms)}}));
}

double YoungFunction::operator()(double t) const {
    if (!(t >= 0.0)) throw DomainError("Young function evaluated at negative t");
    return eval_unchecked(t);
}

double YoungFunction::right_derivative(double t) const {
    if (!(t >= 0.0)) throw DomainError("right derivative requested at negative t");
    return derivative_unchecked(t);
}

double YoungFunction::eval_unchecked(double t) const {
    return std::visit(
        overloaded{
            [t](const Power& f) { return std::pow(t, f.p); },
            [t](const ScaledPower& f) { return f.c * std::pow(t, f.p); },
            [t](const PowerLog& f) { return std::pow(t, f.p) * std::log1p(t); },
            [t](const Tabulated& f) {
                std::size_t k = segment_of(f.t, t);
                double slope = (f.v[k + 1] - f.v[k]) / (f.t[k + 1] - f.t[k]);
                return f.v[k] + slope * (t - f.t[k]);
            },
            [t](const Sum& f) { return f.first.eval_unchecked(t) + f.second.eval_unchecked(t); },
            [t](const DilationSum& f) {
                double acc = 0.0;
                for (const auto& term : f.terms) acc += term.coefficient * f.base.eval_unchecked(term.scale * t);
                return acc;
            },
        },
        repr_->kind);
}

double YoungFunction::derivative_unchecked(double t) const {
    return std::visit(
        overloaded{
            [t](const Power& f) { return f.p == 1.0 ? 1.0 : f.p * std::pow(t, f.p - 1.0); },
            [t](const ScaledPower& f) { return f.p == 1.0 ? f.c : f.c * f.p * std::pow(t, f.p - 1.0); },
            [t](const PowerLog& f) {
                return f.p * std::pow(t, f.p - 1.0) * std::log1p(t) + std::pow(t, f.p) / (1.0 + t);
            },
            [this, t](const Tabulated&) {
                double h = 1e-6 * std::max(1.0, t);
                return (eval_unchecked(t + h) - eval_unchecked(t)) / h;
            },
            [t](const Sum& f) {
                return f.first.derivative_unchecked(t) + f.second.derivative_unchecked(t);
            },
            [t](const DilationSum& f) {
                double acc = 0.0;
                for (const auto& term : f.terms)
                    acc += term.coefficient * term.scale * f.base.derivative_unchecked(term.scale * t);
                return acc;
            },
        },
        repr_->kind);
}

std::optional<double> YoungFunction::conjugate_closed_form(double u) const {
    if (!(u >= 0.0)) throw DomainError("conjugate requested at negative u");
    auto scaled = [u](double c, double p) -> double {
        if (p == 1.0) return u <= c ? 0.0 : std::numeric_limits<double>::infinity();
        // sup_t (t u - c t^p) is attained at t* = (u / (c p))^{1/(p-1)}.
        double t_star = std::pow(u / (c * p), 1.0 / (p - 1.0));
        return (p - 1.0) / p * u * t_star;
    };
    if (const auto* f = std::get_if<Power>(&repr_->kind)) return scaled(1.0, f->p);
    if (const auto* f = std::get_if<ScaledPower>(&repr_->kind)) return scaled(f->c, f->p);
    return std::nullopt;
}

const YoungFunction::Tabulated* YoungFunction::as_tabulated() const {
    return std::get_if<Tabulated>(&repr_->kind);
}

std::string YoungFunction::family_name() const {
    return std::visit(overloaded{
                          [](const Power&) { return std::string("power"); },
                          [](const ScaledPower&) { return std::string("scaled_power"); },
                          [](const PowerLog&) { return std::string("power_log"); },
                          [](const Tabulated&) { return std::string("tabulated"); },
                          [](const Sum&) { return std::string("sum"); },
                          [](const DilationSum&) { return std::string("dilation_sum"); },
                      },
                      repr_->kind);
}

}  // namespace orlicz
