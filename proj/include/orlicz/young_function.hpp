#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace orlicz {

namespace detail {
struct YoungRepr;
}

/// One term c * phi(s * t) of a dilation sum.
struct DilationTerm {
    double coefficient;
    double scale;
};

/// A finite Young function t -> phi(t) on [0, inf).
///
/// Immutable value type; copies share the underlying representation.
/// Supported families: power, scaled power, power-log, the sum of two
/// Young functions, sums of dilations sum_n c_n phi(s_n t), and convex
/// tables with linear interpolation and last-slope extrapolation.
class YoungFunction {
public:
    struct Power {
        double p;
    };
    struct ScaledPower {
        double c;
        double p;
    };
    struct PowerLog {
        double p;
    };
    struct Tabulated {
        std::vector<double> t;
        std::vector<double> v;
    };
    struct Sum;
    struct DilationSum;

    static YoungFunction power(double p);
    static YoungFunction scaled_power(double c, double p);
    static YoungFunction power_log(double p);
    static YoungFunction tabulated(std::vector<double> t, std::vector<double> v);
    static YoungFunction sum(YoungFunction a, YoungFunction b);
    static YoungFunction dilation_sum(YoungFunction base, std::vector<DilationTerm> terms);

    /// phi(t); throws DomainError for t < 0.
    double operator()(double t) const;
    /// Right derivative phi'(t); throws DomainError for t < 0.
    double right_derivative(double t) const;

    /// Exact conjugate phi*(u) when the family has one (power and scaled
    /// power). May be +inf (p = 1 beyond the slope).
    std::optional<double> conjugate_closed_form(double u) const;

    /// Table nodes when the function is piecewise linear, which makes the
    /// conjugate an exact maximum over the nodes.
    const Tabulated* as_tabulated() const;

    std::string family_name() const;

    const detail::YoungRepr& repr() const { return *repr_; }

private:
    explicit YoungFunction(std::shared_ptr<const detail::YoungRepr> r) : repr_(std::move(r)) {}
    double eval_unchecked(double t) const;
    double derivative_unchecked(double t) const;

    std::shared_ptr<const detail::YoungRepr> repr_;
};

struct YoungFunction::Sum {
    YoungFunction first;
    YoungFunction second;
};

struct YoungFunction::DilationSum {
    YoungFunction base;
    std::vector<DilationTerm> terms;
};

namespace detail {
struct YoungRepr {
    std::variant<YoungFunction::Power, YoungFunction::ScaledPower, YoungFunction::PowerLog,
                 YoungFunction::Tabulated, YoungFunction::Sum, YoungFunction::DilationSum>
        kind;
};
}  // namespace detail

}  // namespace orlicz
