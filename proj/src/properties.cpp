#include "orlicz/properties.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

bool is_x_independent(const GeneralizedPhi& gp) {
    if (std::holds_alternative<GeneralizedPhi::Constant>(gp.rule())) return true;
    if (const auto* d = std::get_if<GeneralizedPhi::DilationSum>(&gp.rule())) return is_x_independent(*d->base);
    return false;
}

// Labels at which phi actually has to be evaluated.
std::vector<double> labels_to_scan(const GeneralizedPhi& gp, const DiscreteMeasureSpace& space) {
    if (is_x_independent(gp)) return {space.atom(0).label};
    std::vector<double> labels;
    labels.reserve(space.size());
    for (const auto& atom : space.atoms()) labels.push_back(atom.label);
    return labels;
}

void require_grid(const std::vector<double>& grid, const char* what) {
    if (grid.empty()) throw ConfigError(std::string(what) + ": grid is empty");
    for (double t : grid) {
        if (!(t > 0.0) || !std::isfinite(t)) throw ConfigError(std::string(what) + ": grid values must be positive");
    }
}

}  // namespace

std::vector<double> geometric_grid(double lo, double hi, std::size_t count) {
    if (!(lo > 0.0) || !(hi > lo) || count < 2) throw ConfigError("geometric_grid: need 0 < lo < hi and count >= 2");
    std::vector<double> g(count);
    double step = std::log(hi / lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) g[i] = lo * std::exp(step * static_cast<double>(i));
    g.front() = lo;
    g.back() = hi;
    return g;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t count) {
    if (!(hi > lo) || count < 2) throw ConfigError("uniform_grid: need lo < hi and count >= 2");
    std::vector<double> g(count);
    double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) g[i] = lo + step * static_cast<double>(i);
    g.back() = hi;
    return g;
}

std::vector<double> default_small_grid() { return geometric_grid(1e-6, 1e-2, 9); }
std::vector<double> default_large_grid() { return geometric_grid(1.0, 2000.0, 12); }
std::vector<double> default_t_grid() { return geometric_grid(1e-6, 1e4, 512); }

std::vector<double> default_delta_grid() {
    std::vector<double> g;
    for (int k = 0; k <= 30; ++k) g.push_back(std::ldexp(1.0, -k));
    for (int j = 0; j <= 9; ++j) {
        double scale = std::pow(10.0, -j);
        for (double m : {1.0, 2.0, 5.0}) {
            if (m * scale <= 1.0) g.push_back(m * scale);
        }
    }
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

PropertyReport check_properties(const GeneralizedPhi& gp, const DiscreteMeasureSpace& space,
                                const std::vector<double>& t_grid_small, const std::vector<double>& t_grid_large,
                                double tol_small) {
    require_grid(t_grid_small, "check_properties small");
    require_grid(t_grid_large, "check_properties large");
    if (!(tol_small > 0.0 && tol_small < 1.0)) throw ConfigError("check_properties: tol_small must lie in (0, 1)");
    gp.validate_on(space);

    PropertyReport rep;
    rep.t_grid_small = t_grid_small;
    rep.t_grid_large = t_grid_large;
    rep.tol_small = tol_small;
    rep.t_min = *std::min_element(t_grid_small.begin(), t_grid_small.end());
    rep.t_max = *std::max_element(t_grid_large.begin(), t_grid_large.end());

    std::vector<double> all_t(t_grid_small);
    all_t.insert(all_t.end(), t_grid_large.begin(), t_grid_large.end());

    const auto labels = labels_to_scan(gp, space);

    double k_max = 0.0;
    double k_min = std::numeric_limits<double>::infinity();
    bool unbounded = false;
    bool any_ratio = false;
    double sup_small = 0.0;
    double inf_large = std::numeric_limits<double>::infinity();
    double zero_witness = 0.0;
    double inf_witness = std::numeric_limits<double>::infinity();

    for (double x : labels) {
        for (double t : all_t) {
            double base = gp.eval(x, t);
            if (base < 1e-300) {
                rep.delta2_skipped.push_back({x, t});
                continue;
            }
            double ratio = gp.eval(x, 2.0 * t) / base;
            if (!std::isfinite(ratio)) {
                unbounded = true;
                continue;
            }
            any_ratio = true;
            if (ratio > k_max) {
                k_max = ratio;
                rep.delta2_witness = {x, t};
            }
            k_min = std::min(k_min, ratio);
        }
        sup_small = std::max(sup_small, gp.eval(x, rep.t_min));
        inf_large = std::min(inf_large, gp.eval(x, rep.t_max));

        double r_one = gp.eval(x, 1.0);
        double r_zero = gp.eval(x, rep.t_min) / rep.t_min;
        double r_inf = gp.eval(x, rep.t_max) / rep.t_max;
        if (r_one > 0.0) {
            zero_witness = std::max(zero_witness, r_zero / r_one);
            inf_witness = std::min(inf_witness, r_inf / r_one);
        } else {
            zero_witness = std::max(zero_witness, r_zero > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
        }
    }

    if (!unbounded && any_ratio) rep.delta2_constant = k_max;
    if (any_ratio) rep.nabla2_constant = k_min;
    rep.sup_phi_small = sup_small;
    rep.inf_phi_large = inf_large;
    rep.constrained_ok = sup_small <= tol_small && inf_large >= 1.0 / tol_small;
    rep.n_function_zero_witness = zero_witness;
    rep.n_function_infinity_witness = inf_witness;
    rep.n_function_at_zero = zero_witness <= tol_small;
    rep.n_function_at_infinity = inf_witness >= 1.0 / tol_small;
    return rep;
}

std::vector<UmrResult> uniformly_more_rapid(const GeneralizedPhi& psi, const GeneralizedPhi& phi,
                                            const DiscreteMeasureSpace& space, const std::vector<double>& eps_list,
                                            const std::vector<double>& delta_grid, const std::vector<double>& t_grid) {
    if (eps_list.empty()) throw ConfigError("uniformly_more_rapid: eps_list is empty");
    require_grid(delta_grid, "uniformly_more_rapid delta");
    require_grid(t_grid, "uniformly_more_rapid t");
    auto [t_lo, t_hi] = std::minmax_element(t_grid.begin(), t_grid.end());
    if (*t_lo > 1e-6 || *t_hi < 1e3) throw ConfigError("uniformly_more_rapid: t grid must span at least [1e-6, 1e3]");
    for (double eps : eps_list) {
        if (!(eps > 0.0)) throw ConfigError("uniformly_more_rapid: epsilons must be positive");
    }
    psi.validate_on(space);
    phi.validate_on(space);

    std::vector<double> deltas(delta_grid);
    std::sort(deltas.begin(), deltas.end(), std::greater<>());

    std::vector<double> labels = labels_to_scan(psi, space);
    if (!is_x_independent(phi)) labels = labels_to_scan(phi, space);

    // Relative slack for rounding in the two sides of the inequality.
    constexpr double slack = 1e-12;
    auto holds = [&](double eps, double delta) {
        for (double x : labels) {
            for (double t : t_grid) {
                double lhs = eps * psi.eval(x, t);
                double rhs = phi.eval(x, delta * t) / delta;
                if (lhs * (1.0 + slack) < rhs) return false;
            }
        }
        return true;
    };

    std::vector<UmrResult> out;
    out.reserve(eps_list.size());
    for (double eps : eps_list) {
        UmrResult r{eps, std::nullopt};
        // phi(x, delta t) / delta is nondecreasing in delta, so the passing deltas form a down-set.
        for (double delta : deltas) {
            if (holds(eps, delta)) {
                r.delta = delta;
                break;
            }
        }
        out.push_back(r);
    }
    return out;
}

}  // namespace orlicz
