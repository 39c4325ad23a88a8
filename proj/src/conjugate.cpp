#include "orlicz/conjugate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orlicz/errors.hpp"

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_increasing(const std::vector<double>& grid, const char* what) {
    if (grid.empty()) throw ConfigError(std::string(what) + " grid is empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= 0.0) || !std::isfinite(grid[i]))
            throw ConfigError(std::string(what) + " grid must be finite and nonnegative");
        if (i > 0 && !(grid[i] > grid[i - 1])) throw ConfigError(std::string(what) + " grid must be increasing");
    }
}

// max of t u - phi(t) on [lo, hi] for concave objective.
std::pair<double, double> golden_max(const YoungFunction& phi, double u, double lo, double hi) {
    constexpr double inv_phi = 0.6180339887498949;
    auto obj = [&](double t) { return t * u - phi(t); };
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = obj(c);
    double fd = obj(d);
    for (int it = 0; it < 90 && b - a > 0.0; ++it) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = obj(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = obj(d);
        }
    }
    double t = fc >= fd ? c : d;
    return {std::max(fc, fd), t};
}

// Sweep over the sampled points (xs[j], ys[j]); returns for each slope the
// index of the maximizer of xs[j] * slope - ys[j]. The pointer only moves
// forward because the maximizer is nondecreasing in the slope.
std::vector<std::size_t> sweep_argmax(const std::vector<double>& xs, const std::vector<double>& ys,
                                      const std::vector<double>& slopes) {
    std::vector<std::size_t> idx(slopes.size());
    std::size_t j = 0;
    for (std::size_t k = 0; k < slopes.size(); ++k) {
        double s = slopes[k];
        while (j + 1 < xs.size() && xs[j + 1] * s - ys[j + 1] >= xs[j] * s - ys[j]) ++j;
        if (k > 0 && j < idx[k - 1]) throw InvariantViolation("conjugate sweep: argmax decreased in u");
        idx[k] = j;
    }
    return idx;
}

}  // namespace

double max_grid_spacing(const std::vector<double>& grid) {
    double h = 0.0;
    double prev = 0.0;
    for (double g : grid) {
        h = std::max(h, g - prev);
        prev = g;
    }
    return h;
}

double grid_spacing_near(const std::vector<double>& grid, double value) {
    if (grid.empty()) return 0.0;
    auto it = std::lower_bound(grid.begin(), grid.end(), value);
    double right = it == grid.end() ? grid.back() : *it;
    double left = it == grid.begin() ? 0.0 : *(it - 1);
    double h = right - left;
    if (it != grid.end() && it + 1 != grid.end()) h = std::max(h, *(it + 1) - right);
    return h;
}

ConjugateTable conjugate(const GeneralizedPhi& gp, double x, const std::vector<double>& u_grid,
                         const std::vector<double>& t_grid) {
    require_increasing(u_grid, "conjugate u");
    require_increasing(t_grid, "conjugate t");
    const YoungFunction phi = gp.at(x);

    ConjugateTable table;
    table.x = x;
    table.u = u_grid;
    const std::size_t n_u = u_grid.size();
    table.phi_star.resize(n_u);
    table.argmax_t.resize(n_u);
    table.truncated.assign(n_u, false);
    table.grid_phi_star.resize(n_u);

    if (const auto* tab = phi.as_tabulated()) {
        // Piecewise linear: the supremum sits on a node, or is infinite past the last slope.
        const auto& nodes = tab->t;
        const auto& vals = tab->v;
        double last_slope = (vals.back() - vals[vals.size() - 2]) / (nodes.back() - nodes[nodes.size() - 2]);
        auto idx = sweep_argmax(nodes, vals, u_grid);
        for (std::size_t k = 0; k < n_u; ++k) {
            double value = nodes[idx[k]] * u_grid[k] - vals[idx[k]];
            table.grid_phi_star[k] = value;
            if (u_grid[k] > last_slope) {
                table.phi_star[k] = kInf;
                table.argmax_t[k] = kInf;
                table.truncated[k] = true;
            } else {
                table.phi_star[k] = value;
                table.argmax_t[k] = nodes[idx[k]];
            }
        }
        table.closed_form = true;
        return table;
    }

    std::vector<double> ts;
    ts.reserve(t_grid.size() + 1);
    if (t_grid.front() > 0.0) ts.push_back(0.0);
    ts.insert(ts.end(), t_grid.begin(), t_grid.end());
    std::vector<double> vals(ts.size());
    for (std::size_t j = 0; j < ts.size(); ++j) vals[j] = phi(ts[j]);

    auto idx = sweep_argmax(ts, vals, u_grid);
    for (std::size_t k = 0; k < n_u; ++k) {
        const double u = u_grid[k];
        const std::size_t j = idx[k];
        double best = ts[j] * u - vals[j];
        double arg = ts[j];
        table.truncated[k] = (j + 1 == ts.size()) && u > 0.0;
        if (u > 0.0 && j + 1 < ts.size()) {
            double lo = j == 0 ? ts[0] : ts[j - 1];
            auto [refined, t_ref] = golden_max(phi, u, lo, ts[j + 1]);
            if (refined > best) {
                best = refined;
                arg = t_ref;
            }
        }
        table.grid_phi_star[k] = best;
        table.argmax_t[k] = arg;
        if (auto exact = phi.conjugate_closed_form(u)) {
            table.phi_star[k] = *exact;
            table.closed_form = true;
            if (!std::isfinite(*exact)) table.truncated[k] = true;
        } else {
            table.phi_star[k] = best;
        }
    }
    return table;
}

double conjugate_at(const GeneralizedPhi& gp, double x, double u, const std::vector<double>& t_grid) {
    if (!(u >= 0.0)) throw DomainError("conjugate requested at negative u");
    return conjugate(gp, x, {u}, t_grid).phi_star.front();
}

double young_gap(const GeneralizedPhi& gp, double x, double t, double u, const std::vector<double>& t_grid) {
    if (!(t >= 0.0) || !(u >= 0.0)) throw DomainError("young_gap requires t, u >= 0");
    double star = conjugate_at(gp, x, u, t_grid);
    if (!std::isfinite(star)) return kInf;
    return gp.eval(x, t) + star - t * u;
}

YoungEquality young_equality_at_derivative(const GeneralizedPhi& gp, double x, double t,
                                           const std::vector<double>& t_grid) {
    if (!(t >= 0.0)) throw DomainError("young_equality_at_derivative requires t >= 0");
    YoungEquality out{};
    out.u = gp.right_derivative(x, t);
    out.gap = young_gap(gp, x, t, out.u, t_grid);
    out.tolerance = std::max(1e-6, 2.0 * grid_spacing_near(t_grid, t) * out.u);
    return out;
}

BiconjugateResult biconjugate_check(const GeneralizedPhi& gp, double x, const std::vector<double>& t_grid,
                                    const std::vector<double>& u_grid) {
    require_increasing(t_grid, "biconjugate t");
    require_increasing(u_grid, "biconjugate u");
    ConjugateTable star = conjugate(gp, x, u_grid, t_grid);

    std::vector<double> us;
    std::vector<double> vs;
    for (std::size_t k = 0; k < star.u.size(); ++k) {
        if (!std::isfinite(star.phi_star[k])) break;
        us.push_back(star.u[k]);
        vs.push_back(star.phi_star[k]);
    }
    if (us.empty()) throw ConfigError("biconjugate_check: conjugate is infinite on the whole u grid");

    auto idx = sweep_argmax(us, vs, t_grid);
    BiconjugateResult out{0.0, 0.0, std::max(max_grid_spacing(t_grid), max_grid_spacing(u_grid))};
    for (std::size_t j = 0; j < t_grid.size(); ++j) {
        double t = t_grid[j];
        double bi = t * us[idx[j]] - vs[idx[j]];
        double diff = std::abs(bi - gp.eval(x, t));
        if (diff > out.max_discrepancy) {
            out.max_discrepancy = diff;
            out.worst_t = t;
        }
    }
    return out;
}

}  // namespace orlicz
