#pragma once

#include <vector>

#include "orlicz/generalized_phi.hpp"

namespace orlicz {

/// phi*(x, u) = sup_{t >= 0} (t u - phi(x, t)) sampled on a u-grid.
struct ConjugateTable {
    double x = 0.0;
    std::vector<double> u;
    std::vector<double> phi_star;
    std::vector<double> argmax_t;
    std::vector<bool> truncated;       // maximum sat on the last t-grid node
    std::vector<double> grid_phi_star;  // sweep value, kept for cross-checks
    bool closed_form = false;
};

/// Conjugate row for the Young function phi(x, .).
///
/// Power and scaled power families use their closed form; tables are
/// conjugated exactly over their nodes (+inf past the last slope); every
/// other family uses a two-pointer sweep over {0} ∪ t_grid followed by a
/// golden-section refinement between the neighbours of the grid argmax.
ConjugateTable conjugate(const GeneralizedPhi& gp, double x, const std::vector<double>& u_grid,
                         const std::vector<double>& t_grid);

/// phi*(x, u) at a single point.
double conjugate_at(const GeneralizedPhi& gp, double x, double u, const std::vector<double>& t_grid);

/// phi(x, t) + phi*(x, u) - t u  (nonnegative by Young's inequality).
double young_gap(const GeneralizedPhi& gp, double x, double t, double u, const std::vector<double>& t_grid);

struct YoungEquality {
    double u;          // phi'(x, t)
    double gap;        // young_gap at (t, u)
    double tolerance;  // max(1e-6, 2 * grid spacing * u)
};

YoungEquality young_equality_at_derivative(const GeneralizedPhi& gp, double x, double t,
                                           const std::vector<double>& t_grid);

struct BiconjugateResult {
    double max_discrepancy;  // max_t |phi**(x, t) - phi(x, t)|
    double worst_t;
    double grid_spacing;  // largest gap in either grid
};

/// Conjugates twice (second pass by grid sweep over u_grid) and compares
/// with phi on t_grid.
BiconjugateResult biconjugate_check(const GeneralizedPhi& gp, double x, const std::vector<double>& t_grid,
                                    const std::vector<double>& u_grid);

/// Largest gap between consecutive entries, including the gap from 0.
double grid_spacing_near(const std::vector<double>& grid, double value);
double max_grid_spacing(const std::vector<double>& grid);

}  // namespace orlicz
