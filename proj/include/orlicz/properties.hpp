#pragma once

#include <optional>
#include <vector>

#include "orlicz/generalized_phi.hpp"
#include "orlicz/space.hpp"

namespace orlicz {

/// Geometric grid of `count` points from `lo` to `hi` inclusive.
std::vector<double> geometric_grid(double lo, double hi, std::size_t count);
/// Uniform grid of `count` points from `lo` to `hi` inclusive.
std::vector<double> uniform_grid(double lo, double hi, std::size_t count);

/// 1e-6 .. 1e-2, geometric.
std::vector<double> default_small_grid();
/// 1 .. 2000, geometric.
std::vector<double> default_large_grid();
/// 512 geometric points on [1e-6, 1e4].
std::vector<double> default_t_grid();
/// Candidate deltas: 2^-k for k = 0..30 together with {1, 2, 5} * 10^-j for j = 0..9.
std::vector<double> default_delta_grid();

struct GridPoint {
    double x;
    double t;
};

/// Grid verdicts for the structural hypotheses, each with its witnesses.
struct PropertyReport {
    // Delta2: max phi(x, 2t) / phi(x, t); nullopt means unbounded on the grid.
    std::optional<double> delta2_constant;
    GridPoint delta2_witness{0.0, 0.0};
    std::vector<GridPoint> delta2_skipped;  // phi(x, t) < 1e-300
    // Nabla2 estimate: min phi(x, 2t) / phi(x, t) over the same points.
    std::optional<double> nabla2_constant;

    // N-function: r(t) = phi(x, t) / t compared to r(1) at the grid extremes.
    bool n_function_at_zero = false;
    bool n_function_at_infinity = false;
    double n_function_zero_witness = 0.0;      // max_x r(t_min) / r(1)
    double n_function_infinity_witness = 0.0;  // min_x r(t_max) / r(1)
    bool n_function_ok() const { return n_function_at_zero && n_function_at_infinity; }

    // Constrained: sup_x phi(x, t_min) <= tol and inf_x phi(x, t_max) >= 1 / tol.
    bool constrained_ok = false;
    double sup_phi_small = 0.0;
    double inf_phi_large = 0.0;

    double t_min = 0.0;
    double t_max = 0.0;
    double tol_small = 0.0;
    std::vector<double> t_grid_small;
    std::vector<double> t_grid_large;
};

/// Grid-relative check of Delta2, N-function limits and constrainedness.
PropertyReport check_properties(const GeneralizedPhi& gp, const DiscreteMeasureSpace& space,
                                const std::vector<double>& t_grid_small, const std::vector<double>& t_grid_large,
                                double tol_small = 1e-3);

struct UmrResult {
    double epsilon;
    std::optional<double> delta;  // nullopt: none found on the grid
};

/// For each epsilon, the largest delta in delta_grid with
/// epsilon * psi(x, t) >= phi(x, delta t) / delta at every atom and grid t.
std::vector<UmrResult> uniformly_more_rapid(const GeneralizedPhi& psi, const GeneralizedPhi& phi,
                                            const DiscreteMeasureSpace& space, const std::vector<double>& eps_list,
                                            const std::vector<double>& delta_grid, const std::vector<double>& t_grid);

}  // namespace orlicz
