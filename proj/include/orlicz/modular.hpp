#pragma once

#include "orlicz/generalized_phi.hpp"
#include "orlicz/space.hpp"

namespace orlicz {

/// rho_phi(f) = sum_i phi(x_i, |f_i|) mu_i. Overflow yields +inf.
double rho(const GeneralizedPhi& gp, const DiscreteMeasureSpace& space, const MeasurableFn& f);

/// rho_phi(c f) without materializing c f.
double rho_scaled(const GeneralizedPhi& gp, const DiscreteMeasureSpace& space, const MeasurableFn& f, double c);

struct NormResult {
    double value = 0.0;
    double r_lo = 0.0;
    double r_hi = 0.0;
    int iterations = 0;
    double residual = 0.0;  // rho(f / value)
};

/// Luxemburg norm inf{r > 0 : rho(f / r) <= 1} by bisection on the
/// nonincreasing map r -> rho(f / r). The bracket starts at r = 1 and is
/// widened by doubling or halving; bisection stops once
/// r_hi - r_lo <= tol * value. Returns the bracket midpoint.
///
/// Throws NotInSpaceError if rho(f / r) is infinite for every r <= 2^60.
NormResult luxemburg_norm(const GeneralizedPhi& gp, const DiscreteMeasureSpace& space, const MeasurableFn& f,
                          double tol = 1e-10);

struct UnitBallCheck {
    double rho_value;
    double norm_value;
    bool consistent;  // (rho <= 1 + 1e-9) == (norm <= 1 + 1e-6)
};

UnitBallCheck unit_ball_check(const GeneralizedPhi& gp, const DiscreteMeasureSpace& space, const MeasurableFn& f);

}  // namespace orlicz
