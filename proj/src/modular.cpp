#include "orlicz/modular.hpp"

#include <cmath>
#include <limits>

#include "orlicz/errors.hpp"

namespace orlicz {

double rho_scaled(const GeneralizedPhi& gp, const DiscreteMeasureSpace& space, const MeasurableFn& f, double c) {
    if (f.size() != space.size()) throw PreconditionError("function length differs from atom count");
    double acc = 0.0;
    const auto& atoms = space.atoms();
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        double t = std::abs(c * f[i]);
        if (t == 0.0) continue;
        acc += gp.eval(atoms[i].label, t) * atoms[i].weight;
    }
    return std::isnan(acc) ? std::numeric_limits<double>::infinity() : acc;
}

double rho(const GeneralizedPhi& gp, const DiscreteMeasureSpace& space, const MeasurableFn& f) {
    return rho_scaled(gp, space, f, 1.0);
}

NormResult luxemburg_norm(const GeneralizedPhi& gp, const DiscreteMeasureSpace& space, const MeasurableFn& f,
                          double tol) {
    if (!(tol > 0.0)) throw PreconditionError("luxemburg_norm: tol must be positive");
    if (f.size() != space.size()) throw PreconditionError("function length differs from atom count");
    NormResult res;
    if (f.is_zero()) return res;

    auto modular_at = [&](double r) { return rho_scaled(gp, space, f, 1.0 / r); };

    // Invariant: rho(f / r_hi) <= 1 < rho(f / r_lo).
    double r_lo = 1.0;
    double r_hi = 1.0;
    const double r_ceiling = std::ldexp(1.0, 60);
    if (modular_at(1.0) <= 1.0) {
        r_lo = 0.5;
        while (modular_at(r_lo) <= 1.0) {
            r_hi = r_lo;
            r_lo *= 0.5;
            ++res.iterations;
            if (r_lo < std::numeric_limits<double>::min()) break;
        }
    } else {
        r_hi = 2.0;
        while (!(modular_at(r_hi) <= 1.0)) {
            r_lo = r_hi;
            r_hi *= 2.0;
            ++res.iterations;
            if (r_hi > r_ceiling) throw NotInSpaceError("rho(f/r) > 1 for every r up to 2^60: not in the space at this resolution");
        }
    }

    while (r_hi - r_lo > tol * r_lo) {
        double mid = 0.5 * (r_lo + r_hi);
        if (mid <= r_lo || mid >= r_hi) break;
        if (modular_at(mid) <= 1.0)
            r_hi = mid;
        else
            r_lo = mid;
        ++res.iterations;
    }
    res.r_lo = r_lo;
    res.r_hi = r_hi;
    res.value = 0.5 * (r_lo + r_hi);
    res.residual = modular_at(res.value);
    return res;
}

UnitBallCheck unit_ball_check(const GeneralizedPhi& gp, const DiscreteMeasureSpace& space, const MeasurableFn& f) {
    UnitBallCheck out{};
    out.rho_value = rho(gp, space, f);
    out.norm_value = luxemburg_norm(gp, space, f).value;
    out.consistent = (out.rho_value <= 1.0 + 1e-9) == (out.norm_value <= 1.0 + 1e-6);
    return out;
}

}  // namespace orlicz
