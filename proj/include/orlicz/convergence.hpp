#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orlicz/compactness.hpp"
#include "orlicz/generalized_phi.hpp"
#include "orlicz/space.hpp"

namespace orlicz {

struct SetIntegralRow {
    IndexSet set;
    std::vector<double> values;  // ∫_A (f_n - f) dμ, n = 1..N
    double last = 0.0;
    bool pass = false;  // |last| < tol
    bool whole_truncated_space = false;  // A is all of a "grid" truncation
};

struct SetIntegralTable {
    std::vector<SetIntegralRow> rows;
    double tol = kDefaultCriterionTol;
    bool pass() const;
};

SetIntegralTable set_integral_convergence(const DiscreteMeasureSpace& space, const FnFamily& seq,
                                          const MeasurableFn& f, const std::vector<IndexSet>& test_sets,
                                          double tol = kDefaultCriterionTol);

/// The exhaustion prefixes without the final whole-space set.
std::vector<IndexSet> default_test_sets(const DiscreteMeasureSpace& space);

struct CoordinateRow {
    std::size_t n;     // 1-based coordinate
    double deviation;  // |x^K_n - y_n| at the last k
    bool pass;         // deviation <= tol
};

struct CoordinateTable {
    std::vector<CoordinateRow> rows;
    double tol = 0.0;
    bool pass() const;
};

/// |x^k_n - y_n| at the last k for the fixed coordinates n = 1..coordinates
/// (default: the first half of the atoms). Counting spaces only.
CoordinateTable coordinatewise_check(const DiscreteMeasureSpace& space, const FnFamily& seq, const MeasurableFn& y,
                                     double tol, std::optional<std::size_t> coordinates = std::nullopt);

struct CesaroRow {
    std::size_t n;
    double rho_mean;       // rho((g_1 + ... + g_n) / n), g_i = f_i - f
    double additive_sum;   // sum_i rho(g_i / n); equals rho_mean when disjoint
    bool disjoint;
};

/// Modular of Cesàro means of the shifted sequence. When the shifted
/// members are disjoint, asserts modular additivity (1e-12 relative).
std::vector<CesaroRow> cesaro_profile(const GeneralizedPhi& gp, const DiscreteMeasureSpace& space,
                                      const FnFamily& seq, const MeasurableFn& f);

struct WeakConvergenceOptions {
    double tol = kDefaultCriterionTol;
    std::optional<MeasurableFn> g;  // enables the equi-integrability and tail profiles
    /// Boundedness plus set integrals only. Valid only under reflexivity,
    /// which is not verified.
    bool reflexive_shortcut = false;
};

struct WeakConvergenceReport {
    SetIntegralTable set_integrals;                     // condition (i)
    std::optional<CriterionProfile> ando;               // condition (ii)
    std::optional<CriterionProfile> equi_integrability;  // with g
    std::optional<CriterionProfile> tail;                // with g
    std::optional<CoordinateTable> coordinatewise;       // counting spaces
    double max_norm = 0.0;                               // sup_n ||f_n|| (reflexive flavor)
    bool reflexive_shortcut = false;
    bool pass = false;
    std::string summary;
};

WeakConvergenceReport weak_convergence_report(const GeneralizedPhi& gp, const DiscreteMeasureSpace& space,
                                              const FnFamily& seq, const MeasurableFn& f,
                                              const std::vector<double>& lambda_grid,
                                              const std::vector<IndexSet>& test_sets,
                                              const std::vector<IndexSet>& chain,
                                              const std::vector<IndexSet>& exhaustion,
                                              const WeakConvergenceOptions& options = {});

}  // namespace orlicz
