#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orlicz/generalized_phi.hpp"
#include "orlicz/space.hpp"

namespace orlicz {

/// Default verdict tolerance on profile endpoints.
inline constexpr double kDefaultCriterionTol = 1e-3;

/// A table parameter -> sup over the family, with a grid verdict.
///
/// A "consistent" verdict only says the finite family behaves as the
/// criterion requires on the tested parameters; it never certifies weak
/// compactness of an infinite set.
struct CriterionProfile {
    enum class Verdict { consistent, violated };

    std::string parameter_name;
    std::vector<double> parameter;
    std::vector<double> sup_value;
    Verdict verdict = Verdict::consistent;
    std::optional<double> violated_at;
    double tol = kDefaultCriterionTol;
    bool monotone = true;  // only meaningful for lambda profiles
    std::string note;

    bool consistent() const { return verdict == Verdict::consistent; }
    std::string verdict_text() const;
};

/// Lambda(lambda) = max_{f in family} rho(lambda f) / lambda on a
/// decreasing grid in (0, 1]. Consistent iff Lambda is nondecreasing in
/// lambda (within 1e-12 relative) and Lambda(lambda_min) < tol.
CriterionProfile ando_profile(const GeneralizedPhi& gp, const DiscreteMeasureSpace& space, const FnFamily& family,
                              const std::vector<double>& lambda_grid, double tol = kDefaultCriterionTol);

/// Value at k = max_f ∫_{A_k} |f g| dμ over a decreasing chain; consistent
/// iff the last value is below tol.
CriterionProfile equi_integrability_profile(const DiscreteMeasureSpace& space, const FnFamily& family,
                                            const MeasurableFn& g, const std::vector<IndexSet>& chain,
                                            double tol = kDefaultCriterionTol);

/// Value at m = max_f ∫_{Ω \ Z_m} |f g| dμ over an exhaustion. The final
/// set of an exhaustion is the whole space, so the verdict reads the
/// largest proper prefix (or the only set when the chain has length one).
CriterionProfile tail_profile(const DiscreteMeasureSpace& space, const FnFamily& family, const MeasurableFn& g,
                              const std::vector<IndexSet>& exhaustion, double tol = kDefaultCriterionTol);

/// Truncated dominating function psi_N(x, t) = sum_{n<=N} (2^n / λ_n) φ(x, λ_n t).
struct DominatingPsiSpec {
    std::vector<double> lambda;  // λ_1 > λ_2 > ... (powers of two)
    std::vector<int> lambda_exponent;  // λ_n = 2^{-k_n}
    std::vector<double> bound;   // b_n = max_f rho(λ_n f) / λ_n
    std::size_t depth = 0;
    double certified_modular_bound = 0.0;  // sum_n 2^n b_n
    double max_psi_modular = 0.0;          // max_f rho_{psi_N}(f)
    std::optional<double> modular_tail_bound;  // 2^{-N}; constant power families only
    GeneralizedPhi psi;
};

/// Chooses λ_n as the largest 2^{-k} with b_n <= 2^{-2n} and
/// λ_n <= min(1/(2n), λ_{n-1}/2), then builds psi_N as a dilation sum.
/// Throws CriterionNotAchievedError when no λ_n >= 2^{-60} qualifies and
/// InvariantViolation if the certified bound exceeds 1.
DominatingPsiSpec construct_dominating_psi(const GeneralizedPhi& gp, const DiscreteMeasureSpace& space,
                                           const FnFamily& family, std::size_t depth);

struct PsiBoundedness {
    double max_modular;
    bool in_unit_ball;  // max_modular <= 1 + 1e-9
};

PsiBoundedness bounded_in_psi(const GeneralizedPhi& psi, const DiscreteMeasureSpace& space, const FnFamily& family);

struct LemmaBoundRow {
    std::size_t n;
    double measure;  // mu(B_n)
    double bound;    // 1 / inf_x phi(x, n)
    bool holds;
};

/// mu({|f_n| > n}) against 1 / inf_x phi(x, n) for a family inside the
/// unit modular ball. Throws PreconditionError if some member has
/// rho > 1 + 1e-9 and InvariantViolation if the bound fails.
std::vector<LemmaBoundRow> lemma_bound_check(const GeneralizedPhi& gp, const DiscreteMeasureSpace& space,
                                             const FnFamily& family, std::size_t n_max);

}  // namespace orlicz
