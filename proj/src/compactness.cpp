#include "orlicz/compactness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "orlicz/errors.hpp"
#include "orlicz/modular.hpp"

namespace orlicz {

namespace {

double ando_value(const GeneralizedPhi& gp, const DiscreteMeasureSpace& space, const FnFamily& family,
                  double lambda) {
    double sup = 0.0;
    for (const auto& f : family) sup = std::max(sup, rho_scaled(gp, space, f, lambda) / lambda);
    return sup;
}

double max_overlap(const DiscreteMeasureSpace& space, const FnFamily& family, const MeasurableFn& g,
                   const IndexSet& set) {
    double sup = 0.0;
    for (const auto& f : family) {
        double acc = 0.0;
        for (auto i : set) acc += std::abs(f[i] * g[i]) * space.atom(i).weight;
        sup = std::max(sup, acc);
    }
    return sup;
}

IndexSet complement(const DiscreteMeasureSpace& space, const IndexSet& set) {
    std::vector<char> in(space.size(), 0);
    for (auto i : set) in.at(i) = 1;
    IndexSet out;
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (!in[i]) out.push_back(i);
    }
    return out;
}

void check_g(const DiscreteMeasureSpace& space, const FnFamily& family, const MeasurableFn& g) {
    family.check_on(space);
    if (g.size() != space.size()) throw PreconditionError("g length differs from atom count");
}

bool is_constant_power(const GeneralizedPhi& gp) {
    const auto* c = std::get_if<GeneralizedPhi::Constant>(&gp.rule());
    if (!c) return false;
    const auto& kind = c->phi.repr().kind;
    return std::holds_alternative<YoungFunction::Power>(kind) || std::holds_alternative<YoungFunction::ScaledPower>(kind);
}

}  // namespace

std::string CriterionProfile::verdict_text() const {
    std::ostringstream os;
    if (consistent()) {
        os << "consistent with criterion on tested range";
    } else {
        os << "violated at parameter value " << violated_at.value_or(std::numeric_limits<double>::quiet_NaN());
    }
    if (!note.empty()) os << " (" << note << ")";
    return os.str();
}

CriterionProfile ando_profile(const GeneralizedPhi& gp, const DiscreteMeasureSpace& space, const FnFamily& family,
                              const std::vector<double>& lambda_grid, double tol) {
    family.check_on(space);
    if (lambda_grid.empty()) throw ConfigError("ando_profile: lambda grid is empty");
    for (std::size_t k = 0; k < lambda_grid.size(); ++k) {
        double l = lambda_grid[k];
        if (!(l > 0.0 && l <= 1.0)) throw ConfigError("ando_profile: lambda values must lie in (0, 1]");
        if (k > 0 && !(l < lambda_grid[k - 1])) throw ConfigError("ando_profile: lambda grid must be decreasing");
    }

    CriterionProfile prof;
    prof.parameter_name = "lambda";
    prof.parameter = lambda_grid;
    prof.tol = tol;
    prof.note = "a finite family is only tested for consistency; boundedness of the family is assumed";
    prof.sup_value.reserve(lambda_grid.size());
    for (double l : lambda_grid) prof.sup_value.push_back(ando_value(gp, space, family, l));

    // Lambda must not increase as lambda decreases.
    for (std::size_t k = 1; k < prof.sup_value.size(); ++k) {
        double prev = prof.sup_value[k - 1];
        double cur = prof.sup_value[k];
        if (!(cur <= prev + 1e-12 * std::max(1.0, prev))) {
            prof.monotone = false;
            prof.violated_at = lambda_grid[k];
            break;
        }
    }
    double last = prof.sup_value.back();
    if (!prof.monotone) {
        prof.verdict = CriterionProfile::Verdict::violated;
    } else if (!(last < tol)) {
        prof.verdict = CriterionProfile::Verdict::violated;
        prof.violated_at = lambda_grid.back();
    }
    return prof;
}

CriterionProfile equi_integrability_profile(const DiscreteMeasureSpace& space, const FnFamily& family,
                                            const MeasurableFn& g, const std::vector<IndexSet>& chain, double tol) {
    check_g(space, family, g);
    if (chain.empty()) throw ConfigError("equi_integrability_profile: chain is empty");
    for (std::size_t k = 1; k < chain.size(); ++k) {
        std::vector<char> prev(space.size(), 0);
        for (auto i : chain[k - 1]) prev.at(i) = 1;
        for (auto i : chain[k]) {
            if (!prev.at(i)) throw PreconditionError("equi_integrability_profile: chain is not decreasing");
        }
    }
    CriterionProfile prof;
    prof.parameter_name = "set_index";
    prof.tol = tol;
    for (std::size_t k = 0; k < chain.size(); ++k) {
        prof.parameter.push_back(static_cast<double>(k + 1));
        prof.sup_value.push_back(max_overlap(space, family, g, chain[k]));
    }
    if (!(prof.sup_value.back() < tol)) {
        prof.verdict = CriterionProfile::Verdict::violated;
        prof.violated_at = prof.parameter.back();
    }
    return prof;
}

CriterionProfile tail_profile(const DiscreteMeasureSpace& space, const FnFamily& family, const MeasurableFn& g,
                              const std::vector<IndexSet>& exhaustion, double tol) {
    check_g(space, family, g);
    if (exhaustion.empty()) throw ConfigError("tail_profile: exhaustion is empty");
    CriterionProfile prof;
    prof.parameter_name = "m";
    prof.tol = tol;
    for (std::size_t m = 0; m < exhaustion.size(); ++m) {
        prof.parameter.push_back(static_cast<double>(m + 1));
        prof.sup_value.push_back(max_overlap(space, family, g, complement(space, exhaustion[m])));
    }
    std::size_t judged = exhaustion.size() >= 2 ? exhaustion.size() - 2 : 0;
    if (exhaustion.size() >= 2 && exhaustion.back().size() == space.size()) {
        prof.note = "judged at the largest proper prefix";
    } else {
        judged = exhaustion.size() - 1;
    }
    if (!(prof.sup_value[judged] < tol)) {
        prof.verdict = CriterionProfile::Verdict::violated;
        prof.violated_at = prof.parameter[judged];
    }
    return prof;
}

DominatingPsiSpec construct_dominating_psi(const GeneralizedPhi& gp, const DiscreteMeasureSpace& space,
                                           const FnFamily& family, std::size_t depth) {
    family.check_on(space);
    if (depth == 0) throw PreconditionError("construct_dominating_psi: depth must be >= 1");

    std::vector<double> lambdas;
    std::vector<int> exponents;
    std::vector<double> bounds;
    std::vector<DilationTerm> terms;
    double certified = 0.0;
    for (std::size_t n = 1; n <= depth; ++n) {
        double cap = 1.0 / (2.0 * static_cast<double>(n));
        if (!lambdas.empty()) cap = std::min(cap, lambdas.back() / 2.0);
        int k = 0;
        while (std::ldexp(1.0, -k) > cap) ++k;
        const double target = std::ldexp(1.0, -2 * static_cast<int>(n));
        double b = ando_value(gp, space, family, std::ldexp(1.0, -k));
        while (!(b <= target)) {
            ++k;
            if (k > 60) {
                std::ostringstream os;
                os << "criterion bound not achieved on this family: no lambda >= 2^-60 gives "
                   << "sup rho(lambda f)/lambda <= 2^-" << 2 * n;
                throw CriterionNotAchievedError(os.str());
            }
            b = ando_value(gp, space, family, std::ldexp(1.0, -k));
        }
        double lambda = std::ldexp(1.0, -k);
        lambdas.push_back(lambda);
        exponents.push_back(k);
        bounds.push_back(b);
        double weight = std::ldexp(1.0, static_cast<int>(n));
        certified += weight * b;
        terms.push_back({weight / lambda, lambda});
    }

    GeneralizedPhi psi = GeneralizedPhi::dilation_sum(gp, terms);
    double max_mod = 0.0;
    for (const auto& f : family) max_mod = std::max(max_mod, rho(psi, space, f));
    if (!(max_mod <= 1.0 + 1e-9) || !(certified <= 1.0 + 1e-12))
        throw InvariantViolation("dominating psi: family left the unit modular ball of psi_N");

    std::optional<double> tail;
    if (is_constant_power(gp)) tail = std::ldexp(1.0, -static_cast<int>(depth));

    return DominatingPsiSpec{std::move(lambdas), std::move(exponents), std::move(bounds), depth, certified, max_mod,
                             tail, std::move(psi)};
}

PsiBoundedness bounded_in_psi(const GeneralizedPhi& psi, const DiscreteMeasureSpace& space, const FnFamily& family) {
    family.check_on(space);
    double max_mod = 0.0;
    for (const auto& f : family) max_mod = std::max(max_mod, rho(psi, space, f));
    return {max_mod, max_mod <= 1.0 + 1e-9};
}

std::vector<LemmaBoundRow> lemma_bound_check(const GeneralizedPhi& gp, const DiscreteMeasureSpace& space,
                                             const FnFamily& family, std::size_t n_max) {
    family.check_on(space);
    if (family.size() < n_max) throw PreconditionError("lemma_bound_check: family has fewer than n_max members");
    for (std::size_t i = 0; i < family.size(); ++i) {
        double r = rho(gp, space, family[i]);
        if (!(r <= 1.0 + 1e-9)) {
            std::ostringstream os;
            os << "lemma_bound_check: member " << i + 1 << " has modular " << r << " > 1 (outside the unit ball)";
            throw PreconditionError(os.str());
        }
    }
    auto exceed = exceedance_sets(space, family, n_max);
    std::vector<LemmaBoundRow> rows;
    rows.reserve(n_max);
    for (const auto& e : exceed) {
        double t = static_cast<double>(e.n);
        double inf_phi = std::numeric_limits<double>::infinity();
        for (const auto& atom : space.atoms()) inf_phi = std::min(inf_phi, gp.eval(atom.label, t));
        double bound = 1.0 / inf_phi;
        bool holds = e.measure <= bound + 1e-9;
        if (!holds) {
            std::ostringstream os;
            os << "lemma bound violated at n=" << e.n << ": mu(B_n)=" << e.measure << " > " << bound;
            throw InvariantViolation(os.str());
        }
        rows.push_back({e.n, e.measure, bound, holds});
    }
    return rows;
}

}  // namespace orlicz
