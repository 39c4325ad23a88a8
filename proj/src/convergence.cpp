#include "orlicz/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orlicz/errors.hpp"
#include "orlicz/modular.hpp"

namespace orlicz {

namespace {

FnFamily shifted(const FnFamily& seq, const MeasurableFn& f) {
    if (f.size() != seq.atom_count()) throw PreconditionError("limit candidate length differs from the sequence");
    std::vector<MeasurableFn> out;
    out.reserve(seq.size());
    for (const auto& fn : seq) out.push_back(fn - f);
    return FnFamily(std::move(out), seq.name());
}

}  // namespace

bool SetIntegralTable::pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pass; });
}

bool CoordinateTable::pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pass; });
}

std::vector<IndexSet> default_test_sets(const DiscreteMeasureSpace& space) {
    std::vector<IndexSet> sets;
    for (const auto& z : space.exhaustion()) {
        if (z.size() < space.size()) sets.push_back(z);
    }
    if (sets.empty()) sets.push_back(space.all());
    return sets;
}

SetIntegralTable set_integral_convergence(const DiscreteMeasureSpace& space, const FnFamily& seq,
                                          const MeasurableFn& f, const std::vector<IndexSet>& test_sets, double tol) {
    seq.check_on(space);
    FnFamily diff = shifted(seq, f);
    SetIntegralTable table;
    table.tol = tol;
    for (const auto& set : test_sets) {
        SetIntegralRow row;
        row.set = set;
        row.whole_truncated_space = space.kind() == DiscreteMeasureSpace::Kind::grid && set.size() == space.size();
        for (const auto& d : diff) row.values.push_back(integrate(space, d, set));
        row.last = row.values.back();
        row.pass = std::abs(row.last) < tol;
        table.rows.push_back(std::move(row));
    }
    return table;
}

CoordinateTable coordinatewise_check(const DiscreteMeasureSpace& space, const FnFamily& seq, const MeasurableFn& y,
                                     double tol, std::optional<std::size_t> coordinates) {
    if (space.kind() != DiscreteMeasureSpace::Kind::counting)
        throw ConfigError("coordinatewise_check applies to counting-measure (sequence) spaces only");
    seq.check_on(space);
    if (y.size() != space.size()) throw PreconditionError("limit candidate length differs from atom count");
    std::size_t count = coordinates.value_or(std::max<std::size_t>(1, space.size() / 2));
    if (count == 0 || count > space.size()) throw PreconditionError("coordinatewise_check: coordinate window out of range");
    CoordinateTable table;
    table.tol = tol;
    const auto& last = seq.members().back();
    for (std::size_t n = 0; n < count; ++n) {
        double dev = std::abs(last[n] - y[n]);
        table.rows.push_back({n + 1, dev, dev <= tol});
    }
    return table;
}

std::vector<CesaroRow> cesaro_profile(const GeneralizedPhi& gp, const DiscreteMeasureSpace& space,
                                      const FnFamily& seq, const MeasurableFn& f) {
    seq.check_on(space);
    FnFamily diff = shifted(seq, f);
    const bool disjoint = are_disjoint(diff);
    std::vector<CesaroRow> rows;
    std::vector<double> running(space.size(), 0.0);
    for (std::size_t n = 1; n <= diff.size(); ++n) {
        const auto& g = diff[n - 1];
        for (std::size_t i = 0; i < running.size(); ++i) running[i] += g[i];
        const double count = static_cast<double>(n);
        std::vector<double> mean(running.size());
        for (std::size_t i = 0; i < mean.size(); ++i) mean[i] = running[i] / count;
        double rho_mean = rho(gp, space, MeasurableFn(std::move(mean)));

        double additive = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<double> part(space.size());
            for (std::size_t i = 0; i < part.size(); ++i) part[i] = diff[k][i] / count;
            additive += rho(gp, space, MeasurableFn(std::move(part)));
        }
        if (disjoint && std::abs(rho_mean - additive) > 1e-12 * std::max(std::abs(additive), 1e-300)) {
            std::ostringstream os;
            os << "cesaro_profile: disjoint additivity failed at n=" << n << " (" << rho_mean << " vs " << additive
               << ")";
            throw InvariantViolation(os.str());
        }
        rows.push_back({n, rho_mean, additive, disjoint});
    }
    return rows;
}

WeakConvergenceReport weak_convergence_report(const GeneralizedPhi& gp, const DiscreteMeasureSpace& space,
                                              const FnFamily& seq, const MeasurableFn& f,
                                              const std::vector<double>& lambda_grid,
                                              const std::vector<IndexSet>& test_sets,
                                              const std::vector<IndexSet>& chain,
                                              const std::vector<IndexSet>& exhaustion,
                                              const WeakConvergenceOptions& options) {
    seq.check_on(space);
    WeakConvergenceReport rep;
    rep.reflexive_shortcut = options.reflexive_shortcut;
    const auto& sets = test_sets.empty() ? default_test_sets(space) : test_sets;
    rep.set_integrals = set_integral_convergence(space, seq, f, sets, options.tol);

    std::ostringstream summary;
    summary << "(i) set integrals: " << (rep.set_integrals.pass() ? "pass" : "fail") << "\n";
    bool ok = rep.set_integrals.pass();

    if (options.reflexive_shortcut) {
        for (const auto& fn : seq) rep.max_norm = std::max(rep.max_norm, luxemburg_norm(gp, space, fn).value);
        bool bounded = std::isfinite(rep.max_norm);
        summary << "boundedness: sup ||f_n|| = " << rep.max_norm << (bounded ? " (finite)" : " (infinite)") << "\n";
        summary << "note: this shortcut is valid only under reflexivity hypotheses, which are not verified\n";
        ok = ok && bounded;
    } else {
        FnFamily diff = shifted(seq, f);
        rep.ando = ando_profile(gp, space, diff, lambda_grid, options.tol);
        summary << "(ii) Ando profile: " << rep.ando->verdict_text() << "\n";
        ok = ok && rep.ando->consistent();
        if (options.g) {
            if (!chain.empty()) {
                rep.equi_integrability = equi_integrability_profile(space, diff, *options.g, chain, options.tol);
                summary << "equi-integrability: " << rep.equi_integrability->verdict_text() << "\n";
                ok = ok && rep.equi_integrability->consistent();
            }
            const auto& ex = exhaustion.empty() ? space.exhaustion() : exhaustion;
            rep.tail = tail_profile(space, diff, *options.g, ex, options.tol);
            summary << "tail: " << rep.tail->verdict_text() << "\n";
            ok = ok && rep.tail->consistent();
        }
    }
    if (space.kind() == DiscreteMeasureSpace::Kind::counting) {
        rep.coordinatewise = coordinatewise_check(space, seq, f, options.tol);
        summary << "coordinatewise: " << (rep.coordinatewise->pass() ? "pass" : "fail") << "\n";
        ok = ok && rep.coordinatewise->pass();
    }
    rep.pass = ok;
    summary << "overall: " << (ok ? "consistent with weak convergence on tested range" : "not consistent") << "\n";
    rep.summary = summary.str();
    return rep;
}

}  // namespace orlicz
