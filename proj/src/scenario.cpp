#include "orlicz/scenario.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "orlicz/compactness.hpp"
#include "orlicz/config.hpp"
#include "orlicz/conjugate.hpp"
#include "orlicz/convergence.hpp"
#include "orlicz/csv.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/modular.hpp"
#include "orlicz/properties.hpp"

namespace orlicz::scenario {

namespace fs = std::filesystem;
using nlohmann::json;
using config::get_count_or;
using config::get_number_or;
using config::get_string_or;

namespace {

const std::vector<double> kDefaultLambdaGrid{1.0, 0.5, 0.1, 0.05, 0.01, 0.005, 0.001, 5e-4, 1e-4};

// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
double unit_draw(std::uint64_t& state) {
    // splitmix64
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

std::vector<double> number_list_or(const json& node, const char* field, const std::vector<double>& fallback) {
    if (!node.contains(field)) return fallback;
    return config::get_numbers(node, field);
}

MeasurableFn g_function(const json& diag, const DiscreteMeasureSpace& space) {
    if (!diag.contains("g")) return MeasurableFn(std::vector<double>(space.size(), 1.0));
    const json& g = diag.at("g");
    if (g.is_string()) {
        auto name = g.get<std::string>();
        if (name == "one") return MeasurableFn(std::vector<double>(space.size(), 1.0));
        if (name == "zero") return MeasurableFn::zero(space.size());
        throw ConfigError("field 'g': unknown function '" + name + "'");
    }
    auto values = config::get_numbers(diag, "g");
    if (values.size() != space.size()) throw ConfigError("field 'g': needs one value per atom");
    return MeasurableFn(std::move(values));
}

std::string pass_word(bool ok) { return ok ? "pass" : "fail"; }

std::string profile_verdict(const CriterionProfile& p) { return p.consistent() ? "consistent" : "violated"; }

csv::Table profile_table(const CriterionProfile& p) {
    csv::Table t({"parameter", "sup_value", "verdict"});
    for (std::size_t k = 0; k < p.parameter.size(); ++k)
        t.add_row({csv::format(p.parameter[k]), csv::format(p.sup_value[k]), profile_verdict(p)});
    return t;
}

// Shared state across diagnostics of one run.
struct RunContext {
    const Scenario& sc;
    fs::path out_dir;
    std::optional<GeneralizedPhi> last_psi;
    std::size_t index = 0;

    double tol_for(const json& diag) const {
        if (sc.tol_override) return *sc.tol_override;
        return get_number_or(diag, "tol", sc.tol);
    }

    std::string file_name(const std::string& type, const std::string& ext) const {
        std::ostringstream os;
        os.width(2);
        os.fill('0');
        os << index;
        return os.str() + "_" + type + ext;
    }

    std::string write(const std::string& type, const std::string& content, const std::string& ext = ".csv") const {
        auto name = file_name(type, ext);
        csv::write_atomic(out_dir / name, content);
        return name;
    }

    const GeneralizedPhi& psi() const {
        if (sc.psi) return *sc.psi;
        if (last_psi) return *last_psi;
        throw ConfigError("diagnostic needs a psi: give 'psi' in the scenario or run dominating_psi first");
    }
};

struct Evaluation {
    bool natural_ok;
    std::string summary;
    std::vector<std::string> files;
    std::optional<bool> constrained;  // properties only
};

bool value_matches(const json& diag, double value) {
    if (!diag.contains("expect_value")) return true;
    double expected = config::get_number(diag, "expect_value");
    double tol = get_number_or(diag, "value_tol", 1e-9);
    return std::abs(value - expected) <= tol;
}

std::size_t member_index(const json& diag, const FnFamily& family) {
    std::size_t m = get_count_or(diag, "member", 1);
    if (m == 0 || m > family.size()) throw ConfigError("field 'member' out of range");
    return m - 1;
}

Evaluation run_norm(RunContext& ctx, const json& diag) {
    const auto& sc = ctx.sc;
    double tol = get_number_or(diag, "norm_tol", 1e-10);
    csv::Table t({"member", "norm", "r_lo", "r_hi", "iterations", "residual"});
    std::vector<double> norms;
    for (std::size_t i = 0; i < sc.family.size(); ++i) {
        auto r = luxemburg_norm(sc.phi, sc.space, sc.family[i], tol);
        norms.push_back(r.value);
        t.add_row({std::to_string(i + 1), csv::format(r.value), csv::format(r.r_lo), csv::format(r.r_hi),
                   std::to_string(r.iterations), csv::format(r.residual)});
    }
    double headline = norms[member_index(diag, sc.family)];
    std::ostringstream os;
    os << "norm = " << csv::format(headline) << " (member " << member_index(diag, sc.family) + 1 << ")";
    return {value_matches(diag, headline), os.str(), {ctx.write("norm", t.str())}, {}};
}

Evaluation run_rho(RunContext& ctx, const json& diag) {
    const auto& sc = ctx.sc;
    csv::Table t({"member", "rho"});
    std::vector<double> values;
    for (std::size_t i = 0; i < sc.family.size(); ++i) {
        values.push_back(rho(sc.phi, sc.space, sc.family[i]));
        t.add_row({std::to_string(i + 1), csv::format(values.back())});
    }
    double headline = values[member_index(diag, sc.family)];
    std::ostringstream os;
    os << "rho = " << csv::format(headline) << " (member " << member_index(diag, sc.family) + 1 << ")";
    return {value_matches(diag, headline), os.str(), {ctx.write("rho", t.str())}, {}};
}

Evaluation run_unit_ball(RunContext& ctx, const json&) {
    const auto& sc = ctx.sc;
    csv::Table t({"member", "rho", "norm", "consistent"});
    bool all = true;
    for (std::size_t i = 0; i < sc.family.size(); ++i) {
        auto c = unit_ball_check(sc.phi, sc.space, sc.family[i]);
        all = all && c.consistent;
        t.add_row({std::to_string(i + 1), csv::format(c.rho_value), csv::format(c.norm_value),
                   c.consistent ? "true" : "false"});
    }
    return {all, all ? "modular and norm unit balls agree" : "unit-ball mismatch", {ctx.write("unit_ball", t.str())}, {}};
}

Evaluation run_properties(RunContext& ctx, const json& diag) {
    const auto& sc = ctx.sc;
    auto small = number_list_or(diag, "t_grid_small", default_small_grid());
    auto large = number_list_or(diag, "t_grid_large", default_large_grid());
    auto rep = check_properties(sc.phi, sc.space, small, large, get_number_or(diag, "tol_small", 1e-3));
    csv::Table t({"key", "value"});
    auto yes = [](bool b) { return std::string(b ? "true" : "false"); };
    t.add_row({"delta2_constant", rep.delta2_constant ? csv::format(*rep.delta2_constant) : "unbounded_on_grid"});
    t.add_row({"delta2_witness_x", csv::format(rep.delta2_witness.x)});
    t.add_row({"delta2_witness_t", csv::format(rep.delta2_witness.t)});
    t.add_row({"delta2_skipped_points", std::to_string(rep.delta2_skipped.size())});
    t.add_row({"nabla2_constant", rep.nabla2_constant ? csv::format(*rep.nabla2_constant) : "none"});
    t.add_row({"n_function_at_zero", yes(rep.n_function_at_zero)});
    t.add_row({"n_function_zero_witness", csv::format(rep.n_function_zero_witness)});
    t.add_row({"n_function_at_infinity", yes(rep.n_function_at_infinity)});
    t.add_row({"n_function_infinity_witness", csv::format(rep.n_function_infinity_witness)});
    t.add_row({"constrained_ok", yes(rep.constrained_ok)});
    t.add_row({"sup_phi_t_min", csv::format(rep.sup_phi_small)});
    t.add_row({"inf_phi_t_max", csv::format(rep.inf_phi_large)});
    t.add_row({"t_min", csv::format(rep.t_min)});
    t.add_row({"t_max", csv::format(rep.t_max)});
    t.add_row({"tol_small", csv::format(rep.tol_small)});
    std::ostringstream os;
    os << "delta2_constant=" << (rep.delta2_constant ? csv::format(*rep.delta2_constant) : "unbounded")
       << " n_function_ok=" << yes(rep.n_function_ok()) << " constrained_ok=" << yes(rep.constrained_ok)
       << " (sup_x phi(x,t_min)=" << csv::format(rep.sup_phi_small)
       << ", inf_x phi(x,t_max)=" << csv::format(rep.inf_phi_large) << ")";
    bool ok = rep.delta2_constant.has_value() && rep.n_function_ok() && rep.constrained_ok;
    return {ok, os.str(), {ctx.write("properties", t.str())}, rep.constrained_ok};
}

Evaluation run_ando(RunContext& ctx, const json& diag) {
    const auto& sc = ctx.sc;
    auto grid = number_list_or(diag, "lambda_grid", kDefaultLambdaGrid);
    auto prof = ando_profile(sc.phi, sc.space, sc.family, grid, ctx.tol_for(diag));
    std::ostringstream os;
    os << "Lambda(lambda_min)=" << csv::format(prof.sup_value.back()) << " monotone=" << (prof.monotone ? "yes" : "no")
       << "; " << prof.verdict_text();
    return {prof.consistent(), os.str(), {ctx.write("ando", profile_table(prof).str())}, {}};
}

Evaluation run_equi(RunContext& ctx, const json& diag) {
    const auto& sc = ctx.sc;
    auto chain = shrinking_sets(sc.space, get_count_or(diag, "chain_depth", 8));
    auto prof = equi_integrability_profile(sc.space, sc.family, g_function(diag, sc.space), chain, ctx.tol_for(diag));
    return {prof.consistent(), prof.verdict_text(), {ctx.write("equi_integrability", profile_table(prof).str())}, {}};
}

Evaluation run_tail(RunContext& ctx, const json& diag) {
    const auto& sc = ctx.sc;
    auto prof = tail_profile(sc.space, sc.family, g_function(diag, sc.space), sc.space.exhaustion(), ctx.tol_for(diag));
    return {prof.consistent(), prof.verdict_text(), {ctx.write("tail", profile_table(prof).str())}, {}};
}

Evaluation run_dominating(RunContext& ctx, const json& diag) {
    const auto& sc = ctx.sc;
    auto spec = construct_dominating_psi(sc.phi, sc.space, sc.family, get_count_or(diag, "depth", 10));
    csv::Table t({"n", "lambda", "lambda_exponent", "bound", "bound_target"});
    for (std::size_t n = 0; n < spec.depth; ++n) {
        t.add_row({std::to_string(n + 1), csv::format(spec.lambda[n]), std::to_string(spec.lambda_exponent[n]),
                   csv::format(spec.bound[n]), csv::format(std::ldexp(1.0, -2 * static_cast<int>(n + 1)))});
    }
    json fragment = config::to_json(spec.psi);
    auto csv_name = ctx.write("dominating_psi", t.str());
    auto json_name = ctx.write("dominating_psi", fragment.dump(2) + "\n", ".json");
    ctx.last_psi = spec.psi;
    std::ostringstream os;
    os << "depth=" << spec.depth << " max rho_psi=" << csv::format(spec.max_psi_modular)
       << " certified bound=" << csv::format(spec.certified_modular_bound);
    if (spec.modular_tail_bound) os << " tail bound=" << csv::format(*spec.modular_tail_bound);
    return {true, os.str(), {csv_name, json_name}, {}};
}

Evaluation run_bounded_in_psi(RunContext& ctx, const json&) {
    const auto& sc = ctx.sc;
    auto b = bounded_in_psi(ctx.psi(), sc.space, sc.family);
    csv::Table t({"max_modular", "in_unit_ball"});
    t.add_row({csv::format(b.max_modular), b.in_unit_ball ? "true" : "false"});
    std::ostringstream os;
    os << "max rho_psi=" << csv::format(b.max_modular) << " in_unit_ball=" << (b.in_unit_ball ? "true" : "false");
    return {b.in_unit_ball, os.str(), {ctx.write("bounded_in_psi", t.str())}, {}};
}

Evaluation run_umr(RunContext& ctx, const json& diag) {
    const auto& sc = ctx.sc;
    auto eps = number_list_or(diag, "eps", {0.5, 0.25, 0.125, 0.0625, 0.03125});
    auto deltas = number_list_or(diag, "delta_grid", default_delta_grid());
    auto ts = number_list_or(diag, "t_grid", default_t_grid());
    auto res = uniformly_more_rapid(ctx.psi(), sc.phi, sc.space, eps, deltas, ts);
    csv::Table t({"epsilon", "delta"});
    bool all = true;
    for (const auto& r : res) {
        all = all && r.delta.has_value();
        t.add_row({csv::format(r.epsilon), r.delta ? csv::format(*r.delta) : "none"});
    }
    return {all, all ? "delta found for every epsilon" : "no delta found for some epsilon", {ctx.write("umr", t.str())}, {}};
}

Evaluation run_lemma(RunContext& ctx, const json& diag) {
    const auto& sc = ctx.sc;
    auto rows = lemma_bound_check(sc.phi, sc.space, sc.family, get_count_or(diag, "n_max", sc.family.size()));
    csv::Table t({"n", "measure", "bound", "holds"});
    bool values_ok = true;
    for (const auto& r : rows) {
        values_ok = values_ok && value_matches(diag, r.measure);
        t.add_row({std::to_string(r.n), csv::format(r.measure), csv::format(r.bound), r.holds ? "true" : "false"});
    }
    std::ostringstream os;
    os << "mu(B_n) <= 1/inf_x phi(x,n) for n<=" << rows.size() << "; mu(B_1)=" << csv::format(rows.front().measure);
    return {values_ok, os.str(), {ctx.write("lemma_bound", t.str())}, {}};
}

Evaluation run_exceedance(RunContext& ctx, const json& diag) {
    const auto& sc = ctx.sc;
    auto rows = exceedance_sets(sc.space, sc.family, get_count_or(diag, "n_max", sc.family.size()));
    csv::Table t({"n", "measure"});
    bool values_ok = true;
    for (const auto& r : rows) {
        values_ok = values_ok && value_matches(diag, r.measure);
        t.add_row({std::to_string(r.n), csv::format(r.measure)});
    }
    return {values_ok, values_ok ? "exceedance measures as expected" : "exceedance measures off expectation",
            {ctx.write("exceedance", t.str())}, {}};
}

Evaluation run_cesaro(RunContext& ctx, const json&) {
    const auto& sc = ctx.sc;
    auto rows = cesaro_profile(sc.phi, sc.space, sc.family, sc.limit);
    csv::Table t({"n", "rho_mean", "additive_sum", "disjoint"});
    for (const auto& r : rows)
        t.add_row({std::to_string(r.n), csv::format(r.rho_mean), csv::format(r.additive_sum), r.disjoint ? "true" : "false"});
    std::ostringstream os;
    os << "rho(mean_N)=" << csv::format(rows.back().rho_mean) << " disjoint=" << (rows.back().disjoint ? "true" : "false");
    return {true, os.str(), {ctx.write("cesaro", t.str())}, {}};
}

Evaluation run_weak(RunContext& ctx, const json& diag) {
    const auto& sc = ctx.sc;
    WeakConvergenceOptions opt;
    opt.tol = ctx.tol_for(diag);
    opt.reflexive_shortcut = diag.value("reflexive_shortcut", false);
    if (diag.contains("g")) opt.g = g_function(diag, sc.space);
    auto grid = number_list_or(diag, "lambda_grid", kDefaultLambdaGrid);
    auto chain = shrinking_sets(sc.space, get_count_or(diag, "chain_depth", 8));
    auto rep = weak_convergence_report(sc.phi, sc.space, sc.family, sc.limit, grid, {}, chain, {}, opt);

    csv::Table t({"condition", "parameter", "value", "verdict"});
    for (std::size_t k = 0; k < rep.set_integrals.rows.size(); ++k) {
        const auto& row = rep.set_integrals.rows[k];
        for (std::size_t n = 0; n < row.values.size(); ++n)
            t.add_row({"set_" + std::to_string(k + 1), std::to_string(n + 1), csv::format(row.values[n]), pass_word(row.pass)});
    }
    auto add_profile = [&t](const std::string& name, const std::optional<CriterionProfile>& p) {
        if (!p) return;
        for (std::size_t k = 0; k < p->parameter.size(); ++k)
            t.add_row({name, csv::format(p->parameter[k]), csv::format(p->sup_value[k]), profile_verdict(*p)});
    };
    add_profile("ando", rep.ando);
    add_profile("equi_integrability", rep.equi_integrability);
    add_profile("tail", rep.tail);
    if (rep.coordinatewise) {
        for (const auto& r : rep.coordinatewise->rows)
            t.add_row({"coordinate", std::to_string(r.n), csv::format(r.deviation), pass_word(r.pass)});
    }
    std::string summary = rep.summary;
    while (!summary.empty() && summary.back() == '\n') summary.pop_back();
    for (auto& c : summary) {
        if (c == '\n') c = ';';
    }
    return {rep.pass, summary, {ctx.write("weak_convergence", t.str())}, {}};
}

Evaluation run_coordinatewise(RunContext& ctx, const json& diag) {
    const auto& sc = ctx.sc;
    std::optional<std::size_t> coords;
    if (diag.contains("coordinates")) coords = config::get_count(diag, "coordinates");
    auto table = coordinatewise_check(sc.space, sc.family, sc.limit, get_number_or(diag, "tol", 1e-2), coords);
    csv::Table t({"n", "deviation", "verdict"});
    for (const auto& r : table.rows) t.add_row({std::to_string(r.n), csv::format(r.deviation), pass_word(r.pass)});
    return {table.pass(), table.pass() ? "every fixed coordinate converges" : "some coordinate does not converge",
            {ctx.write("coordinatewise", t.str())}, {}};
}

Evaluation run_conjugate(RunContext& ctx, const json& diag) {
    const auto& sc = ctx.sc;
    std::size_t atom = get_count_or(diag, "atom", 1);
    if (atom == 0 || atom > sc.space.size()) throw ConfigError("field 'atom' out of range");
    auto u_grid = number_list_or(diag, "u_grid", uniform_grid(0.0, get_number_or(diag, "u_max", 10.0),
                                                               get_count_or(diag, "u_count", 101)));
    auto t_grid = number_list_or(diag, "t_grid", default_t_grid());
    auto table = conjugate(sc.phi, sc.space.atom(atom - 1).label, u_grid, t_grid);
    csv::Table t({"u", "phi_star", "argmax_t", "truncated_flag"});
    std::size_t truncated = 0;
    for (std::size_t k = 0; k < table.u.size(); ++k) {
        truncated += table.truncated[k] ? 1 : 0;
        t.add_row({csv::format(table.u[k]), csv::format(table.phi_star[k]), csv::format(table.argmax_t[k]),
                   table.truncated[k] ? "1" : "0"});
    }
    std::ostringstream os;
    os << "conjugate at x=" << csv::format(table.x) << ": " << table.u.size() << " points, " << truncated << " truncated";
    return {true, os.str(), {ctx.write("conjugate", t.str())}, {}};
}

using Runner = std::function<Evaluation(RunContext&, const json&)>;

const std::map<std::string, Runner>& runners() {
    static const std::map<std::string, Runner> table{
        {"norm", run_norm},
        {"rho", run_rho},
        {"unit_ball", run_unit_ball},
        {"properties", run_properties},
        {"ando", run_ando},
        {"equi_integrability", run_equi},
        {"tail", run_tail},
        {"dominating_psi", run_dominating},
        {"bounded_in_psi", run_bounded_in_psi},
        {"umr", run_umr},
        {"lemma_bound", run_lemma},
        {"exceedance", run_exceedance},
        {"cesaro", run_cesaro},
        {"weak_convergence", run_weak},
        {"coordinatewise", run_coordinatewise},
        {"conjugate", run_conjugate},
    };
    return table;
}

bool apply_expectation(const std::string& expect, const Evaluation& ev) {
    if (expect == "pass") return ev.natural_ok;
    if (expect == "fail") return !ev.natural_ok;
    if (expect == "constrained" || expect == "not_constrained") {
        if (!ev.constrained) throw ConfigError("expect '" + expect + "' applies to the properties diagnostic only");
        return expect == "constrained" ? *ev.constrained : !*ev.constrained;
    }
    throw ConfigError("field 'expect': unknown value '" + expect + "'");
}

FnFamily load_family(const json& node, const fs::path& base_dir, const DiscreteMeasureSpace& space,
                     const GeneralizedPhi& phi, std::uint64_t seed) {
    if (!node.is_object()) throw ConfigError("field 'family' must be an object");
    std::string name = get_string_or(node, "name", "");
    std::vector<MeasurableFn> members;
    if (node.contains("inline")) {
        const json& arr = node.at("inline");
        if (!arr.is_array()) throw ConfigError("field 'family.inline' must be an array of arrays");
        for (const auto& row : arr) {
            if (!row.is_array()) throw ConfigError("field 'family.inline' must be an array of arrays");
            std::vector<double> values;
            for (const auto& v : row) {
                if (!v.is_number()) throw ConfigError("field 'family.inline' holds a non-number");
                values.push_back(v.get<double>());
            }
            members.emplace_back(std::move(values));
        }
    } else if (node.contains("csv")) {
        auto path = fs::path(node.at("csv").get<std::string>());
        if (path.is_relative()) path = base_dir / path;
        for (auto& col : csv::read_columns(path)) members.emplace_back(std::move(col));
    } else if (node.contains("generator")) {
        return generate_family(node, space, phi, seed);
    } else {
        throw ConfigError("field 'family' needs one of 'inline', 'csv', 'generator'");
    }
    FnFamily family(std::move(members), name);
    family.check_on(space);
    return family;
}

}  // namespace

FnFamily generate_family(const json& spec, const DiscreteMeasureSpace& space, const GeneralizedPhi& phi,
                         std::uint64_t seed) {
    auto gen = get_string_or(spec, "generator", "");
    const std::size_t n_atoms = space.size();
    std::vector<MeasurableFn> members;
    if (gen == "unit_vectors") {
        std::size_t count = get_count_or(spec, "count", n_atoms);
        auto growth = get_string_or(spec, "growth", "none");
        if (growth != "none" && growth != "linear") throw ConfigError("unit_vectors: growth must be none or linear");
        if (count > n_atoms) throw ConfigError("unit_vectors: count exceeds the number of atoms");
        for (std::size_t k = 0; k < count; ++k) {
            std::vector<double> v(n_atoms, 0.0);
            v[k] = growth == "linear" ? static_cast<double>(k + 1) : 1.0;
            members.emplace_back(std::move(v));
        }
    } else if (gen == "disjoint_bumps") {
        std::size_t count = config::get_count(spec, "count");
        double width = config::get_number(spec, "width");
        double height = get_number_or(spec, "height", 1.0);
        // Width counts atoms on counting spaces and label length on grids.
        std::size_t cells = space.kind() == DiscreteMeasureSpace::Kind::grid
                                ? static_cast<std::size_t>(std::llround(width / space.cell_width()))
                                : static_cast<std::size_t>(std::llround(width));
        if (cells == 0) throw ConfigError("disjoint_bumps: width is smaller than one atom");
        if (count * cells > n_atoms) throw ConfigError("disjoint_bumps: bumps do not fit in the space");
        for (std::size_t k = 0; k < count; ++k) {
            std::vector<double> v(n_atoms, 0.0);
            for (std::size_t i = k * cells; i < (k + 1) * cells; ++i) v[i] = height;
            members.emplace_back(std::move(v));
        }
    } else if (gen == "escaping_bumps") {
        std::size_t count = config::get_count(spec, "count");
        for (std::size_t n = 1; n <= count; ++n) {
            std::vector<double> v(n_atoms, 0.0);
            const double lo = static_cast<double>(n);
            for (std::size_t i = 0; i < n_atoms; ++i) {
                double x = space.atom(i).label;
                if (x >= lo && x < lo + 1.0) v[i] = x;
            }
            members.emplace_back(std::move(v));
        }
    } else if (gen == "scaled_ball") {
        std::size_t count = config::get_count(spec, "count");
        double radius = get_number_or(spec, "radius", 1.0);
        std::uint64_t state = spec.contains("seed") ? spec.at("seed").get<std::uint64_t>() : seed;
        for (std::size_t k = 0; k < count; ++k) {
            std::vector<double> v(n_atoms);
            for (auto& x : v) x = 2.0 * unit_draw(state) - 1.0;
            MeasurableFn f(std::move(v));
            if (f.is_zero()) {
                members.push_back(std::move(f));
                continue;
            }
            // r_hi keeps rho(f / r_hi) <= 1.
            double r = luxemburg_norm(phi, space, f).r_hi;
            members.push_back(f * (radius / r));
        }
    } else {
        throw ConfigError("unknown family generator '" + gen + "' (see list-generators)");
    }
    return FnFamily(std::move(members), get_string_or(spec, "name", gen));
}

std::string list_generators() {
    return "unit_vectors(count, growth=none|linear)  e_k, or k*e_k with linear growth\n"
           "disjoint_bumps(count, width, height=1)  indicators of consecutive disjoint blocks\n"
           "escaping_bumps(count)  f_n(x) = x on [n, n+1), 0 elsewhere\n"
           "scaled_ball(count, seed, radius=1)  random functions scaled into the modular ball\n";
}

Scenario load_scenario(const fs::path& config_path, const RunOptions& options) {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot open scenario file " + config_path.string());
    json root = json::parse(in);
    if (!root.is_object()) throw ConfigError("scenario must be a JSON object");
    if (!root.contains("schema")) throw ConfigError("missing field 'schema'");
    if (!root.at("schema").is_number_integer() || root.at("schema").get<int>() != kSchemaVersion)
        throw ConfigError("field 'schema': unsupported version (expected " + std::to_string(kSchemaVersion) + ")");

    auto name = get_string_or(root, "name", config_path.stem().string());
    if (!root.contains("space")) throw ConfigError("missing field 'space'");
    if (!root.contains("phi")) throw ConfigError("missing field 'phi'");
    if (!root.contains("family")) throw ConfigError("missing field 'family'");
    auto space = config::parse_space(root.at("space"));
    auto phi = config::parse_phi(root.at("phi"), space);
    phi.validate_on(space);
    std::optional<GeneralizedPhi> psi;
    if (root.contains("psi")) {
        psi = config::parse_phi(root.at("psi"), space);
        psi->validate_on(space);
    }
    std::uint64_t seed = options.seed.value_or(root.contains("seed") ? root.at("seed").get<std::uint64_t>() : 0);
    auto base_dir = config_path.parent_path();
    auto family = load_family(root.at("family"), base_dir, space, phi, seed);

    MeasurableFn limit = MeasurableFn::zero(space.size());
    if (root.contains("limit")) {
        auto values = config::get_numbers(root, "limit");
        if (values.size() != space.size()) throw ConfigError("field 'limit': needs one value per atom");
        limit = MeasurableFn(std::move(values));
    }

    std::vector<json> diagnostics;
    if (!root.contains("diagnostics") || !root.at("diagnostics").is_array() || root.at("diagnostics").empty())
        throw ConfigError("field 'diagnostics' must be a nonempty array");
    for (const auto& d : root.at("diagnostics")) {
        auto type = get_string_or(d, "type", "");
        if (!runners().contains(type)) throw ConfigError("diagnostic: unknown type '" + type + "'");
        apply_expectation(get_string_or(d, "expect", "pass"), {true, {}, {}, type == "properties" ? std::optional<bool>(true) : std::nullopt});
        diagnostics.push_back(d);
    }

    fs::path out_dir;
    if (options.out_dir) {
        out_dir = *options.out_dir;
    } else if (root.contains("output")) {
        out_dir = fs::path(root.at("output").get<std::string>());
        if (out_dir.is_relative()) out_dir = base_dir / out_dir;
    } else {
        out_dir = fs::path(name + "_out");
    }

    double tol = get_number_or(root, "tol", kDefaultCriterionTol);
    return Scenario{name,  std::move(space), std::move(phi),       std::move(psi), std::move(family), std::move(limit),
                    std::move(diagnostics), out_dir,       options.tol, tol, seed};
}

RunResult run_scenario(const fs::path& config_path, const RunOptions& options) {
    RunResult result;
    std::optional<Scenario> sc;
    try {
        sc.emplace(load_scenario(config_path, options));
    } catch (const json::exception& e) {
        result.exit_code = kExitConfigError;
        result.error = config_path.string() + ": " + e.what();
        return result;
    } catch (const std::invalid_argument& e) {
        result.exit_code = kExitConfigError;
        result.error = config_path.string() + ": " + e.what();
        return result;
    } catch (const std::domain_error& e) {
        result.exit_code = kExitConfigError;
        result.error = config_path.string() + ": " + e.what();
        return result;
    }

    result.out_dir = sc->out_dir;
    fs::create_directories(sc->out_dir);
    RunContext ctx{*sc, sc->out_dir, std::nullopt, 0};
    std::ostringstream report;
    report << "scenario: " << sc->name << "\n";
    report << "space: " << sc->space.kind_name() << " (" << sc->space.size() << " atoms, measure "
           << csv::format(sc->space.total_measure()) << ")\n";
    report << "family: " << sc->family.size() << " members\n";

    bool all_pass = true;
    try {
        for (const auto& diag : sc->diagnostics) {
            ++ctx.index;
            auto type = diag.at("type").get<std::string>();
            auto expect = get_string_or(diag, "expect", "pass");
            DiagnosticOutcome outcome;
            outcome.type = type;
            try {
                auto ev = runners().at(type)(ctx, diag);
                outcome.pass = apply_expectation(expect, ev);
                outcome.summary = ev.summary;
                outcome.files = ev.files;
            } catch (const NotInSpaceError& e) {
                outcome.pass = expect == "fail";
                outcome.summary = e.what();
            } catch (const CriterionNotAchievedError& e) {
                outcome.pass = expect == "fail";
                outcome.summary = e.what();
            } catch (const InvariantViolation& e) {
                outcome.pass = false;
                outcome.summary = std::string("invariant violated: ") + e.what();
            }
            all_pass = all_pass && outcome.pass;
            report << "[" << (outcome.pass ? "PASS" : "FAIL") << "] " << ctx.index << " " << type
                   << " (expect " << expect << "): " << outcome.summary << "\n";
            result.outcomes.push_back(std::move(outcome));
        }
    } catch (const std::invalid_argument& e) {
        result.exit_code = kExitConfigError;
        result.error = config_path.string() + ": diagnostic " + std::to_string(ctx.index) + ": " + e.what();
        return result;
    } catch (const std::domain_error& e) {
        result.exit_code = kExitConfigError;
        result.error = config_path.string() + ": diagnostic " + std::to_string(ctx.index) + ": " + e.what();
        return result;
    } catch (const json::exception& e) {
        result.exit_code = kExitConfigError;
        result.error = config_path.string() + ": diagnostic " + std::to_string(ctx.index) + ": " + e.what();
        return result;
    }
    report << "overall: " << (all_pass ? "PASS" : "FAIL") << "\n";
    result.report = report.str();
    csv::write_atomic(sc->out_dir / "report.txt", result.report);
    result.exit_code = all_pass ? kExitPass : kExitVerdictFailed;
    return result;
}

}  // namespace orlicz::scenario
