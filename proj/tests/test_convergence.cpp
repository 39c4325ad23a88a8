#include <doctest.h>

#include <cmath>

#include "orlicz/convergence.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/modular.hpp"
#include "support.hpp"

using namespace orlicz;
using doctest::Approx;
using testing::unit_vector;

namespace {

GeneralizedPhi power(double p) { return GeneralizedPhi::constant(YoungFunction::power(p)); }

FnFamily unit_vectors(std::size_t n, std::size_t count, double growth = 0.0) {
    std::vector<MeasurableFn> members;
    for (std::size_t k = 0; k < count; ++k) members.push_back(unit_vector(n, k, growth > 0 ? growth * (k + 1) : 1.0));
    return FnFamily(members);
}

const std::vector<double> kLambdas{1.0, 0.5, 0.1, 0.05, 0.01, 0.005, 0.001, 5e-4, 1e-4};

}  // namespace

TEST_CASE("set_integral_convergence examples") {
    auto space = DiscreteMeasureSpace::counting(16);
    auto table = set_integral_convergence(space, unit_vectors(16, 16), MeasurableFn::zero(16), {{0, 1, 2}});
    REQUIRE(table.rows.size() == 1);
    const auto& row = table.rows[0];
    REQUIRE(row.values.size() == 16);
    for (std::size_t n = 1; n <= 16; ++n) CHECK(row.values[n - 1] == (n <= 3 ? 1.0 : 0.0));
    CHECK(row.pass);
    CHECK(table.pass());

    MeasurableFn f({1, 2, 3});
    auto constant = set_integral_convergence(DiscreteMeasureSpace::counting(3), FnFamily({f, f, f}), f, {{0, 1, 2}});
    for (double v : constant.rows[0].values) CHECK(v == 0.0);

    std::vector<MeasurableFn> growing;
    for (int n = 1; n <= 5; ++n) growing.push_back(unit_vector(3, 0, n));
    auto diverge = set_integral_convergence(DiscreteMeasureSpace::counting(3), FnFamily(growing),
                                            MeasurableFn::zero(3), {{0}});
    for (int n = 1; n <= 5; ++n) CHECK(diverge.rows[0].values[n - 1] == n);
    CHECK_FALSE(diverge.pass());
}

TEST_CASE("whole grid truncations are flagged") {
    auto grid = DiscreteMeasureSpace::grid(0.0, 1.0, 8, 4);
    FnFamily fam({MeasurableFn::zero(8)});
    auto table = set_integral_convergence(grid, fam, MeasurableFn::zero(8), {grid.exhaustion()[0], grid.all()});
    CHECK_FALSE(table.rows[0].whole_truncated_space);
    CHECK(table.rows[1].whole_truncated_space);
    CHECK(default_test_sets(grid).size() == 3);
}

TEST_CASE("coordinatewise_check examples") {
    auto space = DiscreteMeasureSpace::counting(4);
    std::vector<MeasurableFn> shrinking;
    for (int k = 1; k <= 100; ++k) shrinking.push_back(unit_vector(4, 0, 1.0 / k));
    CHECK(coordinatewise_check(space, FnFamily(shrinking), MeasurableFn::zero(4), 1e-2).pass());

    auto space64 = DiscreteMeasureSpace::counting(64);
    auto ek = coordinatewise_check(space64, unit_vectors(64, 64), MeasurableFn::zero(64), 1e-9);
    CHECK(ek.rows.size() == 32);
    CHECK(ek.pass());

    std::vector<MeasurableFn> stuck(10, unit_vector(4, 0));
    auto bad = coordinatewise_check(space, FnFamily(stuck), MeasurableFn::zero(4), 1e-2);
    CHECK_FALSE(bad.pass());
    CHECK(bad.rows[0].deviation == 1.0);

    auto grid = DiscreteMeasureSpace::grid(0.0, 1.0, 4);
    CHECK_THROWS_AS(coordinatewise_check(grid, FnFamily(stuck), MeasurableFn::zero(4), 1e-2), ConfigError);
}

TEST_CASE("cesaro_profile examples") {
    auto space = DiscreteMeasureSpace::counting(64);
    auto rows = cesaro_profile(power(2), space, unit_vectors(64, 64), MeasurableFn::zero(64));
    REQUIRE(rows.size() == 64);
    for (const auto& row : rows) {
        double expected = 1.0 / static_cast<double>(row.n);
        CHECK(std::abs(row.rho_mean - expected) <= 1e-12 * expected);
        CHECK(row.disjoint);
        CHECK(std::abs(row.rho_mean - row.additive_sum) <= 1e-12 * row.additive_sum);
    }

    auto zeros = cesaro_profile(power(2), space, FnFamily(std::vector<MeasurableFn>(5, MeasurableFn::zero(64))),
                                MeasurableFn::zero(64));
    for (const auto& row : zeros) CHECK(row.rho_mean == 0.0);

    auto same = cesaro_profile(power(2), space, FnFamily(std::vector<MeasurableFn>(8, unit_vector(64, 0))),
                               MeasurableFn::zero(64));
    for (const auto& row : same) {
        CHECK(row.rho_mean == Approx(1.0).epsilon(1e-15));
        if (row.n > 1) CHECK_FALSE(row.disjoint);
    }
}

TEST_CASE("weak_convergence_report examples") {
    auto space = DiscreteMeasureSpace::counting(64);
    auto zero = MeasurableFn::zero(64);
    auto sets = default_test_sets(space);
    auto chain = shrinking_sets(space, 6);

    auto good = weak_convergence_report(power(2), space, unit_vectors(64, 64), zero, kLambdas, sets, chain,
                                        space.exhaustion());
    CHECK(good.set_integrals.pass());
    REQUIRE(good.ando.has_value());
    for (std::size_t i = 0; i < kLambdas.size(); ++i) {
        CHECK(good.ando->sup_value[i] == Approx(kLambdas[i]).epsilon(1e-12));
    }
    CHECK(good.ando->consistent());
    REQUIRE(good.coordinatewise.has_value());
    CHECK(good.pass);

    MeasurableFn f(std::vector<double>(64, 0.5));
    auto trivial = weak_convergence_report(power(2), space, FnFamily(std::vector<MeasurableFn>(6, f)), f, kLambdas,
                                           sets, chain, space.exhaustion(), {.g = MeasurableFn(std::vector<double>(64, 1.0))});
    CHECK(trivial.pass);
    REQUIRE(trivial.equi_integrability.has_value());
    REQUIRE(trivial.tail.has_value());

    auto bad = weak_convergence_report(power(2), space, unit_vectors(64, 64, 1.0), zero, kLambdas, sets, chain,
                                       space.exhaustion());
    CHECK_FALSE(bad.ando->consistent());
    // sup_n rho(lambda n e_n) / lambda = 64^2 lambda.
    CHECK(bad.ando->sup_value.back() == Approx(4096.0 * 1e-4).epsilon(1e-12));
    CHECK_FALSE(bad.pass);
}

TEST_CASE("reflexive shortcut only checks boundedness and set integrals") {
    auto space = DiscreteMeasureSpace::counting(16);
    WeakConvergenceOptions opts;
    opts.reflexive_shortcut = true;
    auto rep = weak_convergence_report(power(2), space, unit_vectors(16, 16), MeasurableFn::zero(16), kLambdas,
                                       default_test_sets(space), shrinking_sets(space, 3), space.exhaustion(), opts);
    CHECK(rep.reflexive_shortcut);
    CHECK_FALSE(rep.ando.has_value());
    CHECK(rep.max_norm == Approx(1.0).epsilon(1e-9));
    CHECK(rep.summary.find("reflexiv") != std::string::npos);
    CHECK(rep.pass);
}

TEST_CASE("property: disjoint Cesaro means are additive") {
    testing::Gen gen(71);
    std::vector<GeneralizedPhi> phis{power(1.5), power(2), power(3),
                                     GeneralizedPhi::constant(YoungFunction::power_log(1.5))};
    for (const auto& gp : phis) {
        for (int trial = 0; trial < 10; ++trial) {
            std::size_t n = 40;
            auto space = DiscreteMeasureSpace::counting(n);
            std::vector<MeasurableFn> members;
            std::size_t atom = 0;
            while (atom < n) {
                std::vector<double> v(n, 0.0);
                std::size_t width = 1 + gen.index(3);
                for (std::size_t i = atom; i < std::min(n, atom + width); ++i) v[i] = gen.uniform(-5, 5);
                atom += width;
                members.emplace_back(std::move(v));
            }
            for (const auto& row : cesaro_profile(gp, space, FnFamily(members), MeasurableFn::zero(n))) {
                CHECK(row.disjoint);
                CHECK(std::abs(row.rho_mean - row.additive_sum) <= 1e-12 * std::max(row.additive_sum, 1e-300));
            }
        }
    }
}

TEST_CASE("property: a passing report never holds a failing set-integral row") {
    testing::Gen gen(72);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 24;
        auto space = DiscreteMeasureSpace::counting(n);
        std::vector<MeasurableFn> seq;
        double decay = gen.uniform(0.0, 2.0);
        for (std::size_t k = 0; k < n; ++k) seq.push_back(unit_vector(n, k, std::pow(k + 1.0, -decay) * 3.0));
        auto rep = weak_convergence_report(power(2), space, FnFamily(seq), MeasurableFn::zero(n), kLambdas,
                                           default_test_sets(space), shrinking_sets(space, 4), space.exhaustion());
        if (rep.pass) {
            for (const auto& row : rep.set_integrals.rows) CHECK(row.pass);
        }
    }
}
