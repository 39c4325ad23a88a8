#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "orlicz/compactness.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/modular.hpp"
#include "orlicz/properties.hpp"
#include "support.hpp"

using namespace orlicz;
using doctest::Approx;

namespace {

std::vector<double> decreasing_grid(double hi, double lo, std::size_t count) {
    auto g = geometric_grid(lo, hi, count);
    return {g.rbegin(), g.rend()};
}

GeneralizedPhi power(double p) { return GeneralizedPhi::constant(YoungFunction::power(p)); }

// 16 members in the l2 unit modular ball on counting N = 16; the first has rho = 1.
FnFamily unit_ball_family(std::uint64_t seed) {
    testing::Gen gen(seed);
    std::vector<MeasurableFn> members{testing::unit_vector(16, 0)};
    while (members.size() < 16) {
        auto f = gen.function(16, 1.0);
        double r = 0.0;
        for (double v : f.values()) r += v * v;
        members.push_back(f * std::sqrt(gen.uniform(0.0, 1.0) / r));
    }
    return FnFamily(members);
}

}  // namespace

TEST_CASE("ando_profile examples") {
    auto space = DiscreteMeasureSpace::counting(3);
    auto prof = ando_profile(power(2), space, FnFamily({MeasurableFn({3, 4, 0})}), {0.5, 0.1, 0.01});
    REQUIRE(prof.sup_value.size() == 3);
    CHECK(prof.sup_value[0] == Approx(12.5).epsilon(1e-12));
    CHECK(prof.sup_value[1] == Approx(2.5).epsilon(1e-12));
    CHECK(prof.sup_value[2] == Approx(0.25).epsilon(1e-12));
    CHECK(prof.monotone);
    // 0.25 > tol: the profile has not decayed on this grid.
    CHECK_FALSE(prof.consistent());

    auto zero = ando_profile(power(2), space, FnFamily({MeasurableFn::zero(3)}), {0.5, 0.1, 0.01});
    for (double v : zero.sup_value) CHECK(v == 0.0);
    CHECK(zero.consistent());
    CHECK(zero.verdict_text().find("consistent") != std::string::npos);
}

TEST_CASE("ando_profile of a near-L1 escaping family is violated") {
    const double p = 1.0001;
    const std::size_t n = 32;
    auto space = DiscreteMeasureSpace::counting(n);
    std::vector<MeasurableFn> members;
    for (std::size_t k = 0; k < n; ++k) {
        // n e_n scaled to unit modular: rho(c e_k) = c^p = 1.
        members.push_back(testing::unit_vector(n, k, 1.0));
    }
    std::vector<double> lambdas{1.0, 0.1, 0.01, 1e-3, 1e-4};
    auto prof = ando_profile(power(p), space, FnFamily(members), lambdas);
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        // Independent value: rho(lambda e_k) / lambda = lambda^{p - 1}.
        CHECK(prof.sup_value[i] == Approx(std::pow(lambdas[i], p - 1.0)).epsilon(1e-12));
    }
    CHECK(prof.sup_value.back() > 0.99);
    CHECK_FALSE(prof.consistent());
    REQUIRE(prof.violated_at.has_value());
    CHECK(*prof.violated_at == 1e-4);
}

TEST_CASE("ando_profile grid validation") {
    auto space = DiscreteMeasureSpace::counting(1);
    FnFamily fam({MeasurableFn({1.0})});
    CHECK_THROWS_AS(ando_profile(power(2), space, fam, {}), ConfigError);
    CHECK_THROWS_AS(ando_profile(power(2), space, fam, {0.1, 0.5}), ConfigError);
    CHECK_THROWS_AS(ando_profile(power(2), space, fam, {2.0, 0.5}), ConfigError);
    CHECK_THROWS_AS(ando_profile(power(2), space, fam, {0.5, 0.0}), ConfigError);
}

TEST_CASE("equi_integrability_profile examples") {
    auto space = DiscreteMeasureSpace::counting(3);
    FnFamily fam({MeasurableFn({3, 4, 0})});
    MeasurableFn one({1, 1, 1});
    auto prof = equi_integrability_profile(space, fam, one, {{0, 1, 2}, {2}});
    CHECK(prof.sup_value == std::vector<double>{7.0, 0.0});
    CHECK(prof.consistent());

    auto zero = equi_integrability_profile(space, fam, MeasurableFn::zero(3), {{0, 1, 2}, {2}});
    CHECK(zero.sup_value == std::vector<double>{0.0, 0.0});

    auto counting = DiscreteMeasureSpace::counting(8);
    auto chain = shrinking_sets(counting, 4);  // sizes 8, 4, 2, 1
    std::vector<double> ind(8, 0.0);
    for (auto i : chain[2]) ind[i] = 1.0;
    MeasurableFn chi(ind);
    auto deep = equi_integrability_profile(counting, FnFamily({chi}), chi, chain);
    CHECK(deep.sup_value == std::vector<double>{2.0, 2.0, 2.0, 1.0});
    CHECK_FALSE(deep.consistent());

    CHECK_THROWS_AS(equi_integrability_profile(space, fam, one, {{2}, {0, 1, 2}}), PreconditionError);
}

TEST_CASE("tail_profile examples") {
    auto counting = DiscreteMeasureSpace::counting(8);
    MeasurableFn one(std::vector<double>(8, 1.0));
    auto prof = tail_profile(counting, FnFamily({testing::unit_vector(8, 4)}), one, counting.exhaustion());
    for (std::size_t m = 1; m <= 8; ++m) CHECK(prof.sup_value[m - 1] == (m < 5 ? 1.0 : 0.0));
    CHECK(prof.consistent());

    auto zero = tail_profile(counting, FnFamily({one}), MeasurableFn::zero(8), counting.exhaustion());
    for (double v : zero.sup_value) CHECK(v == 0.0);

    auto grid = DiscreteMeasureSpace::grid(0.0, 1.0, 800, 8);
    MeasurableFn gone(std::vector<double>(800, 1.0));
    auto tail = tail_profile(grid, FnFamily({gone}), gone, grid.exhaustion());
    for (std::size_t m = 0; m < tail.sup_value.size(); ++m) {
        CHECK(tail.sup_value[m] == Approx(1.0 - grid.measure(grid.exhaustion()[m])).scale(1.0).epsilon(1e-12));
    }
    // Judged at Z_7: the tail [0.875, 1] still carries 1/8.
    CHECK_FALSE(tail.consistent());
}

TEST_CASE("construct_dominating_psi for t^2 on a unit-ball family") {
    auto space = DiscreteMeasureSpace::counting(16);
    auto fam = unit_ball_family(51);
    auto spec = construct_dominating_psi(power(2), space, fam, 10);
    REQUIRE(spec.lambda.size() == 10);
    for (std::size_t n = 1; n <= 10; ++n) {
        CHECK(spec.lambda[n - 1] == std::ldexp(1.0, -2 * static_cast<int>(n)));
        CHECK(spec.lambda_exponent[n - 1] == 2 * static_cast<int>(n));
    }
    for (double t : uniform_grid(0.0, 50.0, 100)) {
        double expected = (1.0 - std::ldexp(1.0, -10)) * t * t;
        CHECK(std::abs(spec.psi.eval(1.0, t) - expected) <= 1e-12 * std::max(1.0, expected));
    }
    CHECK(spec.certified_modular_bound <= 1.0);
    REQUIRE(spec.modular_tail_bound.has_value());
    CHECK(*spec.modular_tail_bound == std::ldexp(1.0, -10));

    auto bounded = bounded_in_psi(spec.psi, space, fam);
    CHECK(bounded.in_unit_ball);
    CHECK(bounded.max_modular == Approx(1.0 - std::ldexp(1.0, -10)).epsilon(1e-12));

    for (std::size_t n = 1; n <= 5; ++n) {
        double eps = std::ldexp(1.0, -static_cast<int>(n));
        // delta = lambda_n passes; the largest passing grid delta can only be larger.
        auto single = uniformly_more_rapid(spec.psi, power(2), space, {eps}, {spec.lambda[n - 1]}, default_t_grid());
        REQUIRE(single[0].delta.has_value());
        CHECK(*single[0].delta == spec.lambda[n - 1]);
        auto best = uniformly_more_rapid(spec.psi, power(2), space, {eps}, spec.lambda, default_t_grid());
        REQUIRE(best[0].delta.has_value());
        CHECK(*best[0].delta >= spec.lambda[n - 1]);
    }
}

TEST_CASE("construct_dominating_psi for the zero family") {
    auto space = DiscreteMeasureSpace::counting(4);
    FnFamily fam({MeasurableFn::zero(4)});
    auto spec = construct_dominating_psi(power(2), space, fam, 3);
    CHECK(spec.lambda.size() == 3);
    CHECK(bounded_in_psi(spec.psi, space, fam).max_modular == 0.0);
    CHECK(bounded_in_psi(spec.psi, space, fam).in_unit_ball);
}

TEST_CASE("construct_dominating_psi fails when the criterion bound is not reached") {
    // rho(lambda e_1) / lambda = lambda^{0.0001} never drops to 1/4 above 2^-60.
    auto space = DiscreteMeasureSpace::counting(2);
    FnFamily fam({testing::unit_vector(2, 0)});
    CHECK_THROWS_AS(construct_dominating_psi(power(1.0001), space, fam, 3), CriterionNotAchievedError);
    CHECK_THROWS_AS(construct_dominating_psi(power(2), space, fam, 0), PreconditionError);
}

TEST_CASE("bounded_in_psi examples") {
    auto space = DiscreteMeasureSpace::counting(3);
    auto res = bounded_in_psi(power(2), space, FnFamily({MeasurableFn({3, 4, 0})}));
    CHECK(res.max_modular == 25.0);
    CHECK_FALSE(res.in_unit_ball);
    auto zero = bounded_in_psi(power(2), space, FnFamily({MeasurableFn::zero(3)}));
    CHECK(zero.max_modular == 0.0);
    CHECK(zero.in_unit_ball);
}

TEST_CASE("lemma_bound_check examples") {
    auto space = DiscreteMeasureSpace::counting(16);
    std::vector<MeasurableFn> members;
    testing::Gen gen(52);
    for (int n = 0; n < 32; ++n) {
        auto f = gen.function(16, 3.0);
        members.push_back(f * (1.0 / luxemburg_norm(power(2), space, f).value));
    }
    auto rows = lemma_bound_check(power(2), space, FnFamily(members), 32);
    REQUIRE(rows.size() == 32);
    for (const auto& row : rows) {
        CHECK(row.bound == Approx(1.0 / static_cast<double>(row.n * row.n)).epsilon(1e-15));
        CHECK(row.measure <= row.bound + 1e-9);
        CHECK(row.holds);
        if (row.n > 1) CHECK(row.bound < rows[row.n - 2].bound);
    }

    CHECK_THROWS_AS(lemma_bound_check(power(2), space, FnFamily({MeasurableFn(std::vector<double>(16, 1.0))}), 1),
                    PreconditionError);
}

TEST_CASE("lemma bound in the non-constrained counterexample") {
    auto grid = DiscreteMeasureSpace::grid(0.0, 200.0, 20000);
    auto weighted = GeneralizedPhi::weighted_power(PointRule::inverse_square(), PointRule::constant(2.0));
    std::vector<MeasurableFn> bumps;
    for (int n = 1; n <= 100; ++n) {
        std::vector<double> v(grid.size(), 0.0);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            double x = grid.atom(i).label;
            if (x >= n && x < n + 1) v[i] = x;
        }
        bumps.emplace_back(std::move(v));
    }
    auto rows = lemma_bound_check(weighted, grid, FnFamily(bumps), 100);
    for (const auto& row : rows) {
        CHECK(std::abs(row.measure - 1.0) <= 0.02);
        // inf_x n^2 / x^2 over (0, 200] is n^2 / 200^2 (up to the last midpoint).
        CHECK(row.bound >= 200.0 * 200.0 / static_cast<double>(row.n * row.n) * 0.99);
        CHECK(row.holds);
    }
}

TEST_CASE("property: ando profile is nondecreasing in lambda") {
    testing::Gen gen(53);
    std::vector<GeneralizedPhi> phis{power(1.2), power(2), power(3.5),
                                     GeneralizedPhi::constant(YoungFunction::power_log(1.5)),
                                     GeneralizedPhi::constant(gen.convex_table(6, 8.0))};
    auto lambdas = decreasing_grid(1.0, 1e-5, 30);
    for (const auto& gp : phis) {
        for (int trial = 0; trial < 10; ++trial) {
            std::size_t n = 1 + gen.index(20);
            auto space = DiscreteMeasureSpace::counting(n);
            std::vector<MeasurableFn> members;
            for (std::size_t k = 0; k <= gen.index(6); ++k) members.push_back(gen.function(n, 4.0));
            auto prof = ando_profile(gp, space, FnFamily(members), lambdas);
            CHECK(prof.monotone);
            for (std::size_t i = 1; i < lambdas.size(); ++i) {
                CHECK(prof.sup_value[i] <= prof.sup_value[i - 1] + 1e-12 * std::max(1.0, prof.sup_value[i - 1]));
            }
        }
    }
}

TEST_CASE("property: t^2 profile is lambda times the modular bound") {
    testing::Gen gen(54);
    auto lambdas = decreasing_grid(1.0, 1e-6, 25);
    for (int trial = 0; trial < 20; ++trial) {
        auto space = DiscreteMeasureSpace::counting(1 + gen.index(30));
        std::vector<MeasurableFn> members;
        for (int k = 0; k < 4; ++k) members.push_back(gen.function(space.size(), 2.0));
        double bound = 0.0;
        for (const auto& f : members) bound = std::max(bound, rho(power(2), space, f));
        auto prof = ando_profile(power(2), space, FnFamily(members), lambdas);
        for (std::size_t i = 0; i < lambdas.size(); ++i) {
            CHECK(std::abs(prof.sup_value[i] - lambdas[i] * bound) <= 1e-12 * std::max(1.0, bound));
        }
    }
}

TEST_CASE("property: a dominating psi bounds the profile below delta(eps)") {
    auto lambdas = default_delta_grid();
    std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
    for (std::uint64_t seed : {61u, 62u, 63u}) {
        auto space = DiscreteMeasureSpace::counting(16);
        auto fam = unit_ball_family(seed);
        for (const auto& gp : {power(2), power(3), GeneralizedPhi::constant(YoungFunction::power_log(1.5))}) {
            auto spec = construct_dominating_psi(gp, space, fam, 8);
            for (std::size_t n = 1; n <= spec.depth; ++n) {
                CHECK(spec.lambda[n - 1] <= 1.0 / (2.0 * static_cast<double>(n)));
                CHECK(spec.bound[n - 1] <= std::ldexp(1.0, -2 * static_cast<int>(n)));
                if (n > 1) CHECK(spec.lambda[n - 1] < spec.lambda[n - 2]);
            }
            double lambda_sum = 0.0;
            for (double l : spec.lambda) lambda_sum += l;
            CHECK(lambda_sum <= 1.0);

            REQUIRE(bounded_in_psi(spec.psi, space, fam).in_unit_ball);
            std::vector<double> eps{0.5, 0.25, 0.1, 0.03};
            auto umr = uniformly_more_rapid(spec.psi, gp, space, eps, lambdas, default_t_grid());
            auto prof = ando_profile(gp, space, fam, lambdas);
            for (const auto& r : umr) {
                if (!r.delta) continue;
                for (std::size_t i = 0; i < lambdas.size(); ++i) {
                    if (lambdas[i] <= *r.delta) CHECK(prof.sup_value[i] <= r.epsilon * (1.0 + 1e-9));
                }
            }
        }
    }
}
