#include <doctest.h>

#include <cmath>

#include "orlicz/errors.hpp"
#include "orlicz/space.hpp"
#include "support.hpp"

using namespace orlicz;
using doctest::Approx;

TEST_CASE("integrate examples") {
    auto counting = DiscreteMeasureSpace::counting(3);
    CHECK(integrate(counting, MeasurableFn({1, 2, 3}), counting.all()) == 6.0);

    auto quarter = DiscreteMeasureSpace::grid(0.0, 1.0, 4);
    CHECK(integrate(quarter, MeasurableFn(std::vector<double>(4, 1.0))) == Approx(1.0).epsilon(1e-15));

    auto fine = DiscreteMeasureSpace::grid(1.0, 2.0, 1000);
    std::vector<double> x;
    for (const auto& a : fine.atoms()) x.push_back(a.label);
    CHECK(std::abs(integrate(fine, MeasurableFn(x)) - 1.5) <= 1e-6);
}

TEST_CASE("integrate rejects bad indices") {
    auto space = DiscreteMeasureSpace::counting(3);
    CHECK_THROWS(integrate(space, MeasurableFn({1, 2, 3}), IndexSet{3}));
}

TEST_CASE("space construction") {
    auto g = DiscreteMeasureSpace::grid(0.0, 200.0, 20000);
    CHECK(g.size() == 20000);
    CHECK(g.cell_width() == Approx(0.01));
    CHECK(g.atom(0).label == Approx(0.005));
    CHECK(g.total_measure() == Approx(200.0));
    CHECK(g.exhaustion().back().size() == g.size());

    auto c = DiscreteMeasureSpace::counting(4);
    REQUIRE(c.exhaustion().size() == 4);
    CHECK(c.exhaustion()[1] == IndexSet{0, 1});
    CHECK(c.atom(3).label == 4.0);

    CHECK_THROWS_AS(DiscreteMeasureSpace::counting(0), ConfigError);
    CHECK_THROWS_AS(DiscreteMeasureSpace::grid(1.0, 0.0, 4), ConfigError);
    CHECK_THROWS_AS(DiscreteMeasureSpace::custom({{1.0, 0.0}}), ConfigError);
    CHECK_THROWS_AS(DiscreteMeasureSpace::custom({{1.0, 1.0}, {2.0, 1.0}}, {{0, 1}, {0}}), ConfigError);
    CHECK_THROWS_AS(DiscreteMeasureSpace::custom({{1.0, 1.0}, {2.0, 1.0}}, {{0}}), ConfigError);
}

TEST_CASE("families") {
    CHECK_THROWS_AS(FnFamily({}), PreconditionError);
    CHECK_THROWS_AS(FnFamily({MeasurableFn({1.0}), MeasurableFn({1.0, 2.0})}), PreconditionError);
    FnFamily fam({MeasurableFn({1.0, 2.0})});
    CHECK_THROWS_AS(fam.check_on(DiscreteMeasureSpace::counting(3)), PreconditionError);
    CHECK_NOTHROW(fam.check_on(DiscreteMeasureSpace::counting(2)));
}

TEST_CASE("exceedance_sets examples") {
    auto counting = DiscreteMeasureSpace::counting(4);
    std::vector<MeasurableFn> boundary;
    for (int n = 1; n <= 5; ++n) boundary.push_back(testing::unit_vector(4, 0, n));
    for (const auto& e : exceedance_sets(counting, FnFamily(boundary), 5)) CHECK(e.measure == 0.0);

    std::vector<MeasurableFn> zeros(3, MeasurableFn::zero(4));
    for (const auto& e : exceedance_sets(counting, FnFamily(zeros), 3)) CHECK(e.measure == 0.0);

    CHECK_THROWS_AS(exceedance_sets(counting, FnFamily(zeros), 4), PreconditionError);
}

TEST_CASE("exceedance sets of escaping bumps on (0, 200]") {
    auto grid = DiscreteMeasureSpace::grid(0.0, 200.0, 20000);
    std::vector<MeasurableFn> bumps;
    for (int n = 1; n <= 100; ++n) {
        std::vector<double> v(grid.size(), 0.0);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            double x = grid.atom(i).label;
            if (x >= n && x < n + 1) v[i] = x;
        }
        bumps.emplace_back(std::move(v));
    }
    for (const auto& e : exceedance_sets(grid, FnFamily(bumps), 100)) {
        CAPTURE(e.n);
        CHECK(std::abs(e.measure - 1.0) <= 0.02);
    }
}

TEST_CASE("shrinking_sets examples") {
    auto counting = DiscreteMeasureSpace::counting(8);
    auto chain = shrinking_sets(counting, 3);
    REQUIRE(chain.size() == 3);
    CHECK(chain[0].size() == 8);
    CHECK(chain[1].size() == 4);
    CHECK(chain[2].size() == 2);
    CHECK(chain[2] == IndexSet{6, 7});

    auto grid = DiscreteMeasureSpace::grid(0.0, 1.0, 1000);
    auto gchain = shrinking_sets(grid, 4);
    double expected = 1.0;
    for (const auto& set : gchain) {
        CHECK(std::abs(grid.measure(set) - expected) <= grid.cell_width());
        expected /= 2.0;
    }

    auto single = shrinking_sets(counting, 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == counting.all());
    CHECK_THROWS_AS(shrinking_sets(counting, 0), PreconditionError);
}

TEST_CASE("are_disjoint examples") {
    using testing::unit_vector;
    CHECK(are_disjoint(FnFamily({unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2)})));
    CHECK_FALSE(are_disjoint(FnFamily({unit_vector(3, 0), unit_vector(3, 0) + unit_vector(3, 1)})));

    auto grid = DiscreteMeasureSpace::grid(0.0, 1.0, 10);
    std::vector<double> left(10, 0.0), right(10, 0.0);
    for (std::size_t i = 0; i < 10; ++i) (grid.atom(i).label < 0.5 ? left : right)[i] = 1.0;
    CHECK(are_disjoint(FnFamily({MeasurableFn(left), MeasurableFn(right)})));
}

TEST_CASE("property: integrate is linear and additive over disjoint subsets") {
    testing::Gen gen(21);
    auto space = DiscreteMeasureSpace::grid(-1.0, 3.0, 37);
    for (int trial = 0; trial < 200; ++trial) {
        auto f = gen.function(space.size(), 5.0);
        auto g = gen.function(space.size(), 5.0);
        double a = gen.uniform(-3, 3), b = gen.uniform(-3, 3);
        IndexSet left, right;
        for (std::size_t i = 0; i < space.size(); ++i) (gen.uniform(0, 1) < 0.5 ? left : right).push_back(i);
        double whole = integrate(space, f);
        CHECK(integrate(space, f, left) + integrate(space, f, right) == Approx(whole).epsilon(1e-12).scale(10));
        double lin = integrate(space, f * a + g * b);
        CHECK(lin == Approx(a * whole + b * integrate(space, g)).epsilon(1e-12).scale(10));
    }
}

TEST_CASE("property: exceedance measure is bounded by support measure") {
    testing::Gen gen(22);
    auto space = DiscreteMeasureSpace::grid(0.0, 5.0, 50);
    std::vector<MeasurableFn> members;
    for (int n = 0; n < 30; ++n) {
        auto f = gen.function(space.size(), 40.0);
        std::vector<double> v(f.values().begin(), f.values().end());
        for (auto& x : v)
            if (gen.uniform(0, 1) < 0.4) x = 0.0;
        members.emplace_back(std::move(v));
    }
    FnFamily fam(members);
    for (const auto& e : exceedance_sets(space, fam, 30)) {
        CHECK(e.measure <= space.measure(support(fam[e.n - 1])) + 1e-15);
    }
}

TEST_CASE("property: shrinking set measures are nonincreasing and nested") {
    for (std::size_t n : {1u, 2u, 7u, 64u, 1000u}) {
        auto space = DiscreteMeasureSpace::grid(0.0, 3.0, n);
        auto chain = shrinking_sets(space, 12);
        for (std::size_t k = 1; k < chain.size(); ++k) {
            CHECK(space.measure(chain[k]) <= space.measure(chain[k - 1]));
            CHECK(chain[k].size() <= chain[k - 1].size());
            if (!chain[k].empty()) CHECK(chain[k].front() >= chain[k - 1].front());
        }
    }
}
