#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "orlicz/generalized_phi.hpp"
#include "orlicz/space.hpp"

namespace orlicz::testing {

/// Seeded generator for the property tests; each test owns its seed.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

    MeasurableFn function(std::size_t n, double scale = 1.0) {
        std::vector<double> v(n);
        for (auto& x : v) x = uniform(-scale, scale);
        return MeasurableFn(std::move(v));
    }

    /// Convex nondecreasing table on [0, span] starting at (0, 0).
    YoungFunction convex_table(std::size_t nodes, double span) {
        std::vector<double> t(nodes), v(nodes);
        std::vector<double> gaps(nodes - 1), slopes(nodes - 1);
        double total = 0.0;
        for (auto& g : gaps) total += (g = uniform(0.2, 1.0));
        double slope = uniform(0.0, 0.5);
        for (auto& s : slopes) s = (slope += uniform(0.0, 1.5));
        t[0] = 0.0;
        v[0] = 0.0;
        for (std::size_t k = 1; k < nodes; ++k) {
            t[k] = t[k - 1] + gaps[k - 1] * span / total;
            v[k] = v[k - 1] + slopes[k - 1] * (t[k] - t[k - 1]);
        }
        t.back() = span;
        return YoungFunction::tabulated(t, v);
    }

private:
    std::mt19937_64 rng_;
};

inline MeasurableFn unit_vector(std::size_t n, std::size_t k, double height = 1.0) {
    std::vector<double> v(n, 0.0);
    v[k] = height;
    return MeasurableFn(std::move(v));
}

/// Bisection on a scalar increasing function; test-side root oracle.
template <class F>
double bisect_root(F&& f, double lo, double hi, int iterations = 200) {
    for (int i = 0; i < iterations; ++i) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace orlicz::testing
