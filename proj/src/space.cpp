#include "orlicz/space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "orlicz/errors.hpp"

namespace orlicz {

DiscreteMeasureSpace::DiscreteMeasureSpace(Kind kind, std::vector<Atom> atoms, std::vector<IndexSet> exhaustion,
                                           double a, double b)
    : kind_(kind), atoms_(std::move(atoms)), exhaustion_(std::move(exhaustion)), a_(a), b_(b) {
    if (atoms_.empty()) throw ConfigError("measure space has no atoms");
    for (const auto& atom : atoms_) {
        if (!(atom.weight > 0.0) || !std::isfinite(atom.weight)) throw ConfigError("atom weights must be positive");
        if (!std::isfinite(atom.label)) throw ConfigError("atom labels must be finite");
    }
    if (exhaustion_.empty()) {
        for (std::size_t m = 1; m <= atoms_.size(); ++m) {
            IndexSet prefix(m);
            std::iota(prefix.begin(), prefix.end(), std::size_t{0});
            exhaustion_.push_back(std::move(prefix));
        }
    }
    // Nondecreasing and exhaustive.
    std::vector<char> seen(atoms_.size(), 0);
    std::size_t seen_count = 0;
    for (const auto& z : exhaustion_) {
        std::vector<char> here(atoms_.size(), 0);
        for (auto i : z) {
            if (i >= atoms_.size()) throw ConfigError("exhaustion set index out of range");
            here[i] = 1;
        }
        for (std::size_t i = 0; i < atoms_.size(); ++i) {
            if (seen[i] && !here[i]) throw ConfigError("exhaustion chain is not nondecreasing");
        }
        seen = std::move(here);
        seen_count = static_cast<std::size_t>(std::count(seen.begin(), seen.end(), 1));
    }
    if (seen_count != atoms_.size()) throw ConfigError("exhaustion chain does not cover every atom");
}

DiscreteMeasureSpace DiscreteMeasureSpace::counting(std::size_t n) {
    if (n == 0) throw ConfigError("counting space needs n >= 1");
    std::vector<Atom> atoms(n);
    for (std::size_t i = 0; i < n; ++i) atoms[i] = {static_cast<double>(i + 1), 1.0};
    return DiscreteMeasureSpace(Kind::counting, std::move(atoms), {}, 1.0, static_cast<double>(n));
}

DiscreteMeasureSpace DiscreteMeasureSpace::grid(double a, double b, std::size_t cells, std::size_t exhaustion_steps) {
    if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) throw ConfigError("grid space needs finite a < b");
    if (cells == 0) throw ConfigError("grid space needs cells >= 1");
    if (exhaustion_steps == 0) throw ConfigError("grid space needs exhaustion_steps >= 1");
    double width = (b - a) / static_cast<double>(cells);
    std::vector<Atom> atoms(cells);
    for (std::size_t i = 0; i < cells; ++i) atoms[i] = {a + (static_cast<double>(i) + 0.5) * width, width};

    std::size_t steps = std::min(exhaustion_steps, cells);
    std::vector<IndexSet> chain;
    for (std::size_t m = 1; m <= steps; ++m) {
        std::size_t count = m * cells / steps;
        IndexSet prefix(count);
        std::iota(prefix.begin(), prefix.end(), std::size_t{0});
        chain.push_back(std::move(prefix));
    }
    return DiscreteMeasureSpace(Kind::grid, std::move(atoms), std::move(chain), a, b);
}

DiscreteMeasureSpace DiscreteMeasureSpace::custom(std::vector<Atom> atoms, std::vector<IndexSet> exhaustion) {
    return DiscreteMeasureSpace(Kind::custom, std::move(atoms), std::move(exhaustion), 0.0, 0.0);
}

std::string DiscreteMeasureSpace::kind_name() const {
    switch (kind_) {
        case Kind::counting:
            return "counting";
        case Kind::grid:
            return "grid";
        case Kind::custom:
            return "custom";
    }
    return "custom";
}

IndexSet DiscreteMeasureSpace::all() const {
    IndexSet s(atoms_.size());
    std::iota(s.begin(), s.end(), std::size_t{0});
    return s;
}

double DiscreteMeasureSpace::measure(const IndexSet& subset) const {
    double acc = 0.0;
    for (auto i : subset) acc += atoms_.at(i).weight;
    return acc;
}

double DiscreteMeasureSpace::total_measure() const {
    double acc = 0.0;
    for (const auto& atom : atoms_) acc += atom.weight;
    return acc;
}

double DiscreteMeasureSpace::cell_width() const {
    return kind_ == Kind::grid ? (b_ - a_) / static_cast<double>(atoms_.size()) : 0.0;
}

MeasurableFn MeasurableFn::operator+(const MeasurableFn& other) const {
    if (other.size() != size()) throw PreconditionError("functions live on different spaces");
    std::vector<double> out(values_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.values_[i];
    return MeasurableFn(std::move(out));
}

MeasurableFn MeasurableFn::operator-(const MeasurableFn& other) const {
    if (other.size() != size()) throw PreconditionError("functions live on different spaces");
    std::vector<double> out(values_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= other.values_[i];
    return MeasurableFn(std::move(out));
}

MeasurableFn MeasurableFn::operator*(double c) const {
    std::vector<double> out(values_);
    for (auto& v : out) v *= c;
    return MeasurableFn(std::move(out));
}

bool MeasurableFn::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

FnFamily::FnFamily(std::vector<MeasurableFn> members, std::string name)
    : members_(std::move(members)), name_(std::move(name)) {
    if (members_.empty())
        throw PreconditionError(
            "empty family: boundedness of the family is required (it is essential on atomic spaces)");
    for (const auto& f : members_) {
        if (f.size() != members_.front().size()) throw PreconditionError("family members differ in length");
    }
}

void FnFamily::check_on(const DiscreteMeasureSpace& space) const {
    if (atom_count() != space.size()) {
        std::ostringstream os;
        os << "family has " << atom_count() << " values per member but the space has " << space.size() << " atoms";
        throw PreconditionError(os.str());
    }
}

double integrate(const DiscreteMeasureSpace& space, const MeasurableFn& f, const IndexSet& subset) {
    if (f.size() != space.size()) throw PreconditionError("function length differs from atom count");
    double acc = 0.0;
    for (auto i : subset) {
        if (i >= space.size()) throw PreconditionError("subset index out of range");
        acc += f[i] * space.atoms()[i].weight;
    }
    return acc;
}

double integrate(const DiscreteMeasureSpace& space, const MeasurableFn& f) { return integrate(space, f, space.all()); }

std::vector<Exceedance> exceedance_sets(const DiscreteMeasureSpace& space, const FnFamily& family, std::size_t count) {
    family.check_on(space);
    if (family.size() < count) throw PreconditionError("family has fewer members than requested thresholds");
    std::vector<Exceedance> out;
    out.reserve(count);
    for (std::size_t n = 1; n <= count; ++n) {
        const auto& f = family[n - 1];
        double threshold = static_cast<double>(n);
        double mu = 0.0;
        for (std::size_t i = 0; i < space.size(); ++i) {
            if (std::abs(f[i]) > threshold) mu += space.atoms()[i].weight;
        }
        out.push_back({n, mu});
    }
    return out;
}

std::vector<IndexSet> shrinking_sets(const DiscreteMeasureSpace& space, std::size_t count) {
    if (count == 0) throw PreconditionError("shrinking_sets needs count >= 1");
    const double total = space.total_measure();
    const double slack = 1e-12 * total;
    std::vector<IndexSet> chain;
    chain.push_back(space.all());
    std::size_t start = 0;
    for (std::size_t k = 2; k <= count; ++k) {
        double target = total / std::ldexp(1.0, static_cast<int>(k - 1));
        double suffix = 0.0;
        std::size_t s = space.size();
        while (s > start && suffix + space.atoms()[s - 1].weight <= target + slack) {
            suffix += space.atoms()[s - 1].weight;
            --s;
        }
        start = s;
        IndexSet set(space.size() - s);
        std::iota(set.begin(), set.end(), s);
        chain.push_back(std::move(set));
    }
    return chain;
}

bool are_disjoint(const FnFamily& family) {
    std::vector<char> used(family.atom_count(), 0);
    for (const auto& f : family) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] == 0.0) continue;
            if (used[i]) return false;
            used[i] = 1;
        }
    }
    return true;
}

IndexSet support(const MeasurableFn& f) {
    IndexSet s;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] != 0.0) s.push_back(i);
    }
    return s;
}

}  // namespace orlicz
