#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace orlicz {

using IndexSet = std::vector<std::size_t>;

struct Atom {
    double label;
    double weight;
};

/// A finite list of weighted atoms approximating a sigma-finite measure
/// space, together with an exhaustion Z_1 ⊆ Z_2 ⊆ ... ⊆ Z_M = all atoms.
///
/// "counting": labels 1..N, unit weights, Z_m = {1..m}.
/// "grid": midpoints of a uniform partition of [a, b], weights equal to the
/// cell width, Z_m = atoms in [a, a + m (b - a) / M].
class DiscreteMeasureSpace {
public:
    enum class Kind { counting, grid, custom };

    static DiscreteMeasureSpace counting(std::size_t n);
    static DiscreteMeasureSpace grid(double a, double b, std::size_t cells, std::size_t exhaustion_steps = 8);
    /// Arbitrary atoms; exhaustion defaults to prefixes {0..m} of the list.
    static DiscreteMeasureSpace custom(std::vector<Atom> atoms, std::vector<IndexSet> exhaustion = {});

    Kind kind() const { return kind_; }
    std::string kind_name() const;
    std::size_t size() const { return atoms_.size(); }
    const std::vector<Atom>& atoms() const { return atoms_; }
    const Atom& atom(std::size_t i) const { return atoms_.at(i); }
    const std::vector<IndexSet>& exhaustion() const { return exhaustion_; }

    IndexSet all() const;
    double measure(const IndexSet& subset) const;
    double total_measure() const;

    /// Grid endpoints; zero for non-grid spaces.
    double lower() const { return a_; }
    double upper() const { return b_; }
    double cell_width() const;

private:
    DiscreteMeasureSpace(Kind kind, std::vector<Atom> atoms, std::vector<IndexSet> exhaustion, double a, double b);

    Kind kind_;
    std::vector<Atom> atoms_;
    std::vector<IndexSet> exhaustion_;
    double a_ = 0.0;
    double b_ = 0.0;
};

/// One real value per atom.
class MeasurableFn {
public:
    MeasurableFn() = default;
    explicit MeasurableFn(std::vector<double> values) : values_(std::move(values)) {}
    static MeasurableFn zero(std::size_t n) { return MeasurableFn(std::vector<double>(n, 0.0)); }

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    std::span<const double> values() const { return values_; }

    MeasurableFn operator+(const MeasurableFn& other) const;
    MeasurableFn operator-(const MeasurableFn& other) const;
    MeasurableFn operator*(double c) const;
    friend MeasurableFn operator*(double c, const MeasurableFn& f) { return f * c; }
    bool operator==(const MeasurableFn&) const = default;

    bool is_zero() const;

private:
    std::vector<double> values_;
};

/// The set S under test: a nonempty ordered list of functions on one space.
class FnFamily {
public:
    explicit FnFamily(std::vector<MeasurableFn> members, std::string name = {});

    std::size_t size() const { return members_.size(); }
    std::size_t atom_count() const { return members_.front().size(); }
    const MeasurableFn& operator[](std::size_t i) const { return members_[i]; }
    const std::vector<MeasurableFn>& members() const { return members_; }
    const std::string& name() const { return name_; }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    /// Throws PreconditionError if member lengths differ from the space.
    void check_on(const DiscreteMeasureSpace& space) const;

private:
    std::vector<MeasurableFn> members_;
    std::string name_;
};

/// sum_{i in subset} f_i mu_i
double integrate(const DiscreteMeasureSpace& space, const MeasurableFn& f, const IndexSet& subset);
double integrate(const DiscreteMeasureSpace& space, const MeasurableFn& f);

struct Exceedance {
    std::size_t n;
    double measure;  // mu(B_n), B_n = {|f_n| > n}
};

/// mu(B_n) for n = 1..count, where f_n is member n-1 of the family.
std::vector<Exceedance> exceedance_sets(const DiscreteMeasureSpace& space, const FnFamily& family, std::size_t count);

/// Decreasing chain A_1 ⊇ ... ⊇ A_K of suffix sets; A_1 is every atom and
/// A_k is the longest suffix whose measure does not exceed mu(Ω) / 2^{k-1}.
std::vector<IndexSet> shrinking_sets(const DiscreteMeasureSpace& space, std::size_t count);

/// True iff at every atom at most one member is nonzero (exact zeros).
bool are_disjoint(const FnFamily& family);

/// Indices where f is nonzero.
IndexSet support(const MeasurableFn& f);

}  // namespace orlicz
