#pragma once

#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "finitop/axiom.hpp"
#include "finitop/finspace.hpp"

namespace finitop::catalog {

/// A symbolic point of a catalog carrier. Carriers are never enumerated;
/// points are named on demand:
///   - the distinguished point of the family (the included point, where it
///     has one; a plain named point otherwise),
///   - generic named points g0, g1, ...,
///   - members w<k>.<i> of the countably infinite generator blocks W0, W1,
///     ... used to build countable sets.
/// All named parts and the unnamed remainder of the carrier are pairwise
/// disjoint; the remainder is countably infinite for the included-point
/// space and uncountable for the others.
struct PointName {
    enum class Kind : std::uint8_t { Distinguished, Generic, GenMember };

    Kind kind = Kind::Distinguished;
    int gen = 0;
    int index = 0;

    static PointName distinguished() { return {Kind::Distinguished, 0, 0}; }
    static PointName generic(int i) { return {Kind::Generic, 0, i}; }
    static PointName member(int gen, int i) { return {Kind::GenMember, gen, i}; }

    auto operator<=>(const PointName&) const = default;
    std::string to_string() const;
};

/// A set in the finite / cofinite / countable / co-countable algebra over a
/// catalog carrier: optionally complemented union of whole generator blocks
/// and finitely many named points, minus finitely many named points. The
/// algebra is closed under complement and finite union/intersection, and
/// membership of any named point is decidable.
class DescribedSet {
public:
    enum class Shape { Fin, Cofin, Ctbl, Coctbl };

    DescribedSet() = default;

    static DescribedSet empty_set() { return DescribedSet(); }
    static DescribedSet universe();
    static DescribedSet finite(std::initializer_list<PointName> points);
    static DescribedSet finite(const std::vector<PointName>& points);
    /// The whole generator block W<k>.
    static DescribedSet generator(int k);

    DescribedSet complement() const;
    DescribedSet unite(const DescribedSet& o) const;
    DescribedSet intersect(const DescribedSet& o) const;
    DescribedSet difference(const DescribedSet& o) const;
    DescribedSet with(PointName p) const { return unite(finite({p})); }
    DescribedSet without(PointName p) const { return difference(finite({p})); }

    bool contains(PointName p) const;
    bool subset_of(const DescribedSet& o) const { return difference(o).is_empty(); }

    bool is_empty() const { return !complemented_ && gens_.empty() && plus_.empty(); }
    bool is_universe() const { return complemented_ && gens_.empty() && plus_.empty(); }
    /// Finite as a set of points.
    bool is_finite() const { return !complemented_ && gens_.empty(); }
    /// Finite or countably infinite.
    bool is_countable() const { return !complemented_; }

    Shape shape() const;
    /// Explicit members of a finite set.
    std::vector<PointName> finite_members() const;

    bool operator==(const DescribedSet&) const = default;
    std::string to_string() const;

private:
    bool base_contains(PointName p) const;
    void normalize();

    bool complemented_ = false;
    std::set<int> gens_;
    std::set<PointName> plus_;
    std::set<PointName> minus_;  // only members of active generators
};

enum class Family {
    CofiniteLine,         // uncountable carrier, opens = {} + cofinite sets
    CocountableLine,      // uncountable carrier, opens = {} + co-countable sets
    PointCocountable,     // uncountable carrier, opens = {} + co-countable sets containing p
    IncludedPointCofinite // countable carrier, opens = {} + cofinite sets containing 0
};

/// How a catalog verdict was obtained.
struct Verdict {
    enum class Status { True, False, Unsupported };
    enum class Mode { Computed, Documented };

    Status status = Status::Unsupported;
    Mode mode = Mode::Computed;
    std::string note;

    bool is_true() const { return status == Status::True; }
    bool is_false() const { return status == Status::False; }
    bool supported() const { return status != Status::Unsupported; }
};

/// One of the four symbolic example spaces, with exact rule tables for
/// closure, interior, compactness, lambda-closedness, delta-closure and the
/// separation verdicts. Rules never leave the described-set algebra for
/// these families; UnrepresentableSet would indicate a rule defect.
class DescribedSpace {
public:
    explicit DescribedSpace(Family family) : family_(family) {}

    static const std::vector<std::string>& names();
    static std::optional<DescribedSpace> by_name(const std::string& name);

    Family family() const { return family_; }
    std::string name() const;
    std::string description() const;
    /// The distinguished point, for the two included-point families.
    std::optional<PointName> distinguished_point() const;

    bool is_open(const DescribedSet& a) const;
    bool is_closed(const DescribedSet& a) const { return is_open(a.complement()); }

    DescribedSet closure(const DescribedSet& a) const;
    DescribedSet interior(const DescribedSet& a) const;
    bool is_compact(const DescribedSet& a) const;
    bool is_lambda_set(const DescribedSet& a) const;
    bool is_lambda_closed(const DescribedSet& a) const;
    DescribedSet delta_closure(const DescribedSet& a) const;
    /// Always {{}, X}: every nonempty proper open has closure X.
    std::vector<DescribedSet> regular_opens() const;

    /// Existence of an open-or-closed separating set containing f and
    /// avoiding y (the compact-separation characterization of
    /// lambda-closedness, evaluated exactly per family).
    bool separating_set_exists(const DescribedSet& f, PointName y) const;

    /// Verdict for one axiom: computed from the rule table, a documented
    /// known value with a proof sketch, or Unsupported (never a guess).
    Verdict classify(Axiom axiom) const;

    /// Rule-table derivations, keyed by rule name, for documentation output.
    std::map<std::string, std::string> rule_notes() const;

    /// Trace space on {0..m} for the included-point-cofinite family: the
    /// cofinite-containing-0 opens trace to every subset containing 0.
    /// Throws UnsupportedAxiom for other families.
    FinSpace truncation(int m) const;

private:
    Family family_;
};

std::vector<DescribedSpace> all_families();

/// Seeded random described set built from a few generators and named points.
DescribedSet random_set(std::mt19937& rng);

/// Named points outside f, preferring the distinguished point and members of
/// generator blocks; at most `count` entries.
std::vector<PointName> sample_points_outside(const DescribedSpace& space, const DescribedSet& f,
                                             int count, std::mt19937& rng);

}  // namespace finitop::catalog
