#pragma once

#include <string>
#include <vector>

#include "finitop/errors.hpp"
#include "finitop/pointset.hpp"

namespace finitop {

/// A finite topological space on points 0..n-1 with its full open-set family
/// stored explicitly. Construction validates the topology axioms and derives
/// the minimal-neighborhood table and the specialization preorder; values are
/// immutable afterwards and safe to share across threads.
///
/// Specialization convention: y <= x iff y lies in the closure of {x},
/// equivalently x is in every open set containing y. Open sets are exactly
/// the up-sets of this preorder, and min_nbhd(x) = {z : x <= z} is the
/// smallest open set containing x.
class FinSpace {
public:
    /// Validates and canonicalizes `family` as a topology on n points.
    /// Throws NotATopology with a witnessing defect otherwise.
    static FinSpace from_opens(int n, SetFamily family);

    /// Smallest topology containing `subbase`: closes under finite
    /// intersections (empty intersection = X), then under unions.
    static FinSpace from_subbase(int n, const SetFamily& subbase);

    /// Topology whose opens are the up-sets of the reflexive-transitive
    /// closure of the given pairs, each meaning lo <= hi.
    static FinSpace from_preorder(int n, const std::vector<std::pair<int, int>>& pairs);

    static FinSpace discrete(int n);
    static FinSpace indiscrete(int n);
    /// Two points with opens {{}, {1}, {0,1}}.
    static FinSpace sierpinski();

    int points() const { return n_; }
    PointSet universe() const { return PointSet::universe(n_); }
    const SetFamily& opens() const { return opens_; }

    bool is_open(PointSet a) const { return opens_.contains(a); }
    bool is_closed(PointSet a) const { return opens_.contains(a.complement_in(n_)); }
    bool is_clopen(PointSet a) const { return is_open(a) && is_closed(a); }

    /// Smallest open set containing x.
    PointSet min_nbhd(int x) const { return min_nbhd_[static_cast<std::size_t>(x)]; }
    /// Closure of the singleton {x}.
    PointSet point_closure(int x) const { return point_closure_[static_cast<std::size_t>(x)]; }
    /// y <= x in the specialization preorder.
    bool specializes(int y, int x) const { return point_closure(x).contains(y); }

    /// Smallest closed superset of a.
    PointSet closure(PointSet a) const;
    /// Largest open subset of a.
    PointSet interior(PointSet a) const;

    /// All closed sets (complements of opens), sorted.
    SetFamily closed_sets() const;
    /// All clopen sets.
    SetFamily clopens() const;

    bool operator==(const FinSpace&) const = default;

    /// Compact text encoding "n:mask,mask,..." of the labeled space. Distinct
    /// labeled spaces have distinct encodings.
    std::string encoding() const;

private:
    FinSpace() = default;

    int n_ = 0;
    SetFamily opens_;
    std::vector<PointSet> min_nbhd_;
    std::vector<PointSet> point_closure_;
};

/// A subspace together with the relabeling back into its parent. New point i
/// corresponds to parent point to_parent[i] (ascending).
struct Subspace {
    FinSpace space;
    std::vector<int> to_parent;

    /// Transports a subset of the subspace into the parent's points.
    PointSet embed(PointSet sub) const;
    /// Restricts a parent subset to the subspace's points.
    PointSet restrict(PointSet parent) const;
};

/// Relative topology on a nonempty subset, points relabeled to 0..|a|-1.
/// Throws EmptyCarrier when a is empty.
Subspace subspace(const FinSpace& space, PointSet a);

/// True iff a is contained in the interior of its closure.
bool is_locally_dense(const FinSpace& space, PointSet a);

/// Disjoint union; opens are unions of one open from each summand. Summand i
/// occupies a contiguous block of points starting at the sum of the earlier
/// sizes. Throws BoundExceeded when the list is empty or too large.
FinSpace topological_sum(const std::vector<FinSpace>& spaces);

/// Homeomorphism-invariant key: the lexicographically minimal sorted open
/// family over all point permutations. Equal keys iff homeomorphic.
struct CanonicalKey {
    int n = 0;
    std::vector<Mask> opens;

    auto operator<=>(const CanonicalKey&) const = default;
    std::string to_string() const;
};

/// Brute-force canonical form; throws BoundExceeded for n > 7.
CanonicalKey canonical_form(const FinSpace& space);

/// Rebuilds the representative space encoded by a canonical key.
FinSpace space_from_key(const CanonicalKey& key);

}  // namespace finitop
