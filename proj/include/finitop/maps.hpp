#pragma once

#include <vector>

#include "finitop/finspace.hpp"

namespace finitop {

/// A total function between two finite spaces, given pointwise.
struct SpaceMap {
    FinSpace dom;
    FinSpace cod;
    std::vector<int> values;  // values[x] in 0..cod.points()-1

    SpaceMap(FinSpace dom_, FinSpace cod_, std::vector<int> values_);

    int operator()(int x) const { return values[static_cast<std::size_t>(x)]; }
    PointSet image(PointSet a) const;
    PointSet preimage(PointSet b) const;
    PointSet fiber(int y) const { return preimage(PointSet::single(y)); }
    bool bijective() const;
};

SpaceMap identity_map(const FinSpace& space);
SpaceMap constant_map(const FinSpace& dom, const FinSpace& cod, int y);
/// g after f; throws when f's codomain and g's domain differ.
SpaceMap compose(const SpaceMap& g, const SpaceMap& f);

bool is_continuous(const SpaceMap& f);
/// Preimages of opens are delta-open.
bool is_super_continuous(const SpaceMap& f);
/// Images of closed sets are delta-closed.
bool is_super_closed(const SpaceMap& f);
/// Images of closed sets are closed.
bool is_closed_map(const SpaceMap& f);
/// Images of open sets are open.
bool is_open_map(const SpaceMap& f);
/// Closed map with compact fibers. Fibers of maps between finite spaces are
/// always compact; the fiber check stays as a guard.
bool is_perfect(const SpaceMap& f);
/// Continuous open bijection. Independent of canonical_form by design.
bool is_homeomorphism(const SpaceMap& f);
/// Super-continuous and super-closed bijection; throws NotABijection.
bool is_super_homeomorphism(const SpaceMap& f);

/// All continuous maps dom -> cod, in lexicographic value-table order.
/// Throws BoundExceeded when either side has more than 4 points.
std::vector<SpaceMap> enumerate_continuous_maps(const FinSpace& dom, const FinSpace& cod);

}  // namespace finitop
