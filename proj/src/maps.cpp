#include "finitop/maps.hpp"

#include "finitop/classify.hpp"
#include "finitop/operators.hpp"

namespace finitop {

SpaceMap::SpaceMap(FinSpace dom_, FinSpace cod_, std::vector<int> values_)
    : dom(std::move(dom_)), cod(std::move(cod_)), values(std::move(values_)) {
    if (static_cast<int>(values.size()) != dom.points())
        throw TopologyError("map value table does not cover the domain");
    for (int v : values)
        if (v < 0 || v >= cod.points())
            throw TopologyError("map value " + std::to_string(v) + " outside the codomain");
}

PointSet SpaceMap::image(PointSet a) const {
    PointSet out;
    for (int x : a.elements()) out = out.with(values[static_cast<std::size_t>(x)]);
    return out;
}

PointSet SpaceMap::preimage(PointSet b) const {
    PointSet out;
    for (int x = 0; x < dom.points(); ++x)
        if (b.contains(values[static_cast<std::size_t>(x)])) out = out.with(x);
    return out;
}

bool SpaceMap::bijective() const {
    if (dom.points() != cod.points()) return false;
    PointSet seen;
    for (int v : values) seen = seen.with(v);
    return seen == cod.universe();
}

SpaceMap identity_map(const FinSpace& space) {
    std::vector<int> v(static_cast<std::size_t>(space.points()));
    for (int x = 0; x < space.points(); ++x) v[static_cast<std::size_t>(x)] = x;
    return SpaceMap(space, space, std::move(v));
}

SpaceMap constant_map(const FinSpace& dom, const FinSpace& cod, int y) {
    return SpaceMap(dom, cod, std::vector<int>(static_cast<std::size_t>(dom.points()), y));
}

SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
    if (!(f.cod == g.dom)) throw TopologyError("composition domains do not match");
    std::vector<int> v(static_cast<std::size_t>(f.dom.points()));
    for (int x = 0; x < f.dom.points(); ++x) v[static_cast<std::size_t>(x)] = g(f(x));
    return SpaceMap(f.dom, g.cod, std::move(v));
}

bool is_continuous(const SpaceMap& f) {
    for (PointSet v : f.cod.opens())
        if (!f.dom.is_open(f.preimage(v))) return false;
    return true;
}

bool is_super_continuous(const SpaceMap& f) {
    const SetFamily tau_delta = derived_topology(f.dom, DerivedTopology::Delta);
    for (PointSet v : f.cod.opens())
        if (!tau_delta.contains(f.preimage(v))) return false;
    return true;
}

bool is_super_closed(const SpaceMap& f) {
    const SpaceOps cod_ops(f.cod);
    for (PointSet c : f.dom.closed_sets()) {
        const PointSet img = f.image(c);
        if (cod_ops.delta_closure(img) != img) return false;
    }
    return true;
}

bool is_closed_map(const SpaceMap& f) {
    for (PointSet c : f.dom.closed_sets())
        if (!f.cod.is_closed(f.image(c))) return false;
    return true;
}

bool is_open_map(const SpaceMap& f) {
    for (PointSet u : f.dom.opens())
        if (!f.cod.is_open(f.image(u))) return false;
    return true;
}

bool is_perfect(const SpaceMap& f) {
    for (int y = 0; y < f.cod.points(); ++y)
        if (!is_compact(f.dom, f.fiber(y))) return false;
    return is_closed_map(f);
}

bool is_homeomorphism(const SpaceMap& f) {
    return f.bijective() && is_continuous(f) && is_open_map(f);
}

bool is_super_homeomorphism(const SpaceMap& f) {
    if (!f.bijective()) throw NotABijection("super-homeomorphism requires a bijection");
    return is_super_continuous(f) && is_super_closed(f);
}

std::vector<SpaceMap> enumerate_continuous_maps(const FinSpace& dom, const FinSpace& cod) {
    if (dom.points() > 4 || cod.points() > 4)
        throw BoundExceeded("map enumeration is limited to 4-point spaces");
    std::vector<SpaceMap> out;
    const int nx = dom.points();
    const int ny = cod.points();
    if (nx == 0) {
        out.emplace_back(dom, cod, std::vector<int>{});
        return out;
    }
    if (ny == 0) return out;  // no maps from nonempty into empty

    std::vector<int> v(static_cast<std::size_t>(nx), 0);
    while (true) {
        SpaceMap f(dom, cod, v);
        if (is_continuous(f)) out.push_back(std::move(f));
        int i = nx - 1;
        while (i >= 0 && v[static_cast<std::size_t>(i)] == ny - 1) {
            v[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++v[static_cast<std::size_t>(i)];
    }
    return out;
}

}  // namespace finitop
