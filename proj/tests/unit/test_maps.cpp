#include <doctest.h>

#include "finitop/enumerate.hpp"
#include "finitop/maps.hpp"

using namespace finitop;

TEST_CASE("identity and constant maps") {
    const FinSpace d = FinSpace::discrete(3);
    const SpaceMap id = identity_map(d);
    CHECK(is_continuous(id));
    CHECK(is_super_continuous(id));
    CHECK(is_super_closed(id));
    CHECK(is_perfect(id));
    CHECK(is_homeomorphism(id));
    CHECK(is_super_homeomorphism(id));

    const SpaceMap c = constant_map(FinSpace::sierpinski(), d, 1);
    CHECK(is_continuous(c));
    CHECK(!c.bijective());
    CHECK_THROWS_AS(is_super_homeomorphism(c), NotABijection);
}

TEST_CASE("identity on sierpinski is continuous but not super-continuous") {
    const SpaceMap id = identity_map(FinSpace::sierpinski());
    CHECK(is_continuous(id));
    // tau_delta of the sierpinski space is indiscrete, so the preimage of
    // {1} is open but not delta-open.
    CHECK(!is_super_continuous(id));
    // {0} is closed but its delta-closure is the whole space.
    CHECK(!is_super_closed(id));
    CHECK(is_perfect(id));
    CHECK(is_homeomorphism(id));
}

TEST_CASE("map plumbing: images, preimages, fibers, composition") {
    const FinSpace s = FinSpace::sierpinski();
    const SpaceMap f(s, FinSpace::discrete(2), {0, 0});
    CHECK(f.image(PointSet::of({0, 1})) == PointSet::of({0}));
    CHECK(f.preimage(PointSet::of({0})) == PointSet::of({0, 1}));
    CHECK(f.fiber(1).empty());

    const SpaceMap g(FinSpace::discrete(2), FinSpace::discrete(2), {1, 0});
    const SpaceMap gf = compose(g, f);
    CHECK(gf(0) == 1);
    CHECK(gf(1) == 1);
    CHECK(is_continuous(gf));

    CHECK_THROWS_AS(compose(f, g), TopologyError);  // domains do not line up
    CHECK_THROWS_AS(SpaceMap(s, s, {0}), TopologyError);
    CHECK_THROWS_AS(SpaceMap(s, s, {0, 5}), TopologyError);
}

TEST_CASE("continuous map counts on the smallest spaces") {
    const FinSpace one = FinSpace::discrete(1);
    CHECK(enumerate_continuous_maps(one, one).size() == 1);

    const FinSpace d2 = FinSpace::discrete(2);
    CHECK(enumerate_continuous_maps(d2, d2).size() == 4);

    // Computed by the exhaustive filter and frozen: of the four self-maps of
    // the sierpinski space, only the label swap fails continuity.
    const FinSpace s = FinSpace::sierpinski();
    const auto maps = enumerate_continuous_maps(s, s);
    CHECK(maps.size() == 3);
    for (const SpaceMap& f : maps) CHECK(!(f.values == std::vector<int>{1, 0}));

    CHECK_THROWS_AS(enumerate_continuous_maps(FinSpace::discrete(5), one), BoundExceeded);
}

TEST_CASE("continuity composes") {
    const FinSpace s = FinSpace::sierpinski();
    const FinSpace d = FinSpace::discrete(2);
    for (const SpaceMap& f : enumerate_continuous_maps(s, d))
        for (const SpaceMap& g : enumerate_continuous_maps(d, s))
            CHECK(is_continuous(compose(g, f)));
}

TEST_CASE("maps into kd codomains are super-closed and perfect") {
    // kd finite spaces are discrete; still run the full statement on a
    // non-trivial domain.
    const FinSpace s = FinSpace::sierpinski();
    const FinSpace d = FinSpace::discrete(2);
    const auto maps = enumerate_continuous_maps(s, d);
    CHECK(maps.size() == 2);  // constants only: any open preimage splits otherwise
    for (const SpaceMap& f : maps) {
        CHECK(is_super_closed(f));
        CHECK(is_perfect(f));
    }
}

TEST_CASE("homeomorphism test agrees with canonical forms") {
    const auto spaces = all_topologies(3);
    for (std::size_t i = 0; i < spaces.size(); i += 3)
        for (std::size_t j = 0; j < spaces.size(); j += 3) {
            const FinSpace& x = spaces[i];
            const FinSpace& y = spaces[j];
            bool found = false;
            for (const SpaceMap& f : enumerate_continuous_maps(x, y))
                if (f.bijective() && is_homeomorphism(f)) {
                    found = true;
                    break;
                }
            CHECK(found == (canonical_form(x) == canonical_form(y)));
        }
}
