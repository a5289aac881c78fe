#include <doctest.h>

#include <random>
#include <set>

#include "finitop/enumerate.hpp"
#include "finitop/finspace.hpp"

using namespace finitop;

namespace {

FinSpace three_point() {
    // opens {}, {0}, {1}, {0,1}, X
    return FinSpace::from_opens(3, SetFamily::of({PointSet::empty_set(), PointSet::of({0}),
                                                  PointSet::of({1}), PointSet::of({0, 1}),
                                                  PointSet::of({0, 1, 2})}));
}

FinSpace chain3() {
    return FinSpace::from_preorder(3, {{0, 1}, {1, 2}});
}

}  // namespace

TEST_CASE("point sets behave like bit vectors") {
    const PointSet a = PointSet::of({0, 2});
    CHECK(a.size() == 2);
    CHECK(a.contains(0));
    CHECK(!a.contains(1));
    CHECK(a.to_string() == "{0,2}");
    CHECK(PointSet::empty_set().to_string() == "{}");
    CHECK(a.complement_in(3) == PointSet::of({1}));
    CHECK((a | PointSet::of({1})) == PointSet::universe(3));
    CHECK((a & PointSet::of({2, 1})) == PointSet::of({2}));
    CHECK(a.minus(PointSet::of({2})) == PointSet::of({0}));
    CHECK(PointSet::of({0}).subset_of(a));
    CHECK(a.elements() == std::vector<int>{0, 2});
}

TEST_CASE("sierpinski construction derives neighborhoods and specialization") {
    const FinSpace s = FinSpace::sierpinski();
    CHECK(s.points() == 2);
    CHECK(s.opens().size() == 3);
    CHECK(s.min_nbhd(0) == PointSet::of({0, 1}));
    CHECK(s.min_nbhd(1) == PointSet::of({1}));
    CHECK(s.point_closure(0) == PointSet::of({0}));
    CHECK(s.point_closure(1) == PointSet::of({0, 1}));
    CHECK(s.specializes(0, 1));  // 0 lies in the closure of {1}
    CHECK(!s.specializes(1, 0));
}

TEST_CASE("discrete space is the full power set") {
    const FinSpace d = FinSpace::discrete(2);
    CHECK(d.opens().size() == 4);
    for (Mask m = 0; m < 4; ++m) CHECK(d.is_open(PointSet(m)));
}

TEST_CASE("families violating the axioms are rejected with a witness") {
    CHECK_THROWS_AS(FinSpace::from_opens(
                        2, SetFamily::of({PointSet::empty_set(), PointSet::of({0})})),
                    NotATopology);
    CHECK_THROWS_AS(FinSpace::from_opens(2, SetFamily::of({PointSet::of({0, 1})})), NotATopology);
    // Union of {0} and {1} missing.
    try {
        FinSpace::from_opens(3, SetFamily::of({PointSet::empty_set(), PointSet::of({0}),
                                               PointSet::of({1}), PointSet::of({0, 1, 2})}));
        FAIL("expected NotATopology");
    } catch (const NotATopology& e) {
        CHECK(std::string(e.what()).find("union") != std::string::npos);
    }
    // Member outside the carrier.
    CHECK_THROWS_AS(FinSpace::from_opens(1, SetFamily::of({PointSet::empty_set(),
                                                           PointSet::of({0, 1})})),
                    NotATopology);
}

TEST_CASE("subbase generation closes under intersections then unions") {
    const FinSpace s = FinSpace::from_subbase(
        3, SetFamily::of({PointSet::of({0}), PointSet::of({1})}));
    CHECK(s.opens() == three_point().opens());
    CHECK(s.opens().size() == 5);

    CHECK(FinSpace::from_subbase(2, SetFamily::of({PointSet::of({1})})).opens() ==
          FinSpace::sierpinski().opens());
    CHECK(FinSpace::from_subbase(2, SetFamily()).opens() == FinSpace::indiscrete(2).opens());
}

TEST_CASE("closure and interior on the worked examples") {
    const FinSpace s = FinSpace::sierpinski();
    CHECK(s.closure(PointSet::of({1})) == PointSet::of({0, 1}));
    CHECK(s.closure(PointSet::empty_set()).empty());
    CHECK(s.interior(PointSet::of({0})).empty());

    const FinSpace t = three_point();
    CHECK(t.closure(PointSet::of({0})) == PointSet::of({0, 2}));
    CHECK(t.interior(PointSet::of({0, 2})) == PointSet::of({0}));
}

TEST_CASE("closure operator laws and duality over all small spaces") {
    for (int n = 0; n <= 3; ++n) {
        for (const FinSpace& s : all_topologies(n)) {
            for (Mask m = 0; m < (Mask{1} << n); ++m) {
                const PointSet a(m);
                const PointSet cl = s.closure(a);
                CHECK(a.subset_of(cl));
                CHECK(s.closure(cl) == cl);
                CHECK(s.interior(a) == s.closure(a.complement_in(n)).complement_in(n));
                CHECK(s.interior(a).subset_of(a));
                CHECK(s.interior(s.interior(a)) == s.interior(a));
                for (Mask sub = m;; sub = (sub - 1) & m) {
                    CHECK(s.closure(PointSet(sub)).subset_of(cl));
                    if (sub == 0) break;
                }
            }
            // Opens are exactly the up-sets of the specialization preorder.
            for (Mask m = 0; m < (Mask{1} << n); ++m) {
                const PointSet a(m);
                bool up_set = true;
                for (int x : a.elements())
                    if (!s.min_nbhd(x).subset_of(a)) up_set = false;
                CHECK(s.is_open(a) == up_set);
            }
        }
    }
}

TEST_CASE("subspaces relabel and trace correctly") {
    const Subspace d2 = subspace(FinSpace::discrete(3), PointSet::of({0, 2}));
    CHECK(d2.space.opens() == FinSpace::discrete(2).opens());
    CHECK(d2.to_parent == std::vector<int>{0, 2});
    CHECK(d2.embed(PointSet::of({1})) == PointSet::of({2}));
    CHECK(d2.restrict(PointSet::of({2, 1})) == PointSet::of({1}));

    const Subspace pt = subspace(FinSpace::sierpinski(), PointSet::of({0}));
    CHECK(pt.space.points() == 1);
    CHECK(pt.space.opens().size() == 2);

    const Subspace tsub = subspace(three_point(), PointSet::of({0, 2}));
    CHECK(tsub.space.opens() ==
          SetFamily::of({PointSet::empty_set(), PointSet::of({0}), PointSet::of({0, 1})}));

    CHECK_THROWS_AS(subspace(three_point(), PointSet::empty_set()), EmptyCarrier);
}

TEST_CASE("iterated subspaces agree with direct restriction up to labeling") {
    std::mt19937 rng(7);
    for (const FinSpace& s : all_topologies(4)) {
        if (std::uniform_int_distribution<int>(0, 9)(rng) != 0) continue;  // sample
        for (Mask a = 1; a < 16; ++a) {
            const Subspace first = subspace(s, PointSet(a));
            for (Mask b = 1; b < (Mask{1} << first.space.points()); ++b) {
                const Subspace second = subspace(first.space, PointSet(b));
                const Subspace direct = subspace(s, first.embed(PointSet(b)));
                CHECK(canonical_form(second.space) == canonical_form(direct.space));
            }
        }
    }
}

TEST_CASE("locally dense sets include opens and dense sets") {
    for (int n = 1; n <= 3; ++n)
        for (const FinSpace& s : all_topologies(n)) {
            for (PointSet u : s.opens()) CHECK(is_locally_dense(s, u));
            for (Mask m = 0; m < (Mask{1} << n); ++m) {
                const PointSet a(m);
                if (s.closure(a) == s.universe()) CHECK(is_locally_dense(s, a));
            }
        }
    CHECK(!is_locally_dense(FinSpace::sierpinski(), PointSet::of({0})));
}

TEST_CASE("topological sums multiply open families") {
    const FinSpace one = FinSpace::discrete(1);
    CHECK(topological_sum({one, one}).opens() == FinSpace::discrete(2).opens());

    const FinSpace s = FinSpace::sierpinski();
    const FinSpace ss = topological_sum({s, s});
    CHECK(ss.points() == 4);
    CHECK(ss.opens().size() == 9);

    CHECK(topological_sum({three_point()}).opens() == three_point().opens());
    CHECK_THROWS_AS(topological_sum({}), BoundExceeded);
}

TEST_CASE("canonical forms identify spaces up to homeomorphism") {
    const FinSpace s = FinSpace::sierpinski();
    const FinSpace swapped = FinSpace::from_opens(
        2, SetFamily::of({PointSet::empty_set(), PointSet::of({0}), PointSet::of({0, 1})}));
    CHECK(canonical_form(s) == canonical_form(swapped));
    CHECK(canonical_form(FinSpace::discrete(2)) != canonical_form(FinSpace::indiscrete(2)));

    std::set<std::string> keys;
    for (const FinSpace& t : all_topologies(2)) keys.insert(canonical_form(t).to_string());
    CHECK(keys.size() == 3);

    CHECK(space_from_key(canonical_form(s)).points() == 2);
    CHECK(canonical_form(space_from_key(canonical_form(s))) == canonical_form(s));
}

TEST_CASE("canonical form is invariant under random relabelings") {
    std::mt19937 rng(11);
    for (const FinSpace& s : all_topologies(4)) {
        if (std::uniform_int_distribution<int>(0, 19)(rng) != 0) continue;
        std::vector<int> perm = {0, 1, 2, 3};
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<PointSet> permuted;
        for (PointSet u : s.opens()) {
            PointSet v;
            for (int x : u.elements()) v = v.with(perm[static_cast<std::size_t>(x)]);
            permuted.push_back(v);
        }
        const FinSpace relabeled = FinSpace::from_opens(4, SetFamily(std::move(permuted)));
        CHECK(canonical_form(relabeled) == canonical_form(s));
    }
}

TEST_CASE("canonical form enforces its point bound") {
    std::vector<FinSpace> eight(8, FinSpace::discrete(1));
    CHECK_THROWS_AS(canonical_form(topological_sum(eight)), BoundExceeded);
}

TEST_CASE("chain space built from a preorder") {
    const FinSpace c = chain3();
    CHECK(c.opens() == SetFamily::of({PointSet::empty_set(), PointSet::of({2}),
                                      PointSet::of({1, 2}), PointSet::of({0, 1, 2})}));
    CHECK(c.min_nbhd(0) == PointSet::universe(3));
    CHECK(c.point_closure(2) == PointSet::universe(3));
}
