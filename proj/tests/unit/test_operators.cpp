#include <doctest.h>

#include "finitop/enumerate.hpp"
#include "finitop/operators.hpp"

using namespace finitop;

namespace {

FinSpace three_point() {
    return FinSpace::from_opens(3, SetFamily::of({PointSet::empty_set(), PointSet::of({0}),
                                                  PointSet::of({1}), PointSet::of({0, 1}),
                                                  PointSet::of({0, 1, 2})}));
}

/// Exhaustive decomposition oracle for lambda-closedness: scan all pairs of
/// a Lambda-set and a closed set. Independent of the kernel shortcut used by
/// the implementation.
bool lambda_closed_by_decomposition(const FinSpace& s, PointSet a) {
    for (PointSet l : lambda_sets(s))
        for (PointSet c : s.closed_sets())
            if ((l & c) == a) return true;
    return false;
}

}  // namespace

TEST_CASE("regular opens on the worked examples") {
    CHECK(regular_opens(FinSpace::sierpinski()) ==
          SetFamily::of({PointSet::empty_set(), PointSet::of({0, 1})}));
    CHECK(regular_opens(FinSpace::discrete(3)) == FinSpace::discrete(3).opens());
    CHECK(regular_opens(three_point()) ==
          SetFamily::of({PointSet::empty_set(), PointSet::of({0}), PointSet::of({1}),
                         PointSet::universe(3)}));
}

TEST_CASE("semi-regularization on the worked examples") {
    CHECK(semi_regularization(FinSpace::sierpinski()).opens() == FinSpace::indiscrete(2).opens());
    CHECK(semi_regularization(FinSpace::discrete(3)).opens() == FinSpace::discrete(3).opens());
    CHECK(semi_regularization(three_point()).opens() == three_point().opens());
}

TEST_CASE("delta closure on the worked examples") {
    CHECK(delta_closure(three_point(), PointSet::empty_set()).empty());
    CHECK(delta_closure(FinSpace::sierpinski(), PointSet::of({1})) == PointSet::universe(2));
    CHECK(delta_closure(three_point(), PointSet::of({0})) == PointSet::of({0, 2}));
}

TEST_CASE("theta closure on the worked examples") {
    const FinSpace d = FinSpace::discrete(3);
    for (Mask m = 0; m < 8; ++m) CHECK(theta_closure(d, PointSet(m)) == PointSet(m));

    CHECK(theta_closure(FinSpace::sierpinski(), PointSet::of({0})) == PointSet::universe(2));
    const FinSpace t = three_point();
    CHECK(theta_closure(t, PointSet::of({0})) == PointSet::of({0, 2}));
    // The theta closure of a set need not be theta-closed: this one grows.
    CHECK(theta_closure(t, PointSet::of({0, 2})) == PointSet::universe(3));
    CHECK(theta_interior(t, PointSet::of({1, 2})) == PointSet::of({1}));
}

TEST_CASE("derived topologies on the worked examples") {
    const FinSpace d = FinSpace::discrete(3);
    CHECK(derived_topology(d, DerivedTopology::Theta) == d.opens());

    const FinSpace s = FinSpace::sierpinski();
    const SetFamily trivial = SetFamily::of({PointSet::empty_set(), PointSet::universe(2)});
    CHECK(derived_topology(s, DerivedTopology::Quasi) == trivial);
    CHECK(derived_topology(s, DerivedTopology::Zero) == trivial);
    CHECK(derived_topology(s, DerivedTopology::Delta) == semi_regularization(s).opens());
    CHECK(derived_topology(s, DerivedTopology::Urysohn) == trivial);
}

TEST_CASE("lambda machinery on the worked examples") {
    const FinSpace s = FinSpace::sierpinski();
    // Every closed set is lambda-closed (closed intersect X); every open set
    // is a Lambda-set.
    for (PointSet c : s.closed_sets()) CHECK(is_lambda_closed(s, c));
    CHECK(lambda_sets(s).contains(PointSet::of({1})));
    CHECK(is_lambda_closed(s, PointSet::of({1})));
    CHECK(is_lambda_space(s));

    // The 3-chain is not a lambda-space: {0,2} is not lambda-closed, so the
    // lambda-open family is not stable under intersection.
    const FinSpace chain = FinSpace::from_preorder(3, {{0, 1}, {1, 2}});
    CHECK(!is_lambda_closed(chain, PointSet::of({0, 2})));
    CHECK(is_lambda_closed(chain, PointSet::of({1})));
    CHECK(!is_lambda_space(chain));
}

TEST_CASE("kernel shortcut matches the decomposition oracle") {
    for (int n = 0; n <= 3; ++n)
        for (const FinSpace& s : all_topologies(n))
            for (Mask m = 0; m < (Mask{1} << n); ++m) {
                const PointSet a(m);
                CHECK(is_lambda_closed(s, a) == lambda_closed_by_decomposition(s, a));
                // Lambda-closure is the least lambda-closed superset and is
                // the fixed-point hull of is_lambda_closed.
                const PointSet lc = lambda_closure(s, a);
                CHECK(a.subset_of(lc));
                CHECK(is_lambda_closed(s, lc));
                CHECK(lambda_closure(s, lc) == lc);
                if (is_lambda_closed(s, a)) CHECK(lc == a);
            }
}

TEST_CASE("lambda sets equal the open family on finite spaces") {
    for (int n = 0; n <= 3; ++n)
        for (const FinSpace& s : all_topologies(n)) CHECK(lambda_sets(s) == s.opens());
}

TEST_CASE("apply dispatches the built-in operators") {
    const FinSpace s = FinSpace::sierpinski();
    for (Mask m = 0; m < 4; ++m)
        CHECK(apply(s, ClosureOperator::closure(), PointSet(m)) == s.closure(PointSet(m)));
    CHECK(apply(s, ClosureOperator::delta(), PointSet::of({1})) == PointSet::universe(2));
    for (const ClosureOperator& op : ClosureOperator::builtins())
        CHECK(apply(s, op, PointSet::empty_set()).empty());
}

TEST_CASE("theta operator used by apply has the theta-closed fixed points") {
    for (int n = 0; n <= 3; ++n)
        for (const FinSpace& s : all_topologies(n)) {
            const SpaceOps ops(s);
            for (Mask m = 0; m < (Mask{1} << n); ++m) {
                const PointSet a(m);
                const bool fixed_applied = ops.apply(ClosureOperator::theta(), a) == a;
                const bool fixed_pointwise = theta_closure(s, a) == a;
                CHECK(fixed_applied == fixed_pointwise);
                // The delta tag agrees with the pointwise operator outright.
                CHECK(ops.apply(ClosureOperator::delta(), a) == delta_closure(s, a));
            }
        }
}

TEST_CASE("closure chains and family inclusions on small spaces") {
    for (int n = 0; n <= 3; ++n)
        for (const FinSpace& s : all_topologies(n)) {
            const SpaceOps ops(s);
            CHECK(ops.tau_theta().subfamily_of(ops.tau_delta()));
            CHECK(ops.tau_delta().subfamily_of(s.opens()));
            CHECK(ops.tau_quasi().subfamily_of(ops.tau_urysohn()));
            CHECK(ops.tau_urysohn().subfamily_of(s.opens()));
            CHECK(ops.tau_zero() == ops.tau_quasi());
            for (Mask m = 0; m < (Mask{1} << n); ++m) {
                const PointSet a(m);
                CHECK(s.closure(a).subset_of(delta_closure(s, a)));
                CHECK(delta_closure(s, a).subset_of(theta_closure(s, a)));
                const PointSet tcl = theta_closure(s, a);
                CHECK(delta_closure(s, tcl) == tcl);
            }
        }
}

TEST_CASE("closure axiom checker accepts the built-ins and reports violations") {
    for (int n = 0; n <= 3; ++n)
        for (const FinSpace& s : all_topologies(n))
            for (const ClosureOperator& op : ClosureOperator::builtins())
                CHECK(check_closure_axioms(s, op).ok);

    const FinSpace s = FinSpace::sierpinski();
    const auto everything = ClosureOperator::custom(
        "everything", [](const FinSpace& sp, PointSet) { return sp.universe(); });
    const ClosureAxiomReport r1 = check_closure_axioms(s, everything);
    CHECK(!r1.ok);
    CHECK(r1.violated == "empty");

    const auto interior_op = ClosureOperator::custom(
        "interior", [](const FinSpace& sp, PointSet a) { return sp.interior(a); });
    const ClosureAxiomReport r2 = check_closure_axioms(s, interior_op);
    CHECK(!r2.ok);
    CHECK(r2.violated == "extensive");
    CHECK(!r2.witness_a.subset_of(s.interior(r2.witness_a)));
}

TEST_CASE("operator name parsing") {
    CHECK(ClosureOperator::parse("c")->tag == ClosureOperator::Tag::Closure);
    CHECK(ClosureOperator::parse("quasi")->tag == ClosureOperator::Tag::Quasi);
    CHECK(!ClosureOperator::parse("bogus"));
}
