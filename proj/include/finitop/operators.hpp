#pragma once

#include <functional>
#include <optional>
#include <string>

#include "finitop/finspace.hpp"

namespace finitop {

/// Identifies one of the built-in generalized closure operators, or wraps a
/// user-supplied set function. Custom operators must pass
/// check_closure_axioms before they are trusted by the classifiers.
struct ClosureOperator {
    enum class Tag { Closure, Delta, Theta, Lambda, Zero, Urysohn, Quasi, Custom };

    Tag tag = Tag::Closure;
    std::string name = "c";
    std::function<PointSet(const FinSpace&, PointSet)> fn;  // Custom only

    static ClosureOperator closure() { return {Tag::Closure, "c", nullptr}; }
    static ClosureOperator delta() { return {Tag::Delta, "delta", nullptr}; }
    static ClosureOperator theta() { return {Tag::Theta, "theta", nullptr}; }
    static ClosureOperator lambda() { return {Tag::Lambda, "lambda", nullptr}; }
    static ClosureOperator zero() { return {Tag::Zero, "zero", nullptr}; }
    static ClosureOperator urysohn() { return {Tag::Urysohn, "urysohn", nullptr}; }
    static ClosureOperator quasi() { return {Tag::Quasi, "quasi", nullptr}; }
    static ClosureOperator custom(std::string name,
                                  std::function<PointSet(const FinSpace&, PointSet)> fn) {
        return {Tag::Custom, std::move(name), std::move(fn)};
    }

    static const std::vector<ClosureOperator>& builtins();
    /// Parses "c" | "delta" | "theta" | "lambda" | "zero" | "urysohn" | "quasi".
    static std::optional<ClosureOperator> parse(const std::string& name);
};

/// Families derivable from a space's topology.
enum class DerivedTopology { Theta, Delta, Lambda, Zero, Urysohn, Quasi };

/// All opens U with U = Int(Cl(U)).
SetFamily regular_opens(const FinSpace& space);

/// Topology generated by the regular opens as a base.
FinSpace semi_regularization(const FinSpace& space);

/// Points whose every regular-open neighborhood meets a.
PointSet delta_closure(const FinSpace& space, PointSet a);

/// Points x such that Cl(U) meets a for every open U containing x. Not
/// idempotent in general; its fixed points are exactly the theta-closed sets.
PointSet theta_closure(const FinSpace& space, PointSet a);

/// Union of all theta-open subsets of a; equals the complement of the
/// theta-closure of the complement.
PointSet theta_interior(const FinSpace& space, PointSet a);

/// The full family of theta-/delta-/lambda-/zero-/Urysohn-/quasi-open sets.
/// For Lambda the family is returned even when it fails to be a topology
/// (see is_lambda_space).
SetFamily derived_topology(const FinSpace& space, DerivedTopology which);

/// All intersections of open families. On a finite space this coincides with
/// the opens themselves (the empty intersection contributes X, which is
/// already open); both routes are computed and compared.
SetFamily lambda_sets(const FinSpace& space);

/// All sets of the form L ∩ C with L an intersection of opens and C closed.
SetFamily lambda_closed_sets(const FinSpace& space);

/// True iff a = L ∩ C for some Λ-set L and closed C. Decided through the
/// identity a = ker(a) ∩ Cl(a), where ker is the intersection of all open
/// supersets; the exhaustive decomposition search is kept as a test oracle.
bool is_lambda_closed(const FinSpace& space, PointSet a);

/// Smallest λ-closed superset: the intersection of all λ-closed supersets,
/// which is itself λ-closed since λ-closed sets are meet-closed.
PointSet lambda_closure(const FinSpace& space, PointSet a);

/// True iff the λ-open family contains {} and X and is closed under pairwise
/// union and intersection.
bool is_lambda_space(const FinSpace& space);

/// Per-space cache of the derived families; construct once per space when
/// evaluating many operators or subsets. The referenced space must outlive
/// the cache.
class SpaceOps {
public:
    explicit SpaceOps(const FinSpace& space) : s_(space) {}

    const FinSpace& space() const { return s_; }
    const SetFamily& regular_opens() const;
    const SetFamily& tau_delta() const;
    const SetFamily& tau_theta() const;
    const SetFamily& tau_zero() const;
    const SetFamily& tau_urysohn() const;
    const SetFamily& tau_quasi() const;
    const SetFamily& lambda_closed() const;
    const SetFamily& lambda_open() const;

    PointSet delta_closure(PointSet a) const;
    PointSet theta_closure(PointSet a) const;
    /// Smallest superset of a closed in the given family (complement-of-member).
    PointSet closure_in(const SetFamily& opens_family, PointSet a) const;

    /// ξA for a built-in or custom operator. Built-ins are Kuratowski closure
    /// operators: c, delta (= closure in the semi-regularization), and the
    /// closures of the zero/Urysohn/quasi topologies; theta is the closure of
    /// the theta-topology (the pointwise theta-closure itself fails
    /// idempotence on some finite spaces, while the two agree on fixed
    /// points); lambda is the λ-closure.
    PointSet apply(const ClosureOperator& op, PointSet a) const;

private:
    const FinSpace& s_;
    mutable std::optional<SetFamily> ro_, tau_delta_, tau_theta_, tau_zero_, tau_urysohn_,
        tau_quasi_, lambda_closed_, lambda_open_;
};

/// ξA computed through a fresh SpaceOps; prefer SpaceOps for sweeps.
PointSet apply(const FinSpace& space, const ClosureOperator& op, PointSet a);

/// Result of checking the four general-closure-operator axioms
/// (ξ{} = {}, A ⊆ ξA, A ⊆ B ⇒ ξA ⊆ ξB, ξξA = ξA) over all subsets.
struct ClosureAxiomReport {
    bool ok = true;
    std::string violated;   // "empty" | "extensive" | "monotone" | "idempotent"
    PointSet witness_a;
    PointSet witness_b;     // monotonicity only
    std::string message;
};

ClosureAxiomReport check_closure_axioms(const FinSpace& space, const ClosureOperator& op);

}  // namespace finitop
