#include "finitop/classify.hpp"

namespace finitop {

bool is_compact(const FinSpace& space, PointSet a) {
    // Canonical worst-case cover by minimal neighborhoods; it is finite, so
    // it is its own finite subcover. Any other open cover refines to it.
    PointSet covered;
    for (int x : a.elements()) covered = covered | space.min_nbhd(x);
    return a.subset_of(covered);
}

bool t_kappa_xi(const FinSpace& space, KappaBound kappa, const ClosureOperator& xi) {
    const SpaceOps ops(space);
    return t_kappa_xi(ops, kappa, xi);
}

bool t_kappa_xi(const SpaceOps& ops, KappaBound kappa, const ClosureOperator& xi) {
    const FinSpace& s = ops.space();
    if (xi.tag == ClosureOperator::Tag::Custom) {
        const ClosureAxiomReport report = check_closure_axioms(s, xi);
        if (!report.ok)
            throw NotAClosureOperator("operator '" + xi.name + "' violates the " +
                                      report.violated + " axiom: " + report.message);
    }
    const int n = s.points();
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
        const PointSet a(m);
        if (!kappa.admits(a.size())) continue;
        if (!is_compact(s, a)) continue;
        if (ops.apply(xi, a) != a) return false;
    }
    return true;
}

namespace {

bool all_min_nbhds_disjoint(const FinSpace& s) {
    for (int x = 0; x < s.points(); ++x)
        for (int y = x + 1; y < s.points(); ++y)
            if (s.min_nbhd(x).intersects(s.min_nbhd(y))) return false;
    return true;
}

bool pairwise_separated_by(const FinSpace& s,
                           const SetFamily& fam_x, const SetFamily& fam_y,
                           bool (*disjoint)(const FinSpace&, PointSet, PointSet)) {
    for (int x = 0; x < s.points(); ++x)
        for (int y = x + 1; y < s.points(); ++y) {
            bool separated = false;
            for (PointSet u : fam_x) {
                if (!u.contains(x)) continue;
                for (PointSet v : fam_y) {
                    if (!v.contains(y)) continue;
                    if (disjoint(s, u, v)) {
                        separated = true;
                        break;
                    }
                }
                if (separated) break;
            }
            if (!separated) return false;
        }
    return true;
}

bool plain_disjoint(const FinSpace&, PointSet u, PointSet v) { return !u.intersects(v); }

bool closure_disjoint(const FinSpace& s, PointSet u, PointSet v) {
    return !s.closure(u).intersects(s.closure(v));
}

bool decide(const SpaceOps& ops, Axiom axiom) {
    const FinSpace& s = ops.space();
    const int n = s.points();
    const Mask subsets = Mask{1} << n;

    switch (axiom) {
        case Axiom::T0:
            // Some open set contains exactly one of x, y iff their minimal
            // neighborhoods differ.
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y)
                    if (s.min_nbhd(x) == s.min_nbhd(y)) return false;
            return true;
        case Axiom::T1:
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (x != y && s.min_nbhd(x).contains(y)) return false;
            return true;
        case Axiom::TD:
            // {x} = U ∩ C forces U ⊇ min_nbhd(x) and C ⊇ Cl{x}, so the
            // minimal candidate decomposition decides local closedness.
            for (int x = 0; x < n; ++x)
                if ((s.min_nbhd(x) & s.point_closure(x)) != PointSet::single(x)) return false;
            return true;
        case Axiom::TQuarter:
            // Finite subsets of a finite space are all subsets.
            for (Mask m = 0; m < subsets; ++m)
                if (!is_lambda_closed(s, PointSet(m))) return false;
            return true;
        case Axiom::TThird:
            for (Mask m = 0; m < subsets; ++m) {
                const PointSet a(m);
                if (is_compact(s, a) && !is_lambda_closed(s, a)) return false;
            }
            return true;
        case Axiom::THalf:
            for (Mask m = 0; m < subsets; ++m)
                if (!is_lambda_closed(s, PointSet(m))) return false;
            return true;
        case Axiom::WeaklyHausdorff: {
            // Defined through the semi-regularization being T1; the
            // delta-closure route lives in t_kappa_xi.
            const FinSpace sr = semi_regularization(s);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (x != y && sr.min_nbhd(x).contains(y)) return false;
            return true;
        }
        case Axiom::Hausdorff:
            return pairwise_separated_by(s, s.opens(), s.opens(), plain_disjoint);
        case Axiom::Urysohn:
            return pairwise_separated_by(s, s.opens(), s.opens(), closure_disjoint);
        case Axiom::CompletelyHausdorff: {
            // Cozero sets of a finite space are the clopen sets.
            const SetFamily clopens = s.clopens();
            return pairwise_separated_by(s, clopens, clopens, plain_disjoint);
        }
        case Axiom::Regular: {
            for (PointSet c : s.closed_sets())
                for (int x = 0; x < n; ++x) {
                    if (c.contains(x)) continue;
                    bool separated = false;
                    for (PointSet u : s.opens()) {
                        if (!u.contains(x)) continue;
                        for (PointSet v : s.opens())
                            if (c.subset_of(v) && !u.intersects(v)) {
                                separated = true;
                                break;
                            }
                        if (separated) break;
                    }
                    if (!separated) return false;
                }
            return true;
        }
        case Axiom::SemiRegular:
            return semi_regularization(s).opens() == s.opens();
        case Axiom::Kc:
            for (Mask m = 0; m < subsets; ++m) {
                const PointSet a(m);
                if (is_compact(s, a) && !s.is_closed(a)) return false;
            }
            return true;
        case Axiom::Kd:
            for (Mask m = 0; m < subsets; ++m) {
                const PointSet a(m);
                if (is_compact(s, a) && ops.delta_closure(a) != a) return false;
            }
            return true;
        case Axiom::US:
            // A sequence converges to x iff its infinitely-repeated points
            // all lie in min_nbhd(x); limits are unique iff no nonempty set
            // sits inside two distinct minimal neighborhoods, i.e. the
            // minimal neighborhoods are pairwise disjoint.
            return all_min_nbhds_disjoint(s);
        case Axiom::CPrime:
            for (Mask m = 0; m < subsets; ++m) {
                const PointSet a(m);
                if (!is_compact(s, a)) continue;
                for (Mask k = 0; k < subsets; ++k) {
                    const PointSet kk(k);
                    if (is_compact(s, kk) && !is_compact(s, a & kk)) return false;
                }
            }
            return true;
        case Axiom::AntiCompact:
            for (Mask m = 0; m < subsets; ++m) {
                const PointSet a(m);
                if (is_compact(s, a) && a.size() > n) return false;  // finite always
            }
            return true;
        case Axiom::R0:
            for (int x = 0; x < n; ++x)
                if (!s.point_closure(x).subset_of(s.min_nbhd(x))) return false;
            return true;
        case Axiom::WeakR0: {
            const SetFamily lam = lambda_sets(s);
            for (int x = 0; x < n; ++x) {
                const PointSet single = PointSet::single(x);
                if (is_lambda_closed(s, single) && !lam.contains(single)) return false;
            }
            return true;
        }
        case Axiom::HTR1:
            for (Mask m = 1; m < subsets; ++m) {
                const Subspace sub = subspace(s, PointSet(m));
                if (!classify(sub.space, Axiom::WeaklyHausdorff)) return false;
            }
            return true;
        case Axiom::LambdaSpace:
            return is_lambda_space(s);
    }
    return false;
}

}  // namespace

bool classify(const SpaceOps& ops, Axiom axiom) { return decide(ops, axiom); }

bool classify(const FinSpace& space, Axiom axiom) {
    const SpaceOps ops(space);
    return decide(ops, axiom);
}

PropertyVector classify_all(const FinSpace& space, ClassifyCache* cache) {
    std::string key;
    if (cache) {
        key = canonical_form(space).to_string();
        PropertyVector hit;
        if (cache->lookup(key, hit)) {
            if (cache->revalidate) {
                const PropertyVector fresh = classify_all(space, nullptr);
                if (!(fresh == hit))
                    throw TopologyError("memoized property vector disagrees with recomputation "
                                        "for key " + key);
            }
            return hit;
        }
    }
    const SpaceOps ops(space);
    PropertyVector v;
    for (Axiom a : all_axioms) v.at(a) = decide(ops, a);
    if (cache) cache->store(key, v);
    return v;
}

}  // namespace finitop
