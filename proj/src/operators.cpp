#include "finitop/operators.hpp"

#include <algorithm>

namespace finitop {

const std::vector<ClosureOperator>& ClosureOperator::builtins() {
    static const std::vector<ClosureOperator> ops = {
        closure(), delta(), theta(), lambda(), zero(), urysohn(), quasi()};
    return ops;
}

std::optional<ClosureOperator> ClosureOperator::parse(const std::string& name) {
    for (const ClosureOperator& op : builtins())
        if (op.name == name) return op;
    return std::nullopt;
}

SetFamily regular_opens(const FinSpace& space) {
    std::vector<PointSet> out;
    for (PointSet u : space.opens())
        if (space.interior(space.closure(u)) == u) out.push_back(u);
    return SetFamily(std::move(out));
}

FinSpace semi_regularization(const FinSpace& space) {
    // The regular opens are intersection-closed, so generating from them as a
    // subbase equals generating from them as a base.
    return FinSpace::from_subbase(space.points(), regular_opens(space));
}

PointSet delta_closure(const FinSpace& space, PointSet a) {
    const SetFamily ro = regular_opens(space);
    PointSet cl;
    for (int x = 0; x < space.points(); ++x) {
        bool cluster = true;
        for (PointSet u : ro)
            if (u.contains(x) && !u.intersects(a)) {
                cluster = false;
                break;
            }
        if (cluster) cl = cl.with(x);
    }
    return cl;
}

PointSet theta_closure(const FinSpace& space, PointSet a) {
    // The quantifier over open neighborhoods of x reduces to the minimal one:
    // Cl is monotone, so Cl(min_nbhd(x)) meets a iff Cl(U) meets a for all
    // open U containing x.
    PointSet cl;
    for (int x = 0; x < space.points(); ++x)
        if (space.closure(space.min_nbhd(x)).intersects(a)) cl = cl.with(x);
    return cl;
}

PointSet theta_interior(const FinSpace& space, PointSet a) {
    return theta_closure(space, a.complement_in(space.points()))
        .complement_in(space.points());
}

namespace {

bool is_theta_open(const FinSpace& space, PointSet a) {
    for (int x : a.elements()) {
        bool has = false;
        for (PointSet u : space.opens())
            if (u.contains(x) && space.closure(u).subset_of(a)) {
                has = true;
                break;
            }
        if (!has) return false;
    }
    return true;
}

bool is_zero_open(PointSet a, const SetFamily& clopens) {
    // Zero-sets of a finite space are the clopen sets: a continuous real
    // function is constant along specialization (y in Cl{x} forces
    // f(y) = f(x) since points are closed in R), hence constant on the
    // components of the comparability graph, so its zero set is a union of
    // components, i.e. clopen; conversely the indicator of a clopen set is
    // continuous. Cozero sets are the same family. The defining chain
    // x in C ⊆ Z ⊆ a therefore ranges over clopen pairs.
    for (int x : a.elements()) {
        bool has = false;
        for (PointSet c : clopens) {
            if (!c.contains(x)) continue;
            for (PointSet z : clopens)
                if (c.subset_of(z) && z.subset_of(a)) {
                    has = true;
                    break;
                }
            if (has) break;
        }
        if (!has) return false;
    }
    return true;
}

bool is_urysohn_open(const FinSpace& space, PointSet a) {
    for (int x : a.elements()) {
        bool has = false;
        for (PointSet u : space.opens()) {
            if (!u.contains(x)) continue;
            const PointSet cu = space.closure(u);
            for (PointSet v : space.opens())
                if (cu.subset_of(v) && space.closure(v).subset_of(a)) {
                    has = true;
                    break;
                }
            if (has) break;
        }
        if (!has) return false;
    }
    return true;
}

}  // namespace

SetFamily lambda_sets(const FinSpace& space) {
    // General route: close the opens under pairwise intersection, seeding
    // with X for the empty intersection.
    SetFamily meets = SetFamily::of({space.universe()});
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<PointSet> next(meets.begin(), meets.end());
        for (PointSet a : meets)
            for (PointSet b : space.opens()) {
                const PointSet c = a & b;
                if (!meets.contains(c)) {
                    next.push_back(c);
                    grew = true;
                }
            }
        meets = SetFamily(std::move(next));
    }
    return meets;
}

SetFamily lambda_closed_sets(const FinSpace& space) {
    const SetFamily lam = lambda_sets(space);
    const SetFamily closed = space.closed_sets();
    std::vector<PointSet> out;
    out.reserve(lam.size() * closed.size());
    for (PointSet l : lam)
        for (PointSet c : closed) out.push_back(l & c);
    return SetFamily(std::move(out));
}

bool is_lambda_closed(const FinSpace& space, PointSet a) {
    // a = L ∩ C forces ker(a) ⊆ L and Cl(a) ⊆ C, so the minimal candidate
    // decomposition is ker(a) ∩ Cl(a); ker(a) is the minimal neighborhood
    // union over the members of a (the smallest open superset, which on a
    // finite space is also the smallest Λ-superset).
    PointSet ker = a;
    for (int x : a.elements()) ker = ker | space.min_nbhd(x);
    return (ker & space.closure(a)) == a;
}

PointSet lambda_closure(const FinSpace& space, PointSet a) {
    const SetFamily lc = lambda_closed_sets(space);
    PointSet out = space.universe();
    for (PointSet s : lc)
        if (a.subset_of(s)) out = out & s;
    return out;
}

bool is_lambda_space(const FinSpace& space) {
    const SetFamily open_side = derived_topology(space, DerivedTopology::Lambda);
    if (!open_side.contains(PointSet::empty_set()) || !open_side.contains(space.universe()))
        return false;
    for (PointSet a : open_side)
        for (PointSet b : open_side)
            if (!open_side.contains(a | b) || !open_side.contains(a & b)) return false;
    return true;
}

SetFamily derived_topology(const FinSpace& space, DerivedTopology which) {
    const int n = space.points();
    std::vector<PointSet> out;
    switch (which) {
        case DerivedTopology::Theta:
            // Theta-open sets are open (each point carries an open set inside
            // a), so scanning the opens is exhaustive.
            for (PointSet u : space.opens())
                if (is_theta_open(space, u)) out.push_back(u);
            break;
        case DerivedTopology::Delta: {
            for (PointSet u : space.opens())
                if (delta_closure(space, u.complement_in(n)) == u.complement_in(n))
                    out.push_back(u);
            break;
        }
        case DerivedTopology::Lambda: {
            const SetFamily lc = lambda_closed_sets(space);
            out.reserve(lc.size());
            for (PointSet s : lc) out.push_back(s.complement_in(n));
            break;
        }
        case DerivedTopology::Zero: {
            const SetFamily clopens = space.clopens();
            for (PointSet u : space.opens())
                if (is_zero_open(u, clopens)) out.push_back(u);
            break;
        }
        case DerivedTopology::Urysohn:
            for (PointSet u : space.opens())
                if (is_urysohn_open(space, u)) out.push_back(u);
            break;
        case DerivedTopology::Quasi: {
            // Clopens are intersection-closed, so closing under unions yields
            // the generated topology.
            const SetFamily clopens = space.clopens();
            SetFamily fam = SetFamily::of({PointSet::empty_set()});
            bool grew = true;
            while (grew) {
                grew = false;
                std::vector<PointSet> next(fam.begin(), fam.end());
                for (PointSet a : fam)
                    for (PointSet b : clopens) {
                        const PointSet c = a | b;
                        if (!fam.contains(c)) {
                            next.push_back(c);
                            grew = true;
                        }
                    }
                fam = SetFamily(std::move(next));
            }
            return fam;
        }
    }
    return SetFamily(std::move(out));
}

const SetFamily& SpaceOps::regular_opens() const {
    if (!ro_) ro_ = finitop::regular_opens(s_);
    return *ro_;
}

const SetFamily& SpaceOps::tau_delta() const {
    if (!tau_delta_) tau_delta_ = derived_topology(s_, DerivedTopology::Delta);
    return *tau_delta_;
}

const SetFamily& SpaceOps::tau_theta() const {
    if (!tau_theta_) tau_theta_ = derived_topology(s_, DerivedTopology::Theta);
    return *tau_theta_;
}

const SetFamily& SpaceOps::tau_zero() const {
    if (!tau_zero_) tau_zero_ = derived_topology(s_, DerivedTopology::Zero);
    return *tau_zero_;
}

const SetFamily& SpaceOps::tau_urysohn() const {
    if (!tau_urysohn_) tau_urysohn_ = derived_topology(s_, DerivedTopology::Urysohn);
    return *tau_urysohn_;
}

const SetFamily& SpaceOps::tau_quasi() const {
    if (!tau_quasi_) tau_quasi_ = derived_topology(s_, DerivedTopology::Quasi);
    return *tau_quasi_;
}

const SetFamily& SpaceOps::lambda_closed() const {
    if (!lambda_closed_) lambda_closed_ = lambda_closed_sets(s_);
    return *lambda_closed_;
}

const SetFamily& SpaceOps::lambda_open() const {
    if (!lambda_open_) lambda_open_ = derived_topology(s_, DerivedTopology::Lambda);
    return *lambda_open_;
}

PointSet SpaceOps::delta_closure(PointSet a) const {
    PointSet cl;
    for (int x = 0; x < s_.points(); ++x) {
        bool cluster = true;
        for (PointSet u : regular_opens())
            if (u.contains(x) && !u.intersects(a)) {
                cluster = false;
                break;
            }
        if (cluster) cl = cl.with(x);
    }
    return cl;
}

PointSet SpaceOps::theta_closure(PointSet a) const { return finitop::theta_closure(s_, a); }

PointSet SpaceOps::closure_in(const SetFamily& opens_family, PointSet a) const {
    const int n = s_.points();
    PointSet out = s_.universe();
    for (PointSet u : opens_family) {
        const PointSet closed = u.complement_in(n);
        if (a.subset_of(closed)) out = out & closed;
    }
    return out;
}

PointSet SpaceOps::apply(const ClosureOperator& op, PointSet a) const {
    switch (op.tag) {
        case ClosureOperator::Tag::Closure:
            return s_.closure(a);
        case ClosureOperator::Tag::Delta:
            return delta_closure(a);
        case ClosureOperator::Tag::Theta:
            return closure_in(tau_theta(), a);
        case ClosureOperator::Tag::Lambda: {
            PointSet out = s_.universe();
            for (PointSet s : lambda_closed())
                if (a.subset_of(s)) out = out & s;
            return out;
        }
        case ClosureOperator::Tag::Zero:
            return closure_in(tau_zero(), a);
        case ClosureOperator::Tag::Urysohn:
            return closure_in(tau_urysohn(), a);
        case ClosureOperator::Tag::Quasi:
            return closure_in(tau_quasi(), a);
        case ClosureOperator::Tag::Custom:
            if (!op.fn) throw NotAClosureOperator("custom operator '" + op.name + "' has no body");
            return op.fn(s_, a);
    }
    throw NotAClosureOperator("unknown operator tag");
}

PointSet apply(const FinSpace& space, const ClosureOperator& op, PointSet a) {
    return SpaceOps(space).apply(op, a);
}

ClosureAxiomReport check_closure_axioms(const FinSpace& space, const ClosureOperator& op) {
    const SpaceOps ops(space);
    const int n = space.points();
    ClosureAxiomReport report;

    const auto fail = [&](const char* which, PointSet a, PointSet b, std::string msg) {
        report.ok = false;
        report.violated = which;
        report.witness_a = a;
        report.witness_b = b;
        report.message = std::move(msg);
    };

    if (!ops.apply(op, PointSet::empty_set()).empty()) {
        fail("empty", PointSet::empty_set(), PointSet::empty_set(),
             op.name + "({}) = " + ops.apply(op, PointSet::empty_set()).to_string());
        return report;
    }
    std::vector<PointSet> images(std::size_t{1} << n);
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
        const PointSet a(m);
        images[m] = ops.apply(op, a);
        if (!a.subset_of(images[m])) {
            fail("extensive", a, a,
                 a.to_string() + " not contained in " + images[m].to_string());
            return report;
        }
    }
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
        if (ops.apply(op, images[m]) != images[m]) {
            fail("idempotent", PointSet(m), PointSet(m),
                 "image " + images[m].to_string() + " is not a fixed point");
            return report;
        }
        for (Mask sub = m;; sub = (sub - 1) & m) {
            if (sub != m && !images[sub].subset_of(images[m])) {
                fail("monotone", PointSet(sub), PointSet(m),
                     images[sub].to_string() + " not contained in " + images[m].to_string());
                return report;
            }
            if (sub == 0) break;
        }
    }
    return report;
}

}  // namespace finitop
