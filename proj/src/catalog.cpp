#include "finitop/catalog.hpp"

#include <algorithm>

#include "finitop/errors.hpp"

namespace finitop::catalog {

std::string PointName::to_string() const {
    switch (kind) {
        case Kind::Distinguished: return "p";
        case Kind::Generic: return "g" + std::to_string(index);
        case Kind::GenMember: return "w" + std::to_string(gen) + "." + std::to_string(index);
    }
    return "?";
}

DescribedSet DescribedSet::universe() {
    DescribedSet s;
    s.complemented_ = true;
    return s;
}

DescribedSet DescribedSet::finite(std::initializer_list<PointName> points) {
    return finite(std::vector<PointName>(points));
}

DescribedSet DescribedSet::finite(const std::vector<PointName>& points) {
    DescribedSet s;
    s.plus_.insert(points.begin(), points.end());
    s.normalize();
    return s;
}

DescribedSet DescribedSet::generator(int k) {
    DescribedSet s;
    s.gens_.insert(k);
    return s;
}

bool DescribedSet::base_contains(PointName p) const {
    if (p.kind == PointName::Kind::GenMember && gens_.count(p.gen))
        return minus_.count(p) == 0;
    return plus_.count(p) != 0;
}

bool DescribedSet::contains(PointName p) const {
    return complemented_ ? !base_contains(p) : base_contains(p);
}

void DescribedSet::normalize() {
    // plus holds only points outside the active generator blocks; minus holds
    // only points inside them. Anything else is redundant.
    for (auto it = plus_.begin(); it != plus_.end();)
        if (it->kind == PointName::Kind::GenMember && gens_.count(it->gen))
            it = plus_.erase(it);
        else
            ++it;
    for (auto it = minus_.begin(); it != minus_.end();)
        if (it->kind == PointName::Kind::GenMember && gens_.count(it->gen))
            ++it;
        else
            it = minus_.erase(it);
}

namespace {

enum class BaseOp { Union, Intersect, Diff };

bool combine(BaseOp op, bool a, bool b) {
    switch (op) {
        case BaseOp::Union: return a || b;
        case BaseOp::Intersect: return a && b;
        case BaseOp::Diff: return a && !b;
    }
    return false;
}

}  // namespace

DescribedSet DescribedSet::complement() const {
    DescribedSet s = *this;
    s.complemented_ = !s.complemented_;
    return s;
}

DescribedSet DescribedSet::unite(const DescribedSet& o) const {
    // Reduce the complemented cases: X∖a ∪ X∖b = X∖(a∩b), X∖a ∪ b = X∖(a∖b).
    const auto base_op = [](const DescribedSet& a, const DescribedSet& b, BaseOp op) {
        DescribedSet r;
        switch (op) {
            case BaseOp::Union:
                std::set_union(a.gens_.begin(), a.gens_.end(), b.gens_.begin(), b.gens_.end(),
                               std::inserter(r.gens_, r.gens_.end()));
                break;
            case BaseOp::Intersect:
                std::set_intersection(a.gens_.begin(), a.gens_.end(), b.gens_.begin(),
                                      b.gens_.end(), std::inserter(r.gens_, r.gens_.end()));
                break;
            case BaseOp::Diff:
                std::set_difference(a.gens_.begin(), a.gens_.end(), b.gens_.begin(), b.gens_.end(),
                                    std::inserter(r.gens_, r.gens_.end()));
                break;
        }
        // Unmentioned generator members behave uniformly per block; only the
        // finitely many named exception points need a pointwise decision.
        std::set<PointName> mentioned;
        for (const auto* src : {&a.plus_, &a.minus_, &b.plus_, &b.minus_})
            mentioned.insert(src->begin(), src->end());
        for (PointName e : mentioned) {
            const bool want = combine(op, a.base_contains(e), b.base_contains(e));
            const bool by_default =
                e.kind == PointName::Kind::GenMember && r.gens_.count(e.gen) != 0;
            if (want && !by_default) r.plus_.insert(e);
            if (!want && by_default) r.minus_.insert(e);
        }
        r.normalize();
        return r;
    };

    DescribedSet a = *this, b = o;
    if (!a.complemented_ && !b.complemented_) return base_op(a, b, BaseOp::Union);
    if (a.complemented_ && b.complemented_) {
        a.complemented_ = b.complemented_ = false;
        return base_op(a, b, BaseOp::Intersect).complement();
    }
    if (a.complemented_) {
        a.complemented_ = false;
        return base_op(a, b, BaseOp::Diff).complement();
    }
    b.complemented_ = false;
    return base_op(b, a, BaseOp::Diff).complement();
}

DescribedSet DescribedSet::intersect(const DescribedSet& o) const {
    return complement().unite(o.complement()).complement();
}

DescribedSet DescribedSet::difference(const DescribedSet& o) const {
    return intersect(o.complement());
}

DescribedSet::Shape DescribedSet::shape() const {
    if (complemented_) return gens_.empty() ? Shape::Cofin : Shape::Coctbl;
    return gens_.empty() ? Shape::Fin : Shape::Ctbl;
}

std::vector<PointName> DescribedSet::finite_members() const {
    if (!is_finite()) throw UnrepresentableSet("finite_members on a non-finite set");
    return std::vector<PointName>(plus_.begin(), plus_.end());
}

std::string DescribedSet::to_string() const {
    const auto base_str = [this]() {
        std::string s;
        bool any = false;
        for (int g : gens_) {
            if (any) s += "+";
            s += "W" + std::to_string(g);
            any = true;
        }
        if (!plus_.empty() || !any) {
            if (any) s += "+";
            s += "{";
            bool first = true;
            for (PointName p : plus_) {
                if (!first) s += ",";
                s += p.to_string();
                first = false;
            }
            s += "}";
        }
        if (!minus_.empty()) {
            s += "-{";
            bool first = true;
            for (PointName p : minus_) {
                if (!first) s += ",";
                s += p.to_string();
                first = false;
            }
            s += "}";
        }
        return s;
    };
    if (is_universe()) return "X";
    if (!complemented_) return base_str();
    return "X-(" + base_str() + ")";
}

const std::vector<std::string>& DescribedSpace::names() {
    static const std::vector<std::string> v = {"cofinite-line", "cocountable-line",
                                               "point-cocountable", "included-point-cofinite"};
    return v;
}

std::optional<DescribedSpace> DescribedSpace::by_name(const std::string& name) {
    if (name == "cofinite-line") return DescribedSpace(Family::CofiniteLine);
    if (name == "cocountable-line") return DescribedSpace(Family::CocountableLine);
    if (name == "point-cocountable") return DescribedSpace(Family::PointCocountable);
    if (name == "included-point-cofinite") return DescribedSpace(Family::IncludedPointCofinite);
    return std::nullopt;
}

std::string DescribedSpace::name() const {
    switch (family_) {
        case Family::CofiniteLine: return "cofinite-line";
        case Family::CocountableLine: return "cocountable-line";
        case Family::PointCocountable: return "point-cocountable";
        case Family::IncludedPointCofinite: return "included-point-cofinite";
    }
    return "?";
}

std::string DescribedSpace::description() const {
    switch (family_) {
        case Family::CofiniteLine:
            return "uncountable carrier; opens are the empty set and the cofinite sets";
        case Family::CocountableLine:
            return "uncountable carrier; opens are the empty set and the co-countable sets";
        case Family::PointCocountable:
            return "uncountable carrier; opens are the empty set and the co-countable sets "
                   "containing the distinguished point p";
        case Family::IncludedPointCofinite:
            return "countable carrier; opens are the empty set and the cofinite sets containing "
                   "the distinguished point 0";
    }
    return "?";
}

std::optional<PointName> DescribedSpace::distinguished_point() const {
    if (family_ == Family::PointCocountable || family_ == Family::IncludedPointCofinite)
        return PointName::distinguished();
    return std::nullopt;
}

bool DescribedSpace::is_open(const DescribedSet& a) const {
    if (a.is_empty()) return true;
    switch (family_) {
        case Family::CofiniteLine:
            return a.shape() == DescribedSet::Shape::Cofin;
        case Family::CocountableLine:
            return !a.is_countable();
        case Family::PointCocountable:
            return !a.is_countable() && a.contains(PointName::distinguished());
        case Family::IncludedPointCofinite:
            return a.shape() == DescribedSet::Shape::Cofin &&
                   a.contains(PointName::distinguished());
    }
    return false;
}

DescribedSet DescribedSpace::closure(const DescribedSet& a) const {
    switch (family_) {
        case Family::CofiniteLine:
            // Closed sets are the finite sets and X.
            return a.is_finite() ? a : DescribedSet::universe();
        case Family::CocountableLine:
            // Closed sets are the countable sets and X.
            return a.is_countable() ? a : DescribedSet::universe();
        case Family::PointCocountable:
            // Closed sets are the countable sets avoiding p, and X.
            return (a.is_countable() && !a.contains(PointName::distinguished()))
                       ? a
                       : DescribedSet::universe();
        case Family::IncludedPointCofinite:
            // Closed sets are the finite sets avoiding 0, and X.
            return (a.is_finite() && !a.contains(PointName::distinguished()))
                       ? a
                       : DescribedSet::universe();
    }
    throw UnrepresentableSet("unknown family");
}

DescribedSet DescribedSpace::interior(const DescribedSet& a) const {
    // Supersets of nonempty opens are open in all four families, so the
    // largest open inside a is a itself or empty.
    return is_open(a) ? a : DescribedSet::empty_set();
}

bool DescribedSpace::is_compact(const DescribedSet& a) const {
    switch (family_) {
        case Family::CofiniteLine:
        case Family::IncludedPointCofinite:
            // A single nonempty open of any cover is cofinite; finitely many
            // more opens absorb the leftover points.
            return true;
        case Family::CocountableLine:
        case Family::PointCocountable:
            // An infinite candidate K splits off a countably infinite part A;
            // the relatively open tail cover {(K∖A) ∪ {a0..ai}} has no finite
            // subcover. Finite sets are compact outright.
            return a.is_finite();
    }
    return false;
}

bool DescribedSpace::is_lambda_set(const DescribedSet& a) const {
    if (a.is_empty()) return true;  // the empty set is open
    switch (family_) {
        case Family::CofiniteLine:
        case Family::CocountableLine:
            // Every set is the intersection of its cofinite (co-countable)
            // supersets X∖{y}, one per excluded point.
            return true;
        case Family::PointCocountable:
        case Family::IncludedPointCofinite:
            // Nonempty opens all contain the distinguished point, so a
            // nonempty intersection of opens does too; conversely any set
            // containing it is the intersection of the opens X∖{y}.
            return a.contains(PointName::distinguished());
    }
    return false;
}

bool DescribedSpace::is_lambda_closed(const DescribedSet& a) const {
    switch (family_) {
        case Family::CofiniteLine:
        case Family::CocountableLine:
            return true;  // Λ-set intersect X
        case Family::PointCocountable:
            // Sets containing p are Λ-sets; countable sets without p are
            // closed; an uncountable set without p fits neither factor.
            return a.contains(PointName::distinguished()) || a.is_countable();
        case Family::IncludedPointCofinite:
            return a.contains(PointName::distinguished()) || a.is_finite();
    }
    return false;
}

DescribedSet DescribedSpace::delta_closure(const DescribedSet& a) const {
    // Regular opens are {} and X in all four families, so every point
    // delta-clusters to any nonempty set.
    return a.is_empty() ? a : DescribedSet::universe();
}

std::vector<DescribedSet> DescribedSpace::regular_opens() const {
    return {DescribedSet::empty_set(), DescribedSet::universe()};
}

bool DescribedSpace::separating_set_exists(const DescribedSet& f, PointName y) const {
    if (f.contains(y)) throw UnrepresentableSet("separating point must lie outside the set");
    const PointName p = PointName::distinguished();
    bool open_side = false, closed_side = false;
    switch (family_) {
        case Family::CofiniteLine:
            open_side = true;  // X minus {y}
            closed_side = f.is_finite();
            break;
        case Family::CocountableLine:
            open_side = true;
            closed_side = f.is_countable();
            break;
        case Family::PointCocountable:
            open_side = (y != p) || f.is_empty();
            closed_side = f.is_countable() && !f.contains(p);
            break;
        case Family::IncludedPointCofinite:
            open_side = (y != p) || f.is_empty();
            closed_side = f.is_finite() && !f.contains(p);
            break;
    }
    return open_side || closed_side;
}

namespace {

Verdict yes(std::string note) {
    return {Verdict::Status::True, Verdict::Mode::Computed, std::move(note)};
}
Verdict no(std::string note) {
    return {Verdict::Status::False, Verdict::Mode::Computed, std::move(note)};
}
Verdict documented(bool value, std::string note) {
    return {value ? Verdict::Status::True : Verdict::Status::False, Verdict::Mode::Documented,
            std::move(note)};
}
Verdict unsupported() { return {Verdict::Status::Unsupported, Verdict::Mode::Computed, ""}; }

}  // namespace

Verdict DescribedSpace::classify(Axiom axiom) const {
    const bool uncountable_carrier = family_ != Family::IncludedPointCofinite;
    const char* pt = uncountable_carrier ? "p" : "0";

    // Shared defects: in all four families any two nonempty opens intersect
    // (their complements are small), and the regular opens are {} and X.
    const std::string no_disjoint_opens =
        "any two nonempty opens intersect, so no two points have disjoint neighborhoods";
    const std::string delta_trivial =
        "regular opens are {} and X, so no nonempty proper set is delta-closed";

    switch (axiom) {
        case Axiom::T0:
            return yes("for distinct x, y some co-small set avoiding one of them is open");
        case Axiom::T1:
            switch (family_) {
                case Family::CofiniteLine: return yes("singletons are finite, hence closed");
                case Family::CocountableLine: return yes("singletons are countable, hence closed");
                case Family::PointCocountable:
                case Family::IncludedPointCofinite:
                    return no(std::string("{") + pt + "} is not closed: its only closed superset is X");
            }
            break;
        case Axiom::TD:
            if (family_ == Family::IncludedPointCofinite)
                return no("{0} = U ∩ C forces C = X and then U = {0}, but opens are infinite");
            return unsupported();
        case Axiom::TQuarter:
            switch (family_) {
                case Family::CofiniteLine:
                case Family::CocountableLine:
                    return yes("finite sets are closed");
                case Family::PointCocountable:
                    return yes("finite sets are countable, hence lambda-closed");
                case Family::IncludedPointCofinite:
                    return yes("finite sets containing 0 are Lambda-sets; finite sets without 0 "
                               "are closed");
            }
            break;
        case Axiom::TThird:
            switch (family_) {
                case Family::CofiniteLine:
                    return yes("every subset is lambda-closed");
                case Family::CocountableLine:
                case Family::PointCocountable:
                    return yes("compact sets are finite and finite sets are lambda-closed");
                case Family::IncludedPointCofinite:
                    return no("every subset is compact; an infinite coinfinite set avoiding 0 "
                              "(e.g. a generator block) is compact but not lambda-closed");
            }
            break;
        case Axiom::THalf:
            switch (family_) {
                case Family::CofiniteLine:
                case Family::CocountableLine:
                    return yes("every subset is an intersection of co-small supersets, hence a "
                               "Lambda-set");
                case Family::PointCocountable:
                    return no("X-{p} is uncountable and avoids p, hence not lambda-closed");
                case Family::IncludedPointCofinite:
                    return no("X-{0} is infinite and avoids 0, hence not lambda-closed");
            }
            break;
        case Axiom::WeaklyHausdorff:
            return no(delta_trivial + "; in particular singletons are not");
        case Axiom::Hausdorff:
            return no(no_disjoint_opens);
        case Axiom::Urysohn:
            return no("disjoint closures would require disjoint nonempty opens; " +
                      no_disjoint_opens);
        case Axiom::CompletelyHausdorff:
            return no("cozero sets are open, so cozero separation would require disjoint "
                      "nonempty opens");
        case Axiom::Regular:
            return no("a point outside a nonempty proper closed set cannot be separated: " +
                      no_disjoint_opens);
        case Axiom::SemiRegular:
            return no("the semi-regularization is indiscrete while the topology is not");
        case Axiom::Kc:
            switch (family_) {
                case Family::CofiniteLine:
                    return no("an infinite coinfinite set (a generator block) is compact but "
                              "not closed");
                case Family::CocountableLine:
                    return yes("compact sets are finite and finite sets are closed");
                case Family::PointCocountable:
                    return no("{p} is compact but not closed");
                case Family::IncludedPointCofinite:
                    return no("X-{0} is compact (every subset is) but not closed");
            }
            break;
        case Axiom::Kd:
            return no(delta_trivial + "; compact singletons witness the failure");
        case Axiom::US:
            switch (family_) {
                case Family::CofiniteLine:
                    return documented(false,
                                      "an injective sequence is eventually inside every cofinite "
                                      "set, so it converges to every point");
                case Family::CocountableLine:
                    return documented(true,
                                      "a convergent sequence is eventually constant: the "
                                      "co-countable complement of its other values is a "
                                      "neighborhood of the limit");
                case Family::PointCocountable:
                    return documented(false,
                                      "the constant sequence at p converges to every point, "
                                      "since every nonempty open contains p");
                case Family::IncludedPointCofinite:
                    return documented(false,
                                      "the constant sequence at 0 converges to every point, "
                                      "since every nonempty open contains 0");
            }
            break;
        case Axiom::CPrime:
            switch (family_) {
                case Family::CofiniteLine:
                case Family::IncludedPointCofinite:
                    return yes("every subset is compact, so every intersection with a compact "
                               "set is compact");
                case Family::CocountableLine:
                case Family::PointCocountable:
                    return yes("compact sets are finite and intersections of finite sets are "
                               "finite");
            }
            break;
        case Axiom::AntiCompact:
            switch (family_) {
                case Family::CofiniteLine:
                case Family::IncludedPointCofinite:
                    return no("the infinite carrier itself is compact");
                case Family::CocountableLine:
                case Family::PointCocountable:
                    return yes("tail covers refute compactness of every infinite subset");
            }
            break;
        case Axiom::R0:
            switch (family_) {
                case Family::CofiniteLine:
                case Family::CocountableLine:
                    return yes("closures of singletons are the singletons themselves");
                case Family::PointCocountable:
                case Family::IncludedPointCofinite:
                    return no(std::string("Cl{") + pt + "} = X exceeds every proper open "
                              "neighborhood of " + pt);
            }
            break;
        case Axiom::WeakR0:
            switch (family_) {
                case Family::CofiniteLine:
                case Family::CocountableLine:
                    return yes("every subset is a Lambda-set");
                case Family::PointCocountable:
                case Family::IncludedPointCofinite:
                    return no(std::string("a singleton other than ") + pt +
                              " is lambda-closed but is not a Lambda-set (it misses " + pt + ")");
            }
            break;
        case Axiom::HTR1:
            return no("the space is a subspace of itself and is not weakly Hausdorff");
        case Axiom::LambdaSpace:
            return yes("the lambda-closed family is stable under finite unions and arbitrary "
                       "intersections, so the lambda-open family is a topology");
    }
    return unsupported();
}

std::map<std::string, std::string> DescribedSpace::rule_notes() const {
    std::map<std::string, std::string> notes;
    notes["regular-opens"] =
        "every nonempty open is co-small, so its closure is X and Int(Cl(U)) = X; only {} and X "
        "are regular open";
    notes["delta-closure"] = "with regular opens {} and X, the delta-closure of any nonempty set "
                             "is X";
    switch (family_) {
        case Family::CofiniteLine:
            notes["closure"] = "closed sets are the finite sets and X; Cl(A) = A for finite A, "
                               "X otherwise";
            notes["compact"] = "every subset: one open of a cover is cofinite, finitely many "
                               "more cover the leftovers";
            notes["lambda"] = "every set is an intersection of the cofinite sets X-{y} over "
                              "excluded points y, hence a Lambda-set";
            break;
        case Family::CocountableLine:
            notes["closure"] = "closed sets are the countable sets and X";
            notes["compact"] = "finite sets only: tail covers refute infinite candidates";
            notes["lambda"] = "every set is an intersection of co-countable supersets";
            break;
        case Family::PointCocountable:
            notes["closure"] = "closed sets are the countable sets avoiding p, and X";
            notes["compact"] = "finite sets only";
            notes["lambda"] = "Lambda-sets are {} and the sets containing p; lambda-closed = "
                              "contains p or countable";
            break;
        case Family::IncludedPointCofinite:
            notes["closure"] = "closed sets are the finite sets avoiding 0, and X";
            notes["compact"] = "every subset";
            notes["lambda"] = "Lambda-sets are {} and the sets containing 0; lambda-closed = "
                              "contains 0 or finite";
            notes["truncation"] = "the trace of the cofinite-containing-0 opens on {0..m} is "
                                  "every subset containing 0, plus {}";
            break;
    }
    return notes;
}

FinSpace DescribedSpace::truncation(int m) const {
    if (family_ != Family::IncludedPointCofinite)
        throw UnsupportedAxiom("truncation is only defined for included-point-cofinite");
    if (m < 0 || m + 1 > kMaxPoints) throw BoundExceeded("truncation bound out of range");
    const int n = m + 1;
    std::vector<PointSet> opens = {PointSet::empty_set()};
    for (Mask mask = 0; mask < (Mask{1} << n); ++mask)
        if (mask & 1) opens.push_back(PointSet(mask));
    return FinSpace::from_opens(n, SetFamily(std::move(opens)));
}

std::vector<DescribedSpace> all_families() {
    std::vector<DescribedSpace> out;
    for (const std::string& n : DescribedSpace::names()) out.push_back(*DescribedSpace::by_name(n));
    return out;
}

DescribedSet random_set(std::mt19937& rng) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> small(0, 5);
    std::uniform_int_distribution<int> genpick(0, 2);
    DescribedSet s;
    const int gens = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int i = 0; i < gens; ++i) s = s.unite(DescribedSet::generator(genpick(rng)));
    const int adds = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int i = 0; i < adds; ++i) {
        switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
            case 0: s = s.with(PointName::distinguished()); break;
            case 1: s = s.with(PointName::generic(small(rng))); break;
            default: s = s.with(PointName::member(genpick(rng), small(rng))); break;
        }
    }
    const int dels = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int i = 0; i < dels; ++i)
        s = s.without(PointName::member(genpick(rng), small(rng)));
    if (coin(rng)) s = s.complement();
    return s;
}

std::vector<PointName> sample_points_outside(const DescribedSpace& space, const DescribedSet& f,
                                             int count, std::mt19937& rng) {
    (void)space;
    std::vector<PointName> pool;
    pool.push_back(PointName::distinguished());
    for (int g = 0; g < 3; ++g)
        for (int i = 0; i < 6; ++i) pool.push_back(PointName::member(g, i));
    for (int i = 0; i < 6; ++i) pool.push_back(PointName::generic(i));
    // Fresh names never mentioned by random sets.
    for (int i = 0; i < 4; ++i) pool.push_back(PointName::generic(100 + i));
    for (int i = 0; i < 4; ++i) pool.push_back(PointName::member(0, 100 + i));

    std::vector<PointName> out;
    for (PointName p : pool) {
        if (static_cast<int>(out.size()) >= count) break;
        if (!f.contains(p)) out.push_back(p);
    }
    // Shuffle the tail but keep the distinguished point (when present) first:
    // it is the decisive separating probe for the included-point families.
    if (out.size() > 1) {
        const bool keep_first = out.front() == PointName::distinguished();
        std::shuffle(out.begin() + (keep_first ? 1 : 0), out.end(), rng);
    }
    return out;
}

}  // namespace finitop::catalog
