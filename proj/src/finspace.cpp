#include "finitop/finspace.hpp"

#include <algorithm>
#include <numeric>

namespace finitop {

namespace {

void check_point_bound(int n) {
    if (n < 0 || n > kMaxPoints)
        throw BoundExceeded("point count " + std::to_string(n) + " outside 0.." +
                            std::to_string(kMaxPoints));
}

void check_members(int n, const SetFamily& family, const char* what) {
    const PointSet full = PointSet::universe(n);
    for (PointSet s : family)
        if (!s.subset_of(full))
            throw NotATopology(std::string(what) + " member " + s.to_string() +
                               " is not a subset of the " + std::to_string(n) + "-point carrier");
}

}  // namespace

FinSpace FinSpace::from_opens(int n, SetFamily family) {
    check_point_bound(n);
    check_members(n, family, "open family");

    const PointSet full = PointSet::universe(n);
    if (!family.contains(PointSet::empty_set()))
        throw NotATopology("the empty set is missing from the open family");
    if (!family.contains(full))
        throw NotATopology("the full set " + full.to_string() + " is missing from the open family");

    FinSpace sp;
    sp.n_ = n;
    sp.opens_ = std::move(family);
    sp.min_nbhd_.resize(static_cast<std::size_t>(n));
    sp.point_closure_.resize(static_cast<std::size_t>(n));

    for (int x = 0; x < n; ++x) {
        PointSet nb = full;
        for (PointSet u : sp.opens_)
            if (u.contains(x)) nb = nb & u;
        sp.min_nbhd_[static_cast<std::size_t>(x)] = nb;
    }

    // Closure under union and intersection is equivalent to the family being
    // exactly the up-sets of the derived preorder, i.e. all unions of minimal
    // neighborhoods. Check that first (cheap) and only hunt for a witnessing
    // pair on the failure path.
    SetFamily upsets;
    {
        std::vector<PointSet> unions;
        unions.reserve(std::size_t{1} << n);
        for (Mask sel = 0; sel < (Mask{1} << n); ++sel) {
            PointSet u;
            for (Mask m = sel; m != 0; m &= m - 1)
                u = u | sp.min_nbhd_[static_cast<std::size_t>(std::countr_zero(m))];
            unions.push_back(u);
        }
        upsets = SetFamily(std::move(unions));
    }
    if (!(upsets == sp.opens_)) {
        for (std::size_t i = 0; i < sp.opens_.size(); ++i)
            for (std::size_t j = i; j < sp.opens_.size(); ++j) {
                const PointSet a = sp.opens_[i], b = sp.opens_[j];
                if (!sp.opens_.contains(a | b))
                    throw NotATopology("not closed under union: " + a.to_string() + " and " +
                                       b.to_string() + " but not " + (a | b).to_string());
                if (!sp.opens_.contains(a & b))
                    throw NotATopology("not closed under intersection: " + a.to_string() + " and " +
                                       b.to_string() + " but not " + (a & b).to_string());
            }
        // Unreachable for finite families containing {} and X.
        throw NotATopology("open family is not the up-set family of its specialization preorder");
    }

    for (int x = 0; x < n; ++x) {
        PointSet cl;
        for (int y = 0; y < n; ++y)
            if (sp.min_nbhd_[static_cast<std::size_t>(y)].contains(x)) cl = cl.with(y);
        sp.point_closure_[static_cast<std::size_t>(x)] = cl;
    }
    return sp;
}

FinSpace FinSpace::from_subbase(int n, const SetFamily& subbase) {
    check_point_bound(n);
    check_members(n, subbase, "subbase");

    // Close under finite intersections; the empty intersection contributes X.
    SetFamily meets = SetFamily::of({PointSet::universe(n)});
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<PointSet> next(meets.begin(), meets.end());
        for (PointSet a : meets)
            for (PointSet b : subbase) {
                const PointSet c = a & b;
                if (!meets.contains(c)) {
                    next.push_back(c);
                    grew = true;
                }
            }
        meets = SetFamily(std::move(next));
    }

    // Then under unions; the empty union contributes the empty set.
    SetFamily opens = SetFamily::of({PointSet::empty_set()});
    grew = true;
    while (grew) {
        grew = false;
        std::vector<PointSet> next(opens.begin(), opens.end());
        for (PointSet a : opens)
            for (PointSet b : meets) {
                const PointSet c = a | b;
                if (!opens.contains(c)) {
                    next.push_back(c);
                    grew = true;
                }
            }
        opens = SetFamily(std::move(next));
    }
    return from_opens(n, opens);
}

FinSpace FinSpace::from_preorder(int n, const std::vector<std::pair<int, int>>& pairs) {
    check_point_bound(n);
    // up[x] = {z : x <= z}; start reflexive, add the given pairs, then close
    // transitively (Warshall on bit rows).
    std::vector<PointSet> up(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) up[static_cast<std::size_t>(x)] = PointSet::single(x);
    for (auto [lo, hi] : pairs) {
        if (lo < 0 || lo >= n || hi < 0 || hi >= n)
            throw BoundExceeded("preorder pair uses a point outside 0.." + std::to_string(n - 1));
        up[static_cast<std::size_t>(lo)] = up[static_cast<std::size_t>(lo)].with(hi);
    }
    for (int k = 0; k < n; ++k)
        for (int x = 0; x < n; ++x)
            if (up[static_cast<std::size_t>(x)].contains(k))
                up[static_cast<std::size_t>(x)] =
                    up[static_cast<std::size_t>(x)] | up[static_cast<std::size_t>(k)];

    std::vector<PointSet> unions;
    unions.reserve(std::size_t{1} << n);
    for (Mask sel = 0; sel < (Mask{1} << n); ++sel) {
        PointSet u;
        for (Mask m = sel; m != 0; m &= m - 1)
            u = u | up[static_cast<std::size_t>(std::countr_zero(m))];
        unions.push_back(u);
    }
    return from_opens(n, SetFamily(std::move(unions)));
}

FinSpace FinSpace::discrete(int n) {
    check_point_bound(n);
    std::vector<PointSet> all;
    all.reserve(std::size_t{1} << n);
    for (Mask m = 0; m < (Mask{1} << n); ++m) all.push_back(PointSet(m));
    return from_opens(n, SetFamily(std::move(all)));
}

FinSpace FinSpace::indiscrete(int n) {
    return from_opens(n, SetFamily::of({PointSet::empty_set(), PointSet::universe(n)}));
}

FinSpace FinSpace::sierpinski() {
    return from_opens(2, SetFamily::of({PointSet::empty_set(), PointSet::of({1}),
                                        PointSet::of({0, 1})}));
}

PointSet FinSpace::closure(PointSet a) const {
    // y is in the closure iff every open set around y meets a, iff the
    // minimal neighborhood of y meets a.
    PointSet cl;
    for (int y = 0; y < n_; ++y)
        if (min_nbhd_[static_cast<std::size_t>(y)].intersects(a)) cl = cl.with(y);
    return cl;
}

PointSet FinSpace::interior(PointSet a) const {
    PointSet in;
    for (int x = 0; x < n_; ++x)
        if (a.contains(x) && min_nbhd_[static_cast<std::size_t>(x)].subset_of(a)) in = in.with(x);
    return in;
}

SetFamily FinSpace::closed_sets() const {
    std::vector<PointSet> out;
    out.reserve(opens_.size());
    for (PointSet u : opens_) out.push_back(u.complement_in(n_));
    return SetFamily(std::move(out));
}

SetFamily FinSpace::clopens() const {
    std::vector<PointSet> out;
    for (PointSet u : opens_)
        if (is_closed(u)) out.push_back(u);
    return SetFamily(std::move(out));
}

std::string FinSpace::encoding() const {
    std::string s = std::to_string(n_) + ":";
    for (std::size_t i = 0; i < opens_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(opens_[i].bits());
    }
    return s;
}

PointSet Subspace::embed(PointSet sub) const {
    PointSet out;
    for (std::size_t i = 0; i < to_parent.size(); ++i)
        if (sub.contains(static_cast<int>(i))) out = out.with(to_parent[i]);
    return out;
}

PointSet Subspace::restrict(PointSet parent) const {
    PointSet out;
    for (std::size_t i = 0; i < to_parent.size(); ++i)
        if (parent.contains(to_parent[i])) out = out.with(static_cast<int>(i));
    return out;
}

Subspace subspace(const FinSpace& space, PointSet a) {
    if (a.empty()) throw EmptyCarrier("subspace carrier must be nonempty");
    std::vector<int> to_parent = a.elements();

    std::vector<PointSet> traces;
    traces.reserve(space.opens().size());
    for (PointSet u : space.opens()) {
        PointSet t;
        for (std::size_t i = 0; i < to_parent.size(); ++i)
            if (u.contains(to_parent[i])) t = t.with(static_cast<int>(i));
        traces.push_back(t);
    }
    FinSpace sub = FinSpace::from_opens(static_cast<int>(to_parent.size()),
                                        SetFamily(std::move(traces)));
    return Subspace{std::move(sub), std::move(to_parent)};
}

bool is_locally_dense(const FinSpace& space, PointSet a) {
    return a.subset_of(space.interior(space.closure(a)));
}

FinSpace topological_sum(const std::vector<FinSpace>& spaces) {
    if (spaces.empty()) throw BoundExceeded("topological sum of an empty list");
    int total = 0;
    for (const FinSpace& s : spaces) total += s.points();
    if (total > kMaxPoints)
        throw BoundExceeded("topological sum would have " + std::to_string(total) + " points");

    // Opens of the sum = one open chosen per summand, shifted into place.
    std::vector<PointSet> combined = {PointSet::empty_set()};
    int offset = 0;
    for (const FinSpace& s : spaces) {
        std::vector<PointSet> next;
        next.reserve(combined.size() * s.opens().size());
        for (PointSet prefix : combined)
            for (PointSet u : s.opens())
                next.push_back(prefix | PointSet(u.bits() << offset));
        combined = std::move(next);
        offset += s.points();
    }
    return FinSpace::from_opens(total, SetFamily(std::move(combined)));
}

std::string CanonicalKey::to_string() const {
    std::string s = std::to_string(n) + ":";
    for (std::size_t i = 0; i < opens.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(opens[i]);
    }
    return s;
}

CanonicalKey canonical_form(const FinSpace& space) {
    const int n = space.points();
    if (n > 7) throw BoundExceeded("canonical form is limited to 7 points");

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);

    CanonicalKey best;
    best.n = n;
    bool have = false;
    std::vector<Mask> image(space.opens().size());
    do {
        for (std::size_t i = 0; i < space.opens().size(); ++i) {
            Mask v = 0;
            for (Mask m = space.opens()[i].bits(); m != 0; m &= m - 1)
                v |= Mask{1} << perm[static_cast<std::size_t>(std::countr_zero(m))];
            image[i] = v;
        }
        std::sort(image.begin(), image.end());
        if (!have || image < best.opens) {
            best.opens = image;
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

FinSpace space_from_key(const CanonicalKey& key) {
    std::vector<PointSet> sets;
    sets.reserve(key.opens.size());
    for (Mask m : key.opens) sets.push_back(PointSet(m));
    return FinSpace::from_opens(key.n, SetFamily(std::move(sets)));
}

}  // namespace finitop
