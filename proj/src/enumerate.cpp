#include "finitop/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <set>
#include <thread>

namespace finitop {

namespace {

constexpr int kLabeledBound = 7;
constexpr int kIsoBound = 5;

/// Walks all minimal-neighborhood tables row by row. Row x is the smallest
/// open set around x, so it must contain x, and membership y in row[x]
/// forces row[y] inside row[x] (transitivity). Both directions are checked
/// incrementally against earlier rows; the remaining pairs are enforced when
/// the later row is placed.
struct NeighborhoodWalk {
    int n = 0;
    std::array<Mask, kLabeledBound> row{};
    const std::function<void(const std::array<Mask, kLabeledBound>&, int)>* leaf = nullptr;

    void descend(int x) {
        if (x == n) {
            (*leaf)(row, n);
            return;
        }
        // Candidates are submasks of the intersection of every earlier row
        // that already contains x.
        Mask ub = static_cast<Mask>((Mask{1} << n) - 1);
        for (int y = 0; y < x; ++y)
            if ((row[static_cast<std::size_t>(y)] >> x) & 1) ub &= row[static_cast<std::size_t>(y)];
        const Mask self = Mask{1} << x;
        if ((ub & self) == 0) return;
        for (Mask s = ub;; s = (s - 1) & ub) {
            if (s & self) {
                bool ok = true;
                for (Mask below = s & (self - 1); below != 0 && ok; below &= below - 1) {
                    const int y = std::countr_zero(below);
                    ok = (row[static_cast<std::size_t>(y)] & ~s) == 0;
                }
                if (ok) {
                    row[static_cast<std::size_t>(x)] = s;
                    descend(x + 1);
                }
            }
            if (s == 0) break;
        }
    }
};

FinSpace space_from_rows(const std::array<Mask, kLabeledBound>& row, int n) {
    std::vector<PointSet> unions;
    unions.reserve(std::size_t{1} << n);
    for (Mask sel = 0; sel < (Mask{1} << n); ++sel) {
        Mask u = 0;
        for (Mask m = sel; m != 0; m &= m - 1)
            u |= row[static_cast<std::size_t>(std::countr_zero(m))];
        unions.push_back(PointSet(u));
    }
    return FinSpace::from_opens(n, SetFamily(std::move(unions)));
}

/// Runs the walk with the first row fixed, for parallel partitioning.
/// first-row candidates are the masks containing point 0, visited in the
/// same order the sequential walk uses.
std::vector<Mask> first_row_candidates(int n) {
    std::vector<Mask> out;
    const Mask ub = static_cast<Mask>((Mask{1} << n) - 1);
    for (Mask s = ub;; s = (s - 1) & ub) {
        if (s & 1) out.push_back(s);
        if (s == 0) break;
    }
    return out;
}

void walk_all(int n, const std::function<void(const std::array<Mask, kLabeledBound>&, int)>& leaf) {
    if (n == 0) {
        std::array<Mask, kLabeledBound> row{};
        leaf(row, 0);
        return;
    }
    NeighborhoodWalk walk;
    walk.n = n;
    walk.leaf = &leaf;
    walk.descend(0);
}

void walk_branch(int n, Mask first,
                 const std::function<void(const std::array<Mask, kLabeledBound>&, int)>& leaf) {
    NeighborhoodWalk walk;
    walk.n = n;
    walk.leaf = &leaf;
    walk.row[0] = first;
    walk.descend(1);
}

void check_bounds(int n, bool up_to_iso) {
    if (n < 0 || n > kLabeledBound)
        throw BoundExceeded("labeled enumeration is limited to " +
                            std::to_string(kLabeledBound) + " points");
    if (up_to_iso && n > kIsoBound)
        throw BoundExceeded("isomorph-free enumeration is limited to " +
                            std::to_string(kIsoBound) + " points");
}

}  // namespace

void enumerate_topologies(int n, bool up_to_iso,
                          const std::function<void(const FinSpace&)>& sink, int jobs) {
    check_bounds(n, up_to_iso);
    std::set<std::string> seen_keys;
    const auto emit = [&](const FinSpace& s) {
        if (up_to_iso) {
            if (!seen_keys.insert(canonical_form(s).to_string()).second) return;
        }
        sink(s);
    };

    if (jobs <= 1 || n == 0) {
        walk_all(n, [&](const std::array<Mask, kLabeledBound>& row, int nn) {
            emit(space_from_rows(row, nn));
        });
        return;
    }

    // Parallel: partition on the first row, collect per branch, then replay
    // in branch order so the stream matches the sequential one.
    const std::vector<Mask> branches = first_row_candidates(n);
    std::vector<std::vector<FinSpace>> collected(branches.size());
    std::atomic<std::size_t> next{0};
    const int workers = std::min<int>(jobs, static_cast<int>(branches.size()));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            for (std::size_t b = next.fetch_add(1); b < branches.size(); b = next.fetch_add(1))
                walk_branch(n, branches[b],
                            [&](const std::array<Mask, kLabeledBound>& row, int nn) {
                                collected[b].push_back(space_from_rows(row, nn));
                            });
        });
    for (auto& t : pool) t.join();
    for (const auto& bucket : collected)
        for (const FinSpace& s : bucket) emit(s);
}

std::vector<FinSpace> all_topologies(int n, bool up_to_iso, int jobs) {
    std::vector<FinSpace> out;
    enumerate_topologies(n, up_to_iso, [&](const FinSpace& s) { out.push_back(s); }, jobs);
    return out;
}

std::uint64_t count_topologies(int n, int jobs) {
    check_bounds(n, false);
    if (n == 0 || jobs <= 1) {
        std::uint64_t count = 0;
        walk_all(n, [&](const std::array<Mask, kLabeledBound>&, int) { ++count; });
        return count;
    }
    const std::vector<Mask> branches = first_row_candidates(n);
    std::vector<std::uint64_t> per_branch(branches.size(), 0);
    std::atomic<std::size_t> next{0};
    const int workers = std::min<int>(jobs, static_cast<int>(branches.size()));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            for (std::size_t b = next.fetch_add(1); b < branches.size(); b = next.fetch_add(1))
                walk_branch(n, branches[b],
                            [&](const std::array<Mask, kLabeledBound>&, int) { ++per_branch[b]; });
        });
    for (auto& t : pool) t.join();
    std::uint64_t total = 0;
    for (std::uint64_t c : per_branch) total += c;
    return total;
}

std::vector<FinSpace> all_topologies_direct(int n) {
    if (n < 0 || n > 4) throw BoundExceeded("direct family generation is limited to 4 points");
    const Mask full = PointSet::universe(n).bits();
    // Candidate families range over subsets of the proper nonempty sets;
    // {} and X are always included.
    std::vector<Mask> middle;
    for (Mask m = 1; m < full; ++m) middle.push_back(m);
    if (n == 0) return {FinSpace::from_opens(0, SetFamily::of({PointSet::empty_set()}))};

    std::vector<FinSpace> out;
    const std::uint64_t families = std::uint64_t{1} << middle.size();
    for (std::uint64_t pick = 0; pick < families; ++pick) {
        std::vector<PointSet> fam = {PointSet::empty_set(), PointSet(full)};
        for (std::size_t i = 0; i < middle.size(); ++i)
            if ((pick >> i) & 1) fam.push_back(PointSet(middle[i]));
        SetFamily family(std::move(fam));
        bool closed = true;
        for (std::size_t i = 0; i < family.size() && closed; ++i)
            for (std::size_t j = i + 1; j < family.size() && closed; ++j)
                closed = family.contains(family[i] | family[j]) &&
                         family.contains(family[i] & family[j]);
        if (closed) out.push_back(FinSpace::from_opens(n, family));
    }
    return out;
}

namespace {

bool satisfies(const SpaceOps& ops, const SearchQuery& q) {
    for (Axiom a : q.holds)
        if (!classify(ops, a)) return false;
    for (Axiom a : q.fails)
        if (classify(ops, a)) return false;
    return true;
}

/// Scans one size level; returns the canonical key of the best witness.
std::optional<CanonicalKey> scan_level(int n, const SearchQuery& q, int jobs) {
    std::optional<CanonicalKey> best;
    const auto consider = [](std::optional<CanonicalKey>& slot, const FinSpace& s) {
        CanonicalKey key = canonical_form(s);
        if (!slot || key < *slot) slot = std::move(key);
    };

    if (jobs <= 1 || n == 0) {
        walk_all(n, [&](const std::array<Mask, kLabeledBound>& row, int nn) {
            const FinSpace s = space_from_rows(row, nn);
            const SpaceOps ops(s);
            if (satisfies(ops, q)) consider(best, s);
        });
        return best;
    }
    const std::vector<Mask> branches = first_row_candidates(n);
    std::vector<std::optional<CanonicalKey>> local(branches.size());
    std::atomic<std::size_t> next{0};
    const int workers = std::min<int>(jobs, static_cast<int>(branches.size()));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            for (std::size_t b = next.fetch_add(1); b < branches.size(); b = next.fetch_add(1))
                walk_branch(n, branches[b],
                            [&](const std::array<Mask, kLabeledBound>& row, int nn) {
                                const FinSpace s = space_from_rows(row, nn);
                                const SpaceOps ops(s);
                                if (satisfies(ops, q)) consider(local[b], s);
                            });
        });
    for (auto& t : pool) t.join();
    for (const auto& candidate : local)
        if (candidate && (!best || *candidate < *best)) best = candidate;
    return best;
}

}  // namespace

std::optional<SearchHit> search(const SearchQuery& query, int jobs) {
    if (query.max_n > kLabeledBound)
        throw BoundExceeded("search is limited to " + std::to_string(kLabeledBound) + " points");
    for (Axiom a : query.holds)
        for (Axiom b : query.fails)
            if (a == b) return std::nullopt;

    for (int n = 1; n <= query.max_n; ++n) {
        const std::optional<CanonicalKey> key = scan_level(n, query, jobs);
        if (key) {
            FinSpace witness = space_from_key(*key);
            PropertyVector v = classify_all(witness);
            return SearchHit{std::move(witness), v};
        }
    }
    return std::nullopt;
}

ImplicationMatrix implication_matrix(const std::vector<Axiom>& axioms, int max_n, int jobs) {
    if (max_n > kIsoBound)
        throw BoundExceeded("implication matrices are limited to " + std::to_string(kIsoBound) +
                            " points");
    ImplicationMatrix matrix;
    matrix.axioms = axioms;
    const std::size_t k = axioms.size();
    matrix.status.assign(k, std::vector<ImplicationMatrix::Entry>(k));
    for (auto& row : matrix.status)
        for (auto& e : row) e.checked_up_to = max_n;

    ClassifyCache cache;
    for (int n = 1; n <= max_n; ++n) {
        // Canonically smallest witness per still-open pair at this level.
        std::vector<std::vector<std::optional<CanonicalKey>>> found(
            k, std::vector<std::optional<CanonicalKey>>(k));
        enumerate_topologies(n, /*up_to_iso=*/false, [&](const FinSpace& s) {
            const PropertyVector v = classify_all(s, &cache);
            std::optional<CanonicalKey> key;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) {
                    if (i == j || !matrix.status[i][j].implies) continue;
                    if (!v[axioms[i]] || v[axioms[j]]) continue;
                    if (!key) key = canonical_form(s);
                    auto& slot = found[i][j];
                    if (!slot || *key < *slot) slot = key;
                }
        }, jobs);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (found[i][j]) {
                    matrix.status[i][j].implies = false;
                    matrix.status[i][j].witness = *found[i][j];
                }
    }
    return matrix;
}

}  // namespace finitop
