#pragma once

#include <array>
#include <mutex>
#include <string>
#include <unordered_map>

#include "finitop/axiom.hpp"
#include "finitop/operators.hpp"

namespace finitop {

/// Cardinality bound for the generic classifier: at most k, or unbounded.
struct KappaBound {
    bool unbounded = false;
    int k = 0;

    static KappaBound at_most(int k) { return {false, k}; }
    static KappaBound all() { return {true, 0}; }
    bool admits(int card) const { return unbounded || card <= k; }
};

/// Open-cover compactness. Every subset of a finite space is compact: the
/// open family itself is finite, so any cover is its own finite subcover.
/// The function runs the canonical cover {min_nbhd(x) : x in a} anyway so
/// the definition stays executable, and is kept in the compact-set loops of
/// the predicates below as a guard.
bool is_compact(const FinSpace& space, PointSet a);

/// True iff every compact subset with cardinality within `kappa` is a fixed
/// point of the operator. Custom operators are axiom-checked first and
/// NotAClosureOperator is thrown on failure.
bool t_kappa_xi(const FinSpace& space, KappaBound kappa, const ClosureOperator& xi);
bool t_kappa_xi(const SpaceOps& ops, KappaBound kappa, const ClosureOperator& xi);

/// Verdict vector over all axioms, in all_axioms order.
struct PropertyVector {
    std::array<bool, kAxiomCount> values{};

    bool operator[](Axiom a) const { return values[static_cast<std::size_t>(a)]; }
    bool& at(Axiom a) { return values[static_cast<std::size_t>(a)]; }
    bool operator==(const PropertyVector&) const = default;
};

/// Thread-safe memo of property vectors keyed by canonical form. With
/// `revalidate` set every hit is recomputed and compared, trading speed for
/// a standing self-check.
class ClassifyCache {
public:
    bool revalidate = false;

    bool lookup(const std::string& key, PropertyVector& out) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(key);
        if (it == map_.end()) return false;
        out = it->second;
        return true;
    }
    void store(const std::string& key, const PropertyVector& v) {
        std::lock_guard<std::mutex> lock(mu_);
        map_.emplace(key, v);
    }
    std::size_t size() const {
        std::lock_guard<std::mutex> lock(mu_);
        return map_.size();
    }

private:
    mutable std::mutex mu_;
    std::unordered_map<std::string, PropertyVector> map_;
};

/// Direct-definition decision for one axiom; never routed through
/// t_kappa_xi, so the kappa/xi equivalence theorems are real comparisons.
bool classify(const FinSpace& space, Axiom axiom);
bool classify(const SpaceOps& ops, Axiom axiom);

/// All axioms at once, sharing the per-space derived families. With a cache,
/// results are memoized by canonical form (n <= 7 only).
PropertyVector classify_all(const FinSpace& space, ClassifyCache* cache = nullptr);

}  // namespace finitop
