#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "finitop/classify.hpp"

namespace finitop {

/// Streams all topologies on n labeled points, each exactly once, in a
/// deterministic order. Generation walks minimal-neighborhood tables, i.e.
/// reflexive transitive relations; opens are their up-set families.
/// Bounds: n <= 7 labeled, n <= 5 with up_to_iso (one space per canonical
/// key). jobs > 1 parallelizes the walk; emission order is unchanged.
void enumerate_topologies(int n, bool up_to_iso,
                          const std::function<void(const FinSpace&)>& sink, int jobs = 1);

/// Convenience collector for small n.
std::vector<FinSpace> all_topologies(int n, bool up_to_iso = false, int jobs = 1);

/// Number of labeled topologies on n points, without materializing spaces.
std::uint64_t count_topologies(int n, int jobs = 1);

/// Independent generator used as a counting oracle: filters every family of
/// subsets containing {} and X by closure under pairwise union and
/// intersection. Exponential in 2^n; bounded to n <= 4.
std::vector<FinSpace> all_topologies_direct(int n);

/// A counterexample query: find a space satisfying every `holds` axiom and
/// violating every `fails` axiom.
struct SearchQuery {
    std::vector<Axiom> holds;
    std::vector<Axiom> fails;
    int max_n = 4;
    bool up_to_iso = true;
};

struct SearchHit {
    FinSpace space;
    PropertyVector properties;
};

/// Smallest-n witness, canonical-first among witnesses at that n; results do
/// not depend on jobs. Returns nullopt when no witness exists within bounds.
std::optional<SearchHit> search(const SearchQuery& query, int jobs = 1);

/// Machine-checked implication table. Entry (i,j) reports either that
/// axioms[i] implied axioms[j] on every space up to max_n, or the canonical
/// key of the smallest counterexample.
struct ImplicationMatrix {
    struct Entry {
        bool implies = true;
        int checked_up_to = 0;
        std::optional<CanonicalKey> witness;
    };

    std::vector<Axiom> axioms;
    std::vector<std::vector<Entry>> status;  // status[i][j]
};

/// max_n <= 5. A single sweep classifies each space once and fills every
/// ordered pair.
ImplicationMatrix implication_matrix(const std::vector<Axiom>& axioms, int max_n, int jobs = 1);

}  // namespace finitop
