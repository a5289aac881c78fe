#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "finitop/enumerate.hpp"

namespace finitop {

struct VerifyOptions {
    int max_n = 4;           // exhaustive sweep bound, <= 5
    unsigned seed = 12345;   // catalog sampling seed
    int jobs = 1;
    int catalog_samples = 200;  // per family
    bool revalidate_memo = false;
};

/// One theorem suite of the ledger.
struct SuiteResult {
    std::string id;
    std::string title;
    std::uint64_t checks = 0;
    std::vector<std::string> failures;  // capped; empty means passed

    bool passed() const { return failures.empty(); }
};

/// Enumeration sanity run before the suites: expected labeled counts,
/// duplicate freedom, and agreement with the direct family generator.
struct SubstrateResult {
    std::vector<std::uint64_t> counts;  // index n
    bool counts_match = false;
    bool duplicate_free = false;
    bool direct_generator_agrees = false;
    std::int64_t elapsed_ms = 0;

    bool passed() const { return counts_match && duplicate_free && direct_generator_agrees; }
};

struct VerifyReport {
    VerifyOptions options;
    SubstrateResult substrate;
    std::vector<SuiteResult> suites;

    int failure_count() const {
        int f = substrate.passed() ? 0 : 1;
        for (const SuiteResult& s : suites)
            if (!s.passed()) ++f;
        return f;
    }
    bool all_passed() const { return failure_count() == 0; }
};

/// Known labeled topology counts for n = 0..7.
extern const std::uint64_t kLabeledTopologyCounts[8];

/// Runs the full theorem ledger: an exhaustive sweep of every labeled space
/// up to options.max_n plus the catalog families, one suite per theorem.
VerifyReport run_verification(const VerifyOptions& options);

/// Self-checks for one catalog family: algebra laws, rule-table closure
/// axioms, the separating-set characterization on sampled sets, implication
/// consistency and the pinned example verdicts.
struct FamilyCheckReport {
    std::string family;
    std::vector<SuiteResult> sections;

    bool all_passed() const {
        for (const SuiteResult& s : sections)
            if (!s.passed()) return false;
        return true;
    }
};

FamilyCheckReport check_catalog_family(const std::string& name, unsigned seed, int samples);

}  // namespace finitop
