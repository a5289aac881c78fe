#include <doctest.h>

#include <set>

#include "finitop/verify.hpp"

using namespace finitop;

TEST_CASE("labeled counts match the preorder and direct generators") {
    const std::uint64_t expected[] = {1, 1, 4, 29, 355};
    for (int n = 0; n <= 4; ++n) {
        CHECK(count_topologies(n) == expected[n]);
        CHECK(all_topologies(n).size() == expected[n]);
        if (n <= 3) CHECK(all_topologies_direct(n).size() == expected[n]);
    }
    CHECK(count_topologies(5) == 6942);

    // Same spaces, not just the same counts.
    for (int n = 0; n <= 3; ++n) {
        std::set<std::string> walk, direct;
        for (const FinSpace& s : all_topologies(n)) walk.insert(s.encoding());
        for (const FinSpace& s : all_topologies_direct(n)) direct.insert(s.encoding());
        CHECK(walk == direct);
    }
}

TEST_CASE("enumeration is duplicate-free") {
    for (int n = 0; n <= 4; ++n) {
        std::set<std::string> seen;
        std::size_t total = 0;
        enumerate_topologies(n, false, [&](const FinSpace& s) {
            seen.insert(s.encoding());
            ++total;
        });
        CHECK(seen.size() == total);
    }
}

TEST_CASE("isomorph-free enumeration counts canonical classes") {
    CHECK(all_topologies(2, /*up_to_iso=*/true).size() == 3);
    CHECK(all_topologies(3, true).size() == 9);
    CHECK(all_topologies(4, true).size() == 33);

    std::set<std::string> keys;
    for (const FinSpace& s : all_topologies(3, true)) {
        CHECK(keys.insert(canonical_form(s).to_string()).second);
    }
}

TEST_CASE("parallel enumeration preserves order and counts") {
    std::vector<std::string> seq, par;
    enumerate_topologies(4, false, [&](const FinSpace& s) { seq.push_back(s.encoding()); }, 1);
    enumerate_topologies(4, false, [&](const FinSpace& s) { par.push_back(s.encoding()); }, 4);
    CHECK(seq == par);
    CHECK(count_topologies(5, 4) == 6942);
}

TEST_CASE("bounds are enforced") {
    CHECK_THROWS_AS(count_topologies(8), BoundExceeded);
    CHECK_THROWS_AS(all_topologies(6, true), BoundExceeded);
    CHECK_THROWS_AS(all_topologies_direct(5), BoundExceeded);
    SearchQuery q;
    q.max_n = 8;
    CHECK_THROWS_AS(search(q), BoundExceeded);
}

TEST_CASE("search finds the smallest witness canonically") {
    SearchQuery q;
    q.holds = {Axiom::T0};
    q.fails = {Axiom::T1};
    q.max_n = 3;
    const auto hit = search(q);
    REQUIRE(hit.has_value());
    CHECK(hit->space.points() == 2);
    CHECK(canonical_form(hit->space) == canonical_form(FinSpace::sierpinski()));
    CHECK(hit->properties[Axiom::T0]);
    CHECK(!hit->properties[Axiom::T1]);

    // Deterministic across worker counts.
    const auto hit4 = search(q, 4);
    REQUIRE(hit4.has_value());
    CHECK(hit4->space.encoding() == hit->space.encoding());
}

TEST_CASE("search returns nothing for implied combinations") {
    SearchQuery q;
    q.holds = {Axiom::T1};
    q.fails = {Axiom::T0};
    q.max_n = 4;
    CHECK(!search(q));

    q.holds = {Axiom::Kd};
    q.fails = {Axiom::WeaklyHausdorff};
    CHECK(!search(q));

    q.holds = {Axiom::T0};
    q.fails = {Axiom::T0};
    CHECK(!search(q));
}

TEST_CASE("smallest T0 space that is not T-half appears at three points") {
    SearchQuery q;
    q.holds = {Axiom::T0};
    q.fails = {Axiom::THalf};
    q.max_n = 4;
    const auto hit = search(q);
    REQUIRE(hit.has_value());
    CHECK(hit->space.points() == 3);
}

TEST_CASE("implication matrix over a small axiom set") {
    const std::vector<Axiom> axioms = {Axiom::T0, Axiom::T1, Axiom::THalf, Axiom::Hausdorff,
                                       Axiom::Kd, Axiom::Kc};
    const ImplicationMatrix m = implication_matrix(axioms, 3);

    const auto entry = [&](Axiom p, Axiom q) {
        std::size_t i = 0, j = 0;
        for (std::size_t k = 0; k < axioms.size(); ++k) {
            if (axioms[k] == p) i = k;
            if (axioms[k] == q) j = k;
        }
        return m.status[i][j];
    };

    CHECK(entry(Axiom::T1, Axiom::T0).implies);
    CHECK(entry(Axiom::THalf, Axiom::T0).implies);
    CHECK(entry(Axiom::Hausdorff, Axiom::Kd).implies);
    CHECK(entry(Axiom::Kc, Axiom::Kd).implies);  // finite collapse; catalog separates
    CHECK(!entry(Axiom::T0, Axiom::T1).implies);
    CHECK(entry(Axiom::T0, Axiom::T1).witness->n == 2);
    CHECK(!entry(Axiom::T0, Axiom::THalf).implies);
    CHECK(entry(Axiom::T0, Axiom::THalf).witness->n == 3);
}

TEST_CASE("verification ledger passes at three points") {
    VerifyOptions options;
    options.max_n = 3;
    options.catalog_samples = 50;
    const VerifyReport report = run_verification(options);
    CHECK(report.substrate.passed());
    CHECK(report.suites.size() == 12);
    for (const SuiteResult& s : report.suites) {
        INFO(s.id);
        CHECK(s.passed());
        CHECK(s.checks > 0);
    }
    CHECK(report.all_passed());
    CHECK(report.failure_count() == 0);
}

TEST_CASE("verification is deterministic across worker counts") {
    VerifyOptions a, b;
    a.max_n = 3;
    b.max_n = 3;
    a.catalog_samples = b.catalog_samples = 25;
    a.jobs = 1;
    b.jobs = 4;
    const VerifyReport ra = run_verification(a);
    const VerifyReport rb = run_verification(b);
    REQUIRE(ra.suites.size() == rb.suites.size());
    for (std::size_t i = 0; i < ra.suites.size(); ++i) {
        CHECK(ra.suites[i].checks == rb.suites[i].checks);
        CHECK(ra.suites[i].failures == rb.suites[i].failures);
    }
}
