#include "finitop/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <thread>

#include "finitop/catalog.hpp"
#include "finitop/maps.hpp"

namespace finitop {

const std::uint64_t kLabeledTopologyCounts[8] = {1,    1,      4,      29,
                                                 355,  6942,   209527, 9535241};

namespace {

constexpr std::size_t kSuiteCount = 12;
constexpr std::size_t kMaxFailuresKept = 5;

struct Counter {
    std::uint64_t checks = 0;
    std::vector<std::string> failures;

    template <class MessageFn>
    void check(bool ok, MessageFn&& message) {
        ++checks;
        if (!ok && failures.size() < kMaxFailuresKept) failures.push_back(message());
    }
    void merge(const Counter& o) {
        checks += o.checks;
        for (const std::string& f : o.failures)
            if (failures.size() < kMaxFailuresKept) failures.push_back(f);
    }
};

struct SuiteSpec {
    const char* id;
    const char* title;
};

constexpr SuiteSpec kSuites[kSuiteCount] = {
    {"semiregularization-delta", "delta-open family equals the semi-regularization"},
    {"locally-dense-trace", "regular opens and semi-regularization trace onto locally dense sets"},
    {"closure-axioms", "built-in operators satisfy the closure-operator axioms"},
    {"operator-chains", "closure/delta/theta chains and derived-topology inclusions"},
    {"tkx-equivalences", "axiom classifiers match the compact-fixed-point classifier"},
    {"implication-diagram", "separation implication diagram has no counterexample"},
    {"anticompact-collapse", "on anti-compact spaces kd and weakly Hausdorff coincide"},
    {"kckd-propositions", "semi-regular and first-countable kc/kd collapses"},
    {"kd-subspaces-sums", "kd passes to locally dense subspaces and across sums"},
    {"continuous-map-transfer", "continuous maps into kd codomains are super-closed and perfect"},
    {"lambda-hierarchy", "lambda-closed hierarchy, separating-set characterization, R0 ties"},
    {"catalog-examples", "symbolic catalog verdicts, algebra and truncations"},
};

enum Suite : std::size_t {
    kSemiregDelta = 0,
    kLocallyDense,
    kClosureAxioms,
    kOperatorChains,
    kTkx,
    kDiagram,
    kAntiCompact,
    kKcKd,
    kKdSubspacesSums,
    kMaps,
    kLambdaHierarchy,
    kCatalog,
};

using Counters = std::array<Counter, kSuiteCount>;

void check_space(const FinSpace& s, ClassifyCache& cache, Counters& c) {
    const SpaceOps ops(s);
    const int n = s.points();
    const Mask subsets = Mask{1} << n;
    const PropertyVector v = classify_all(s, &cache);
    const std::string enc = s.encoding();

    // Suite 1: the delta-open family computed from delta-cluster points
    // equals the base-generated semi-regularization.
    const FinSpace sr = semi_regularization(s);
    c[kSemiregDelta].check(ops.tau_delta() == sr.opens(),
                           [&] { return "tau_delta != semi-regularization on " + enc; });

    // Suite 2: traces onto locally dense subsets.
    const SetFamily ro = regular_opens(s);
    for (Mask m = 1; m < subsets; ++m) {
        const PointSet a(m);
        if (!is_locally_dense(s, a)) continue;
        const Subspace sub = subspace(s, a);
        std::vector<PointSet> traced;
        for (PointSet r : ro) traced.push_back(sub.restrict(r));
        c[kLocallyDense].check(regular_opens(sub.space) == SetFamily(std::move(traced)), [&] {
            return "RO trace mismatch on " + enc + " at " + a.to_string();
        });
        const FinSpace sub_sr = semi_regularization(sub.space);
        const Subspace sr_sub = subspace(sr, a);
        c[kLocallyDense].check(sub_sr.opens() == sr_sub.space.opens(), [&] {
            return "semi-regularization trace mismatch on " + enc + " at " + a.to_string();
        });
    }

    // Suite 3: closure-operator axioms for each built-in.
    for (const ClosureOperator& op : ClosureOperator::builtins()) {
        const ClosureAxiomReport report = check_closure_axioms(s, op);
        c[kClosureAxioms].check(report.ok, [&] {
            return op.name + " violates " + report.violated + " on " + enc + ": " + report.message;
        });
    }

    // Suite 4: operator chains and derived-family inclusions.
    const SetFamily& tau_theta = ops.tau_theta();
    const SetFamily& tau_delta = ops.tau_delta();
    c[kOperatorChains].check(tau_theta.subfamily_of(tau_delta) &&
                                 tau_delta.subfamily_of(s.opens()),
                             [&] { return "tau_theta/tau_delta/tau inclusion fails on " + enc; });
    c[kOperatorChains].check(ops.tau_quasi().subfamily_of(ops.tau_urysohn()) &&
                                 ops.tau_urysohn().subfamily_of(s.opens()),
                             [&] { return "tau_q/tau_U/tau inclusion fails on " + enc; });
    c[kOperatorChains].check(ops.tau_zero() == ops.tau_quasi(),
                             [&] { return "zero-open family != quasi-topology on " + enc; });
    c[kOperatorChains].check(lambda_sets(s) == s.opens(), [&] {
        return "Lambda-sets differ from the open family on " + enc;
    });
    c[kOperatorChains].check(classify(ops, Axiom::Regular) == (tau_theta == s.opens()),
                             [&] { return "regular vs tau=tau_theta mismatch on " + enc; });
    for (Mask m = 0; m < subsets; ++m) {
        const PointSet a(m);
        const PointSet cl = s.closure(a);
        const PointSet dcl = ops.delta_closure(a);
        const PointSet tcl = ops.theta_closure(a);
        c[kOperatorChains].check(cl.subset_of(dcl) && dcl.subset_of(tcl), [&] {
            return "Cl/Cl_delta/Cl_theta chain fails on " + enc + " at " + a.to_string();
        });
        c[kOperatorChains].check(ops.delta_closure(tcl) == tcl, [&] {
            return "theta-closure is not delta-closed on " + enc + " at " + a.to_string();
        });
        // Theta-interior: the complement-dual formula agrees with the
        // pointwise one (some open neighborhood with closure inside a), is
        // contractive, absorbs every theta-open subset, and has the
        // theta-open sets as its fixed points.
        const PointSet ti = theta_interior(s, a);
        PointSet pointwise;
        for (int x : a.elements())
            for (PointSet u : s.opens())
                if (u.contains(x) && s.closure(u).subset_of(a)) {
                    pointwise = pointwise.with(x);
                    break;
                }
        c[kOperatorChains].check(ti == pointwise, [&] {
            return "theta-interior pointwise identity fails on " + enc + " at " + a.to_string();
        });
        PointSet union_theta_open;
        for (PointSet u : tau_theta)
            if (u.subset_of(a)) union_theta_open = union_theta_open | u;
        c[kOperatorChains].check(union_theta_open.subset_of(ti) && ti.subset_of(a), [&] {
            return "theta-interior bounds fail on " + enc + " at " + a.to_string();
        });
        c[kOperatorChains].check((ti == a) == tau_theta.contains(a), [&] {
            return "theta-interior fixed points are not the theta-opens on " + enc + " at " +
                   a.to_string();
        });
    }

    // Suite 5: the generic classifier against the direct definitions.
    const KappaBound all = KappaBound::all();
    const KappaBound at_n = KappaBound::at_most(n);
    const KappaBound one = KappaBound::at_most(1);
    const struct {
        Axiom axiom;
        ClosureOperator op;
        KappaBound kappa;
    } equivalences[] = {
        {Axiom::CompletelyHausdorff, ClosureOperator::zero(), all},
        {Axiom::Urysohn, ClosureOperator::urysohn(), all},
        {Axiom::Hausdorff, ClosureOperator::theta(), all},
        {Axiom::Kc, ClosureOperator::closure(), all},
        {Axiom::WeaklyHausdorff, ClosureOperator::delta(), one},
        {Axiom::T1, ClosureOperator::closure(), one},
        {Axiom::T0, ClosureOperator::lambda(), one},
    };
    for (const auto& eq : equivalences) {
        c[kTkx].check(v[eq.axiom] == t_kappa_xi(ops, eq.kappa, eq.op), [&] {
            return std::string(axiom_name(eq.axiom)) + " vs T_{kappa," + eq.op.name +
                   "} mismatch on " + enc;
        });
        // The unbounded and |X|-bounded classifiers agree on finite spaces.
        if (eq.kappa.unbounded)
            c[kTkx].check(t_kappa_xi(ops, eq.kappa, eq.op) == t_kappa_xi(ops, at_n, eq.op),
                          [&] { return "kappa=all vs kappa=n mismatch on " + enc; });
    }

    // Suite 6: implication diagram edges.
    const std::pair<Axiom, Axiom> edges[] = {
        {Axiom::Hausdorff, Axiom::Kd},       {Axiom::Hausdorff, Axiom::HTR1},
        {Axiom::Kd, Axiom::Kc},              {Axiom::Kd, Axiom::WeaklyHausdorff},
        {Axiom::Kc, Axiom::US},              {Axiom::US, Axiom::T1},
        {Axiom::HTR1, Axiom::WeaklyHausdorff}, {Axiom::WeaklyHausdorff, Axiom::T1},
        {Axiom::Kc, Axiom::CPrime},
    };
    for (const auto& [from, to] : edges)
        c[kDiagram].check(!v[from] || v[to], [&] {
            return std::string(axiom_name(from)) + " -> " + axiom_name(to) +
                   " has counterexample " + enc;
        });

    // Suite 7: anti-compactness collapse at finite scale.
    c[kAntiCompact].check(v[Axiom::AntiCompact],
                          [&] { return "finite space not anti-compact: " + enc; });
    c[kAntiCompact].check(v[Axiom::Kd] == v[Axiom::WeaklyHausdorff],
                          [&] { return "kd vs weakly Hausdorff mismatch on " + enc; });

    // Suite 8: kc/kd collapse propositions.
    c[kKcKd].check(!v[Axiom::SemiRegular] || (v[Axiom::Kd] == v[Axiom::Kc]),
                   [&] { return "semi-regular kd/kc mismatch on " + enc; });
    const bool h = v[Axiom::Hausdorff];
    c[kKcKd].check(h == v[Axiom::Kd] && h == v[Axiom::Kc] && h == v[Axiom::US], [&] {
        return "hausdorff/kd/kc/US collapse fails on " + enc;
    });

    // Suite 9 (subspace part): kd restricts to locally dense subspaces.
    if (v[Axiom::Kd]) {
        for (Mask m = 1; m < subsets; ++m) {
            const PointSet a(m);
            if (!is_locally_dense(s, a)) continue;
            c[kKdSubspacesSums].check(classify(subspace(s, a).space, Axiom::Kd), [&] {
                return "locally dense subspace of kd space not kd: " + enc + " at " +
                       a.to_string();
            });
        }
    }

    // Suite 11: the lambda-closed hierarchy and its companions.
    c[kLambdaHierarchy].check(
        (!v[Axiom::THalf] || v[Axiom::TThird]) && (!v[Axiom::TThird] || v[Axiom::TQuarter]) &&
            (!v[Axiom::TQuarter] || v[Axiom::T0]),
        [&] { return "T-hierarchy chain fails on " + enc; });
    c[kLambdaHierarchy].check(v[Axiom::TThird] == v[Axiom::TQuarter], [&] {
        return "anti-compact T-third/T-quarter collapse fails on " + enc;
    });
    c[kLambdaHierarchy].check(v[Axiom::T1] == (v[Axiom::T0] && v[Axiom::R0]) &&
                                  v[Axiom::T1] == (v[Axiom::T0] && v[Axiom::WeakR0]),
                              [&] { return "T1 = T0 + (weak) R0 fails on " + enc; });
    // Classical cross-check, external to the verified results: T-half iff
    // every singleton is open or closed.
    bool singleton_split = true;
    for (int x = 0; x < n; ++x)
        if (!s.is_open(PointSet::single(x)) && !s.is_closed(PointSet::single(x)))
            singleton_split = false;
    c[kLambdaHierarchy].check(v[Axiom::THalf] == singleton_split, [&] {
        return "T-half vs open-or-closed singleton characterization fails on " + enc;
    });
    // Separating-set characterization of lambda-closedness, all subsets.
    for (Mask m = 0; m < subsets; ++m) {
        const PointSet f(m);
        bool separated_everywhere = true;
        for (int y = 0; y < n && separated_everywhere; ++y) {
            if (f.contains(y)) continue;
            bool exists = false;
            for (PointSet u : s.opens())
                if (f.subset_of(u) && !u.contains(y)) {
                    exists = true;
                    break;
                }
            if (!exists)
                for (PointSet cset : s.closed_sets())
                    if (f.subset_of(cset) && !cset.contains(y)) {
                        exists = true;
                        break;
                    }
            separated_everywhere = exists;
        }
        c[kLambdaHierarchy].check(is_lambda_closed(s, f) == separated_everywhere, [&] {
            return "separating-set characterization fails on " + enc + " at " + f.to_string();
        });
    }
}

void check_sums(Counters& c, ClassifyCache& cache) {
    std::vector<FinSpace> small;
    for (int n = 1; n <= 3; ++n)
        for (const FinSpace& s : all_topologies(n)) small.push_back(s);

    for (const FinSpace& a : small)
        for (const FinSpace& b : small) {
            const FinSpace sum = topological_sum({a, b});
            const bool expected = classify_all(a, &cache)[Axiom::Kd] &&
                                  classify_all(b, &cache)[Axiom::Kd];
            c[kKdSubspacesSums].check(classify(sum, Axiom::Kd) == expected, [&] {
                return "kd sum equivalence fails for " + a.encoding() + " + " + b.encoding();
            });
        }

    std::vector<FinSpace> tiny;
    for (int n = 1; n <= 2; ++n)
        for (const FinSpace& s : all_topologies(n)) tiny.push_back(s);
    for (const FinSpace& a : tiny)
        for (const FinSpace& b : tiny)
            for (const FinSpace& d : tiny) {
                const FinSpace sum = topological_sum({a, b, d});
                const bool expected = classify(a, Axiom::Kd) && classify(b, Axiom::Kd) &&
                                      classify(d, Axiom::Kd);
                c[kKdSubspacesSums].check(classify(sum, Axiom::Kd) == expected, [&] {
                    return "kd triple-sum equivalence fails for " + a.encoding() + " + " +
                           b.encoding() + " + " + d.encoding();
                });
            }
}

void check_maps(Counters& c, ClassifyCache& cache) {
    std::vector<FinSpace> small;
    for (int n = 0; n <= 3; ++n)
        for (const FinSpace& s : all_topologies(n)) small.push_back(s);

    for (const FinSpace& y : small) {
        if (!classify_all(y, &cache)[Axiom::Kd]) continue;
        for (const FinSpace& x : small) {
            if (!is_compact(x, x.universe())) continue;  // always true; stated hypothesis
            for (const SpaceMap& f : enumerate_continuous_maps(x, y)) {
                c[kMaps].check(is_super_closed(f) && is_perfect(f), [&] {
                    return "continuous map into kd codomain not super-closed/perfect: " +
                           x.encoding() + " -> " + y.encoding();
                });
                if (f.bijective()) {
                    c[kMaps].check(is_homeomorphism(f), [&] {
                        return "continuous bijection into kd codomain not a homeomorphism: " +
                               x.encoding() + " -> " + y.encoding();
                    });
                    if (is_super_continuous(f))
                        c[kMaps].check(is_super_homeomorphism(f), [&] {
                            return "super-continuous bijection not a super-homeomorphism: " +
                                   x.encoding() + " -> " + y.encoding();
                        });
                }
            }
        }
    }
}

struct FamilyCounters {
    Counter algebra;        // described-set algebra soundness
    Counter closure_axioms; // rule-table closure operators
    Counter lambda;         // separating-set characterization
    Counter diagram;        // implication-edge consistency
    Counter anticompact;    // kd/wH and T-third/T-quarter collapses
    Counter verdicts;       // pinned example verdicts and RO
    Counter truncation;     // finite-trace consistency (included-point only)
};

void run_family_checks(const catalog::DescribedSpace& sp, unsigned seed, int samples,
                       FamilyCounters& c) {
    using catalog::DescribedSet;
    using catalog::Family;
    using catalog::PointName;
    using catalog::Verdict;

    std::mt19937 rng(seed);

    const auto verdict_is = [&](Axiom a, bool expected) {
        const Verdict v = sp.classify(a);
        return v.supported() && v.is_true() == expected;
    };

    // Pinned example verdicts per family.
    switch (sp.family()) {
        case Family::IncludedPointCofinite:
            c.verdicts.check(verdict_is(Axiom::TQuarter, true) && verdict_is(Axiom::TThird, false),
                             [&] { return sp.name() + ": T-quarter/T-third verdicts wrong"; });
            break;
        case Family::PointCocountable:
            c.verdicts.check(verdict_is(Axiom::TThird, true) && verdict_is(Axiom::THalf, false),
                             [&] { return sp.name() + ": T-third/T-half verdicts wrong"; });
            break;
        case Family::CocountableLine:
            c.verdicts.check(verdict_is(Axiom::Kc, true) && verdict_is(Axiom::Kd, false),
                             [&] { return sp.name() + ": kc/kd verdicts wrong"; });
            c.verdicts.check(sp.regular_opens().size() == 2 && sp.regular_opens()[0].is_empty() &&
                                 sp.regular_opens()[1].is_universe(),
                             [&] { return sp.name() + ": regular opens are not {{}, X}"; });
            break;
        case Family::CofiniteLine:
            c.verdicts.check(verdict_is(Axiom::CPrime, true) && verdict_is(Axiom::Kc, false),
                             [&] { return sp.name() + ": C'/kc verdicts wrong"; });
            break;
    }

    // Diagram consistency over supported verdicts.
    const std::pair<Axiom, Axiom> edges[] = {
        {Axiom::Hausdorff, Axiom::Kd},       {Axiom::Hausdorff, Axiom::HTR1},
        {Axiom::Kd, Axiom::Kc},              {Axiom::Kd, Axiom::WeaklyHausdorff},
        {Axiom::Kc, Axiom::US},              {Axiom::US, Axiom::T1},
        {Axiom::HTR1, Axiom::WeaklyHausdorff}, {Axiom::WeaklyHausdorff, Axiom::T1},
        {Axiom::Kc, Axiom::CPrime},
    };
    for (const auto& [from, to] : edges) {
        const Verdict vf = sp.classify(from), vt = sp.classify(to);
        if (!vf.supported() || !vt.supported()) continue;
        c.diagram.check(!vf.is_true() || vt.is_true(), [&] {
            return sp.name() + ": catalog verdicts contradict edge " +
                   std::string(axiom_name(from)) + " -> " + axiom_name(to);
        });
    }

    // Anti-compact collapses.
    if (sp.classify(Axiom::AntiCompact).is_true()) {
        c.anticompact.check(
            sp.classify(Axiom::Kd).is_true() == sp.classify(Axiom::WeaklyHausdorff).is_true(),
            [&] { return sp.name() + ": anti-compact kd/weakly-Hausdorff mismatch"; });
        c.anticompact.check(
            sp.classify(Axiom::TThird).is_true() == sp.classify(Axiom::TQuarter).is_true(),
            [&] { return sp.name() + ": anti-compact T-third/T-quarter mismatch"; });
    }

    std::vector<PointName> probes;
    probes.push_back(PointName::distinguished());
    for (int i = 0; i < 4; ++i) probes.push_back(PointName::generic(i));
    for (int g = 0; g < 3; ++g)
        for (int i = 0; i < 3; ++i) probes.push_back(PointName::member(g, i));

    for (int iter = 0; iter < samples; ++iter) {
        const DescribedSet a = catalog::random_set(rng);
        const DescribedSet b = catalog::random_set(rng);

        c.algebra.check(a.complement().complement() == a,
                        [&] { return sp.name() + ": complement not involutive"; });
        const DescribedSet u = a.unite(b), i = a.intersect(b);
        c.algebra.check(u.complement() == a.complement().intersect(b.complement()), [&] {
            return sp.name() + ": de morgan fails on " + a.to_string() + ", " + b.to_string();
        });
        bool pointwise_ok = true;
        for (PointName q : probes) {
            pointwise_ok &= u.contains(q) == (a.contains(q) || b.contains(q));
            pointwise_ok &= i.contains(q) == (a.contains(q) && b.contains(q));
            pointwise_ok &= a.complement().contains(q) == !a.contains(q);
        }
        c.algebra.check(pointwise_ok, [&] {
            return sp.name() + ": pointwise membership mismatch on " + a.to_string() + ", " +
                   b.to_string();
        });
        c.algebra.check(i.subset_of(a) && a.subset_of(u),
                        [&] { return sp.name() + ": subset laws fail"; });

        // Closure axioms on the family's rule table.
        const DescribedSet ca = sp.closure(a);
        c.closure_axioms.check(a.subset_of(ca) && sp.closure(ca) == ca, [&] {
            return sp.name() + ": closure not extensive/idempotent on " + a.to_string();
        });
        c.closure_axioms.check(ca.subset_of(sp.closure(u)), [&] {
            return sp.name() + ": closure not monotone on " + a.to_string();
        });
        c.closure_axioms.check(sp.closure(DescribedSet::empty_set()).is_empty(),
                               [&] { return sp.name() + ": closure of {} not empty"; });
        const DescribedSet da = sp.delta_closure(a);
        c.closure_axioms.check(a.subset_of(da) && sp.delta_closure(da) == da &&
                                   da.subset_of(sp.delta_closure(u)),
                               [&] { return sp.name() + ": delta-closure axioms fail"; });
        c.algebra.check(ca.subset_of(da), [&] {
            return sp.name() + ": closure exceeds delta-closure on " + a.to_string();
        });

        // Interior duality.
        c.algebra.check(sp.interior(a) == sp.closure(a.complement()).complement(), [&] {
            return sp.name() + ": interior duality fails on " + a.to_string();
        });
        // Compactness is inherited by subsets in these families.
        if (sp.is_compact(u))
            c.algebra.check(sp.is_compact(a), [&] {
                return sp.name() + ": compactness not inherited by " + a.to_string();
            });

        // Separating-set characterization of lambda-closedness.
        const bool lam = sp.is_lambda_closed(a);
        if (sp.is_compact(a)) {
            for (PointName y : catalog::sample_points_outside(sp, a, 4, rng)) {
                const bool exists = sp.separating_set_exists(a, y);
                c.lambda.check(!lam || exists, [&] {
                    return sp.name() + ": lambda-closed compact set " + a.to_string() +
                           " not separated from " + y.to_string();
                });
            }
            if (!lam && sp.distinguished_point() && !a.contains(*sp.distinguished_point())) {
                c.lambda.check(!sp.separating_set_exists(a, *sp.distinguished_point()), [&] {
                    return sp.name() + ": non-lambda-closed compact set " + a.to_string() +
                           " has a separating set at the distinguished point";
                });
            }
        }

        // Regular-open rule: nonempty proper opens are never regular open.
        if (sp.is_open(a) && !a.is_empty() && !a.is_universe())
            c.algebra.check(sp.interior(sp.closure(a)).is_universe(),
                            [&] { return sp.name() + ": Int(Cl(U)) != X for proper open"; });
    }

    // Truncation consistency for the included-point family.
    if (sp.family() == Family::IncludedPointCofinite) {
        for (int m = 0; m <= 6; ++m) {
            const FinSpace trunc = sp.truncation(m);
            c.truncation.check(classify(trunc, Axiom::T0),
                               [&] { return "truncation m=" + std::to_string(m) + " not T0"; });
            c.truncation.check(classify(trunc, Axiom::TD), [&] {
                return "truncation m=" + std::to_string(m) +
                       " not TD ({0} is open in the trace)";
            });
            // Closure rule traces faithfully on subsets of the truncation.
            for (Mask mask = 0; mask < (Mask{1} << trunc.points()); ++mask) {
                DescribedSet f;
                for (int bit : PointSet(mask).elements())
                    f = f.with(bit == 0 ? PointName::distinguished() : PointName::generic(bit));
                const DescribedSet dcl = sp.closure(f);
                PointSet expected;
                if (dcl.is_universe()) {
                    expected = trunc.universe();
                } else {
                    for (int bit = 0; bit < trunc.points(); ++bit) {
                        const PointName q =
                            bit == 0 ? PointName::distinguished() : PointName::generic(bit);
                        if (dcl.contains(q)) expected = expected.with(bit);
                    }
                }
                c.truncation.check(trunc.closure(PointSet(mask)) == expected, [&] {
                    return "truncation closure trace mismatch at m=" + std::to_string(m) +
                           " set " + PointSet(mask).to_string();
                });
            }
        }
    }
}

void check_catalog(Counters& c, const VerifyOptions& options) {
    for (const catalog::DescribedSpace& sp : catalog::all_families()) {
        FamilyCounters fc;
        run_family_checks(sp, options.seed, options.catalog_samples, fc);
        c[kCatalog].merge(fc.algebra);
        c[kCatalog].merge(fc.verdicts);
        c[kCatalog].merge(fc.truncation);
        c[kClosureAxioms].merge(fc.closure_axioms);
        c[kLambdaHierarchy].merge(fc.lambda);
        c[kDiagram].merge(fc.diagram);
        c[kAntiCompact].merge(fc.anticompact);
    }
}

}  // namespace

FamilyCheckReport check_catalog_family(const std::string& name, unsigned seed, int samples) {
    const auto sp = catalog::DescribedSpace::by_name(name);
    if (!sp) throw UnsupportedAxiom("unknown catalog family '" + name + "'");
    FamilyCounters fc;
    run_family_checks(*sp, seed, samples, fc);

    FamilyCheckReport report;
    report.family = name;
    const std::pair<const char*, const Counter*> sections[] = {
        {"verdicts", &fc.verdicts},       {"algebra", &fc.algebra},
        {"closure-axioms", &fc.closure_axioms}, {"lambda-separation", &fc.lambda},
        {"diagram-consistency", &fc.diagram},   {"anticompact-collapse", &fc.anticompact},
        {"truncation", &fc.truncation},
    };
    for (const auto& [id, counter] : sections) {
        if (counter->checks == 0) continue;
        SuiteResult r;
        r.id = id;
        r.title = id;
        r.checks = counter->checks;
        r.failures = counter->failures;
        report.sections.push_back(std::move(r));
    }
    return report;
}

VerifyReport run_verification(const VerifyOptions& options) {
    if (options.max_n > 5) throw BoundExceeded("verification sweeps are limited to 5 points");

    VerifyReport report;
    report.options = options;

    const auto t0 = std::chrono::steady_clock::now();

    // Substrate: enumeration counts, duplicate freedom, oracle agreement.
    std::vector<std::vector<FinSpace>> by_n(static_cast<std::size_t>(options.max_n) + 1);
    report.substrate.counts_match = true;
    report.substrate.duplicate_free = true;
    report.substrate.direct_generator_agrees = true;
    for (int n = 0; n <= options.max_n; ++n) {
        std::set<std::string> seen;
        enumerate_topologies(n, false, [&](const FinSpace& s) {
            if (!seen.insert(s.encoding()).second) report.substrate.duplicate_free = false;
            by_n[static_cast<std::size_t>(n)].push_back(s);
        }, options.jobs);
        const std::uint64_t count = by_n[static_cast<std::size_t>(n)].size();
        report.substrate.counts.push_back(count);
        if (count != kLabeledTopologyCounts[n]) report.substrate.counts_match = false;
        if (n <= 4) {
            std::set<std::string> direct;
            for (const FinSpace& s : all_topologies_direct(n)) direct.insert(s.encoding());
            if (direct != seen) report.substrate.direct_generator_agrees = false;
        }
    }

    // Theorem suites over the sweep.
    ClassifyCache cache;
    cache.revalidate = options.revalidate_memo;
    Counters totals;

    std::vector<const FinSpace*> spaces;
    for (const auto& bucket : by_n)
        for (const FinSpace& s : bucket) spaces.push_back(&s);

    const int workers = std::max(1, std::min<int>(options.jobs, static_cast<int>(spaces.size())));
    if (workers == 1) {
        for (const FinSpace* s : spaces) check_space(*s, cache, totals);
    } else {
        std::vector<Counters> local(static_cast<std::size_t>(workers));
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w]() {
                for (std::size_t i = next.fetch_add(1); i < spaces.size(); i = next.fetch_add(1))
                    check_space(*spaces[i], cache, local[static_cast<std::size_t>(w)]);
            });
        for (auto& t : pool) t.join();
        for (const Counters& lc : local)
            for (std::size_t i = 0; i < kSuiteCount; ++i) totals[i].merge(lc[i]);
    }

    check_sums(totals, cache);
    check_maps(totals, cache);
    check_catalog(totals, options);

    report.substrate.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                      std::chrono::steady_clock::now() - t0)
                                      .count();

    for (std::size_t i = 0; i < kSuiteCount; ++i) {
        SuiteResult r;
        r.id = kSuites[i].id;
        r.title = kSuites[i].title;
        r.checks = totals[i].checks;
        r.failures = totals[i].failures;
        std::sort(r.failures.begin(), r.failures.end());
        report.suites.push_back(std::move(r));
    }
    return report;
}

}  // namespace finitop
