#include "finitop/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "finitop/catalog.hpp"
#include "finitop/spacedoc.hpp"
#include "finitop/verify.hpp"

namespace finitop::cli {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

json base_report(const std::string& command) {
    return json{{"schema_version", kSchemaVersion}, {"command", command}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw TopologyError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<Axiom> parse_axiom_list(const std::vector<std::string>& names) {
    std::vector<Axiom> out;
    for (const std::string& chunk : names) {
        std::stringstream ss(chunk);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            const auto a = parse_axiom(item);
            if (!a) throw TopologyError("unknown axiom '" + item + "'");
            out.push_back(*a);
        }
    }
    return out;
}

json space_json(const dsl::SpaceDoc& doc) {
    json j{{"name", doc.name}};
    if (doc.is_catalog()) {
        j["kind"] = "catalog";
        j["family"] = doc.catalog_name;
    } else {
        j["kind"] = "finite";
        j["points"] = doc.points;
    }
    return j;
}

struct Options {
    bool json_output = false;
    unsigned seed = 12345;
    int jobs = 1;
};

int cmd_classify(const Options& opt, const std::string& file,
                 const std::vector<std::string>& axiom_names, std::ostream& out) {
    const dsl::SpaceDoc doc = dsl::parse_space(read_file(file));
    std::vector<Axiom> axioms = parse_axiom_list(axiom_names);
    if (axioms.empty()) axioms.assign(all_axioms.begin(), all_axioms.end());

    json verdicts = json::array();
    std::ostringstream text;
    if (doc.is_catalog()) {
        const auto sp = catalog::DescribedSpace::by_name(doc.catalog_name);
        for (Axiom a : axioms) {
            const catalog::Verdict v = sp->classify(a);
            json jv{{"axiom", axiom_name(a)}};
            if (!v.supported()) {
                jv["value"] = "unsupported";
                text << axiom_name(a) << ": unsupported\n";
            } else {
                jv["value"] = v.is_true();
                jv["mode"] =
                    v.mode == catalog::Verdict::Mode::Documented ? "documented" : "computed";
                if (!v.note.empty()) jv["note"] = v.note;
                text << axiom_name(a) << ": " << (v.is_true() ? "true" : "false");
                if (v.mode == catalog::Verdict::Mode::Documented) text << " (documented)";
                text << "\n";
            }
            verdicts.push_back(jv);
        }
    } else {
        const FinSpace space = dsl::realize_finite(doc);
        const SpaceOps ops(space);
        for (Axiom a : axioms) {
            const bool value = classify(ops, a);
            verdicts.push_back(json{{"axiom", axiom_name(a)}, {"value", value}});
            text << axiom_name(a) << ": " << (value ? "true" : "false") << "\n";
        }
    }

    if (opt.json_output) {
        json j = base_report("classify");
        j["space"] = space_json(doc);
        j["verdicts"] = verdicts;
        out << j.dump(2) << "\n";
    } else {
        out << text.str();
    }
    return 0;
}

int cmd_op(const Options& opt, const std::string& file, const std::string& set_literal,
           const std::string& op_name, std::ostream& out) {
    const dsl::SpaceDoc doc = dsl::parse_space(read_file(file));
    if (doc.is_catalog())
        throw TopologyError("'op' needs a finite space document, not a catalog reference");
    const FinSpace space = dsl::realize_finite(doc);

    // Reuse the document set syntax for --set.
    const dsl::SpaceDoc probe = dsl::parse_space("points " + std::to_string(space.points()) +
                                                 "\nopen " + set_literal + "\n");
    const PointSet a = probe.sets.empty() ? PointSet::empty_set() : probe.sets.front();

    PointSet result;
    if (op_name == "closure") {
        result = space.closure(a);
    } else if (op_name == "delta") {
        result = delta_closure(space, a);
    } else if (op_name == "theta") {
        result = theta_closure(space, a);
    } else if (op_name == "theta-int") {
        result = theta_interior(space, a);
    } else if (op_name == "lambda") {
        result = lambda_closure(space, a);
    } else if (op_name == "zero") {
        result = apply(space, ClosureOperator::zero(), a);
    } else if (op_name == "urysohn") {
        result = apply(space, ClosureOperator::urysohn(), a);
    } else {
        throw TopologyError("unknown operator '" + op_name + "'");
    }

    if (opt.json_output) {
        json j = base_report("op");
        j["space"] = space_json(doc);
        j["op"] = op_name;
        j["input"] = a.elements();
        j["result"] = result.elements();
        out << j.dump(2) << "\n";
    } else {
        out << result.to_string() << "\n";
    }
    return 0;
}

int cmd_tkx(const Options& opt, const std::string& file, const std::string& kappa_arg,
            const std::string& xi_name, std::ostream& out) {
    const dsl::SpaceDoc doc = dsl::parse_space(read_file(file));
    if (doc.is_catalog())
        throw TopologyError("'tkx' needs a finite space document, not a catalog reference");
    const FinSpace space = dsl::realize_finite(doc);

    const auto xi = ClosureOperator::parse(xi_name);
    if (!xi) throw TopologyError("unknown operator '" + xi_name + "'");

    KappaBound kappa;
    if (kappa_arg == "all") {
        kappa = KappaBound::all();
    } else {
        try {
            kappa = KappaBound::at_most(std::stoi(kappa_arg));
        } catch (const std::exception&) {
            throw TopologyError("--kappa expects a natural number or 'all'");
        }
    }

    const bool value = t_kappa_xi(space, kappa, *xi);
    if (opt.json_output) {
        json j = base_report("tkx");
        j["space"] = space_json(doc);
        j["kappa"] = kappa_arg;
        j["xi"] = xi_name;
        j["value"] = value;
        out << j.dump(2) << "\n";
    } else {
        out << (value ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_enumerate(const Options& opt, int n, bool iso, bool count_only, std::ostream& out) {
    if (count_only && !iso) {
        const std::uint64_t count = count_topologies(n, opt.jobs);
        if (opt.json_output) {
            json j = base_report("enumerate");
            j["n"] = n;
            j["up_to_iso"] = false;
            j["count"] = count;
            out << j.dump(2) << "\n";
        } else {
            out << count << "\n";
        }
        return 0;
    }

    std::vector<std::string> encodings;
    enumerate_topologies(n, iso, [&](const FinSpace& s) { encodings.push_back(s.encoding()); },
                         opt.jobs);
    if (opt.json_output) {
        json j = base_report("enumerate");
        j["n"] = n;
        j["up_to_iso"] = iso;
        j["count"] = encodings.size();
        if (!count_only) j["spaces"] = encodings;
        out << j.dump(2) << "\n";
    } else if (count_only) {
        out << encodings.size() << "\n";
    } else {
        for (const std::string& e : encodings) out << e << "\n";
    }
    return 0;
}

int cmd_search(const Options& opt, const std::vector<std::string>& holds_names,
               const std::vector<std::string>& fails_names, int max_n, std::ostream& out) {
    SearchQuery q;
    q.holds = parse_axiom_list(holds_names);
    q.fails = parse_axiom_list(fails_names);
    q.max_n = max_n;
    const auto hit = search(q, opt.jobs);

    if (opt.json_output) {
        json j = base_report("search");
        json holds = json::array(), fails = json::array();
        for (Axiom a : q.holds) holds.push_back(axiom_name(a));
        for (Axiom a : q.fails) fails.push_back(axiom_name(a));
        j["query"] = json{{"holds", holds}, {"fails", fails}, {"max_n", q.max_n}};
        j["found"] = hit.has_value();
        if (hit) {
            json props = json::array();
            for (Axiom a : all_axioms)
                props.push_back(json{{"axiom", axiom_name(a)}, {"value", hit->properties[a]}});
            j["witness"] = json{{"encoding", hit->space.encoding()},
                                {"points", hit->space.points()},
                                {"properties", props}};
        }
        out << j.dump(2) << "\n";
    } else if (hit) {
        out << dsl::emit_space(dsl::doc_for_space(hit->space, "witness"));
        for (Axiom a : all_axioms)
            out << "# " << axiom_name(a) << ": " << (hit->properties[a] ? "true" : "false")
                << "\n";
    } else {
        out << "no witness up to n=" << max_n << "\n";
    }
    return 0;
}

int cmd_verify(const Options& opt, int max_n, std::ostream& out) {
    VerifyOptions vo;
    vo.max_n = max_n;
    vo.seed = opt.seed;
    vo.jobs = opt.jobs;
    const VerifyReport report = run_verification(vo);

    if (opt.json_output) {
        json j = base_report("verify");
        j["max_n"] = max_n;
        j["seed"] = opt.seed;
        j["substrate"] = json{{"counts", report.substrate.counts},
                              {"counts_match", report.substrate.counts_match},
                              {"duplicate_free", report.substrate.duplicate_free},
                              {"direct_generator_agrees",
                               report.substrate.direct_generator_agrees},
                              {"elapsed_ms", report.substrate.elapsed_ms}};
        json suites = json::array();
        for (const SuiteResult& s : report.suites)
            suites.push_back(json{{"id", s.id},
                                  {"title", s.title},
                                  {"passed", s.passed()},
                                  {"checks", s.checks},
                                  {"failures", s.failures}});
        j["suites"] = suites;
        j["failures"] = report.failure_count();
        out << j.dump(2) << "\n";
    } else {
        out << "substrate: counts";
        for (std::size_t n = 0; n < report.substrate.counts.size(); ++n)
            out << (n ? "," : " ") << report.substrate.counts[n];
        out << (report.substrate.passed() ? " ok" : " MISMATCH") << " ("
            << report.substrate.elapsed_ms << " ms total)\n";
        for (const SuiteResult& s : report.suites) {
            out << (s.passed() ? "[PASS] " : "[FAIL] ") << s.id << ": " << s.title << " ("
                << s.checks << " checks)\n";
            for (const std::string& f : s.failures) out << "       " << f << "\n";
        }
        const int failures = report.failure_count();
        out << report.suites.size() << " suites, " << failures << " failed\n";
    }
    return report.all_passed() ? 0 : 1;
}

int cmd_catalog_list(const Options& opt, std::ostream& out) {
    if (opt.json_output) {
        json j = base_report("catalog-list");
        json families = json::array();
        for (const auto& sp : catalog::all_families())
            families.push_back(json{{"name", sp.name()}, {"description", sp.description()}});
        j["families"] = families;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& sp : catalog::all_families())
            out << sp.name() << " - " << sp.description() << "\n";
    }
    return 0;
}

int cmd_catalog_check(const Options& opt, const std::string& name, std::ostream& out) {
    const FamilyCheckReport report = check_catalog_family(name, opt.seed, 200);
    if (opt.json_output) {
        json j = base_report("catalog-check");
        j["family"] = report.family;
        j["passed"] = report.all_passed();
        json sections = json::array();
        for (const SuiteResult& s : report.sections)
            sections.push_back(json{{"id", s.id},
                                    {"passed", s.passed()},
                                    {"checks", s.checks},
                                    {"failures", s.failures}});
        j["checks"] = sections;
        out << j.dump(2) << "\n";
    } else {
        for (const SuiteResult& s : report.sections) {
            out << (s.passed() ? "[PASS] " : "[FAIL] ") << report.family << " " << s.id << " ("
                << s.checks << " checks)\n";
            for (const std::string& f : s.failures) out << "       " << f << "\n";
        }
    }
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact workbench for finite topological spaces and separation axioms"};
    app.name("finitop");

    Options opt;
    app.add_flag("--json", opt.json_output, "emit a JSON report");
    app.add_option("--seed", opt.seed, "seed for randomized catalog sampling");
    app.add_option("--jobs", opt.jobs, "worker threads for enumeration sweeps")
        ->check(CLI::Range(1, 256));

    std::string file, set_literal, op_name, xi_name, kappa_arg = "all", family;
    std::vector<std::string> axiom_names, holds_names, fails_names;
    int n = 0, max_n = 4;
    bool iso = false, count_only = false;

    auto* classify_cmd = app.add_subcommand("classify", "decide separation axioms for a space");
    classify_cmd->add_option("file", file, "a .space document")->required();
    classify_cmd->add_option("--axiom", axiom_names, "axiom name (repeatable, comma-separable)");

    auto* op_cmd = app.add_subcommand("op", "apply a closure-type operator to a set");
    op_cmd->add_option("file", file, "a .space document")->required();
    op_cmd->add_option("--set", set_literal, "set literal like {0,2}")->required();
    op_cmd->add_option("--op", op_name, "closure|delta|theta|theta-int|lambda|zero|urysohn")
        ->required();

    auto* tkx_cmd =
        app.add_subcommand("tkx", "decide the compact-fixed-point classifier T_{kappa,xi}");
    tkx_cmd->add_option("file", file, "a .space document")->required();
    tkx_cmd->add_option("--kappa", kappa_arg, "a natural number or 'all'")->required();
    tkx_cmd->add_option("--xi", xi_name, "c|delta|theta|lambda|zero|urysohn|quasi")->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "enumerate topologies on n labeled points");
    enum_cmd->add_option("--n", n, "point count")->required();
    enum_cmd->add_flag("--iso", iso, "one representative per homeomorphism class");
    enum_cmd->add_flag("--count-only", count_only, "print only the count");

    auto* search_cmd = app.add_subcommand("search", "find a smallest counterexample space");
    search_cmd->add_option("--holds", holds_names, "axioms that must hold (comma-separable)");
    search_cmd->add_option("--fails", fails_names, "axioms that must fail (comma-separable)");
    search_cmd->add_option("--max-n", max_n, "search bound");

    auto* verify_cmd =
        app.add_subcommand("verify-paper", "run the full theorem ledger and exit nonzero on any "
                                           "failure");
    verify_cmd->add_option("--max-n", max_n, "exhaustive sweep bound")->check(CLI::Range(0, 5));

    auto* catalog_cmd = app.add_subcommand("catalog", "symbolic infinite example spaces");
    auto* catalog_list = catalog_cmd->add_subcommand("list", "list the catalog families");
    auto* catalog_check =
        catalog_cmd->add_subcommand("check", "run one family's rule-table self-checks");
    catalog_check->add_option("name", family, "catalog family name")->required();
    catalog_cmd->require_subcommand(1);

    app.require_subcommand(1);
    // Let --json/--seed/--jobs appear after the subcommand as well.
    for (CLI::App* sub : {classify_cmd, op_cmd, tkx_cmd, enum_cmd, search_cmd, verify_cmd,
                          catalog_cmd, catalog_list, catalog_check})
        sub->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("finitop");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(opt, file, axiom_names, out);
        if (op_cmd->parsed()) return cmd_op(opt, file, set_literal, op_name, out);
        if (tkx_cmd->parsed()) return cmd_tkx(opt, file, kappa_arg, xi_name, out);
        if (enum_cmd->parsed()) return cmd_enumerate(opt, n, iso, count_only, out);
        if (search_cmd->parsed()) return cmd_search(opt, holds_names, fails_names, max_n, out);
        if (verify_cmd->parsed()) return cmd_verify(opt, max_n, out);
        if (catalog_cmd->parsed()) {
            if (catalog_list->parsed()) return cmd_catalog_list(opt, out);
            if (catalog_check->parsed()) return cmd_catalog_check(opt, family, out);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const TopologyError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand given\n";
    return 2;
}

}  // namespace finitop::cli
