#include "mfcat/arquiver.hpp"
#include "mfcat/errors.hpp"
#include "mfcat/report.hpp"

#include <CLI11.hpp>

#include <future>
#include <iostream>
#include <optional>

using namespace mfcat;

namespace {

struct Common {
    std::optional<std::uint32_t> precision_max;
    std::string field;

    HomalgConfig config() const {
        HomalgConfig cfg = HomalgConfig::from_env();
        if (!field.empty()) cfg.field = FieldContext::parse(field);
        if (precision_max) cfg.precision_max = *precision_max;
        return cfg;
    }
};

struct CatalogArgs {
    int n = 0, p = 0, q = 0;
    std::string lambda;

    CatalogParams params() const {
        CatalogParams c;
        c.n = n;
        c.p = p;
        c.q = q;
        if (!lambda.empty()) c.lambda = parse_rational(lambda);
        return c;
    }
    void add(CLI::App* app) {
        app->add_option("--n", n, "catalog size parameter");
        app->add_option("--p", p, "catalog parameter p");
        app->add_option("--q", q, "catalog parameter q");
        app->add_option("--lambda", lambda, "catalog parameter lambda (rational)");
    }
};

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mfcat: matrix factorizations, cluster tilting and translation quivers"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--precision-max", common.precision_max, "precision ladder cap (overrides MF_PRECISION_MAX)");
    app.add_option("--field", common.field, "coefficient field: rational or gf:<prime> (overrides MF_FIELD)");

    // analyze
    auto* an = app.add_subcommand("analyze", "existence verdict, counts and geometry of a curve");
    std::string equation, cat_name;
    std::vector<std::string> factors;
    bool verify = false, json = false, compact = false;
    CatalogArgs an_cat;
    an->add_option("equation", equation, "curve equation, e.g. \"x*(x^2+y^3)\"");
    an->add_option("--factors", factors, "explicit factors f_1 ... f_n");
    an->add_option("--catalog", cat_name, "catalog name");
    an_cat.add(an);
    an->add_flag("--verify", verify, "confirm counts by enumeration");
    an->add_flag("--compact", compact, "accept compact notation such as x3+xy3");
    an->add_flag("--json", json, "JSON output");

    // mutation-graph
    auto* mg = app.add_subcommand("mutation-graph", "exchange graph of cluster tilting objects");
    std::size_t mg_n = 0;
    std::string mg_cat;
    CatalogArgs mg_params;
    bool dot = false, mg_json = false;
    mg->add_option("factors", mg_n, "number of factors");
    mg->add_option("--catalog", mg_cat, "catalog name");
    mg_params.add(mg);
    mg->add_flag("--dot", dot, "DOT output");
    mg->add_flag("--json", mg_json, "JSON output");

    // ext-table
    auto* et = app.add_subcommand("ext-table", "pairwise Ext^1 table of a catalog");
    std::string et_cat, engine = "symbolic";
    CatalogArgs et_params;
    bool et_json = false;
    et->add_option("--catalog", et_cat, "catalog name or curve quiver (A1..E8)")->required();
    et->add_option("--engine", engine, "symbolic, mesh or both")
        ->check(CLI::IsMember({"symbolic", "mesh", "both"}));
    et_params.add(et);
    et->add_flag("--json", et_json, "JSON output");

    // quiver
    auto* qu = app.add_subcommand("quiver", "stable AR quiver of an ADE curve");
    std::string qu_name;
    bool qu_dot = false, qu_json = false;
    qu->add_option("curve", qu_name, "A1..A9, D4..D8, E6, E7, E8")->required();
    qu->add_flag("--dot", qu_dot, "DOT output");
    qu->add_flag("--json", qu_json, "JSON output");

    // sweep
    auto* sw = app.add_subcommand("sweep", "CT existence over legal quotients of ZDelta");
    bool sw_json = false;
    sw->add_flag("--json", sw_json, "JSON output");

    // verify
    auto* ve = app.add_subcommand("verify", "run verification suites");
    std::string suite;
    bool ve_json = false;
    ve->add_option("suite", suite, "suite name or all")->required();
    ve->add_flag("--json", ve_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        HomalgConfig cfg = common.config();
        if (*an) {
            int sources = !equation.empty() + !factors.empty() + !cat_name.empty();
            if (sources != 1) throw UsageError("give exactly one of an equation, --factors or --catalog");
            CurveInput in;
            if (!cat_name.empty()) {
                in = curve_from_catalog(catalog(cat_name, an_cat.params()));
            } else if (!factors.empty()) {
                if (compact)
                    for (auto& f : factors) f = parse(f, ParseOptions{true}).str();
                in = curve_from_factors(factors);
            } else {
                if (compact) equation = parse(equation, ParseOptions{true}).str();
                in = curve_from_equation(equation);
            }
            nlohmann::json r = analyze(in, {verify, cfg});
            if (json)
                print_json(r);
            else
                std::cout << analyze_text(r);
        } else if (*mg) {
            MutationGraph g;
            std::vector<std::string> labels;
            if (!mg_cat.empty()) {
                CatalogGraph cg = catalog_mutation_graph(mg_cat, mg_params.params(), cfg);
                g = cg.graph;
                labels = cg.labels;
            } else {
                if (mg_n < 1) throw UsageError("give n >= 1 or --catalog");
                g = mutation_graph(mg_n);
                for (const auto& w : g.vertices) labels.push_back(permutation_label(w));
            }
            if (mg_json) {
                nlohmann::json j = g.to_json();
                j["labels"] = labels;
                print_json(j);
            } else if (dot) {
                std::cout << g.to_dot(labels);
            } else {
                std::cout << g.vertices.size() << " vertices, " << g.edges.size() << " edges\n";
                for (auto [a, b] : g.edges) std::cout << labels[a] << " -- " << labels[b] << "\n";
            }
        } else if (*et) {
            ExtTable t = ext_table(et_cat, et_params.params(), engine, cfg);
            if (et_json)
                print_json(t.to_json());
            else
                std::cout << t.str();
        } else if (*qu) {
            StableTranslationQuiver q = curve_quiver(qu_name);
            if (qu_json)
                print_json(q.to_json());
            else if (qu_dot)
                std::cout << q.to_dot();
            else
                std::cout << qu_name << ": " << q.size() << " vertices; " << quiver_counts(q).str() << "\n";
        } else if (*sw) {
            std::vector<SweepEntry> s = sweep_quotients();
            if (sw_json) {
                print_json(to_json(s));
            } else {
                for (const auto& e : s)
                    std::cout << (e.ok() ? "ok   " : "DIFF ") << "Z" << e.diagram << "/" << e.generator << "  "
                              << e.vertices << " vertices  CT " << (e.has_ct ? "yes" : "no") << "  rigid "
                              << (e.has_rigid ? "yes" : "no") << "\n";
            }
        } else if (*ve) {
            std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
            SuiteOptions opts;
            opts.cfg = cfg;
            std::vector<std::future<SuiteResult>> jobs;
            for (const auto& n : names) jobs.push_back(std::async(std::launch::async, run_suite, n, opts));
            std::vector<SuiteResult> results;
            for (auto& j : jobs) results.push_back(j.get());
            bool ok = true;
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : results) {
                ok = ok && r.pass();
                if (ve_json)
                    arr.push_back(r.to_json());
                else
                    std::cout << r.str();
            }
            if (ve_json) print_json(names.size() == 1 ? arr[0] : nlohmann::json{{"schema", 1}, {"pass", ok}, {"suites", arr}});
            return ok ? 0 : 3;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const InconsistencyError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 3;
    } catch (const PrecisionCapError& e) {
        std::cerr << "precision cap: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
