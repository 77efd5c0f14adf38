#include "mfcat/errors.hpp"
#include "mfcat/report.hpp"

#include <doctest.h>

#include <set>

using namespace mfcat;

TEST_CASE("product splitting") {
    CHECK(split_top_level_product("(x - y^2)*(x + y^2)").size() == 2);
    CHECK(split_top_level_product("(x)(y)(x-y)").size() == 3);
    CHECK(split_top_level_product("x^2 - y^3").size() == 1);
    CHECK(split_top_level_product("y*(x^2 - y^2)^2").size() == 3);
}

TEST_CASE("branches of cusp forms") {
    CurveInput t38 = curve_from_equation("(x - y^2)*(x^2 - y^6)");
    CHECK(t38.branch_count() == 3);
    CHECK(t38.condition_a());
    CurveInput t37 = curve_from_equation("(x - y^2)*(x^2 - y^5)");
    CHECK_FALSE(t37.condition_a());
    CurveInput t66 = curve_from_equation("(x^4 - y^2)*(x^2 - y^4)");
    CHECK(t66.branch_count() == 4);
    CHECK(t66.condition_a());
    CurveInput e7 = curve_from_equation("x^3 + x*y^3");
    CHECK(e7.branch_count() == 2);
    CHECK_FALSE(e7.condition_a());
}

TEST_CASE("analyze reports") {
    nlohmann::json r = analyze(curve_from_catalog(catalog("T44")));
    CHECK(r["schema"] == 1);
    CHECK(r["counts"]["cluster_tilting"]["value"] == 24);
    CHECK(r["counts"]["indec_rigid"]["provenance"] == "formula");
    nlohmann::json e7 = analyze(curve_from_equation("x*(x^2+y^3)"));
    CHECK(e7["verdict"] == "no cluster tilting object");
    CHECK(e7["geometry"]["milnor_number"]["value"] == 7);
    CHECK_THROWS_AS(curve_from_factors({"x", ""}), ParseError);
    AnalyzeOptions v;
    v.verify = true;
    nlohmann::json t36 = analyze(curve_from_catalog(catalog("T36")), v);
    CHECK(t36["counts"]["summands"]["provenance"] == "cross-checked");
    CHECK(analyze(curve_from_catalog(catalog("T44"))).dump() == r.dump());
}

TEST_CASE("ext tables") {
    ExtTable t = ext_table("E7", {}, "both");
    for (std::size_t a = 0; a < t.objects.size(); ++a)
        for (std::size_t b = 0; b < t.objects.size(); ++b) CHECK(t.agree[a][b]);
    ExtTable t36 = ext_table("T36", {}, "symbolic");
    CHECK(t36.symbolic.size() == 2);
    CHECK(t36.symbolic[0][1] == t36.symbolic[1][0]);
    CHECK_THROWS_AS(ext_table("E8", {}, "symbolic"), UsageError);
}

TEST_CASE("D4 exchange graph labels") {
    CatalogGraph g = catalog_mutation_graph("D_even_split", {});
    CHECK(g.graph.vertices.size() == 6);
    CHECK(g.graph.edges.size() == 6);
    std::set<std::string> labels(g.labels.begin(), g.labels.end());
    CHECK(labels == std::set<std::string>{"{A C-}", "{A C+}", "{D+ C-}", "{D+ B}", "{D- C+}", "{D- B}"});
}

TEST_CASE("golden hammocks") {
    SuiteResult r = run_suite("hammocks");
    for (const auto& c : r.checks) {
        INFO(c.name << ": expected " << c.expected << ", got " << c.got);
        CHECK(c.pass);
    }
}
