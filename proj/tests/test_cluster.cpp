#include "mfcat/cluster.hpp"
#include "mfcat/errors.hpp"

#include <doctest.h>

#include <set>

using namespace mfcat;

namespace {
Series P(const char* s) { return parse(s); }
FactorList F(std::vector<const char*> fs) {
    std::vector<Series> v;
    for (auto f : fs) v.push_back(P(f));
    return make_factor_list(v);
}
}  // namespace

TEST_CASE("condition (A)") {
    CHECK(has_cluster_tilting(F({"x - y^3", "x + y^3"})));
    CHECK_FALSE(has_cluster_tilting(F({"x", "x^2 + y^3"})));
    CHECK(has_cluster_tilting(F({"y", "y - x^2", "y - 2*x^2"})));
    CHECK_THROWS_AS(check_factor_list(F({"x", "2*x"})), UsageError);
}

TEST_CASE("stable counts") {
    CHECK(stable_counts(2) == StableCounts{2, 2, 1});
    CHECK(stable_counts(3) == StableCounts{6, 6, 2});
    CHECK(stable_counts(4) == StableCounts{14, 24, 3});
}

TEST_CASE("indecomposable rigid objects") {
    FactorList two = F({"x", "y"});
    CHECK(indec_rigid_objects(two, false).size() == 3);
    CHECK(indec_rigid_objects(two, true).size() == 2);
    CHECK(indec_rigid_objects(F({"x"}), true).empty());
    CHECK(indec_rigid_objects(catalog("linear_forms").factors, false, true).size() == 7);
}

TEST_CASE("cluster tilting objects") {
    Catalog c = catalog("linear_forms");
    std::vector<MF> s = cluster_tilting_summands(c.factors, {0, 1, 2});
    REQUIRE(s.size() == 3);
    CHECK(s[0] == mf_partial_product(c.factors, 1));
    CHECK(s[1] == mf_partial_product(c.factors, 2));
    FactorList a5 = F({"x - y^3", "x + y^3"});
    std::vector<MF> t = cluster_tilting_summands(a5, {1, 0});
    CHECK(t[0].A == Matrix::scalar(P("x + y^3"), 1));
    CHECK(is_rigid(t[0]));
}

TEST_CASE("mutation") {
    Catalog c = catalog("linear_forms");
    auto [w, data] = mutate(c.factors, {0, 1, 2}, 2);
    CHECK(w == Permutation{0, 2, 1});
    CHECK(verify_exchange(data).ok());
    CHECK(apply_transposition(w, 2) == Permutation{0, 1, 2});
    CatalogParams p;
    p.n = 2;
    Catalog two = catalog("linear_forms", p);
    CHECK(verify_exchange(almost_split_sequence(two.factors, {0, 1}, 1)).ok());
    CHECK(verify_exchange(end_sequence(c.factors, {0, 1, 2})).ok());
    auto [w2, d2] = mutate(two.factors, {0, 1}, 1);
    CHECK(w2 == Permutation{1, 0});
    d2.sequences.at(0).maps.at(0).mult.at(0).at(0) = P("1");
    CHECK_FALSE(verify_exchange(d2).ok());
}

TEST_CASE("mutation graphs") {
    MutationGraph g2 = mutation_graph(2);
    CHECK(g2.vertices.size() == 2);
    CHECK(g2.edges.size() == 1);
    MutationGraph g3 = mutation_graph(3);
    CHECK(g3.vertices.size() == 6);
    CHECK(g3.edges.size() == 6);
    for (std::size_t v = 0; v < 6; ++v) CHECK(g3.degree(v) == 2);
    CHECK(g3.is_connected());
    MutationGraph g4 = mutation_graph(4);
    CHECK(g4.vertices.size() == 24);
    CHECK(g4.edges.size() == 36);
    CHECK(g4.is_bipartite());
    CHECK(g3.to_dot() == mutation_graph(3).to_dot());
}

TEST_CASE("M_w distinct and covering") {
    MutationGraph g = mutation_graph(3);
    std::set<std::vector<std::vector<int>>> all;
    std::set<std::vector<int>> seen;
    for (const auto& w : g.vertices) {
        auto ss = summand_sets(w);
        for (auto& I : ss) std::sort(I.begin(), I.end());
        std::sort(ss.begin(), ss.end());
        all.insert(ss);
        seen.insert(ss.begin(), ss.end());
    }
    CHECK(all.size() == 6);
    CHECK(seen.size() == 7);
}

TEST_CASE("geometry") {
    CHECK(branch_count(F({"x", "x^2 + y^3"})) == 2);
    CHECK_FALSE(katz_check(F({"x", "x^2 + y^3"}), 2));
    CHECK(katz_check(catalog("T44").factors, 3));
    CHECK(katz_check(F({"x"}), 0));
    CHECK(cAm_type(P("x^2 + y^5")) == 1);
    CHECK(cAm_type(P("y*(x - y^2)*(x + y^2)")) == 2);
    CHECK(cAm_type(P("x*y*(x - y)*(x - 2*y)")) == 3);
    CHECK(milnor_number(P("x^3 + x*y^3")) == 7);
    CHECK(milnor_number(P("x + y^2")) == 0);
    CHECK(milnor_number(parse("x^2 + y^2 + z^5", {"x", "y", "z"})) == 4);
    CHECK(milnor_number(P("x^3 + y^5")) == 8);
    CHECK(irreducibility_heuristic(P("x - y^5")) == Irreducibility::certified);
    CHECK(irreducibility_heuristic(P("x^2 + y^3")) == Irreducibility::heuristic_yes);
    CHECK(irreducibility_heuristic(P("x^2 + y^4")) == Irreducibility::unknown);
}

TEST_CASE("verified counts") {
    VerifiedCounts v = verify_counts(catalog("T36").factors);
    CHECK(v.counts == StableCounts{6, 6, 2});
    CHECK(v.all_rigid);
    CHECK(v.chains_vanish);
}
