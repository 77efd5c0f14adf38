#include "mfcat/endoalg.hpp"

#include <doctest.h>

using namespace mfcat;

namespace {
Series P(const char* s) { return parse(s); }
Matrix one(const char* s) { return Matrix::scalar(P(s), 1); }
}  // namespace

TEST_CASE("A_n odd endomorphism algebras") {
    for (int n : {3, 5, 7}) {
        CatalogParams p;
        p.n = n;
        FiniteDimAlgebra alg = stable_endo_algebra({catalog("A_odd", p).entries[0]});
        CHECK(alg.dim() == static_cast<std::size_t>((n + 1) / 2));
        CHECK(alg.idempotents.size() == 1);
        Radical r = radical(alg);
        REQUIRE(r.arrows.size() == 1);
        CHECK(nilpotency_index(alg, r.arrows.begin()->second.at(0)) == static_cast<std::size_t>((n + 1) / 2));
        CHECK(alg.is_associative());
    }
}

TEST_CASE("free module gives the zero algebra") {
    Catalog c = catalog("linear_forms");
    CHECK(stable_endo_algebra({mf_partial_product(c.factors, 3)}).dim() == 0);
}

TEST_CASE("T36 relations") {
    Catalog c = catalog("T36");
    FiniteDimAlgebra alg = stable_endo_algebra({c.entries[0], c.entries[1]});
    AlgElement phi = alg.from_alpha(0, 0, one("x"));
    CHECK(is_zero(alg.mul(phi, alg.mul(phi, alg.mul(phi, phi)))));
    CHECK_FALSE(is_zero(alg.mul(phi, alg.mul(phi, phi))));
    GeneratorMap g{{"phi", phi},
                   {"psi", alg.from_alpha(1, 1, one("x"))},
                   {"alpha", alg.from_alpha(0, 1, one("y"))},
                   {"beta", alg.from_alpha(1, 0, one("1"))}};
    std::vector<std::string> a2{"psi*alpha - alpha*phi", "beta*psi - phi*beta", "phi^2 - beta*alpha",
                                "psi^2 - 2*alpha*beta"};
    // The direct assignment realizes the parameter 1/2; swapping the vertices gives 2.
    CHECK(match_presentation(alg, g, {"psi*alpha - alpha*phi", "beta*psi - phi*beta", "phi^2 - beta*alpha",
                                      "psi^2 - 1/2*alpha*beta"})
              .found);
    GeneratorMap swapped{{"phi", g["psi"]}, {"psi", g["phi"]}, {"alpha", g["beta"]}, {"beta", g["alpha"]}};
    PresentationMatch m = match_presentation(alg, {{"direct", g}, {"vertex swap", swapped}}, a2);
    CHECK(m.found);
    CHECK(m.dictionary == "vertex swap");
    auto zero = check_relations(alg, g, {"alpha*beta*alpha", "beta*alpha*beta", "phi^4", "psi^4"});
    for (const auto& r : zero) CHECK(r.status == QuiverPresentation::Status::verified_zero);
    CartanMatrix cm = cartan_matrix(alg);
    CHECK(cm.C.size() == 2);
    CHECK(cm.symmetric);
    CHECK(cm.nonsingular);
}

TEST_CASE("B11 rejects a wrong parameter") {
    Catalog c = catalog("T44");
    FiniteDimAlgebra alg = stable_endo_algebra({c.entries[0], c.entries[1], c.entries[2]});
    Radical rad = radical(alg);
    GeneratorMap g{{"alpha", rad.arrows.at({0, 1}).at(0)},
                   {"beta", rad.arrows.at({1, 0}).at(0)},
                   {"gamma", rad.arrows.at({1, 2}).at(0)},
                   {"delta", rad.arrows.at({2, 1}).at(0)}};
    auto rel = [](const std::string& l) {
        return std::vector<std::string>{"alpha*beta*alpha - delta*gamma*alpha",
                                        "alpha*beta*delta - " + l + "*delta*gamma*delta",
                                        "gamma*alpha*beta - " + l + "*gamma*delta*gamma",
                                        "beta*delta*gamma - beta*alpha*beta"};
    };
    CHECK(match_presentation(alg, g, rel("2")).found);
    CHECK_FALSE(match_presentation(alg, g, rel("1/2")).found);
    CHECK_FALSE(match_presentation(alg, g, rel("3")).found);
    CartanMatrix cm = cartan_matrix(alg);
    CHECK(cm.C.size() == 3);
    CHECK(cm.symmetric);
    CHECK(cm.nonsingular);
}

TEST_CASE("quivers") {
    Catalog lf = catalog("linear_forms");
    QuiverPresentation amb = chain_quiver(lf.factors, false);
    CHECK(amb.vertices.size() == 3);
    CHECK(amb.has_loop(2));
    CHECK_FALSE(amb.has_loop(0));
    QuiverPresentation st = quiver_of_endo(
        stable_endo_algebra({mf_partial_product(lf.factors, 1), mf_partial_product(lf.factors, 2)}));
    CHECK(st.vertices.size() == 2);
    CHECK(st.arrow_count(0, 1) == 1);
    CHECK(st.arrow_count(1, 0) == 1);
    CHECK_FALSE(st.has_loop(0));
    CHECK_FALSE(st.has_loop(1));
    FactorList fl = make_factor_list({P("x"), P("x + y^2")});
    CHECK_FALSE(spans_maximal_ideal(fl.factors[0], fl.factors[1]));
    CHECK(quiver_of_endo(stable_endo_algebra({mf_partial_product(fl, 1)})).has_loop(0));
    CHECK(chain_quiver(fl, true).has_loop(0));
}

TEST_CASE("Cartan of k[x]/(x^2)") {
    CatalogParams p;
    p.n = 3;
    CartanMatrix cm = cartan_matrix(stable_endo_algebra({catalog("A_odd", p).entries[0]}));
    CHECK(cm.C == std::vector<std::vector<std::size_t>>{{2}});
    CHECK(cm.symmetric);
    CHECK(cm.nonsingular);
}

TEST_CASE("D4 split algebra") {
    Catalog c = catalog("D_even_split");
    FiniteDimAlgebra alg = stable_endo_algebra({c.entries[0], c.entries[3]});
    CHECK(alg.dim() == 6);
    Radical rad = radical(alg);
    GeneratorMap g{{"alpha", rad.arrows.at({0, 1}).at(0)}, {"beta", rad.arrows.at({1, 0}).at(0)}};
    auto rs = check_relations(alg, g, {"alpha*beta*alpha", "beta*alpha*beta", "alpha*beta"});
    CHECK(rs[0].status == QuiverPresentation::Status::verified_zero);
    CHECK(rs[1].status == QuiverPresentation::Status::verified_zero);
    CHECK(rs[2].status == QuiverPresentation::Status::failed);
}
