#include "mfcat/arquiver.hpp"

#include <doctest.h>

using namespace mfcat;

TEST_CASE("Dynkin data") {
    CHECK(DynkinDiagram::make('E', 7).coxeter() == 18);
    CHECK(DynkinDiagram::make('D', 4).automorphisms().size() == 6);
    CHECK(DynkinDiagram::make('A', 5).coxeter() == 6);
}

TEST_CASE("weak admissibility") {
    DynkinDiagram a3 = DynkinDiagram::make('A', 3);
    CHECK(is_weakly_admissible(a3, tau_power(a3, 1)));
    CHECK(is_weakly_admissible(a3, tau_power(a3, 1, a3.flip())));
    AutElement id;
    id.perm = {0, 1, 2};
    CHECK_FALSE(is_weakly_admissible(a3, id));
    DynkinDiagram e7 = DynkinDiagram::make('E', 7);
    CHECK(is_weakly_admissible(e7, tau_power(e7, 2)));
}

TEST_CASE("mesh Hom") {
    DynkinDiagram e7 = DynkinDiagram::make('E', 7);
    CoverVertex x{0, e7.par[0]};
    CHECK(mesh_hom_dim(e7, x, x) == 1);
    Hammock h = hammock(e7, {6, 1});
    std::size_t twos = 0;
    for (const auto& [v, d] : h.values) twos += d == 2;
    CHECK(twos > 0);
    DynkinDiagram a2 = DynkinDiagram::make('A', 2);
    for (const auto& [v, d] : hammock(a2, {0, a2.par[0]}).values) CHECK(d <= 1);
}

TEST_CASE("curve quivers") {
    StableTranslationQuiver e7 = curve_quiver("E7");
    CHECK(e7.size() == 14);
    CHECK(curve_quiver("E6").size() == 6);
    StableTranslationQuiver a3 = curve_quiver("A3");
    REQUIRE(a3.size() == 3);
    std::size_t m = *a3.find("M_1"), np = *a3.find("N+"), nm = *a3.find("N-");
    CHECK(a3.tau(m) == m);
    CHECK(a3.tau(np) == nm);
    std::size_t A = *e7.find("A"), C = *e7.find("C");
    CHECK(e7.ext1_dim(A, A) == 0);
    CHECK(e7.ext1_dim(C, C) == 2);
    CHECK(a3.ext1_dim(np, np) == 0);
    CHECK(a3.ext1_dim(np, nm) != 0);
}

TEST_CASE("rigid enumeration") {
    CHECK(quiver_counts(curve_quiver("E7")).str() == "2,0,2,1");
    CHECK(quiver_counts(curve_quiver("D4")).str() == "6,6,6,2");
    CHECK(quiver_counts(curve_quiver("A2")).str() == "0,0,1,0");
    for (const auto& name : curve_names()) CHECK(quiver_counts(curve_quiver(name)).str() == expected_curve_counts(name).str());
}

TEST_CASE("quotient sweep") {
    DynkinDiagram e8 = DynkinDiagram::make('E', 8);
    StableTranslationQuiver t2(e8, tau_power(e8, 2));
    CHECK(enumerate_rigid(t2).rigid.empty());
    StableTranslationQuiver t8(e8, tau_power(e8, 8));
    CHECK(!enumerate_rigid(t8).cluster_tilting.empty());
    std::size_t ok = 0, total = 0;
    for (const auto& e : sweep_quotients()) {
        ++total;
        ok += e.ok();
    }
    CHECK(total == 52);
    // Four table entries disagree with the computed quotients; see README.
    CHECK(ok == 48);
}
