#include "mfcat/homalg.hpp"

#include <doctest.h>

using namespace mfcat;

namespace {
Series P(const char* s) { return parse(s); }
}  // namespace

TEST_CASE("E7 Ext values") {
    Catalog c = catalog("E7");
    const MF &A = c.entries[0], &C = c.entries[1], &M1 = c.entries[2];
    ExtReport aa = ext1_dim(A, A);
    CHECK(aa.dim == 0);
    CHECK(aa.stabilized);
    CHECK(ext1_dim(C, C).dim == 2);
    CHECK(ext1_dim(A, C).dim == 0);
    // The printed M1 pair gives 2; see the acceptance notes.
    CHECK(ext1_dim(M1, M1).dim == 2);
    CHECK(!is_rigid(C));
    CHECK(is_rigid(A));
}

TEST_CASE("T36 stable Hom") {
    Catalog c = catalog("T36");
    const MF &M = c.entries[0], &N = c.entries[1];
    CHECK(stable_hom_dim(M, N).dim == 2);
    CHECK(stable_hom_dim(M, M).dim == 4);
}

TEST_CASE("free modules vanish stably") {
    Catalog c = catalog("linear_forms");
    MF free = mf_partial_product(c.factors, 3);
    CHECK(stable_hom_dim(free, c.entries[0]).dim == 0);
    CHECK(is_rigid(free));
}

TEST_CASE("Hom is not stable") {
    FactorList fl = make_factor_list({P("x"), P("x - y")});
    MF s1 = mf_partial_product(fl, 1);
    CHECK(hom_space(s1, s1, 6).size() == 6);
    CHECK(hom_space(s1, s1, 8).size() == 8);
}

TEST_CASE("Hom contains the identity") {
    MF a = catalog("E7").entries[0];
    bool found = false;
    for (const auto& p : hom_space(a, a, 8)) found = found || (p.alpha == Matrix::identity(1, 2));
    CHECK(found);
    CHECK(is_morphism(a, a, identity_morphism(a)));
}

TEST_CASE("2-CY symmetry and AR duality") {
    for (const char* name : {"E7", "T36", "D_even_split"}) {
        Catalog c = catalog(name);
        for (const auto& m : c.entries)
            for (const auto& n : c.entries) {
                CHECK(ext1_dim(m, n).dim == ext1_dim(n, m).dim);
                CHECK(stable_hom_dim(m, n).dim == ext1_dim(n, shift(m)).dim);
            }
    }
}

TEST_CASE("S_I rigid for three lines") {
    Catalog c = catalog("linear_forms");
    for (std::vector<int> I : std::vector<std::vector<int>>{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}})
        CHECK(is_rigid(mf_subset(c.factors, I)));
}

TEST_CASE("prime field agrees") {
    HomalgConfig cfg;
    cfg.field = FieldContext::prime(32003);
    Catalog c = catalog("E7");
    CHECK(ext1_dim(c.entries[1], c.entries[1], cfg).dim == 2);
}
