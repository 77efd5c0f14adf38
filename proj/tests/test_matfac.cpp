#include "mfcat/errors.hpp"
#include "mfcat/homalg.hpp"
#include "mfcat/matfac.hpp"

#include <doctest.h>

using namespace mfcat;

namespace {
Series P(const char* s) { return parse(s); }
Matrix one(const char* s) { return Matrix::scalar(P(s), 1); }
MF mf(const char* f, const char* a, const char* b) {
    MF m;
    m.f = P(f);
    m.A = one(a);
    m.B = one(b);
    return m;
}
}  // namespace

TEST_CASE("validate") {
    CHECK(validate(mf("x*y", "x", "y")).ok);
    CHECK_FALSE(validate(mf("x*y", "x", "x")).ok);
    CHECK_THROWS_AS(require_valid(mf("x*y", "x", "x")), InconsistencyError);
}

TEST_CASE("partial products") {
    FactorList a5 = make_factor_list({P("x - y^3"), P("x + y^3")});
    MF s1 = mf_partial_product(a5, 1);
    CHECK(s1.A == one("x - y^3"));
    CHECK(s1.B == one("x + y^3"));
    MF s2 = mf_partial_product(a5, 2);
    CHECK(s2.B == one("1"));
    FactorList t36 = make_factor_list({P("y"), P("y - x^2"), P("y - 2*x^2")});
    MF n = mf_partial_product(t36, 2);
    CHECK(n.A == one("y^2 - x^2*y"));
    CHECK(n.B == one("y - 2*x^2"));
}

TEST_CASE("shift") {
    MF m = mf("x^2 - y^6", "x - y^3", "x + y^3");
    MF s = shift(m);
    CHECK(s.A == one("x + y^3"));
    CHECK(shift(s) == m);
    for (const auto& name : catalog_names())
        for (const auto& e : catalog(name).entries) CHECK(shift(shift(e)) == e);
}

TEST_CASE("direct sum and reduce") {
    MF m = mf("x*y", "x", "y");
    MF zero = mf("x*y", "1", "x*y");
    MF sum = direct_sum(zero, m);
    CHECK(sum.rank() == 2);
    ReduceResult r = reduce(sum);
    CHECK(r.mf == m);
    CHECK(r.zero_summands == 1);
    ReduceResult fr = reduce(mf("x*y", "x*y", "1"));
    CHECK(fr.mf.rank() == 0);
    CHECK(fr.free_summands == 1);
    MF c = catalog("E7").entries[1];
    CHECK(reduce(c).mf == c);
}

TEST_CASE("M_w for the identity") {
    Catalog c = catalog("linear_forms");
    std::vector<MF> parts;
    for (std::size_t i = 1; i <= 3; ++i) parts.push_back(mf_partial_product(c.factors, i));
    MF m = direct_sum(parts);
    CHECK(m.rank() == 3);
    CHECK(validate(m).ok);
}

TEST_CASE("Knoerrer lifts") {
    FactorList one_factor = make_factor_list({P("x")});
    MF l = knoerrer_lift(one_factor, {0}, 1);
    CHECK(l.nvars() == 4);
    CHECK(validate(l).ok);
    FactorList a5 = make_factor_list({P("x - y^3"), P("x + y^3")});
    MF l1 = knoerrer_lift(a5, {0, 1}, 1);
    CHECK(validate(l1).ok);
    CHECK(l1.rank() == 2);
    CHECK(reduce(knoerrer_lift(a5, {0, 1}, 2)).free_summands >= 1);
}

TEST_CASE("catalogs") {
    Catalog e7 = catalog("E7");
    REQUIRE(e7.entries.size() == 3);
    CHECK(e7.entries[0].name == "A");
    CHECK(e7.entries[2].name == "M1");
    CHECK(e7.f == P("x^3 + x*y^3"));
    CatalogParams p;
    p.lambda = 2;
    Catalog t36 = catalog("T36", p);
    CHECK(t36.entries[0].A == one("y - x^2"));
    CHECK(t36.entries[0].B == one("y^2 - 2*x^2*y"));
    CHECK(t36.entries[1].A == one("y^2 - x^2*y"));
    Catalog lf = catalog("linear_forms");
    CHECK(lf.f == P("x*(x - y)*(x - 2*y)"));
    for (const auto& name : catalog_names())
        for (const auto& e : catalog(name).entries) CHECK(validate(e).ok);
    CHECK_THROWS_AS(catalog("E9"), UsageError);
}

TEST_CASE("json round trip") {
    for (const auto& e : catalog("E7").entries) CHECK(mf_from_json(to_json(e)) == e);
}

TEST_CASE("isomorphism") {
    Catalog lf = catalog("linear_forms");
    std::vector<std::vector<int>> sets{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
    std::vector<MF> s;
    for (const auto& I : sets) s.push_back(mf_subset(lf.factors, I));
    std::size_t distinct = 0;
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b) distinct += !is_isomorphic(s[a], s[b]);
    CHECK(distinct == 21);
    CHECK(is_isomorphic(s[0], shift(shift(s[0]))));
}
