#include "mfcat/arquiver.hpp"
#include "mfcat/errors.hpp"
#include "mfcat/report.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <cctype>
#include <numeric>
#include <sstream>

namespace mfcat {

std::size_t CurveInput::branch_count() const {
    std::size_t n = 0;
    for (const auto& b : branches) n += b.branches;
    return n;
}

bool CurveInput::condition_a() const {
    return !branches.empty() && std::all_of(branches.begin(), branches.end(), [](const BranchInfo& b) { return b.ord == 1; });
}

bool CurveInput::materialized() const {
    return std::all_of(branches.begin(), branches.end(), [](const BranchInfo& b) { return b.explicit_factor; });
}

std::vector<std::string> split_top_level_product(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty input", 0);
    int depth = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        char ch = s[k];
        if (ch == '(' || ch == '{') ++depth;
        if (ch == ')' || ch == '}') --depth;
        if (depth < 0) throw ParseError("unbalanced parenthesis", k);
        if (depth == 0 && k > 0 && (ch == '+' || ch == '-') && s[k - 1] != '^') return {s};
    }
    if (depth != 0) throw ParseError("unbalanced parenthesis", s.size());

    std::vector<std::string> pieces;
    std::string cur;
    depth = 0;
    auto flush = [&]() {
        if (!cur.empty()) pieces.push_back(cur);
        cur.clear();
    };
    for (std::size_t k = 0; k < s.size(); ++k) {
        char ch = s[k];
        if (depth == 0 && ch == '*') {
            flush();
            continue;
        }
        if (depth == 0 && ch == '(' && !cur.empty() && cur.back() != '^') flush();
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        cur += ch;
    }
    flush();

    std::vector<std::string> out;
    for (auto p : pieces) {
        unsigned power = 1;
        std::size_t caret = std::string::npos;
        int d = 0;
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (p[k] == '(') ++d;
            if (p[k] == ')') --d;
            if (d == 0 && p[k] == '^') caret = k;
        }
        if (caret != std::string::npos) {
            std::string e = p.substr(caret + 1);
            if (!e.empty() && e.front() == '{' && e.back() == '}') e = e.substr(1, e.size() - 2);
            bool digits = !e.empty() && std::all_of(e.begin(), e.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
            if (!digits) throw ParseError("exponent must be a natural number", caret + 1);
            power = static_cast<unsigned>(std::stoul(e));
            p = p.substr(0, caret);
        }
        if (p.size() >= 2 && p.front() == '(' && p.back() == ')') p = p.substr(1, p.size() - 2);
        for (unsigned k = 0; k < power; ++k) out.push_back(p);
    }
    return out;
}

namespace {

struct Binomial {
    unsigned a = 0, b = 0;
    Rational cx, cy;
};

std::optional<Binomial> as_binomial(const Series& s) {
    if (s.nvars() != 2 || s.terms().size() != 2) return std::nullopt;
    Binomial bi;
    for (const auto& [m, c] : s.terms()) {
        if (m.e[0] > 0 && m.e[1] == 0) {
            bi.a = m.e[0];
            bi.cx = c;
        } else if (m.e[1] > 0 && m.e[0] == 0) {
            bi.b = m.e[1];
            bi.cy = c;
        }
    }
    if (bi.a == 0 || bi.b == 0) return std::nullopt;
    return bi;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    mpz_class num = r.get_num(), den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return Rational(sn, sd);
}

Series xy_power(unsigned a, unsigned b, const Rational& c) {
    Monomial m;
    m.e[0] = static_cast<std::uint16_t>(a);
    m.e[1] = static_cast<std::uint16_t>(b);
    return Series::monomial(2, m, c);
}

void split_factor(const Series& s, std::vector<Series>& explicit_factors, std::vector<BranchInfo>& info) {
    Ord o = s.ord();
    if (!o.is_value()) throw UsageError("factor must be a nonzero polynomial");
    if (o.n == 0) return;  // unit
    for (int v = 0; v < 2; ++v) {
        Series var = xy_power(v == 0, v == 1, 1);
        if (auto q = exact_divide(s, var); q && s.terms().size() > 1) {
            split_factor(var, explicit_factors, info);
            split_factor(*q, explicit_factors, info);
            return;
        }
    }
    if (auto bi = as_binomial(s)) {
        unsigned g = std::gcd(bi->a, bi->b);
        Rational r = -bi->cy / bi->cx;  // s = cx (x^a - r y^b)
        if (g % 2 == 0) {
            if (auto d = rational_sqrt(r)) {
                Series p = xy_power(bi->a / 2, 0, bi->cx) - xy_power(0, bi->b / 2, bi->cx * *d);
                Series q = xy_power(bi->a / 2, 0, 1) + xy_power(0, bi->b / 2, *d);
                split_factor(p, explicit_factors, info);
                split_factor(q, explicit_factors, info);
                return;
            }
        }
        if (g >= 2) {
            BranchInfo b;
            b.factor = s.str();
            b.branches = g;
            b.ord = std::min(bi->a, bi->b) / g;
            b.status = "splits into " + std::to_string(g) + " branches over an extension field";
            b.explicit_factor = false;
            explicit_factors.push_back(s);
            info.push_back(b);
            return;
        }
    }
    BranchInfo b;
    b.factor = s.str();
    b.ord = o.n;
    Irreducibility st = o.n == 1 ? Irreducibility::certified : irreducibility_heuristic(s);
    b.status = st == Irreducibility::unknown ? to_string(Irreducibility::asserted) : to_string(st);
    explicit_factors.push_back(s);
    info.push_back(b);
}

CurveInput finish(const std::string& description, const std::vector<Series>& pieces) {
    CurveInput in;
    in.description = description;
    std::vector<Series> fs;
    for (const auto& p : pieces) split_factor(p, fs, in.branches);
    if (fs.empty()) throw UsageError("the equation is a unit");
    in.factors = make_factor_list(fs);
    for (std::size_t k = 0; k < in.branches.size(); ++k) {
        const std::string& st = in.branches[k].status;
        in.factors.status[k] = st == "certified"       ? Irreducibility::certified
                               : st == "heuristic-yes" ? Irreducibility::heuristic_yes
                                                       : Irreducibility::asserted;
    }
    check_factor_list(in.factors);
    in.f = in.factors.product();
    return in;
}

}  // namespace

CurveInput curve_from_equation(const std::string& text) {
    std::vector<Series> pieces;
    for (const auto& p : split_top_level_product(text)) pieces.push_back(parse(p));
    return finish(text, pieces);
}

CurveInput curve_from_factors(const std::vector<std::string>& factors) {
    std::vector<Series> pieces;
    std::string desc;
    for (const auto& f : factors) {
        if (f.find_first_not_of(" \t") == std::string::npos) throw ParseError("empty factor", 0);
        pieces.push_back(parse(f));
        desc += (desc.empty() ? "" : " * ") + std::string("(") + f + ")";
    }
    if (pieces.empty()) throw UsageError("no factors given");
    return finish(desc, pieces);
}

CurveInput curve_from_catalog(const Catalog& c) {
    if (!c.has_factors) throw UsageError("catalog " + c.name + " has no factor list");
    CurveInput in = finish("catalog " + c.name, c.factors.factors);
    for (std::size_t k = 0; k < in.branches.size() && k < c.factors.status.size(); ++k)
        if (c.factors.status[k] != Irreducibility::unknown && in.branches[k].ord > 1)
            in.branches[k].status = to_string(c.factors.status[k]);
    return in;
}

namespace {

// provenance is formula, verified, cross-checked or unverified; method says how.
nlohmann::json counted(std::size_t v, const std::string& provenance, const std::string& method) {
    return {{"value", v}, {"provenance", provenance}, {"method", method}};
}

}  // namespace

nlohmann::json analyze(const CurveInput& in, const AnalyzeOptions& opts) {
    nlohmann::json r;
    r["schema"] = 1;
    r["input"] = in.description;
    r["f"] = in.f.str();
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& b : in.branches)
        trace.push_back({{"factor", b.factor}, {"ord", b.ord}, {"branches", b.branches}, {"status", b.status}});
    std::size_t n = in.branch_count();
    bool ct = in.condition_a();
    r["criterion"] = {{"condition", "every branch has ord 1"}, {"holds", ct}, {"trace", trace}};
    r["verdict"] = ct ? "cluster tilting object exists" : "no cluster tilting object";
    if (ct) {
        StableCounts sc = stable_counts(n);
        nlohmann::json counts = {{"indec_rigid", counted(sc.indec_rigid, "formula", "2^n - 2")},
                                 {"cluster_tilting", counted(sc.cluster_tilting, "formula", "n!")},
                                 {"summands", counted(sc.summands, "formula", "n - 1")}};
        if (opts.verify) {
            if (!in.materialized()) {
                counts["verification"] = "unavailable: some branches are not rational factors";
            } else if (n > 4) {
                counts["verification"] = "unavailable: enumeration runs for n <= 4";
            } else {
                VerifiedCounts vc = verify_counts(in.factors, opts.cfg);
                bool agree = vc.counts == sc;
                std::string prov = agree ? "cross-checked" : "verified";
                const std::string method = "enumeration of S_I with exact Ext^1";
                counts["indec_rigid"] = counted(vc.counts.indec_rigid, prov, method);
                counts["cluster_tilting"] = counted(vc.counts.cluster_tilting, prov, method);
                counts["summands"] = counted(vc.counts.summands, prov, method);
                counts["agrees_with_formula"] = agree;
                counts["evidence"] = {{"objects", vc.subsets.size()},
                                      {"all_rigid", vc.all_rigid},
                                      {"nested_ext_vanish", vc.chains_vanish},
                                      {"formula", {sc.indec_rigid, sc.cluster_tilting, sc.summands}}};
            }
        }
        r["counts"] = counts;
    } else {
        r["counts"] = nullptr;
    }
    nlohmann::json geo;
    nlohmann::json branches = in.materialized() ? counted(n, "verified", "explicit factorization")
                                                : counted(n, "formula", "gcd of binomial exponents");
    geo["branch_count"] = branches;
    Ord o = in.f.ord();
    unsigned ordf = o.is_value() ? o.n : 0;
    if (ordf >= 2) {
        unsigned m = cAm_type(in.f);
        geo["cAm_type"] = counted(m, "formula", "ord(f) - 1 for f + zt");
        geo["katz_check"] = {{"value", n == m + 1}, {"provenance", "formula"}, {"method", "branches == m + 1"}};
    } else {
        geo["cAm_type"] = nullptr;
    }
    try {
        geo["milnor_number"] = counted(milnor_number(in.f), "verified", "dim S/(f_x, f_y) by elimination");
    } catch (const InconsistencyError&) {
        geo["milnor_number"] = {{"value", nullptr}, {"provenance", "unverified"}, {"method", "no stabilization; possibly non-isolated"}};
    }
    if (ct) {
        StableCounts sc = stable_counts(n);
        geo["resolution_numbers"] = {
            {"exceptional_curves_plus_one",
             {{"value", nullptr}, {"provenance", "unverified"}, {"method", "no resolution is computed"}}},
            {"branches", branches},
            {"nccr_simples", counted(n, "formula", "vertices of End(M_w); gl.dim unverified")},
            {"ct_summands_plus_one", counted(sc.summands + 1, "formula", "(n - 1) + 1")}};
    }
    r["geometry"] = geo;
    return r;
}

std::string analyze_text(const nlohmann::json& r) {
    std::ostringstream os;
    os << "input:    " << r["input"].get<std::string>() << "\n";
    os << "f:        " << r["f"].get<std::string>() << "\n";
    os << "factors:\n";
    for (const auto& t : r["criterion"]["trace"])
        os << "  " << t["factor"].get<std::string>() << "  ord " << t["ord"] << "  branches " << t["branches"] << "  ("
           << t["status"].get<std::string>() << ")\n";
    os << "verdict:  " << r["verdict"].get<std::string>() << "\n";
    if (!r["counts"].is_null()) {
        const auto& c = r["counts"];
        os << "counts:   indec rigid " << c["indec_rigid"]["value"] << ", cluster tilting " << c["cluster_tilting"]["value"]
           << ", summands " << c["summands"]["value"] << "  [" << c["indec_rigid"]["provenance"].get<std::string>()
           << "]\n";
        if (c.contains("verification")) os << "          " << c["verification"].get<std::string>() << "\n";
    }
    const auto& g = r["geometry"];
    os << "branches: " << g["branch_count"]["value"] << "\n";
    if (!g["cAm_type"].is_null())
        os << "cA_m:     m = " << g["cAm_type"]["value"] << ", katz " << (g["katz_check"]["value"].get<bool>() ? "yes" : "no")
           << "\n";
    if (g["milnor_number"]["value"].is_null())
        os << "milnor:   " << g["milnor_number"]["provenance"].get<std::string>() << "\n";
    else
        os << "milnor:   " << g["milnor_number"]["value"] << "\n";
    return os.str();
}

namespace {

bool is_curve_name(const std::string& s) {
    try {
        curve_quiver(s);
        return true;
    } catch (const UsageError&) {
        return false;
    }
}

std::string mesh_name(const std::string& catalog_name, const std::string& object) {
    if (catalog_name == "E7" && object == "M1") return "M_1";
    return object;
}

std::string table_str(const std::vector<std::string>& names, const std::vector<std::vector<long>>& t) {
    std::ostringstream os;
    std::size_t w = 4;
    for (const auto& n : names) w = std::max(w, n.size() + 1);
    os << std::string(w, ' ');
    for (const auto& n : names) os << std::string(w - n.size(), ' ') << n;
    os << "\n";
    for (std::size_t a = 0; a < names.size(); ++a) {
        os << names[a] << std::string(w - names[a].size(), ' ');
        for (std::size_t b = 0; b < names.size(); ++b) {
            std::string v = t[a][b] < 0 ? "-" : std::to_string(t[a][b]);
            os << std::string(w - v.size(), ' ') << v;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace

ExtTable ext_table(const std::string& name, const CatalogParams& params, const std::string& engine,
                   const HomalgConfig& cfg) {
    if (engine != "symbolic" && engine != "mesh" && engine != "both") throw UsageError("unknown engine: " + engine);
    ExtTable t;
    t.catalog = name;
    t.engine = engine;
    auto names = catalog_names();
    bool symbolic_ok = std::find(names.begin(), names.end(), name) != names.end();
    bool want_sym = engine != "mesh", want_mesh = engine != "symbolic";
    if (want_sym && !symbolic_ok) throw UsageError("no symbolic presentations in catalog " + name);
    std::string curve;
    if (symbolic_ok) {
        if (name == "E7") curve = "E7";
        if (name == "A_odd") curve = "A" + std::to_string(params.n ? params.n : 5);
    } else if (is_curve_name(name)) {
        curve = name;
    } else {
        throw UsageError("unknown catalog: " + name);
    }
    if (want_mesh && curve.empty()) throw UsageError("no mesh model for catalog " + name);

    std::vector<MF> objs;
    if (symbolic_ok) {
        Catalog c = catalog(name, params);
        objs = c.entries;
        for (const auto& m : objs) t.objects.push_back(m.name);
    } else {
        StableTranslationQuiver q = curve_quiver(curve);
        for (std::size_t v = 0; v < q.size(); ++v) t.objects.push_back(q.name(v));
    }
    std::size_t k = t.objects.size();
    t.symbolic.assign(k, std::vector<long>(k, -1));
    t.mesh.assign(k, std::vector<long>(k, -1));
    t.agree.assign(k, std::vector<bool>(k, true));
    if (want_sym) {
        auto m = ext_matrix(objs, cfg);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) t.symbolic[a][b] = static_cast<long>(m[a][b].dim);
    }
    if (want_mesh) {
        StableTranslationQuiver q = curve_quiver(curve);
        std::vector<std::size_t> idx;
        for (const auto& o : t.objects) {
            auto v = q.find(mesh_name(name, o));
            if (!v) throw InconsistencyError("object " + o + " has no vertex in the " + curve + " curve quiver");
            idx.push_back(*v);
        }
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) t.mesh[a][b] = static_cast<long>(q.ext1_dim(idx[a], idx[b]));
    }
    if (engine == "both")
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) t.agree[a][b] = t.symbolic[a][b] == t.mesh[a][b];
    return t;
}

nlohmann::json ExtTable::to_json() const {
    nlohmann::json j = {{"schema", 1}, {"catalog", catalog}, {"engine", engine}, {"objects", objects}};
    if (engine != "mesh") j["symbolic"] = symbolic;
    if (engine != "symbolic") j["mesh"] = mesh;
    if (engine == "both") {
        bool all = true;
        for (const auto& row : agree)
            for (bool b : row) all = all && b;
        j["agreement"] = agree;
        j["all_agree"] = all;
    }
    return j;
}

std::string ExtTable::str() const {
    std::ostringstream os;
    if (engine != "mesh") os << "Ext^1 (symbolic)\n" << table_str(objects, symbolic);
    if (engine != "symbolic") os << "Ext^1 (mesh)\n" << table_str(objects, mesh);
    if (engine == "both") {
        std::size_t bad = 0;
        for (const auto& row : agree)
            for (bool b : row) bad += !b;
        os << "agreement: " << (bad ? std::to_string(bad) + " entries differ" : std::string("all entries agree")) << "\n";
    }
    return os.str();
}

MeshLabels match_mesh_labels(const std::vector<MF>& entries, const StableTranslationQuiver& q,
                             const HomalgConfig& cfg) {
    std::size_t k = entries.size();
    std::vector<std::vector<std::size_t>> hom(k, std::vector<std::size_t>(k)), ext = hom;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            hom[a][b] = stable_hom_dim(entries[a], entries[b], cfg).dim;
            ext[a][b] = ext1_dim(entries[a], entries[b], cfg).dim;
        }
    MeshLabels out;
    std::vector<std::size_t> pick;
    std::vector<bool> used(q.size(), false);
    std::function<void()> rec = [&] {
        std::size_t a = pick.size();
        if (a == k) {
            if (out.matches++ == 0)
                for (std::size_t v : pick) out.labels.push_back(q.name(v));
            return;
        }
        for (std::size_t v = 0; v < q.size(); ++v) {
            if (used[v]) continue;
            bool ok = q.hom_dim(v, v) == hom[a][a] && q.ext1_dim(v, v) == ext[a][a];
            for (std::size_t b = 0; ok && b < a; ++b)
                ok = q.hom_dim(pick[b], v) == hom[b][a] && q.hom_dim(v, pick[b]) == hom[a][b] &&
                     q.ext1_dim(pick[b], v) == ext[b][a] && q.ext1_dim(v, pick[b]) == ext[a][b];
            if (!ok) continue;
            used[v] = true;
            pick.push_back(v);
            rec();
            pick.pop_back();
            used[v] = false;
        }
    };
    rec();
    return out;
}

CatalogGraph catalog_mutation_graph(const std::string& catalog_name, const CatalogParams& params,
                                    const HomalgConfig& cfg) {
    Catalog c = catalog(catalog_name, params);
    if (!c.has_factors) throw UsageError("catalog " + c.name + " has no factor list");
    if (!has_cluster_tilting(c.factors)) throw UsageError("condition (A) fails: no cluster tilting object");
    CatalogGraph g;
    g.graph = mutation_graph(c.factors.size());
    std::map<std::vector<int>, std::string> names;
    if (c.name == "D_even_split") {
        int n = params.n ? params.n : 4;
        MeshLabels m = match_mesh_labels(c.entries, curve_quiver("D" + std::to_string(n)), cfg);
        if (m.labels.empty()) throw InconsistencyError("no mesh labelling of the D_even_split catalog");
        std::vector<std::vector<int>> sets{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}};
        for (std::size_t i = 0; i < sets.size(); ++i) names[sets[i]] = m.labels[i];
    }
    for (const auto& w : g.graph.vertices) {
        std::string label;
        for (auto I : summand_sets(w)) {
            if (I.size() == c.factors.size()) continue;
            std::sort(I.begin(), I.end());
            std::string name;
            if (names.count(I)) {
                name = names.at(I);
            } else {
                name = "S_{";
                for (int i : I) name += std::to_string(i + 1);
                name += "}";
            }
            label += (label.empty() ? "" : " ") + name;
        }
        g.labels.push_back("{" + label + "}");
    }
    return g;
}

}  // namespace mfcat
