#include "mfcat/cluster.hpp"

#include "mfcat/cliques.hpp"
#include "mfcat/errors.hpp"
#include "mfcat/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace mfcat {

bool has_cluster_tilting(const FactorList& factors) {
    for (const auto& g : factors.factors) {
        Ord o = g.ord();
        if (!o.is_value() || o.n != 1) return false;
    }
    return true;
}

StableCounts stable_counts(std::size_t n) {
    if (n == 0) throw UsageError("stable_counts needs n >= 1");
    std::size_t fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= k;
    return {(std::size_t(1) << n) - 2, fact, n - 1};
}

StableCounts stable_counts(const FactorList& factors) {
    if (!has_cluster_tilting(factors)) throw UsageError("condition (A) fails: some factor has ord >= 2");
    return stable_counts(factors.size());
}

void check_factor_list(const FactorList& factors) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
        Ord o = factors.factors[i].ord();
        if (!o.is_value() || o.n < 1) throw UsageError("factor " + factors.factors[i].str() + " must have ord >= 1");
        for (std::size_t j = 0; j < i; ++j)
            if (are_associates(factors.factors[i], factors.factors[j]))
                throw UsageError("factors " + factors.factors[j].str() + " and " + factors.factors[i].str() +
                                 " are associates (f is not reduced)");
    }
}

std::vector<MF> indec_rigid_objects(const FactorList& factors, bool stable, bool verify, const HomalgConfig& cfg) {
    if (!has_cluster_tilting(factors)) throw UsageError("condition (A) fails: some factor has ord >= 2");
    std::size_t n = factors.size();
    std::vector<MF> out;
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        if (stable && mask == (std::size_t(1) << n) - 1) continue;
        std::vector<int> I;
        for (std::size_t k = 0; k < n; ++k)
            if (mask >> k & 1) I.push_back(static_cast<int>(k));
        MF m = mf_subset(factors, I);
        if (verify && !is_rigid(m, cfg)) throw InconsistencyError(m.name + " is not rigid");
        out.push_back(m);
    }
    return out;
}

std::vector<std::vector<int>> summand_sets(const Permutation& w) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    for (int k : w) {
        cur.push_back(k);
        std::vector<int> s = cur;
        std::sort(s.begin(), s.end());
        out.push_back(s);
    }
    return out;
}

namespace {

void check_permutation(const Permutation& w, std::size_t n) {
    if (w.size() != n) throw UsageError("permutation has the wrong length");
    std::vector<char> seen(n, 0);
    for (int k : w) {
        if (k < 0 || std::size_t(k) >= n || seen[k]) throw UsageError("not a permutation");
        seen[k] = 1;
    }
}

}  // namespace

std::vector<MF> cluster_tilting_summands(const FactorList& factors, const Permutation& w) {
    if (!has_cluster_tilting(factors)) throw UsageError("condition (A) fails: some factor has ord >= 2");
    check_permutation(w, factors.size());
    std::vector<MF> out;
    for (const auto& s : summand_sets(w)) out.push_back(mf_subset(factors, s));
    return out;
}

MF cluster_tilting_object(const FactorList& factors, const Permutation& w) {
    MF m = direct_sum(cluster_tilting_summands(factors, w));
    m.name = "M_" + permutation_label(w);
    return m;
}

Permutation apply_transposition(const Permutation& w, std::size_t i) {
    if (i < 1 || i >= w.size()) throw UsageError("mutation index out of range");
    Permutation r = w;
    std::swap(r[i - 1], r[i]);
    return r;
}

namespace {

// Product g_a ... g_b (1-based, inclusive) of the reordered factors.
Series chain(const FactorList& fl, const Permutation& w, std::size_t a, std::size_t b) {
    Series p = Series::constant(fl.factors.empty() ? 2 : fl.factors[0].nvars(), 1);
    for (std::size_t k = a; k <= b; ++k) p = p * fl.factors.at(w.at(k - 1));
    return p;
}

bool is_unit_gen(const Series& g) { return g.max_degree() == 0 && !g.is_zero(); }

// Drops zero summands S/(unit) from a map's source or target lists.
CyclicMap make_map(std::vector<Series> src, std::vector<Series> dst, std::vector<std::vector<Series>> mult) {
    CyclicMap m;
    std::vector<std::size_t> keep_s, keep_t;
    for (std::size_t s = 0; s < src.size(); ++s)
        if (!is_unit_gen(src[s])) keep_s.push_back(s);
    for (std::size_t t = 0; t < dst.size(); ++t)
        if (!is_unit_gen(dst[t])) keep_t.push_back(t);
    for (std::size_t s : keep_s) m.source.push_back(src[s]);
    for (std::size_t t : keep_t) {
        m.target.push_back(dst[t]);
        std::vector<Series> row;
        for (std::size_t s : keep_s) row.push_back(mult[t][s]);
        m.mult.push_back(row);
    }
    return m;
}

std::string gen_name(const Series& g) { return "S/(" + g.str() + ")"; }

}  // namespace

std::pair<Permutation, ExchangeData> mutate(const FactorList& factors, const Permutation& w, std::size_t i) {
    std::size_t n = factors.size();
    check_permutation(w, n);
    Permutation w2 = apply_transposition(w, i);
    ExchangeData d;
    d.factors = factors;
    d.w = w;
    d.i = i;
    int nv = factors.factors[0].nvars();
    Series one = Series::constant(nv, 1), minus = Series::constant(nv, -1);
    Series Si = chain(factors, w, 1, i), Sip = chain(factors, w, 1, i + 1);
    Series Sim = i >= 2 ? chain(factors, w, 1, i - 1) : one;
    Series gi = factors.factors[w[i - 1]], gip = factors.factors[w[i]];
    Series Q = Sim * gip;

    ExchangeSequence s1;
    s1.label = "0 -> " + gen_name(Si) + " -> " + gen_name(Sip) + " + " + gen_name(Sim) + " -> " + gen_name(Q) + " -> 0";
    s1.maps.push_back(make_map({Si}, {Sip, Sim}, {{gip}, {minus}}));
    s1.maps.push_back(make_map({Sip, Sim}, {Q}, {{one, gip}}));

    ExchangeSequence s2;
    s2.label = "0 -> " + gen_name(Q) + " -> " + gen_name(Sip) + " + " + gen_name(Sim) + " -> " + gen_name(Si) + " -> 0";
    s2.maps.push_back(make_map({Q}, {Sip, Sim}, {{gi}, {one}}));
    s2.maps.push_back(make_map({Sip, Sim}, {Si}, {{minus, gi}}));
    // Right approximation of S_i by the other summands of M_w.
    for (std::size_t j = 1; j <= n; ++j) {
        if (j == i) continue;
        Series Sj = chain(factors, w, 1, j);
        Series mult = j < i ? chain(factors, w, j + 1, i) : one;
        s2.checks.push_back({gen_name(Sj) + " -> " + gen_name(Si), Sj, mult});
    }
    d.sequences = {s1, s2};
    return {w2, d};
}

ExchangeData almost_split_sequence(const FactorList& factors, const Permutation& w, std::size_t i) {
    auto [w2, d] = mutate(factors, w, i);
    int nv = factors.factors[0].nvars();
    Series one = Series::constant(nv, 1), minus = Series::constant(nv, -1);
    Series Si = chain(factors, w, 1, i), Sip = chain(factors, w, 1, i + 1);
    Series Sim = i >= 2 ? chain(factors, w, 1, i - 1) : one;
    Series gi = factors.factors[w[i - 1]], gip = factors.factors[w[i]];
    ExchangeSequence s;
    s.label = "2-almost split at " + gen_name(Si);
    s.maps.push_back(make_map({Si}, {Sip, Sim}, {{gip}, {minus}}));
    s.maps.push_back(make_map({Sip, Sim}, {Sip, Sim}, {{gi, gi * gip}, {one, gip}}));
    s.maps.push_back(make_map({Sip, Sim}, {Si}, {{minus, gi}}));
    s.checks = d.sequences[1].checks;
    for (int v = 0; v < nv; ++v)
        s.checks.push_back({"radical " + default_var_names(nv)[v] + " on " + gen_name(Si), Si, Series::variable(nv, v)});
    d.sequences = {s};
    return d;
}

Series choose_auxiliary_factor(const FactorList& factors, const Permutation& w) {
    int nv = factors.factors[0].nvars();
    const Series& fn = factors.factors[w.back()];
    Series x = Series::variable(nv, 0), y = Series::variable(nv, 1);
    std::vector<Series> cands{y, x};
    for (int k = 1; k <= 16; ++k) cands.push_back(x + y * Rational(k));
    auto linear = [&](const Series& s) {
        return std::pair<Rational, Rational>(s.coeff(x.terms().begin()->first), s.coeff(y.terms().begin()->first));
    };
    auto [a1, b1] = linear(fn);
    for (const auto& c : cands) {
        auto [a2, b2] = linear(c);
        if (a1 * b2 - a2 * b1 == 0) continue;
        bool coprime = true;
        for (const auto& g : factors.factors)
            if (exact_divide(g, c)) coprime = false;
        if (coprime) return c;
    }
    throw InconsistencyError("no auxiliary linear form found");
}

ExchangeData end_sequence(const FactorList& factors, const Permutation& w) {
    std::size_t n = factors.size();
    check_permutation(w, n);
    if (n < 2) throw UsageError("end sequence needs n >= 2");
    int nv = factors.factors[0].nvars();
    Series one = Series::constant(nv, 1);
    Series Sn = chain(factors, w, 1, n), Snm = chain(factors, w, 1, n - 1);
    Series gn = factors.factors[w[n - 1]], aux = choose_auxiliary_factor(factors, w);
    ExchangeData d;
    d.factors = factors;
    d.w = w;
    d.i = n;
    ExchangeSequence s;
    s.label = "0 -> " + gen_name(Snm) + " -> " + gen_name(Sn) + " + " + gen_name(Snm) + " -> " + gen_name(Sn) +
              " with f_{n+1} = " + aux.str();
    s.maps.push_back(make_map({Snm}, {Sn, Snm}, {{gn}, {-aux}}));
    s.maps.push_back(make_map({Sn, Snm}, {Sn}, {{aux, gn}}));
    for (std::size_t j = 1; j < n; ++j) {
        Series Sj = chain(factors, w, 1, j);
        s.checks.push_back({gen_name(Sj) + " -> " + gen_name(Sn), Sj, chain(factors, w, j + 1, n)});
    }
    for (int v = 0; v < nv; ++v)
        s.checks.push_back({"radical " + default_var_names(nv)[v] + " on " + gen_name(Sn), Sn, Series::variable(nv, v)});
    d.sequences = {s};
    return d;
}

MF cyclic_sum(const std::vector<Series>& gens, const Series& f) {
    MF m;
    m.f = f;
    m.A = Matrix(gens.size(), gens.size(), f.nvars());
    m.B = Matrix(gens.size(), gens.size(), f.nvars());
    for (std::size_t k = 0; k < gens.size(); ++k) {
        auto q = exact_divide(f, gens[k]);
        if (!q) throw InconsistencyError(gens[k].str() + " does not divide " + f.str());
        m.A(k, k) = gens[k];
        m.B(k, k) = *q;
        m.name += (k ? "+" : "") + gen_name(gens[k]);
    }
    return m;
}

MorphismPair cyclic_morphism(const CyclicMap& map, const Series& f) {
    int nv = f.nvars();
    MorphismPair p{Matrix(map.target.size(), map.source.size(), nv), Matrix(map.target.size(), map.source.size(), nv),
                   kExact};
    for (std::size_t t = 0; t < map.target.size(); ++t)
        for (std::size_t s = 0; s < map.source.size(); ++s) {
            p.alpha(t, s) = map.mult[t][s];
            auto q = exact_divide(map.mult[t][s] * map.source[s], map.target[t]);
            if (!q) throw InconsistencyError("multiplication map is not well defined");
            p.beta(t, s) = *q;
        }
    return p;
}

namespace {

constexpr std::uint32_t kFactorPrecision = 8;

bool in_ideal(const Series& a, const Series& g) { return a.is_zero() || exact_divide(a, g).has_value(); }

}  // namespace

ExchangeReport verify_exchange(const ExchangeData& data, const HomalgConfig& cfg) {
    ExchangeReport rep;
    Series f = data.factors.product();
    for (const auto& seq : data.sequences) {
        for (std::size_t k = 0; k < seq.maps.size(); ++k) {
            const auto& m = seq.maps[k];
            for (std::size_t t = 0; t < m.target.size(); ++t)
                for (std::size_t s = 0; s < m.source.size(); ++s)
                    if (!in_ideal(m.mult[t][s] * m.source[s], m.target[t])) {
                        rep.well_defined_ok = false;
                        rep.failures.push_back(seq.label + ": map " + std::to_string(k + 1) + " entry (" +
                                               std::to_string(t) + "," + std::to_string(s) + ") not well defined");
                    }
            if (k == 0) continue;
            const auto& prev = seq.maps[k - 1];
            for (std::size_t t = 0; t < m.target.size(); ++t)
                for (std::size_t s = 0; s < prev.source.size(); ++s) {
                    Series c(f.nvars());
                    for (std::size_t mid = 0; mid < m.source.size(); ++mid) c += m.mult[t][mid] * prev.mult[mid][s];
                    if (!in_ideal(c, m.target[t])) {
                        rep.compositions_ok = false;
                        rep.failures.push_back(seq.label + ": composition of maps " + std::to_string(k) + "," +
                                               std::to_string(k + 1) + " is " + c.str() + " at (" + std::to_string(t) +
                                               "," + std::to_string(s) + ")");
                    }
                }
        }
        if (seq.checks.empty() || !rep.well_defined_ok) continue;
        const CyclicMap& last = seq.maps.back();
        MF src = cyclic_sum(last.source, f), dst = cyclic_sum(last.target, f);
        MorphismPair a = cyclic_morphism(last, f);
        for (const auto& chk : seq.checks) {
            CyclicMap g;
            g.source = {chk.source};
            g.target = last.target;
            g.mult = {{chk.multiplier}};
            MF gsrc = cyclic_sum(g.source, f);
            MorphismPair gp = cyclic_morphism(g, f);
            if (!factors_through(src, dst, a, gsrc, gp, false, kFactorPrecision, cfg)) {
                rep.approximation_ok = false;
                rep.failures.push_back(seq.label + ": " + chk.label + " does not factor");
            }
        }
    }
    return rep;
}

std::string permutation_label(const Permutation& w) {
    std::string s;
    for (int k : w) s += std::to_string(k + 1);
    return s;
}

MutationGraph mutation_graph(std::size_t n) {
    if (n < 1 || n > 7) throw UsageError("mutation graph supports 1 <= n <= 7");
    MutationGraph g;
    Permutation w(n);
    std::iota(w.begin(), w.end(), 0);
    do g.vertices.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    std::map<Permutation, std::size_t> index;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) index[g.vertices[v]] = v;
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t u = index.at(apply_transposition(g.vertices[v], i));
            if (v < u) g.edges.emplace_back(v, u);
        }
    return g;
}

std::size_t MutationGraph::degree(std::size_t v) const {
    std::size_t d = 0;
    for (auto [a, b] : edges) d += (a == v) + (b == v);
    return d;
}

bool MutationGraph::is_connected() const {
    if (vertices.empty()) return true;
    std::vector<std::vector<std::size_t>> adj(vertices.size());
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(vertices.size(), 0);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
        std::size_t v = q.front();
        q.pop();
        for (std::size_t u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                q.push(u);
            }
    }
    return count == vertices.size();
}

bool MutationGraph::is_bipartite() const {
    auto sign = [](const Permutation& w) {
        int inv = 0;
        for (std::size_t a = 0; a < w.size(); ++a)
            for (std::size_t b = a + 1; b < w.size(); ++b) inv += w[a] > w[b];
        return inv % 2;
    };
    for (auto [a, b] : edges)
        if (sign(vertices[a]) == sign(vertices[b])) return false;
    return true;
}

std::string MutationGraph::to_dot(const std::vector<std::string>& labels) const {
    std::ostringstream os;
    os << "graph mutation {\n";
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        std::string lab = v < labels.size() ? labels[v] : "M_" + permutation_label(vertices[v]);
        os << "  v" << v << " [label=\"" << lab << "\"];\n";
    }
    for (auto [a, b] : edges) os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
    return os.str();
}

nlohmann::json MutationGraph::to_json() const {
    nlohmann::json vs = nlohmann::json::array(), es = nlohmann::json::array();
    for (const auto& w : vertices) vs.push_back(permutation_label(w));
    for (auto [a, b] : edges) es.push_back({a, b});
    return {{"vertices", vs}, {"edges", es}};
}

Irreducibility irreducibility_heuristic(const Series& f) {
    Ord o = f.ord();
    if (!o.is_value()) return Irreducibility::unknown;
    if (o.n == 1) return Irreducibility::certified;
    if (f.nvars() != 2) return Irreducibility::unknown;
    unsigned a = 0, b = 0;
    for (const auto& [m, c] : f.terms()) {
        if (m.e[1] == 0 && (a == 0 || m.e[0] < a)) a = m.e[0];
        if (m.e[0] == 0 && (b == 0 || m.e[1] < b)) b = m.e[1];
    }
    if (a == 0 || b == 0) return Irreducibility::unknown;
    for (const auto& [m, c] : f.terms())
        if (Rational(m.e[0], a) + Rational(m.e[1], b) < 1) return Irreducibility::unknown;
    return std::gcd(a, b) == 1 ? Irreducibility::heuristic_yes : Irreducibility::unknown;
}

std::size_t branch_count(const FactorList& factors) {
    for (std::size_t k = 0; k < factors.size(); ++k) {
        Irreducibility s = k < factors.status.size() ? factors.status[k] : irreducibility_heuristic(factors.factors[k]);
        if (s == Irreducibility::unknown)
            throw UsageError("irreducibility of " + factors.factors[k].str() + " is unresolved");
    }
    return factors.size();
}

bool katz_check(const FactorList& factors, std::size_t m) { return branch_count(factors) == m + 1; }

unsigned cAm_type(const Series& g) {
    Ord o = g.ord();
    if (!o.is_value() || o.n < 2) throw UsageError("cAm_type needs ord(g) >= 2");
    return o.n - 1;
}

std::size_t milnor_number(const Series& f) {
    int nv = f.nvars();
    std::vector<Series> jac;
    for (int v = 0; v < nv; ++v) jac.push_back(f.derivative(v).as_exact());
    std::size_t prev = SIZE_MAX;
    int agree = 0;
    for (std::uint32_t D = 1; D <= 40; ++D) {
        // Monomials of degree < D in graded order.
        std::vector<Monomial> monos;
        std::map<Monomial, std::uint32_t, GradedOrder> index;
        std::function<void(int, unsigned, Monomial)> gen = [&](int var, unsigned left, Monomial m) {
            if (var == nv - 1) {
                m.e[var] = static_cast<std::uint16_t>(left);
                monos.push_back(m);
                return;
            }
            for (unsigned k = left + 1; k-- > 0;) {
                m.e[var] = static_cast<std::uint16_t>(k);
                gen(var + 1, left - k, m);
            }
        };
        for (unsigned d = 0; d < D; ++d) gen(0, d, Monomial{});
        for (std::uint32_t k = 0; k < monos.size(); ++k) index[monos[k]] = k;
        Echelon<RationalField> ech(RationalField{}, monos.size());
        for (const auto& g : jac)
            for (const auto& mono : monos) {
                SparseVec<RationalField> row;
                for (const auto& [t, c] : g.terms()) {
                    Monomial w = t * mono;
                    if (w.degree() >= D) continue;
                    row.emplace_back(index.at(w), c);
                }
                std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                if (!row.empty()) ech.insert(row);
            }
        std::size_t dim = monos.size() - ech.rank();
        if (dim == prev) {
            if (++agree >= 2) return dim;
        } else {
            agree = 0;
        }
        prev = dim;
    }
    throw InconsistencyError("Milnor number did not stabilize by degree 40 (possibly non-isolated)");
}

VerifiedCounts verify_counts(const FactorList& factors, const HomalgConfig& cfg) {
    if (!has_cluster_tilting(factors)) throw UsageError("condition (A) fails: some factor has ord >= 2");
    std::size_t n = factors.size();
    VerifiedCounts vc;
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        std::vector<int> I;
        for (std::size_t k = 0; k < n; ++k)
            if (mask >> k & 1) I.push_back(static_cast<int>(k));
        vc.subsets.push_back(I);
    }
    std::stable_sort(vc.subsets.begin(), vc.subsets.end(),
                     [&](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<MF> objs;
    for (const auto& I : vc.subsets) objs.push_back(mf_subset(factors, I));
    std::size_t m = objs.size() - 1;  // stable universe excludes the free module
    vc.ext.assign(objs.size(), std::vector<std::size_t>(objs.size(), 0));
    for (std::size_t a = 0; a < objs.size(); ++a)
        for (std::size_t b = 0; b < objs.size(); ++b) vc.ext[a][b] = ext1_dim(objs[a], objs[b], cfg).dim;
    auto nested = [](const std::vector<int>& a, const std::vector<int>& b) {
        return std::includes(a.begin(), a.end(), b.begin(), b.end()) || std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    for (std::size_t a = 0; a < objs.size(); ++a) {
        if (vc.ext[a][a] != 0) vc.all_rigid = false;
        for (std::size_t b = 0; b < objs.size(); ++b)
            if (nested(vc.subsets[a], vc.subsets[b]) && vc.ext[a][b] != 0) vc.chains_vanish = false;
    }
    RigidEnumeration en = enumerate_rigid(m, [&](std::size_t a, std::size_t b) { return vc.ext[a][b]; });
    vc.counts.indec_rigid = en.rigid.size();
    vc.counts.cluster_tilting = en.cluster_tilting.size();
    vc.counts.summands = en.max_summands;
    return vc;
}

}  // namespace mfcat
