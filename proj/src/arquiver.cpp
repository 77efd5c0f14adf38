#include "mfcat/arquiver.hpp"

#include "mfcat/errors.hpp"
#include "mfcat/field.hpp"
#include "mfcat/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace mfcat {

DynkinDiagram DynkinDiagram::make(char type, int n) {
    DynkinDiagram d;
    d.type = type;
    d.n = n;
    if (type == 'A') {
        if (n < 1) throw UsageError("A_n needs n >= 1");
    } else if (type == 'D') {
        if (n < 4) throw UsageError("D_n needs n >= 4");
    } else if (type == 'E') {
        if (n < 6 || n > 8) throw UsageError("E_n needs n in {6,7,8}");
    } else {
        throw UsageError(std::string("unknown Dynkin type ") + type);
    }
    d.adj.assign(n, {});
    auto edge = [&](int a, int b) {
        d.adj[a].push_back(b);
        d.adj[b].push_back(a);
    };
    if (type == 'A') {
        for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
    } else if (type == 'D') {
        for (int i = 0; i + 1 < n - 2; ++i) edge(i, i + 1);
        edge(n - 3, n - 2);
        edge(n - 3, n - 1);
    } else {
        for (int i = 0; i + 1 < n - 1; ++i) edge(i, i + 1);
        edge(2, n - 1);
    }
    for (auto& a : d.adj) std::sort(a.begin(), a.end());
    d.par.assign(n, -1);
    std::queue<int> q;
    d.par[0] = 0;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : d.adj[v])
            if (d.par[u] < 0) {
                d.par[u] = 1 - d.par[v];
                q.push(u);
            }
    }
    return d;
}

int DynkinDiagram::coxeter() const {
    switch (type) {
        case 'A': return n + 1;
        case 'D': return 2 * n - 2;
        default: return n == 6 ? 12 : n == 7 ? 18 : 30;
    }
}

std::string DynkinDiagram::name() const { return std::string(1, type) + std::to_string(n); }

std::vector<int> DynkinDiagram::flip() const {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    if (type == 'A') std::reverse(p.begin(), p.end());
    if (type == 'D') std::swap(p[n - 2], p[n - 1]);
    if (type == 'E' && n == 6) {
        std::swap(p[0], p[4]);
        std::swap(p[1], p[3]);
    }
    return p;
}

std::vector<std::vector<int>> DynkinDiagram::automorphisms() const {
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> out{id};
    if (type == 'D' && n == 4) {
        std::vector<int> leaves{0, 2, 3}, img = leaves;
        while (std::next_permutation(img.begin(), img.end())) {
            std::vector<int> p = id;
            for (int k = 0; k < 3; ++k) p[leaves[k]] = img[k];
            out.push_back(p);
        }
        return out;
    }
    if (flip() != id) out.push_back(flip());
    return out;
}

CoverVertex AutElement::apply(const CoverVertex& v, int power) const {
    int i = v.i;
    if (power >= 0) {
        for (int k = 0; k < power; ++k) i = perm[i];
    } else {
        std::vector<int> inv(perm.size());
        for (std::size_t k = 0; k < perm.size(); ++k) inv[perm[k]] = static_cast<int>(k);
        for (int k = 0; k < -power; ++k) i = inv[i];
    }
    return {i, v.c - power * shift};
}

std::string perm_label(const DynkinDiagram& d, const std::vector<int>& sigma) {
    std::vector<int> id(d.n);
    std::iota(id.begin(), id.end(), 0);
    if (sigma.empty() || sigma == id) return "id";
    if (!(d.type == 'D' && d.n == 4)) return "flip";
    std::string out;
    std::vector<char> seen(d.n, 0);
    for (int s = 0; s < d.n; ++s) {
        if (seen[s] || sigma[s] == s) continue;
        out += "(";
        for (int v = s; !seen[v]; v = sigma[v]) {
            seen[v] = 1;
            out += (out.back() == '(' ? "" : " ") + std::to_string(v + 1);
        }
        out += ")";
    }
    return out;
}

AutElement tau_power(const DynkinDiagram& d, int k, const std::vector<int>& sigma) {
    AutElement g;
    g.shift = 2 * k;
    g.perm = sigma;
    if (g.perm.empty()) {
        g.perm.resize(d.n);
        std::iota(g.perm.begin(), g.perm.end(), 0);
    }
    g.label = "(" + std::to_string(k) + "," + perm_label(d, g.perm) + ")";
    return g;
}

AutElement gamma_power(const DynkinDiagram& d, int k) {
    if (d.type != 'A' || d.n % 2) throw UsageError("gamma exists only on A_n with n even");
    AutElement g;
    g.shift = k;
    g.perm.resize(d.n);
    std::iota(g.perm.begin(), g.perm.end(), 0);
    if (k % 2) g.perm = d.flip();
    g.label = "gamma^" + std::to_string(k);
    return g;
}

AutElement frobenius_F(const DynkinDiagram& d) {
    int n = d.n;
    switch (d.type) {
        case 'A':
            if (n % 2) return tau_power(d, (n + 3) / 2, d.flip());
            return gamma_power(d, n + 3);
        case 'D': return tau_power(d, n, n % 2 ? d.flip() : std::vector<int>{});
        default:
            if (n == 6) return tau_power(d, 7, d.flip());
            return tau_power(d, n == 7 ? 10 : 16);
    }
}

bool is_automorphism(const DynkinDiagram& d, const AutElement& g) {
    if (static_cast<int>(g.perm.size()) != d.n) return false;
    std::vector<char> seen(d.n, 0);
    for (int p : g.perm) {
        if (p < 0 || p >= d.n || seen[p]) return false;
        seen[p] = 1;
    }
    for (int i = 0; i < d.n; ++i) {
        if (((d.par[g.perm[i]] - d.par[i] + g.shift) % 2 + 2) % 2) return false;
        for (int j : d.adj[i])
            if (!std::binary_search(d.adj[g.perm[i]].begin(), d.adj[g.perm[i]].end(), g.perm[j])) return false;
    }
    return true;
}

bool is_weakly_admissible(const DynkinDiagram& d, const AutElement& g) {
    if (!is_automorphism(d, g)) return false;
    // Only powers with zero total shift can place x and g^j x in one slice.
    for (int j = 1; j <= 6; ++j) {
        if (j * g.shift != 0) continue;
        CoverVertex probe{0, 0};
        for (int i = 0; i < d.n; ++i) {
            CoverVertex x{i, d.par[i]}, y = g.apply(x, j);
            (void)probe;
            if (x == y) return false;
            for (int a : d.adj[x.i])
                if (std::binary_search(d.adj[y.i].begin(), d.adj[y.i].end(), a)) return false;
        }
    }
    return true;
}

namespace {

using QF = RationalField;
using Dense = std::vector<std::vector<Rational>>;  // rows x cols

struct Node {
    std::size_t dim = 0;
    std::map<int, Dense> in;  // arrow (j, c-1) -> (i, c), dim x dim_j
};

}  // namespace

Hammock hammock(const DynkinDiagram& d, const CoverVertex& x, int width) {
    if (x.i < 0 || x.i >= d.n || ((x.c - d.par[x.i]) % 2 + 2) % 2) throw UsageError("not a vertex of the cover");
    if (width < 0) width = 2 * d.coxeter();
    Hammock h;
    h.source = x;
    std::vector<std::map<int, Node>> slices(width + 1);
    slices[0][x.i].dim = 1;
    h.values[x] = 1;
    for (int t = 1; t <= width; ++t) {
        int c = x.c + t;
        for (int i = 0; i < d.n; ++i) {
            if (((c - d.par[i]) % 2 + 2) % 2) continue;
            std::vector<std::pair<int, std::size_t>> mids;  // (j, offset)
            std::size_t D = 0;
            for (int j : d.adj[i]) {
                auto it = slices[t - 1].find(j);
                if (it == slices[t - 1].end() || it->second.dim == 0) continue;
                mids.emplace_back(j, D);
                D += it->second.dim;
            }
            if (D == 0) continue;
            Echelon<QF> ech(QF{}, D);
            if (t >= 2) {
                auto it = slices[t - 2].find(i);
                if (it != slices[t - 2].end())
                    for (std::size_t b = 0; b < it->second.dim; ++b) {
                        SparseVec<QF> v;
                        for (const auto& [j, off] : mids) {
                            const Dense& m = slices[t - 1].at(j).in.at(i);
                            for (std::size_t r = 0; r < m.size(); ++r)
                                if (m[r][b] != 0) v.emplace_back(static_cast<std::uint32_t>(off + r), m[r][b]);
                        }
                        ech.insert(v);
                    }
            }
            std::vector<std::int64_t> coord(D, -1);
            std::size_t dim = 0;
            for (std::size_t col = 0; col < D; ++col)
                if (!ech.is_pivot(static_cast<std::uint32_t>(col))) coord[col] = static_cast<std::int64_t>(dim++);
            if (dim == 0) continue;
            Node node;
            node.dim = dim;
            for (const auto& [j, off] : mids) {
                std::size_t dj = slices[t - 1].at(j).dim;
                Dense m(dim, std::vector<Rational>(dj));
                for (std::size_t b = 0; b < dj; ++b) {
                    auto r = ech.reduce({{static_cast<std::uint32_t>(off + b), Rational(1)}}, true);
                    for (const auto& [col, val] : r) m[coord[col]][b] = val;
                }
                node.in[j] = std::move(m);
            }
            h.values[{i, c}] = dim;
            slices[t][i] = std::move(node);
        }
    }
    return h;
}

std::size_t mesh_hom_dim(const DynkinDiagram& d, const CoverVertex& x, const CoverVertex& y) {
    int width = 2 * d.coxeter();
    if (y.c < x.c) return 0;
    if (y.c - x.c > width) throw UsageError("target lies outside the hammock window");
    return hammock(d, x, width).at(y);
}

StableTranslationQuiver::StableTranslationQuiver(const DynkinDiagram& d, const AutElement& g) : d_(d), g_(g) {
    if (!is_weakly_admissible(d, g)) throw UsageError(g.label + " is not weakly admissible on " + d.name());
    if (g.shift <= 0) throw UsageError("quotient needs a positive translation part");
    for (int c = 0; c < g.shift; ++c)
        for (int i = 0; i < d.n; ++i)
            if (((c - d.par[i]) % 2 + 2) % 2 == 0) {
                index_[{i, c}] = reps_.size();
                reps_.push_back({i, c});
                names_.push_back("v" + std::to_string(i + 1) + "_" + std::to_string(c));
            }
    metadata = "Z" + d.name() + "/<" + g.label + ">";
}

CoverVertex StableTranslationQuiver::canonical(const CoverVertex& v) const {
    int j = v.c >= 0 ? v.c / g_.shift : -((-v.c + g_.shift - 1) / g_.shift);
    return g_.apply(v, j);
}

std::size_t StableTranslationQuiver::index(const CoverVertex& v) const { return index_.at(canonical(v)); }

void StableTranslationQuiver::set_name(const CoverVertex& v, const std::string& name) { names_[index(v)] = name; }

std::optional<std::size_t> StableTranslationQuiver::find(const std::string& name) const {
    for (std::size_t k = 0; k < names_.size(); ++k)
        if (names_[k] == name) return k;
    return std::nullopt;
}

std::size_t StableTranslationQuiver::tau(std::size_t v) const { return index({reps_[v].i, reps_[v].c - 2}); }

std::vector<std::pair<std::size_t, std::size_t>> StableTranslationQuiver::arrows() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t v = 0; v < reps_.size(); ++v)
        for (int j : d_.adj[reps_[v].i]) out.emplace_back(v, index({j, reps_[v].c + 1}));
    return out;
}

const std::vector<std::vector<std::size_t>>& StableTranslationQuiver::hom_table() const {
    if (!hom_.empty()) return hom_;
    hom_.assign(size(), std::vector<std::size_t>(size(), 0));
    for (std::size_t x = 0; x < size(); ++x) {
        Hammock h = hammock(d_, reps_[x]);
        for (const auto& [v, val] : h.values) hom_[x][index(v)] += val;
    }
    return hom_;
}

std::size_t StableTranslationQuiver::hom_dim(std::size_t x, std::size_t y) const { return hom_table()[x][y]; }

std::size_t StableTranslationQuiver::ext1_dim(std::size_t x, std::size_t y) const { return hom_dim(y, tau(x)); }

std::string StableTranslationQuiver::to_dot() const {
    std::ostringstream os;
    os << "digraph ar_quiver {\n  label=\"" << metadata << "\";\n";
    for (std::size_t v = 0; v < size(); ++v) os << "  v" << v << " [label=\"" << names_[v] << "\"];\n";
    for (auto [a, b] : arrows()) os << "  v" << a << " -> v" << b << ";\n";
    for (std::size_t v = 0; v < size(); ++v)
        if (tau(v) <= v) os << "  v" << v << " -> v" << tau(v) << " [style=dashed, arrowhead=none];\n";
    os << "}\n";
    return os.str();
}

nlohmann::json StableTranslationQuiver::to_json() const {
    nlohmann::json vs = nlohmann::json::array(), as = nlohmann::json::array();
    for (std::size_t v = 0; v < size(); ++v)
        vs.push_back({{"name", names_[v]}, {"cover", {reps_[v].i + 1, reps_[v].c}}, {"tau", names_[tau(v)]}});
    for (auto [a, b] : arrows()) as.push_back({names_[a], names_[b]});
    return {{"cover", metadata}, {"vertices", vs}, {"arrows", as}};
}

namespace {

void name_chain_pairs(StableTranslationQuiver& q, int rows) {
    // Rows 0..rows-1 of an A-type strip: A/B, then X_k/Y_k on odd rows, N_k/M_k on even rows.
    q.set_name({0, 0}, "A");
    q.set_name({0, 2}, "B");
    for (int r = 1; r < rows; ++r) {
        int k = (r + 1) / 2;
        std::string a = r % 2 ? "X" : "N", b = r % 2 ? "Y" : "M";
        q.set_name({r, r % 4}, a + "_" + std::to_string(k));
        q.set_name({r, (r + 2) % 4}, b + "_" + std::to_string(k));
    }
}

int parse_rank(const std::string& s) {
    try {
        std::size_t pos = 0;
        int n = std::stoi(s, &pos);
        if (pos != s.size()) throw UsageError("bad rank");
        return n;
    } catch (const std::logic_error&) {
        throw UsageError("bad curve name");
    }
}

}  // namespace

StableTranslationQuiver curve_quiver(const std::string& name) {
    if (name.size() < 2) throw UsageError("unknown curve: " + name);
    char t = name[0];
    int n = parse_rank(name.substr(1));
    if (t == 'A' && n >= 1 && n % 2 == 0) {
        auto d = DynkinDiagram::make('A', n);
        StableTranslationQuiver q(d, gamma_power(d, 1));
        for (int j = 1; j <= n / 2; ++j) q.set_name({2 * (j - 1), 0}, "I_" + std::to_string(j));
        return q;
    }
    if (t == 'A' && n == 1) {
        auto d = DynkinDiagram::make('A', 1);
        StableTranslationQuiver q(d, tau_power(d, 2));
        q.set_name({0, 0}, "N-");
        q.set_name({0, 2}, "N+");
        return q;
    }
    if (t == 'A' && n == 3) {
        auto d = DynkinDiagram::make('A', 3);
        StableTranslationQuiver q(d, tau_power(d, 1, d.flip()));
        q.set_name({1, 1}, "M_1");
        q.set_name({0, 0}, "N-");
        q.set_name({2, 0}, "N+");
        return q;
    }
    if (t == 'A' && n % 2) {
        int m = (n + 3) / 2, l = m - 2;
        auto d = DynkinDiagram::make('D', m);
        StableTranslationQuiver q(d, tau_power(d, 1, d.flip()));
        for (int i = 0; i < l; ++i) q.set_name({i, i % 2}, "M_" + std::to_string(i + 1));
        q.set_name({m - 2, l % 2}, "N-");
        q.set_name({m - 1, l % 2}, "N+");
        return q;
    }
    if (t == 'D' && n >= 5 && n % 2) {
        int N = 2 * n - 3, mid = n - 2;
        auto d = DynkinDiagram::make('A', N);
        StableTranslationQuiver q(d, tau_power(d, 1, d.flip()));
        name_chain_pairs(q, mid);
        q.set_name({mid, mid % 2}, "X_" + std::to_string((n - 1) / 2));
        return q;
    }
    if (t == 'D' && n >= 4) {
        auto d = DynkinDiagram::make('D', n);
        StableTranslationQuiver q(d, tau_power(d, 2));
        int l = n / 2 - 1;
        name_chain_pairs(q, n - 2);
        int c0 = (2 * l) % 4;
        q.set_name({n - 2, c0}, "C+");
        q.set_name({n - 1, c0}, "C-");
        q.set_name({n - 2, c0 + 2}, "D+");
        q.set_name({n - 1, c0 + 2}, "D-");
        return q;
    }
    if (t == 'E' && n == 6) {
        auto d = DynkinDiagram::make('E', 6);
        StableTranslationQuiver q(d, tau_power(d, 1, d.flip()));
        q.set_name({0, 0}, "N_1");
        q.set_name({2, 0}, "X");
        q.set_name({4, 0}, "M_1");
        q.set_name({1, 1}, "B");
        q.set_name({3, 1}, "A");
        q.set_name({5, 1}, "M_2");
        return q;
    }
    if (t == 'E' && n == 7) {
        auto d = DynkinDiagram::make('E', 7);
        StableTranslationQuiver q(d, tau_power(d, 2));
        const char* names[4][7] = {{"N_1", "", "Y_3", "", "N_2", "", ""},
                                   {"", "Y_1", "", "X_2", "", "A", "C"},
                                   {"M_1", "", "X_3", "", "M_2", "", ""},
                                   {"", "X_1", "", "Y_2", "", "B", "D"}};
        for (int c = 0; c < 4; ++c)
            for (int i = 0; i < 7; ++i)
                if (*names[c][i]) q.set_name({i, c}, names[c][i]);
        return q;
    }
    if (t == 'E' && n == 8) {
        auto d = DynkinDiagram::make('E', 8);
        StableTranslationQuiver q(d, tau_power(d, 2));
        const char* names[4][8] = {{"N_2", "", "Y_1", "", "C_1", "", "M_1", ""},
                                   {"", "D_2", "", "Y_2", "", "B_1", "", "B_2"},
                                   {"M_2", "", "X_1", "", "D_1", "", "N_1", ""},
                                   {"", "C_2", "", "X_2", "", "A_1", "", "A_2"}};
        for (int c = 0; c < 4; ++c)
            for (int i = 0; i < 8; ++i)
                if (*names[c][i]) q.set_name({i, c}, names[c][i]);
        return q;
    }
    throw UsageError("unknown curve: " + name);
}

std::vector<std::string> curve_names(int max_a, int max_d) {
    std::vector<std::string> out;
    for (int n = 1; n <= max_a; ++n) out.push_back("A" + std::to_string(n));
    for (int n = 4; n <= max_d; ++n) out.push_back("D" + std::to_string(n));
    for (const char* e : {"E6", "E7", "E8"}) out.push_back(e);
    return out;
}

std::string QuiverCounts::str() const {
    return std::to_string(rigid) + "," + std::to_string(cluster_tilting) + "," + std::to_string(maximal_rigid) + "," +
           std::to_string(summands);
}

RigidEnumeration enumerate_rigid(const StableTranslationQuiver& q) {
    q.hom_table();
    return enumerate_rigid(q.size(), [&](std::size_t a, std::size_t b) { return q.ext1_dim(a, b); });
}

QuiverCounts quiver_counts(const StableTranslationQuiver& q) {
    RigidEnumeration e = enumerate_rigid(q);
    return {e.rigid.size(), e.cluster_tilting.size(), e.maximal_rigid.size(), e.max_summands};
}

QuiverCounts expected_curve_counts(const std::string& name) {
    if (name.size() < 2) throw UsageError("unknown curve: " + name);
    char t = name[0];
    int n = parse_rank(name.substr(1));
    if (t == 'A') return n % 2 ? QuiverCounts{2, 2, 2, 1} : QuiverCounts{0, 0, 1, 0};
    if (t == 'D') return n % 2 ? QuiverCounts{2, 0, 2, 1} : QuiverCounts{6, 6, 6, 2};
    if (t == 'E' && n == 7) return {2, 0, 2, 1};
    if (t == 'E' && (n == 6 || n == 8)) return {0, 0, 1, 0};
    throw UsageError("unknown curve: " + name);
}

std::vector<AutElement> legal_generators(const DynkinDiagram& d) {
    std::vector<AutElement> out;
    int n = d.n;
    auto divisors = [](int m) {
        std::vector<int> v;
        for (int k = 1; k <= m; ++k)
            if (m % k == 0) v.push_back(k);
        return v;
    };
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    if (d.type == 'A' && n % 2) {
        int h = (n + 3) / 2;
        for (int k : divisors(h))
            if ((h / k) % 2) out.push_back(tau_power(d, k, d.flip()));
    } else if (d.type == 'A') {
        for (int k : divisors(n + 3)) out.push_back(gamma_power(d, k));
    } else if (d.type == 'D' && n % 2) {
        for (int k : divisors(n)) out.push_back(tau_power(d, k, d.flip()));
    } else if (d.type == 'D' && n == 4) {
        for (int k : divisors(4))
            for (const auto& s : d.automorphisms()) {
                std::vector<int> p = id;
                for (int r = 0; r < 4 / k; ++r)
                    for (int& v : p) v = s[v];
                if (p == id) out.push_back(tau_power(d, k, s));
            }
    } else if (d.type == 'D') {
        for (int k : divisors(n)) {
            out.push_back(tau_power(d, k));
            if ((n / k) % 2 == 0) out.push_back(tau_power(d, k, d.flip()));
        }
    } else if (n == 6) {
        out.push_back(tau_power(d, 1, d.flip()));
        out.push_back(tau_power(d, 7, d.flip()));
    } else {
        for (int k : n == 7 ? std::vector<int>{1, 2, 5, 10} : std::vector<int>{1, 2, 4, 8, 16})
            out.push_back(tau_power(d, k));
    }
    // F must lie in <g>, as an action on the cover.
    AutElement F = frobenius_F(d);
    for (const auto& g : out) {
        if (!is_weakly_admissible(d, g)) throw InconsistencyError(g.label + " is not weakly admissible");
        int m = F.shift / g.shift;
        if (F.shift % g.shift) throw InconsistencyError("F is not a power of " + g.label);
        for (int i = 0; i < n; ++i)
            if (!(g.apply({i, d.par[i]}, m) == F.apply({i, d.par[i]})))
                throw InconsistencyError("F is not a power of " + g.label);
    }
    return out;
}

namespace {

int translation_k(const DynkinDiagram& d, const AutElement& g) {
    return d.type == 'A' && d.n % 2 == 0 ? g.shift : g.shift / 2;
}

bool is_identity(const std::vector<int>& p) {
    for (std::size_t k = 0; k < p.size(); ++k)
        if (p[k] != static_cast<int>(k)) return false;
    return true;
}

}  // namespace

bool expected_has_ct(const DynkinDiagram& d, const AutElement& g) {
    int n = d.n, k = translation_k(d, g);
    bool id = is_identity(g.perm);
    switch (d.type) {
        case 'A':
            if (n % 2) return k == (n + 3) / 2 || (n % 3 == 0 && 6 * k == n + 3);
            return k == n + 3 || (n % 3 == 0 && 3 * k == n + 3);
        case 'D':
            if (n % 2) return true;
            if (n == 4) return !(k == 1 && id);
            return id == (k % 2 == 0);
        default:
            if (n == 6) return k == 7;
            if (n == 7) return k == 10;
            return k == 8 || k == 16;
    }
}

bool expected_no_rigid(const DynkinDiagram& d, const AutElement& g) {
    int n = d.n, k = translation_k(d, g);
    bool id = is_identity(g.perm);
    switch (d.type) {
        case 'A': return n % 2 == 0 && k == 1;
        case 'D': return n % 2 == 0 && k == 1 && id;
        default:
            if (n == 8) return k == 1 || k == 2;
            return k == 1;
    }
}

std::vector<DynkinDiagram> sweep_diagrams(int max_rank) {
    std::vector<DynkinDiagram> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back(DynkinDiagram::make('A', n));
    for (int n = 4; n <= max_rank; ++n) out.push_back(DynkinDiagram::make('D', n));
    for (int n = 6; n <= std::min(max_rank, 8); ++n) out.push_back(DynkinDiagram::make('E', n));
    return out;
}

std::vector<SweepEntry> sweep_quotients(int max_rank, std::size_t max_vertices) {
    std::vector<SweepEntry> out;
    for (const auto& d : sweep_diagrams(max_rank))
        for (const auto& g : legal_generators(d)) {
            std::size_t nv = static_cast<std::size_t>(g.shift) * d.n / 2;
            if (nv > max_vertices) continue;
            StableTranslationQuiver q(d, g);
            RigidEnumeration e = enumerate_rigid(q);
            SweepEntry s;
            s.diagram = d.name();
            s.generator = g.label;
            s.vertices = q.size();
            s.has_ct = !e.cluster_tilting.empty();
            s.has_rigid = !e.rigid.empty();
            s.expected_ct = expected_has_ct(d, g);
            s.expected_no_rigid = expected_no_rigid(d, g);
            out.push_back(s);
        }
    return out;
}

nlohmann::json to_json(const std::vector<SweepEntry>& sweep) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& s : sweep)
        rows.push_back({{"diagram", s.diagram},
                        {"g", s.generator},
                        {"vertices", s.vertices},
                        {"has_cluster_tilting", s.has_ct},
                        {"has_nonzero_rigid", s.has_rigid},
                        {"expected_cluster_tilting", s.expected_ct},
                        {"expected_no_rigid", s.expected_no_rigid},
                        {"ok", s.ok()}});
    return rows;
}

}  // namespace mfcat
