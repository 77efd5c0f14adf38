#include "mfcat/endoalg.hpp"

#include "mfcat/errors.hpp"
#include "mfcat/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace mfcat {

AlgElement operator+(const AlgElement& a, const AlgElement& b) {
    AlgElement r = a;
    for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
    return r;
}

AlgElement operator-(const AlgElement& a, const AlgElement& b) {
    AlgElement r = a;
    for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
    return r;
}

AlgElement operator*(const Rational& c, const AlgElement& a) {
    AlgElement r = a;
    for (auto& v : r) v *= c;
    return r;
}

bool is_zero(const AlgElement& a) {
    return std::all_of(a.begin(), a.end(), [](const Rational& v) { return v == 0; });
}

AlgElement FiniteDimAlgebra::unit() const {
    AlgElement u = zero();
    for (const auto& e : idempotents) u = u + e;
    return u;
}

AlgElement FiniteDimAlgebra::basis_vector(std::size_t k) const {
    AlgElement v = zero();
    v.at(k) = 1;
    return v;
}

AlgElement FiniteDimAlgebra::mul(const AlgElement& a, const AlgElement& b) const {
    AlgElement r = zero();
    for (std::size_t i = 0; i < dim(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (b[j] == 0) continue;
            const AlgElement& t = table_[i][j];
            if (t.empty()) continue;
            Rational c = a[i] * b[j];
            for (std::size_t k = 0; k < dim(); ++k)
                if (t[k] != 0) r[k] += c * t[k];
        }
    }
    return r;
}

AlgElement FiniteDimAlgebra::from_alpha(std::size_t src, std::size_t tgt, const Matrix& alpha) const {
    AlgElement r = zero();
    auto it = homs_.find({src, tgt});
    if (it == homs_.end() || !it->second || it->second->dim() == 0) return r;
    auto c = it->second->coordinates(alpha);
    std::size_t off = offset_.at({src, tgt});
    for (std::size_t k = 0; k < c.size(); ++k) r[off + k] = c[k];
    return r;
}

bool FiniteDimAlgebra::is_associative() const {
    for (std::size_t a = 0; a < dim(); ++a)
        for (std::size_t b = 0; b < dim(); ++b)
            for (std::size_t c = 0; c < dim(); ++c) {
                AlgElement ea = basis_vector(a), eb = basis_vector(b), ec = basis_vector(c);
                if (mul(mul(ea, eb), ec) != mul(ea, mul(eb, ec))) return false;
            }
    return true;
}

std::optional<std::pair<std::size_t, std::size_t>> FiniteDimAlgebra::block_of(const AlgElement& a) const {
    std::optional<std::pair<std::size_t, std::size_t>> blk;
    for (std::size_t k = 0; k < dim(); ++k) {
        if (a[k] == 0) continue;
        std::pair<std::size_t, std::size_t> b{basis[k].src, basis[k].tgt};
        if (blk && *blk != b) return std::nullopt;
        blk = b;
    }
    return blk;
}

nlohmann::json FiniteDimAlgebra::to_json() const {
    nlohmann::json bs = nlohmann::json::array(), sc = nlohmann::json::array();
    for (const auto& b : basis)
        bs.push_back({{"label", b.label}, {"source", vertices[b.src]}, {"target", vertices[b.tgt]},
                      {"alpha", b.alpha.str()}});
    for (std::size_t a = 0; a < dim(); ++a)
        for (std::size_t b = 0; b < dim(); ++b) {
            if (table_[a][b].empty()) continue;
            for (std::size_t k = 0; k < dim(); ++k)
                if (table_[a][b][k] != 0) sc.push_back({a, b, k, table_[a][b][k].get_str()});
        }
    return {{"vertices", vertices}, {"dim", dim()}, {"basis", bs}, {"structure_constants", sc}};
}

FiniteDimAlgebra stable_endo_algebra(const std::vector<MF>& summands, const HomalgConfig& cfg) {
    FiniteDimAlgebra alg;
    std::vector<MF> objs;
    for (const auto& m : summands) {
        MF r = reduce(m).mf;
        if (r.rank() == 0) continue;
        r.name = m.name;
        objs.push_back(r);
        alg.vertices.push_back(m.name.empty() ? "V" + std::to_string(objs.size()) : m.name);
    }
    std::size_t nv = objs.size();
    std::uint32_t prec = 0;
    for (std::size_t s = 0; s < nv; ++s)
        for (std::size_t t = 0; t < nv; ++t) {
            ExtReport r = stable_hom_dim(objs[s], objs[t], cfg);
            if (!r.ladder.empty()) prec = std::max(prec, r.ladder.back().first);
        }
    for (std::size_t s = 0; s < nv; ++s)
        for (std::size_t t = 0; t < nv; ++t) {
            auto h = std::make_shared<StableHomBasis>(objs[s], objs[t], cfg, prec);
            alg.offset_[{s, t}] = alg.basis.size();
            for (std::size_t k = 0; k < h->dim(); ++k)
                alg.basis.push_back({s, t, h->basis()[k],
                                     alg.vertices[s] + "->" + alg.vertices[t] + "#" + std::to_string(k + 1)});
            alg.homs_[{s, t}] = std::move(h);
        }
    std::size_t d = alg.dim();
    alg.table_.assign(d, std::vector<AlgElement>(d));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            const auto& ea = alg.basis[a];
            const auto& eb = alg.basis[b];
            if (eb.tgt != ea.src) continue;
            Matrix prod = ea.alpha * eb.alpha;
            alg.table_[a][b] = alg.from_alpha(eb.src, ea.tgt, prod);
        }
    for (std::size_t v = 0; v < nv; ++v) {
        AlgElement e = alg.from_alpha(v, v, Matrix::identity(objs[v].rank(), objs[v].nvars()));
        if (is_zero(e)) throw InconsistencyError("identity of " + alg.vertices[v] + " is stably zero");
        alg.idempotents.push_back(e);
    }
    if (d <= 30 && !alg.is_associative()) throw InconsistencyError("structure constants are not associative");
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < nv; ++j) {
            AlgElement p = alg.mul(alg.idempotents[i], alg.idempotents[j]);
            if (p != (i == j ? alg.idempotents[i] : alg.zero()))
                throw InconsistencyError("idempotents are not orthogonal");
        }
    for (std::size_t k = 0; k < d; ++k)
        if (alg.mul(alg.unit(), alg.basis_vector(k)) != alg.basis_vector(k) ||
            alg.mul(alg.basis_vector(k), alg.unit()) != alg.basis_vector(k))
            throw InconsistencyError("idempotents do not sum to the unit");
    return alg;
}

std::size_t nilpotency_index(const FiniteDimAlgebra& alg, const AlgElement& a) {
    AlgElement p = a;
    for (std::size_t k = 1; k <= alg.dim() + 1; ++k) {
        if (is_zero(p)) return k;
        p = alg.mul(p, a);
    }
    throw InconsistencyError("element is not nilpotent");
}

namespace {

using QF = RationalField;

SparseVec<QF> sparse(const AlgElement& a) {
    SparseVec<QF> v;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != 0) v.emplace_back(static_cast<std::uint32_t>(k), a[k]);
    return v;
}

// Keeps the elements that enlarge the span, in order.
std::vector<AlgElement> independent(const std::vector<AlgElement>& elems, std::size_t d,
                                    Echelon<QF>* seed = nullptr) {
    Echelon<QF> ech(QF{}, d);
    if (seed) ech = *seed;
    std::vector<AlgElement> out;
    for (const auto& e : elems)
        if (ech.insert(sparse(e))) out.push_back(e);
    return out;
}

}  // namespace

Radical radical(const FiniteDimAlgebra& alg) {
    Radical R;
    std::size_t d = alg.dim();
    std::map<std::pair<std::size_t, std::size_t>, std::vector<AlgElement>> blocks;
    for (std::size_t k = 0; k < d; ++k) {
        const auto& b = alg.basis[k];
        if (b.src != b.tgt) blocks[{b.src, b.tgt}].push_back(alg.basis_vector(k));
    }
    // Diagonal blocks: kernel of the normalized trace of alpha(0).
    for (std::size_t v = 0; v < alg.vertices.size(); ++v) {
        std::vector<std::pair<std::size_t, Rational>> tr;
        for (std::size_t k = 0; k < d; ++k) {
            const auto& b = alg.basis[k];
            if (b.src != v || b.tgt != v) continue;
            Rational t = 0;
            for (std::size_t i = 0; i < b.alpha.rows(); ++i) t += b.alpha(i, i).coeff(Monomial{});
            tr.emplace_back(k, t);
        }
        auto pivot = std::find_if(tr.begin(), tr.end(), [](const auto& p) { return p.second != 0; });
        for (const auto& [k, t] : tr) {
            if (pivot != tr.end() && k == pivot->first) continue;
            AlgElement e = alg.basis_vector(k);
            if (pivot != tr.end() && t != 0) e = e - (t / pivot->second) * alg.basis_vector(pivot->first);
            blocks[{v, v}].push_back(e);
        }
    }
    for (const auto& [blk, es] : blocks)
        for (const auto& e : es) R.rad.push_back(e);
    // Powers of the radical, block by block.
    auto power_step = [&](const std::map<std::pair<std::size_t, std::size_t>, std::vector<AlgElement>>& cur) {
        std::map<std::pair<std::size_t, std::size_t>, std::vector<AlgElement>> prods, next;
        for (const auto& [b1, e1s] : blocks)
            for (const auto& [b2, e2s] : cur) {
                if (b2.second != b1.first) continue;
                for (const auto& e1 : e1s)
                    for (const auto& e2 : e2s) {
                        AlgElement p = alg.mul(e1, e2);
                        if (!is_zero(p)) prods[{b2.first, b1.second}].push_back(p);
                    }
            }
        for (const auto& [blk, ps] : prods) next[blk] = independent(ps, d);
        return next;
    };
    auto cur = blocks;
    auto sq = power_step(blocks);
    for (const auto& [blk, es] : sq)
        for (const auto& e : es) R.rad2.push_back(e);
    for (const auto& [blk, es] : blocks) {
        Echelon<QF> ech(QF{}, d);
        auto it = sq.find(blk);
        if (it != sq.end())
            for (const auto& e : it->second) ech.insert(sparse(e));
        auto arrows = independent(es, d, &ech);
        if (!arrows.empty()) R.arrows[blk] = arrows;
    }
    std::size_t length = 1;
    for (; length <= d + 1; ++length) {
        bool empty = true;
        for (const auto& [blk, es] : cur)
            if (!es.empty()) empty = false;
        if (empty) break;
        cur = power_step(cur);
    }
    if (length > d + 1) throw InconsistencyError("radical is not nilpotent");
    R.loewy_length = length;
    return R;
}

std::string CartanMatrix::str() const {
    std::ostringstream os;
    for (const auto& row : C) {
        os << "[";
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
        os << "]\n";
    }
    return os.str();
}

CartanMatrix cartan_matrix(const FiniteDimAlgebra& alg) {
    CartanMatrix cm;
    std::size_t n = alg.vertices.size();
    cm.C.assign(n, std::vector<std::size_t>(n, 0));
    for (const auto& b : alg.basis) ++cm.C[b.tgt][b.src];
    cm.symmetric = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (cm.C[i][j] != cm.C[j][i]) cm.symmetric = false;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(static_cast<long>(cm.C[i][j]));
    cm.nonsingular = n == 0 || dense_det(QF{}, m) != 0;
    return cm;
}

std::size_t QuiverPresentation::arrow_count(std::size_t from, std::size_t to) const {
    for (const auto& a : arrows)
        if (a.from == from && a.to == to) return a.multiplicity;
    return 0;
}

std::string QuiverPresentation::to_dot() const {
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (std::size_t v = 0; v < vertices.size(); ++v) os << "  v" << v << " [label=\"" << vertices[v] << "\"];\n";
    for (const auto& a : arrows)
        for (std::size_t k = 0; k < a.multiplicity; ++k) os << "  v" << a.from << " -> v" << a.to << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_string(QuiverPresentation::Status s) {
    switch (s) {
        case QuiverPresentation::Status::verified_zero: return "verified-zero";
        case QuiverPresentation::Status::verified_equal: return "verified-equal";
        case QuiverPresentation::Status::failed: return "failed";
    }
    return "failed";
}

nlohmann::json QuiverPresentation::to_json() const {
    nlohmann::json as = nlohmann::json::array(), rs = nlohmann::json::array();
    for (const auto& a : arrows) as.push_back({{"from", vertices[a.from]}, {"to", vertices[a.to]}, {"multiplicity", a.multiplicity}});
    for (const auto& r : relations) rs.push_back({{"relation", r.relation}, {"status", to_string(r.status)}});
    return {{"vertices", vertices}, {"arrows", as}, {"relations", rs}};
}

QuiverPresentation quiver_of_endo(const FiniteDimAlgebra& alg) {
    QuiverPresentation q;
    q.vertices = alg.vertices;
    Radical R = radical(alg);
    for (const auto& [blk, es] : R.arrows) q.arrows.push_back({blk.first, blk.second, es.size()});
    return q;
}

bool spans_maximal_ideal(const Series& a, const Series& b) {
    int nv = a.nvars();
    for (const Series* s : {&a, &b}) {
        Ord o = s->ord();
        if (!o.is_value() || o.n == 0) throw UsageError("factors must lie in the maximal ideal");
    }
    std::vector<std::vector<Rational>> lin(2, std::vector<Rational>(nv));
    for (int v = 0; v < nv; ++v) {
        Monomial m{};
        m.e[v] = 1;
        lin[0][v] = a.coeff(m);
        lin[1][v] = b.coeff(m);
    }
    return dense_rank(QF{}, lin) == static_cast<std::size_t>(nv);
}

QuiverPresentation chain_quiver(const FactorList& factors, bool stable) {
    QuiverPresentation q;
    std::size_t n = factors.size();
    std::size_t nv = stable ? n - 1 : n;
    for (std::size_t i = 0; i < nv; ++i) q.vertices.push_back("S_" + std::to_string(i + 1));
    for (std::size_t i = 0; i < nv; ++i) {
        bool loop = i + 1 < n ? !spans_maximal_ideal(factors.factors[i], factors.factors[i + 1]) : true;
        if (loop) q.arrows.push_back({i, i, 1});
        if (i + 1 < nv) {
            q.arrows.push_back({i, i + 1, 1});
            q.arrows.push_back({i + 1, i, 1});
        }
    }
    std::sort(q.arrows.begin(), q.arrows.end(),
              [](const auto& a, const auto& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
    return q;
}

namespace {

struct Word {
    Rational coef = 1;
    std::vector<std::pair<std::string, unsigned>> factors;
};

struct ParsedRelation {
    std::vector<Word> lhs, rhs;
    bool has_rhs = false;
};

class RelationParser {
public:
    explicit RelationParser(const std::string& s) : s_(s) {}

    ParsedRelation parse() {
        ParsedRelation r;
        r.lhs = expr();
        skip();
        if (pos_ < s_.size() && s_[pos_] == '=') {
            ++pos_;
            r.has_rhs = true;
            r.rhs = expr();
        }
        skip();
        if (pos_ != s_.size()) throw ParseError("unexpected character in relation", pos_);
        return r;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    long number() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected a number", pos_);
        return std::stol(s_.substr(start, pos_ - start));
    }

    std::vector<Word> expr() {
        std::vector<Word> out;
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        while (true) {
            Word w = term();
            if (neg) w.coef = -w.coef;
            out.push_back(w);
            if (eat('+')) neg = false;
            else if (eat('-')) neg = true;
            else break;
        }
        return out;
    }

    Word term() {
        Word w;
        skip();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            Rational c(number());
            if (eat('/')) c /= Rational(number());
            w.coef = c;
            if (!eat('*')) return w;
        }
        while (true) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            if (start == pos_) throw ParseError("expected a generator name", pos_);
            std::string name = s_.substr(start, pos_ - start);
            unsigned e = 1;
            if (eat('^')) e = static_cast<unsigned>(number());
            w.factors.emplace_back(name, e);
            if (!eat('*')) break;
        }
        return w;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

AlgElement eval_word(const FiniteDimAlgebra& alg, const GeneratorMap& gens, const Word& w) {
    AlgElement r = alg.unit();
    for (const auto& [name, e] : w.factors) {
        auto it = gens.find(name);
        if (it == gens.end()) throw UsageError("generator " + name + " not in algebra");
        for (unsigned k = 0; k < e; ++k) r = alg.mul(r, it->second);
    }
    return w.coef * r;
}

AlgElement eval_sum(const FiniteDimAlgebra& alg, const GeneratorMap& gens, const std::vector<Word>& ws) {
    AlgElement r = alg.zero();
    for (const auto& w : ws) r = r + eval_word(alg, gens, w);
    return r;
}

}  // namespace

std::vector<QuiverPresentation::RelationResult> check_relations(const FiniteDimAlgebra& alg, const GeneratorMap& gens,
                                                               const std::vector<std::string>& relations) {
    std::vector<QuiverPresentation::RelationResult> out;
    for (const auto& rel : relations) {
        ParsedRelation p = RelationParser(rel).parse();
        AlgElement l = eval_sum(alg, gens, p.lhs);
        QuiverPresentation::RelationResult r{rel, QuiverPresentation::Status::failed};
        if (p.has_rhs) {
            AlgElement rr = eval_sum(alg, gens, p.rhs);
            if (l == rr) r.status = is_zero(l) ? QuiverPresentation::Status::verified_zero
                                               : QuiverPresentation::Status::verified_equal;
        } else if (is_zero(l)) {
            r.status = QuiverPresentation::Status::verified_zero;
        }
        out.push_back(r);
    }
    return out;
}

PresentationMatch match_presentation(const FiniteDimAlgebra& alg, const GeneratorMap& gens,
                                     const std::vector<std::string>& relations,
                                     const std::vector<Rational>& candidates) {
    std::vector<Rational> cands = candidates;
    if (cands.empty())
        cands = {Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2),
                 Rational(-1, 2), Rational(3), Rational(-3), Rational(1, 3), Rational(-1, 3)};
    // Each relation is a list of (coefficient, word value, word factors); rescaling
    // multiplies a word by the product of its generators' scales.
    struct Term {
        Rational coef;
        AlgElement value;
        std::map<std::string, unsigned> degree;
    };
    std::vector<std::vector<Term>> rels;
    std::set<std::string> used;
    for (const auto& rel : relations) {
        ParsedRelation p = RelationParser(rel).parse();
        std::vector<Term> terms;
        auto add = [&](const std::vector<Word>& ws, int sign) {
            for (const auto& w : ws) {
                Word unit_word = w;
                unit_word.coef = 1;
                Term t{w.coef * sign, eval_word(alg, gens, unit_word), {}};
                for (const auto& [name, e] : w.factors) {
                    t.degree[name] += e;
                    used.insert(name);
                }
                terms.push_back(t);
            }
        };
        add(p.lhs, 1);
        add(p.rhs, -1);
        rels.push_back(terms);
    }
    std::vector<std::string> names(used.begin(), used.end());
    std::size_t free = std::min<std::size_t>(names.size(), 4);
    std::map<std::string, Rational> scale;
    for (const auto& n : names) scale[n] = 1;
    auto holds = [&]() {
        for (const auto& terms : rels) {
            AlgElement sum = alg.zero();
            for (const auto& t : terms) {
                Rational c = t.coef;
                for (const auto& [name, e] : t.degree)
                    for (unsigned k = 0; k < e; ++k) c *= scale[name];
                sum = sum + c * t.value;
            }
            if (!is_zero(sum)) return false;
        }
        return true;
    };
    std::vector<std::size_t> idx(free, 0);
    while (true) {
        for (std::size_t k = 0; k < free; ++k) scale[names[k]] = cands[idx[k]];
        if (holds()) return {true, "", scale, "presentation matched"};
        std::size_t k = 0;
        while (k < free && ++idx[k] == cands.size()) idx[k++] = 0;
        if (k == free) break;
    }
    return {false, "", {}, "presentation match not found"};
}

PresentationMatch match_presentation(const FiniteDimAlgebra& alg, const std::vector<NamedDictionary>& dictionaries,
                                     const std::vector<std::string>& relations,
                                     const std::vector<Rational>& candidates) {
    for (const auto& d : dictionaries) {
        PresentationMatch m = match_presentation(alg, d.gens, relations, candidates);
        if (m.found) {
            m.dictionary = d.label;
            return m;
        }
    }
    return {false, "", {}, "presentation match not found"};
}

}  // namespace mfcat
