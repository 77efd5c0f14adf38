#include "mfcat/homalg.hpp"

#include "mfcat/errors.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <random>
#include <unordered_map>

namespace mfcat {

HomalgConfig HomalgConfig::from_env() {
    HomalgConfig cfg;
    if (const char* f = std::getenv("MF_FIELD"); f && *f) cfg.field = FieldContext::parse(f);
    if (const char* p = std::getenv("MF_PRECISION_MAX"); p && *p) {
        try {
            cfg.precision_max = static_cast<std::uint32_t>(std::stoul(p));
        } catch (const std::logic_error&) {
            throw UsageError(std::string("bad MF_PRECISION_MAX: ") + p);
        }
    }
    return cfg;
}

const std::vector<std::uint32_t>& precision_ladder() {
    static const std::vector<std::uint32_t> ladder{8, 16, 32, 64, 128};
    return ladder;
}

bool is_morphism(const MF& src, const MF& dst, const MorphismPair& p, std::uint32_t n) {
    return (p.alpha * src.A - dst.A * p.beta).truncate(n).is_zero() &&
           (p.beta * src.B - dst.B * p.alpha).truncate(n).is_zero();
}

bool is_homotopy(const MF& src, const MF& dst, const MorphismPair& p, const HomotopyWitness& w, std::uint32_t n) {
    return (p.alpha - dst.A * w.H - w.K * src.B).truncate(n).is_zero() &&
           (p.beta - w.H * src.A - dst.B * w.K).truncate(n).is_zero();
}

MorphismPair compose(const MorphismPair& second, const MorphismPair& first) {
    MorphismPair r;
    r.alpha = second.alpha * first.alpha;
    r.beta = second.beta * first.beta;
    r.precision = std::min(second.precision, first.precision);
    return r;
}

MorphismPair identity_morphism(const MF& m) {
    return {Matrix::identity(m.rank(), m.nvars()), Matrix::identity(m.rank(), m.nvars()), kExact};
}

nlohmann::json ExtReport::to_json() const {
    nlohmann::json lad = nlohmann::json::array();
    for (auto [n, d] : ladder) lad.push_back({{"precision", n}, {"dim", d}});
    nlohmann::json j = {{"kind", kind}, {"dim", dim}, {"ladder", lad}, {"stabilized", stabilized}, {"certified", certified}};
    if (certified) j["certified_at"] = certified_at;
    if (!note.empty()) j["note"] = note;
    return j;
}

namespace {

struct MonoIndex {
    int nv;
    std::uint32_t n;
    std::vector<Monomial> monos;
    std::unordered_map<std::uint64_t, std::uint32_t> idx;

    static std::uint64_t key(const Monomial& m) {
        return std::uint64_t(m.e[0]) | std::uint64_t(m.e[1]) << 16 | std::uint64_t(m.e[2]) << 32 |
               std::uint64_t(m.e[3]) << 48;
    }

    MonoIndex(int nvars, std::uint32_t prec) : nv(nvars), n(prec) {
        for (std::uint32_t d = 0; d < prec; ++d) add_degree(d, 0, d, Monomial{});
        for (std::uint32_t i = 0; i < monos.size(); ++i) idx.emplace(key(monos[i]), i);
    }

    // Descending lex within one degree.
    void add_degree(std::uint32_t d, int var, std::uint32_t left, Monomial m) {
        if (var == nv - 1) {
            m.e[var] = static_cast<std::uint16_t>(left);
            monos.push_back(m);
            return;
        }
        for (std::uint32_t k = left + 1; k-- > 0;) {
            m.e[var] = static_cast<std::uint16_t>(k);
            add_degree(d, var + 1, left - k, m);
        }
    }

    int find(const Monomial& m) const {
        if (m.degree() >= n) return -1;
        return static_cast<int>(idx.at(key(m)));
    }
};

template <class F>
struct Entry {
    std::vector<std::pair<Monomial, typename F::value_type>> terms;
};

template <class F>
std::vector<Entry<F>> convert(const F& f, const Matrix& m) {
    std::vector<Entry<F>> out(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (const auto& [mono, c] : m(i, j).terms()) {
                auto v = f.from(c);
                if (!f.is_zero(v)) out[i * m.cols() + j].terms.emplace_back(mono, v);
            }
    return out;
}

template <class F>
void normalize(const F& f, SparseVec<F>& row) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec<F> out;
    for (auto& e : row) {
        if (!out.empty() && out.back().first == e.first)
            out.back().second = f.add(out.back().second, e.second);
        else
            out.push_back(e);
    }
    row.clear();
    for (auto& e : out)
        if (!f.is_zero(e.second)) row.push_back(e);
}

// Linear system of morphisms src -> dst truncated at n, with alpha coefficients
// of degree < m ordered last.
template <class F>
struct System {
    using V = typename F::value_type;

    F f;
    std::size_t r, s;  // source and target ranks
    std::uint32_t n, m;
    MonoIndex mi;
    std::vector<Entry<F>> A, B, C, D;
    std::uint32_t ny = 0, nx = 0;
    std::vector<std::uint32_t> col_alpha, col_beta;
    Echelon<F> ech;

    System(const F& field, const MF& src, const MF& dst, std::uint32_t prec, std::uint32_t trunc)
        : f(field), r(src.rank()), s(dst.rank()), n(prec), m(trunc), mi(src.nvars(), prec),
          A(convert(field, src.A)), B(convert(field, src.B)), C(convert(field, dst.A)), D(convert(field, dst.B)),
          ech(field, 0) {
        std::size_t nm = mi.monos.size();
        col_alpha.assign(s * r * nm, 0);
        col_beta.assign(s * r * nm, 0);
        std::uint32_t next = 0;
        for (std::size_t u = 0; u < nm; ++u)
            for (std::size_t e = 0; e < s * r; ++e) col_beta[e * nm + u] = next++;
        for (std::size_t u = 0; u < nm; ++u) {
            if (mi.monos[u].degree() < m) continue;
            for (std::size_t e = 0; e < s * r; ++e) col_alpha[e * nm + u] = next++;
        }
        ny = next;
        for (std::size_t u = 0; u < nm; ++u) {
            if (mi.monos[u].degree() >= m) continue;
            for (std::size_t e = 0; e < s * r; ++e) col_alpha[e * nm + u] = next++;
        }
        nx = next - ny;
        ech = Echelon<F>(field, next);
    }

    std::uint32_t ca(std::size_t i, std::size_t j, std::size_t u) const { return col_alpha[(i * r + j) * mi.monos.size() + u]; }
    std::uint32_t cb(std::size_t i, std::size_t j, std::size_t u) const { return col_beta[(i * r + j) * mi.monos.size() + u]; }

    // Adds sum_k X(i,k) * P(k,j) at monomial u; X is an unknown s x r matrix.
    void left_unknown(SparseVec<F>& row, bool alpha, std::size_t i, std::size_t j, const std::vector<Entry<F>>& P,
                      std::size_t pc, const Monomial& mono, bool negate) const {
        for (std::size_t k = 0; k < r; ++k)
            for (const auto& [t, c] : P[k * pc + j].terms) {
                if (!t.divides(mono)) continue;
                std::size_t u = static_cast<std::size_t>(mi.find(mono / t));
                row.emplace_back(alpha ? ca(i, k, u) : cb(i, k, u), negate ? f.neg(c) : c);
            }
    }

    // Adds sum_k P(i,k) * X(k,j) at monomial u.
    void right_unknown(SparseVec<F>& row, bool alpha, std::size_t i, std::size_t j, const std::vector<Entry<F>>& P,
                       std::size_t pc, const Monomial& mono, bool negate) const {
        for (std::size_t k = 0; k < s; ++k)
            for (const auto& [t, c] : P[i * pc + k].terms) {
                if (!t.divides(mono)) continue;
                std::size_t u = static_cast<std::size_t>(mi.find(mono / t));
                row.emplace_back(alpha ? ca(k, j, u) : cb(k, j, u), negate ? f.neg(c) : c);
            }
    }

    void build() {
        for (std::size_t u = 0; u < mi.monos.size(); ++u) {
            const Monomial& mono = mi.monos[u];
            for (std::size_t i = 0; i < s; ++i)
                for (std::size_t j = 0; j < r; ++j) {
                    SparseVec<F> row;
                    left_unknown(row, true, i, j, A, r, mono, false);
                    right_unknown(row, false, i, j, C, s, mono, true);
                    normalize(f, row);
                    if (!row.empty()) ech.insert(row);
                    row.clear();
                    left_unknown(row, false, i, j, B, r, mono, false);
                    right_unknown(row, true, i, j, D, s, mono, true);
                    normalize(f, row);
                    if (!row.empty()) ech.insert(row);
                }
        }
    }

    // Rows of the echelon form that only involve the X block, shifted to [0, nx).
    Echelon<F> projected_constraints() const {
        Echelon<F> ex(f, nx);
        for (const auto& row : ech.rows()) {
            if (row.front().first < ny) continue;
            SparseVec<F> sh;
            sh.reserve(row.size());
            for (const auto& [c, v] : row) sh.emplace_back(c - ny, v);
            ex.insert(sh);
        }
        return ex;
    }

    // X-block vector of alpha = P * E(p,q) * mono (left) or E(p,q) * mono * P (right).
    void boundary_generators(const std::vector<Entry<F>>& Cm, const std::vector<Entry<F>>& Bm, bool with_k,
                             Echelon<F>& eg) const {
        for (std::size_t u = 0; u < mi.monos.size(); ++u) {
            const Monomial& mono = mi.monos[u];
            if (mono.degree() >= m) break;
            for (std::size_t p = 0; p < s; ++p)
                for (std::size_t q = 0; q < r; ++q) {
                    SparseVec<F> v;
                    for (std::size_t k = 0; k < s; ++k)
                        for (const auto& [t, c] : Cm[k * s + p].terms) {
                            Monomial w = t * mono;
                            if (w.degree() >= m) continue;
                            v.emplace_back(ca(k, q, static_cast<std::size_t>(mi.find(w))) - ny, c);
                        }
                    normalize(f, v);
                    if (!v.empty()) eg.insert(v);
                    if (!with_k) continue;
                    v.clear();
                    for (std::size_t l = 0; l < r; ++l)
                        for (const auto& [t, c] : Bm[q * r + l].terms) {
                            Monomial w = t * mono;
                            if (w.degree() >= m) continue;
                            v.emplace_back(ca(p, l, static_cast<std::size_t>(mi.find(w))) - ny, c);
                        }
                    normalize(f, v);
                    if (!v.empty()) eg.insert(v);
                }
        }
    }

    Echelon<F> boundaries(bool stable) const {
        Echelon<F> eg(f, nx);
        boundary_generators(C, B, stable, eg);
        return eg;
    }

    // X-block vector of an alpha matrix (terms of degree >= m dropped).
    SparseVec<F> x_vector(const Matrix& alpha) const {
        SparseVec<F> v;
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < r; ++j)
                for (const auto& [mono, c] : alpha(i, j).terms()) {
                    if (mono.degree() >= m) continue;
                    auto val = f.from(c);
                    if (!f.is_zero(val)) v.emplace_back(ca(i, j, static_cast<std::size_t>(mi.find(mono))) - ny, val);
                }
        normalize(f, v);
        return v;
    }

    Matrix alpha_from_x(const SparseVec<F>& v, int nv) const {
        Matrix a(s, r, nv);
        std::unordered_map<std::uint32_t, std::pair<std::size_t, std::size_t>> inv;
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < r; ++j)
                for (std::size_t u = 0; u < mi.monos.size(); ++u) {
                    if (mi.monos[u].degree() >= m) break;
                    inv[ca(i, j, u) - ny] = {i * r + j, u};
                }
        for (const auto& [c, val] : v) {
            auto [e, u] = inv.at(c);
            a(e / r, e % r).add_term(mi.monos[u], f.lift(val));
        }
        return a;
    }
};

template <class F>
struct StepResult {
    std::size_t dim = 0;
    bool certified = false;
};

template <class F>
std::vector<SparseVec<F>> complement_basis(const F& f, std::size_t nx, const std::vector<SparseVec<F>>& kernel,
                                           Echelon<F>& eg, std::vector<SparseVec<F>>* reduced) {
    Echelon<F> cls(f, nx);
    std::vector<SparseVec<F>> out;
    for (const auto& k : kernel) {
        SparseVec<F> red = eg.reduce(k, true);
        if (cls.insert(red)) {
            out.push_back(k);
            if (reduced) reduced->push_back(red);
        }
    }
    return out;
}

Series partial(const Series& f, int var) { return f.derivative(var); }

template <class F>
StepResult<F> stable_step(const F& f, const MF& src, const MF& dst, std::uint32_t n) {
    System<F> sys(f, src, dst, n, n / 2);
    sys.build();
    Echelon<F> ex = sys.projected_constraints();
    ex.make_reduced();
    auto kernel = ex.kernel_basis(0, sys.nx);
    Echelon<F> eg = sys.boundaries(true);
    if (eg.rank() > kernel.size()) throw InconsistencyError("boundary space exceeds cycle projection");
    StepResult<F> res;
    res.dim = kernel.size() - eg.rank();
    std::vector<SparseVec<F>> reduced;
    auto basis = complement_basis(f, sys.nx, kernel, eg, &reduced);
    if (basis.size() != res.dim) throw InconsistencyError("boundaries are not contained in the cycle projection");
    res.certified = true;
    for (const auto& b : basis) {
        Matrix alpha = sys.alpha_from_x(b, src.nvars());
        for (int var = 0; var < src.nvars() && res.certified; ++var) {
            Matrix t = (alpha * partial(src.f, var)).truncate(sys.m);
            if (!eg.reduce(sys.x_vector(t), true).empty()) res.certified = false;
        }
    }
    return res;
}

std::mutex cache_mutex;
std::map<std::string, std::pair<std::size_t, bool>> stable_cache;

std::string cache_key(const MF& src, const MF& dst, std::uint32_t n, const FieldContext& fc) {
    return serialize(src) + "#" + serialize(dst) + "#" + std::to_string(n) + "#" + fc.str();
}

std::pair<std::size_t, bool> stable_step_dispatch(const MF& src, const MF& dst, std::uint32_t n, const HomalgConfig& cfg) {
    std::string key;
    if (cfg.use_cache) {
        key = cache_key(src, dst, n, cfg.field);
        std::lock_guard<std::mutex> lock(cache_mutex);
        if (auto it = stable_cache.find(key); it != stable_cache.end()) return it->second;
    }
    std::pair<std::size_t, bool> out;
    if (cfg.field.kind == FieldContext::Kind::prime) {
        auto r = stable_step(PrimeField(cfg.field.p), src, dst, n);
        out = {r.dim, r.certified};
    } else {
        auto r = stable_step(RationalField{}, src, dst, n);
        out = {r.dim, r.certified};
    }
    if (cfg.use_cache) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        stable_cache.emplace(key, out);
    }
    return out;
}

void check_pair(const MF& src, const MF& dst) {
    if (src.nvars() != 2 || dst.nvars() != 2) throw UsageError("Hom computations are limited to two variables");
    if (src.f != dst.f) throw UsageError("factorizations of different equations");
}

// Ladder rungs up to the cap; returns (report, final precision).
std::pair<ExtReport, std::uint32_t> run_ladder(const MF& src, const MF& dst, const HomalgConfig& cfg) {
    check_pair(src, dst);
    ExtReport rep;
    rep.kind = "stable-hom";
    if (src.rank() == 0 || dst.rank() == 0) {
        rep.stabilized = rep.certified = true;
        rep.note = "zero object";
        return {rep, 0};
    }
    std::uint32_t last = 0;
    for (std::uint32_t n : precision_ladder()) {
        if (n > cfg.precision_max) break;
        auto [d, cert] = stable_step_dispatch(src, dst, n, cfg);
        rep.ladder.emplace_back(n, d);
        last = n;
        if (rep.ladder.size() >= 2 && rep.ladder[rep.ladder.size() - 2].second == d) {
            rep.dim = d;
            rep.stabilized = true;
            rep.certified = cert;
            if (cert) rep.certified_at = n;
            return {rep, n};
        }
    }
    throw PrecisionCapError("stable Hom did not stabilize by precision " + std::to_string(last) + " for " + src.name +
                            " -> " + dst.name);
}

}  // namespace

void clear_homalg_cache() {
    std::lock_guard<std::mutex> lock(cache_mutex);
    stable_cache.clear();
}

ExtReport stable_hom_dim(const MF& src, const MF& dst, const HomalgConfig& cfg) { return run_ladder(src, dst, cfg).first; }

ExtReport ext1_dim(const MF& src, const MF& dst, const HomalgConfig& cfg) {
    ExtReport r = stable_hom_dim(shift(src), dst, cfg);
    r.kind = "ext1";
    if (r.dim == 0) r.note = r.note.empty() ? "zero module" : r.note;
    return r;
}

bool is_rigid(const MF& m, const HomalgConfig& cfg) { return ext1_dim(m, m, cfg).dim == 0; }

std::vector<std::vector<ExtReport>> ext_matrix(const std::vector<MF>& objects, const HomalgConfig& cfg) {
    std::vector<std::vector<ExtReport>> t(objects.size(), std::vector<ExtReport>(objects.size()));
    for (std::size_t i = 0; i < objects.size(); ++i)
        for (std::size_t j = 0; j < objects.size(); ++j) t[i][j] = ext1_dim(objects[i], objects[j], cfg);
    return t;
}

}  // namespace mfcat

namespace mfcat {

namespace {

// Recovers full (alpha, beta) from X-block values by back-substitution.
template <class F>
MorphismPair lift_solution(const System<F>& sys, const SparseVec<F>& x, int nv, std::uint32_t trunc) {
    const F& f = sys.f;
    std::vector<typename F::value_type> full(sys.ny + sys.nx, f.zero());
    for (const auto& [c, v] : x) full[sys.ny + c] = v;
    full = sys.ech.back_substitute(std::move(full), sys.ny);
    MorphismPair p{Matrix(sys.s, sys.r, nv), Matrix(sys.s, sys.r, nv), trunc};
    for (std::size_t i = 0; i < sys.s; ++i)
        for (std::size_t j = 0; j < sys.r; ++j)
            for (std::size_t u = 0; u < sys.mi.monos.size(); ++u) {
                const Monomial& mono = sys.mi.monos[u];
                if (mono.degree() >= trunc) break;
                p.alpha(i, j).add_term(mono, f.lift(full[sys.ca(i, j, u)]));
                p.beta(i, j).add_term(mono, f.lift(full[sys.cb(i, j, u)]));
            }
    return p;
}

template <class F>
std::vector<MorphismPair> hom_space_impl(const F& f, const MF& src, const MF& dst, std::uint32_t prec) {
    System<F> sys(f, src, dst, 2 * prec, prec);
    sys.build();
    Echelon<F> ex = sys.projected_constraints();
    ex.make_reduced();
    auto kernel = ex.kernel_basis(0, sys.nx);
    Echelon<F> eg = sys.boundaries(false);
    auto basis = complement_basis(f, sys.nx, kernel, eg, nullptr);
    std::vector<MorphismPair> out;
    for (const auto& b : basis) out.push_back(lift_solution(sys, b, src.nvars(), prec));
    return out;
}

}  // namespace

std::vector<MorphismPair> hom_space(const MF& src, const MF& dst, std::uint32_t prec, const HomalgConfig& cfg) {
    check_pair(src, dst);
    if (prec < 2) throw UsageError("hom_space needs precision >= 2");
    if (src.rank() == 0 || dst.rank() == 0) return {};
    if (cfg.field.kind == FieldContext::Kind::prime) return hom_space_impl(PrimeField(cfg.field.p), src, dst, prec);
    return hom_space_impl(RationalField{}, src, dst, prec);
}

struct StableHomBasis::Impl {
    virtual ~Impl() = default;
    virtual std::vector<Rational> coordinates(const Matrix& alpha) const = 0;
};

namespace {

template <class F>
struct BasisImpl : StableHomBasis::Impl {
    System<F> sys;
    mutable Echelon<F> eg;
    mutable std::optional<SpanSolver<F>> solver;
    mutable std::mutex mu;

    BasisImpl(System<F>&& s, Echelon<F>&& g) : sys(std::move(s)), eg(std::move(g)) {}

    std::vector<Rational> coordinates(const Matrix& alpha) const override {
        std::lock_guard<std::mutex> lock(mu);
        auto red = eg.reduce(sys.x_vector(alpha.truncate(sys.m)), true);
        auto c = solver->solve(red);
        if (!c) throw InconsistencyError("matrix is not the class of a morphism");
        std::vector<Rational> out;
        for (const auto& v : *c) out.push_back(sys.f.lift(v));
        return out;
    }
};

template <class F>
std::shared_ptr<const StableHomBasis::Impl> build_basis(const F& f, const MF& src, const MF& dst, std::uint32_t n,
                                                         std::vector<Matrix>& basis) {
    System<F> sys(f, src, dst, n, n / 2);
    sys.build();
    Echelon<F> ex = sys.projected_constraints();
    ex.make_reduced();
    auto kernel = ex.kernel_basis(0, sys.nx);
    Echelon<F> eg = sys.boundaries(true);
    std::vector<SparseVec<F>> reduced;
    auto chosen = complement_basis(f, sys.nx, kernel, eg, &reduced);
    for (const auto& b : chosen) basis.push_back(sys.alpha_from_x(b, src.nvars()));
    sys.ech = Echelon<F>(f, 0);
    std::size_t nx = sys.nx;
    auto impl = std::make_shared<BasisImpl<F>>(std::move(sys), std::move(eg));
    impl->solver.emplace(f, nx, reduced);
    return impl;
}

}  // namespace

StableHomBasis::StableHomBasis(const MF& src, const MF& dst, const HomalgConfig& cfg, std::uint32_t min_precision)
    : src_(src), dst_(dst) {
    auto [rep, n] = run_ladder(src, dst, cfg);
    if (rep.dim == 0) return;
    n = std::max(n, min_precision);
    prec_ = n;
    trunc_ = n / 2;
    if (cfg.field.kind == FieldContext::Kind::prime)
        impl_ = build_basis(PrimeField(cfg.field.p), src, dst, n, basis_);
    else
        impl_ = build_basis(RationalField{}, src, dst, n, basis_);
    if (basis_.size() != rep.dim) throw InconsistencyError("stable Hom basis size differs from its dimension");
}

std::vector<Rational> StableHomBasis::coordinates(const Matrix& alpha) const {
    if (!impl_) return {};
    return impl_->coordinates(alpha);
}

Matrix StableHomBasis::element(const std::vector<Rational>& coords) const {
    Matrix m(dst_.rank(), src_.rank(), src_.nvars());
    for (std::size_t i = 0; i < basis_.size() && i < coords.size(); ++i)
        if (coords[i] != 0) m = m + basis_[i] * Series::constant(src_.nvars(), coords[i]);
    return m;
}

namespace {

// Unknown matrices with coefficients of degree < n, combined into linear
// equations of the form sum L*U*R = rhs modulo m^n.
template <class F>
class MatrixEquations {
public:
    using V = typename F::value_type;

    MatrixEquations(const F& f, int nv, std::uint32_t n) : f_(f), mi_(nv, n) {}

    int add_unknown(std::size_t rows, std::size_t cols) {
        blocks_.push_back({rows, cols, next_});
        next_ += static_cast<std::uint32_t>(rows * cols * mi_.monos.size());
        return static_cast<int>(blocks_.size()) - 1;
    }

    int add_equation(std::size_t rows, std::size_t cols) {
        eqs_.push_back({rows, cols, eq_rows_.size()});
        eq_rows_.resize(eq_rows_.size() + rows * cols * mi_.monos.size());
        return static_cast<int>(eqs_.size()) - 1;
    }

    // Adds sign * L * U * R to equation e; empty L or R mean identity.
    void add_term(int e, const Matrix* L, int u, const Matrix* R, bool negate) {
        const auto& blk = blocks_[u];
        const auto& eq = eqs_[e];
        std::size_t nm = mi_.monos.size();
        auto terms_of = [&](const Matrix* M, std::size_t i, std::size_t j) {
            std::vector<std::pair<Monomial, V>> t;
            if (!M) {
                if (i == j) t.emplace_back(Monomial{}, f_.one());
                return t;
            }
            for (const auto& [mono, c] : (*M)(i, j).terms()) t.emplace_back(mono, f_.from(c));
            return t;
        };
        std::size_t lrows = L ? L->rows() : blk.rows, rcols = R ? R->cols() : blk.cols;
        if (lrows != eq.rows || rcols != eq.cols) throw UsageError("matrix equation shape mismatch");
        for (std::size_t i = 0; i < eq.rows; ++i)
            for (std::size_t k = 0; k < blk.rows; ++k) {
                auto lt = terms_of(L, i, k);
                if (lt.empty()) continue;
                for (std::size_t l = 0; l < blk.cols; ++l)
                    for (std::size_t j = 0; j < eq.cols; ++j) {
                        auto rt = terms_of(R, l, j);
                        for (const auto& [ml, cl] : lt)
                            for (const auto& [mr, cr] : rt) {
                                Monomial lr = ml * mr;
                                if (lr.degree() >= mi_.n) continue;
                                V c = f_.mul(cl, cr);
                                if (negate) c = f_.neg(c);
                                for (std::size_t uu = 0; uu < nm; ++uu) {
                                    Monomial w = lr * mi_.monos[uu];
                                    if (w.degree() >= mi_.n) break;
                                    std::size_t row = eq.offset + (i * eq.cols + j) * nm + mi_.find(w);
                                    eq_rows_[row].emplace_back(blk.offset + (k * blk.cols + l) * nm + uu, c);
                                }
                            }
                    }
            }
    }

    void add_rhs(int e, const Matrix& rhs) {
        const auto& eq = eqs_[e];
        std::size_t nm = mi_.monos.size();
        for (std::size_t i = 0; i < eq.rows; ++i)
            for (std::size_t j = 0; j < eq.cols; ++j)
                for (const auto& [mono, c] : rhs(i, j).terms()) {
                    int w = mi_.find(mono);
                    if (w < 0) continue;
                    eq_rows_[eq.offset + (i * eq.cols + j) * nm + w].emplace_back(rhs_col(), f_.neg(f_.from(c)));
                }
    }

    std::uint32_t rhs_col() const { return next_; }

    bool solvable() {
        Echelon<F> ech(f_, next_ + 1);
        for (auto& row : eq_rows_) {
            normalize(f_, row);
            if (row.empty()) continue;
            if (!ech.insert(row)) continue;
            if (ech.rows().back().front().first == rhs_col()) return false;
        }
        return true;
    }

private:
    struct Block {
        std::size_t rows, cols;
        std::uint32_t offset;
    };
    struct Eq {
        std::size_t rows, cols, offset;
    };
    F f_;
    MonoIndex mi_;
    std::vector<Block> blocks_;
    std::vector<Eq> eqs_;
    std::vector<SparseVec<F>> eq_rows_;
    std::uint32_t next_ = 0;
};

template <class F>
bool factors_through_impl(const F& f, const MF& a_src, const MF& target, const MorphismPair& a, const MF& g_src,
                          const MorphismPair& g, bool stable, std::uint32_t n) {
    MatrixEquations<F> sys(f, target.nvars(), n);
    int ah = sys.add_unknown(a_src.rank(), g_src.rank());
    int bh = sys.add_unknown(a_src.rank(), g_src.rank());
    int H = sys.add_unknown(target.rank(), g_src.rank());
    int e1 = sys.add_equation(a_src.rank(), g_src.rank());
    sys.add_term(e1, nullptr, ah, &g_src.A, false);
    sys.add_term(e1, &a_src.A, bh, nullptr, true);
    int e2 = sys.add_equation(a_src.rank(), g_src.rank());
    sys.add_term(e2, nullptr, bh, &g_src.B, false);
    sys.add_term(e2, &a_src.B, ah, nullptr, true);
    int e3 = sys.add_equation(target.rank(), g_src.rank());
    sys.add_term(e3, &a.alpha, ah, nullptr, false);
    sys.add_term(e3, &target.A, H, nullptr, false);
    if (stable) {
        int K = sys.add_unknown(target.rank(), g_src.rank());
        sys.add_term(e3, nullptr, K, &g_src.B, false);
    }
    sys.add_rhs(e3, g.alpha);
    return sys.solvable();
}

}  // namespace

bool factors_through(const MF& a_src, const MF& target, const MorphismPair& a, const MF& g_src, const MorphismPair& g,
                     bool stable, std::uint32_t prec, const HomalgConfig& cfg) {
    if (cfg.field.kind == FieldContext::Kind::prime)
        return factors_through_impl(PrimeField(cfg.field.p), a_src, target, a, g_src, g, stable, prec);
    return factors_through_impl(RationalField{}, a_src, target, a, g_src, g, stable, prec);
}

namespace {

// Constant terms alpha(0) of morphisms src -> dst, one matrix per basis vector.
template <class F>
std::vector<std::vector<std::vector<typename F::value_type>>> constant_parts(const F& f, const MF& src, const MF& dst,
                                                                              std::uint32_t n) {
    System<F> sys(f, src, dst, n, 1);
    sys.build();
    Echelon<F> ex = sys.projected_constraints();
    ex.make_reduced();
    std::vector<std::vector<std::vector<typename F::value_type>>> out;
    for (const auto& k : ex.kernel_basis(0, sys.nx)) {
        std::vector<std::vector<typename F::value_type>> m(sys.s, std::vector<typename F::value_type>(sys.r, f.zero()));
        for (std::size_t i = 0; i < sys.s; ++i)
            for (std::size_t j = 0; j < sys.r; ++j) {
                std::uint32_t c = sys.ca(i, j, 0) - sys.ny;
                for (const auto& [cc, v] : k)
                    if (cc == c) m[i][j] = v;
            }
        out.push_back(std::move(m));
    }
    return out;
}

// Looks for a combination with invertible constant term at deterministic sample points.
template <class F>
bool has_invertible_combination(const F& f, const MF& src, const MF& dst, std::uint32_t n) {
    auto parts = constant_parts(f, src, dst, n);
    if (parts.empty()) return false;
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> dist(-50, 50);
    std::size_t r = src.rank();
    for (int sample = 0; sample < 24; ++sample) {
        std::vector<std::vector<typename F::value_type>> m(r, std::vector<typename F::value_type>(r, f.zero()));
        for (const auto& p : parts) {
            auto c = f.from(Rational(dist(rng)));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) m[i][j] = f.add(m[i][j], f.mul(c, p[i][j]));
        }
        if (!f.is_zero(dense_det(f, m))) return true;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const MF& m, const MF& n, const HomalgConfig& cfg) {
    if (m.f != n.f) return false;
    ReduceResult rm = reduce(m), rn = reduce(n);
    if (rm.free_summands != rn.free_summands || rm.mf.rank() != rn.mf.rank()) return false;
    const MF& a = rm.mf;
    const MF& b = rn.mf;
    if (a.rank() == 0) return true;
    if (a.A == b.A && a.B == b.B) return true;
    ExtReport aa = stable_hom_dim(a, a, cfg), bb = stable_hom_dim(b, b, cfg);
    ExtReport ab = stable_hom_dim(a, b, cfg), ba = stable_hom_dim(b, a, cfg);
    if (aa.dim != bb.dim || ab.dim != aa.dim || ba.dim != aa.dim) return false;
    std::uint32_t prec = 16;
    for (const auto* r : {&aa, &bb, &ab, &ba})
        if (!r->ladder.empty()) prec = std::max(prec, r->ladder.back().first);
    if (cfg.field.kind == FieldContext::Kind::prime) {
        PrimeField f(cfg.field.p);
        return has_invertible_combination(f, a, b, prec) && has_invertible_combination(f, b, a, prec);
    }
    return has_invertible_combination(RationalField{}, a, b, prec) &&
           has_invertible_combination(RationalField{}, b, a, prec);
}

}  // namespace mfcat
