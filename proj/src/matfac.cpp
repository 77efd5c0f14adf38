#include "mfcat/matfac.hpp"

#include "mfcat/errors.hpp"

#include <numeric>
#include <sstream>

namespace mfcat {

Matrix::Matrix(std::size_t rows, std::size_t cols, int nvars)
    : r_(rows), c_(cols), nv_(nvars), e_(rows * cols, Series(nvars)) {}

Matrix Matrix::identity(std::size_t n, int nvars) {
    Matrix m(n, n, nvars);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Series::constant(nvars, 1);
    return m;
}

Matrix Matrix::scalar(const Series& s, std::size_t n) {
    Matrix m(n, n, s.nvars());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Series>>& rows) {
    if (rows.empty()) return Matrix(0, 0, 2);
    Matrix m(rows.size(), rows[0].size(), rows[0].at(0).nvars());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.c_) throw UsageError("ragged matrix");
        for (std::size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw UsageError("matrix size mismatch");
    Matrix m = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] += o.e_[k];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw UsageError("matrix size mismatch");
    Matrix m = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] -= o.e_[k];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_) throw UsageError("matrix size mismatch in product");
    Matrix m(r_, o.c_, nv_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < o.c_; ++j) {
            Series s(nv_);
            for (std::size_t k = 0; k < c_; ++k) s += (*this)(i, k) * o(k, j);
            m(i, j) = s;
        }
    return m;
}

Matrix Matrix::operator*(const Series& s) const {
    Matrix m = *this;
    for (auto& e : m.e_) e = e * s;
    return m;
}

bool Matrix::operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && e_ == o.e_; }

Matrix Matrix::truncate(std::uint32_t n) const {
    Matrix m = *this;
    for (auto& e : m.e_) e = e.truncate(n);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& e : e_)
        if (!e.is_zero()) return false;
    return true;
}

Matrix Matrix::remove(std::size_t row, std::size_t col) const {
    Matrix m(r_ - 1, c_ - 1, nv_);
    for (std::size_t i = 0, ii = 0; i < r_; ++i) {
        if (i == row) continue;
        for (std::size_t j = 0, jj = 0; j < c_; ++j) {
            if (j == col) continue;
            m(ii, jj++) = (*this)(i, j);
        }
        ++ii;
    }
    return m;
}

Series Matrix::det() const {
    if (r_ != c_) throw UsageError("determinant of a non-square matrix");
    if (r_ == 0) return Series::constant(nv_, 1);
    if (r_ == 1) return e_[0];
    Series d(nv_);
    for (std::size_t j = 0; j < c_; ++j) {
        if ((*this)(0, j).is_zero()) continue;
        Series t = (*this)(0, j) * remove(0, j).det();
        if (j % 2)
            d -= t;
        else
            d += t;
    }
    return d;
}

unsigned Matrix::max_degree() const {
    unsigned d = 0;
    for (const auto& e : e_) d = std::max(d, e.max_degree());
    return d;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < r_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
    int nv = a.rows() ? a.nvars() : b.nvars();
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols(), nv);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

namespace {

std::string check_product(const Matrix& p, const Series& f, const char* label) {
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j) {
            Series want = i == j ? f : Series(f.nvars());
            if (p(i, j) != want) {
                std::ostringstream os;
                os << label << "[" << i << "][" << j << "] = " << p(i, j).str() << ", expected " << want.str();
                return os.str();
            }
        }
    return {};
}

Series embed(const Series& s, int nvars) {
    Series r(nvars, s.precision());
    for (const auto& [m, c] : s.terms()) r.add_term(m, c);
    return r;
}

}  // namespace

ValidationResult validate(const MF& m) {
    ValidationResult res;
    if (m.A.rows() != m.A.cols() || m.B.rows() != m.B.cols() || m.A.rows() != m.B.rows()) {
        res.ok = false;
        res.message = "A and B must be square of equal size";
        return res;
    }
    std::string msg = check_product(m.A * m.B, m.f, "A*B");
    if (msg.empty()) msg = check_product(m.B * m.A, m.f, "B*A");
    if (!msg.empty()) {
        res.ok = false;
        res.message = msg;
    }
    return res;
}

void require_valid(const MF& m) {
    auto r = validate(m);
    if (!r.ok) throw InconsistencyError("not a matrix factorization (" + m.name + "): " + r.message);
}

std::string to_string(Irreducibility s) {
    switch (s) {
        case Irreducibility::certified: return "certified";
        case Irreducibility::heuristic_yes: return "heuristic-yes";
        case Irreducibility::asserted: return "asserted";
        case Irreducibility::unknown: return "unknown";
    }
    return "unknown";
}

Series FactorList::product() const {
    std::vector<int> all(factors.size());
    std::iota(all.begin(), all.end(), 0);
    return product(all);
}

Series FactorList::product(const std::vector<int>& indices) const {
    int nv = factors.empty() ? 2 : factors[0].nvars();
    Series p = Series::constant(nv, 1);
    for (int k : indices) p = p * factors.at(k);
    return p;
}

FactorList make_factor_list(std::vector<Series> factors) {
    FactorList fl;
    fl.status.assign(factors.size(), Irreducibility::asserted);
    for (std::size_t i = 0; i < factors.size(); ++i) fl.labels.push_back("f" + std::to_string(i + 1));
    fl.factors = std::move(factors);
    return fl;
}

MF mf_partial_product(const FactorList& factors, std::size_t i) {
    std::size_t n = factors.size();
    if (i < 1 || i > n) throw UsageError("partial product index out of range");
    std::vector<int> head(i);
    std::iota(head.begin(), head.end(), 0);
    MF m = mf_subset(factors, head);
    m.name = "S" + std::to_string(i);
    return m;
}

MF mf_subset(const FactorList& factors, const std::vector<int>& subset) {
    std::vector<char> in(factors.size(), 0);
    for (int k : subset) {
        if (k < 0 || std::size_t(k) >= factors.size()) throw UsageError("factor index out of range");
        in[k] = 1;
    }
    std::vector<int> rest;
    for (std::size_t k = 0; k < factors.size(); ++k)
        if (!in[k]) rest.push_back(static_cast<int>(k));
    MF m;
    m.f = factors.product();
    m.A = Matrix::scalar(factors.product(subset), 1);
    m.B = Matrix::scalar(factors.product(rest), 1);
    m.name = "S_{";
    for (std::size_t t = 0; t < subset.size(); ++t) m.name += (t ? "," : "") + std::to_string(subset[t] + 1);
    m.name += "}";
    if (rest.empty()) m.note = "free";
    return m;
}

MF shift(const MF& m) {
    MF s = m;
    std::swap(s.A, s.B);
    s.name = "shift(" + m.name + ")";
    return s;
}

MF direct_sum(const MF& a, const MF& b) {
    if (a.rank() && b.rank() && a.f != b.f) throw UsageError("direct sum of factorizations of different equations");
    MF m;
    m.f = a.rank() ? a.f : b.f;
    m.A = block_diag(a.A, b.A);
    m.B = block_diag(a.B, b.B);
    m.name = a.name.empty() ? b.name : (b.name.empty() ? a.name : a.name + "+" + b.name);
    return m;
}

MF direct_sum(const std::vector<MF>& parts) {
    if (parts.empty()) throw UsageError("empty direct sum");
    MF m = parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k) m = direct_sum(m, parts[k]);
    return m;
}

namespace {

constexpr std::uint32_t kUnitInversePrecision = 64;

bool is_unit(const Series& s) { return sgn(s.constant_term()) != 0; }

bool find_unit(const Matrix& p, std::size_t& ui, std::size_t& uj) {
    bool found = false;
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j) {
            const Series& e = p(i, j);
            if (!is_unit(e)) continue;
            bool constant = e.exact() && e.max_degree() == 0;
            if (constant) {
                ui = i;
                uj = j;
                return true;
            }
            if (!found) {
                ui = i;
                uj = j;
                found = true;
            }
        }
    return found;
}

// Splits the unit entry p(i,j) off the pair (p, q) with p*q = f*I.
void split_unit(Matrix& p, Matrix& q, std::size_t i, std::size_t j) {
    const Series u = p(i, j);
    Series inv = (u.exact() && u.max_degree() == 0) ? Series::constant(u.nvars(), 1 / u.constant_term())
                                                      : u.invert_unit(kUnitInversePrecision);
    std::size_t n = p.rows();
    for (std::size_t k = 0; k < n; ++k) {
        if (k == i || p(k, j).is_zero()) continue;
        Series c = p(k, j) * inv;
        for (std::size_t l = 0; l < n; ++l) p(k, l) -= c * p(i, l);
        for (std::size_t l = 0; l < n; ++l) q(l, i) += q(l, k) * c;
    }
    for (std::size_t l = 0; l < n; ++l) {
        if (l == j || p(i, l).is_zero()) continue;
        Series c = p(i, l) * inv;
        for (std::size_t k = 0; k < n; ++k) p(k, l) -= c * p(k, j);
        for (std::size_t k = 0; k < n; ++k) q(j, k) += c * q(l, k);
    }
    p = p.remove(i, j);
    q = q.remove(j, i);
}

}  // namespace

ReduceResult reduce(const MF& m) {
    ReduceResult res;
    Matrix a = m.A, b = m.B;
    for (;;) {
        std::size_t i = 0, j = 0;
        if (find_unit(a, i, j)) {
            split_unit(a, b, i, j);
            ++res.zero_summands;
        } else if (find_unit(b, i, j)) {
            split_unit(b, a, i, j);
            ++res.free_summands;
        } else {
            break;
        }
    }
    res.mf = m;
    res.mf.A = a;
    res.mf.B = b;
    return res;
}

bool is_reduced(const MF& m) {
    std::size_t i, j;
    return !find_unit(m.A, i, j) && !find_unit(m.B, i, j);
}

MF knoerrer_lift(const FactorList& factors, const std::vector<int>& w, std::size_t i) {
    std::size_t n = factors.size();
    if (w.size() != n || i < 1 || i > n) throw UsageError("knoerrer_lift: bad permutation or index");
    std::vector<int> head(w.begin(), w.begin() + static_cast<long>(i)), tail(w.begin() + static_cast<long>(i), w.end());
    Series a = embed(factors.product(head), 4), b = embed(factors.product(tail), 4);
    Series u = Series::variable(4, 2), v = Series::variable(4, 3);
    MF m;
    m.f = embed(factors.product(), 4) + u * v;
    m.A = Matrix::from_rows({{u, a}, {b, -v}});
    m.B = Matrix::from_rows({{v, a}, {b, -u}});
    m.name = "lift(" + mf_subset(factors, head).name + ")";
    m.note = "Knoerrer lift";
    return m;
}

namespace {

Series P(const std::string& s) { return parse(s); }

Series lam_mul(const Rational& l, const std::string& s) { return parse(s) * l; }

MF entry(const std::string& name, const Series& f, const Matrix& a, const Matrix& b, const std::string& note) {
    MF m;
    m.name = name;
    m.f = f;
    m.A = a;
    m.B = b;
    m.note = note;
    require_valid(m);
    return m;
}

Matrix one(const Series& s) { return Matrix::scalar(s, 1); }

void require_lambda(const Rational& l) {
    if (l == 0 || l == 1) throw UsageError("lambda must differ from 0 and 1");
}

Catalog from_factors(const std::string& name, std::vector<Series> fs, const std::vector<std::string>& labels,
                     const std::string& note) {
    Catalog c;
    c.name = name;
    c.factors = make_factor_list(std::move(fs));
    if (!labels.empty()) c.factors.labels = labels;
    c.has_factors = true;
    c.f = c.factors.product();
    for (std::size_t i = 1; i <= c.factors.size(); ++i) {
        MF m = mf_partial_product(c.factors, i);
        m.note = note + (i == c.factors.size() ? "; free" : "");
        c.entries.push_back(m);
    }
    return c;
}

}  // namespace

std::vector<std::string> catalog_names() {
    return {"A_odd", "D_even_split", "E7", "T36", "T3_2q2", "T2p2_2q2", "T44", "linear_forms"};
}

Catalog catalog(const std::string& name, const CatalogParams& prm) {
    if (name == "A_odd") {
        int n = prm.n ? prm.n : 5;
        if (n < 1 || n % 2 == 0) throw UsageError("A_odd needs odd n >= 1");
        int k = (n + 1) / 2;
        std::string yk = "y^" + std::to_string(k);
        Catalog c = from_factors(name, {P("x - " + yk), P("x + " + yk)}, {}, "split A_n curve x^2 - y^(n+1)");
        c.entries.pop_back();
        c.entries[0].name = "N+";
        MF minus = mf_subset(c.factors, {1});
        minus.name = "N-";
        minus.note = c.entries[0].note;
        c.entries.push_back(minus);
        return c;
    }
    if (name == "D_even_split") {
        int n = prm.n ? prm.n : 4;
        if (n < 4 || n % 2) throw UsageError("D_even_split needs even n >= 4");
        std::string yk = "y^" + std::to_string((n - 2) / 2);
        Catalog c;
        c.name = name;
        c.factors = make_factor_list({P("y"), P("x - " + yk), P("x + " + yk)});
        c.has_factors = true;
        c.f = c.factors.product();
        for (std::vector<int> s : std::vector<std::vector<int>>{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}}) {
            MF m = mf_subset(c.factors, s);
            m.note = "split D_n curve y(x^2 - y^(n-2))";
            c.entries.push_back(m);
        }
        return c;
    }
    if (name == "E7") {
        Catalog c;
        c.name = name;
        c.f = P("x^3 + x*y^3");
        c.factors = make_factor_list({P("x"), P("x^2 + y^3")});
        c.factors.status = {Irreducibility::certified, Irreducibility::heuristic_yes};
        c.has_factors = true;
        Matrix cm = Matrix::from_rows({{P("x"), P("y")}, {P("y^2"), P("-x")}});
        const std::string note = "E7 presentation, module = cokernel of the last printed arrow";
        c.entries.push_back(entry("A", c.f, one(P("x")), one(P("x^2 + y^3")), note));
        c.entries.push_back(entry("C", c.f, cm * P("x"), cm, note));
        c.entries.push_back(entry("M1", c.f, Matrix::from_rows({{P("x"), P("y")}, {P("x*y^2"), P("-x^2")}}),
                                  Matrix::from_rows({{P("x^2"), P("y")}, {P("x*y^2"), P("-x")}}), note));
        return c;
    }
    if (name == "T36" || (name == "T3_2q2" && (prm.q == 0 || prm.q == 2))) {
        Rational l = prm.lambda;
        require_lambda(l);
        Series g = P("y - x^2"), h = P("y"), k = P("y") - lam_mul(l, "x^2");
        Catalog c = from_factors(name, {g, h, k}, {"y-x^2", "y", "y-l*x^2"}, "T_{3,6}(lambda)");
        c.entries.pop_back();
        c.entries[0].name = "M";
        c.entries[1].name = "N";
        return c;
    }
    if (name == "T3_2q2") {
        int q = prm.q;
        if (q < 3) throw UsageError("T3_2q2 needs q >= 2");
        std::string yq = "y^" + std::to_string(q);
        Catalog c = from_factors(name, {P("x - y^2"), P("x + " + yq), P("x - " + yq)}, {}, "T_{3,2q+2}");
        c.entries.pop_back();
        c.entries[0].name = "M";
        c.entries[1].name = "N";
        return c;
    }
    if (name == "T44" || (name == "T2p2_2q2" && (prm.p <= 1 && prm.q <= 1))) {
        Rational l = prm.lambda;
        require_lambda(l);
        Catalog c = from_factors(name, {P("x - y"), P("x"), P("y"), P("x") - lam_mul(l, "y")},
                                 {"x-y", "x", "y", "x-l*y"}, "T_{4,4}(lambda)");
        c.entries.pop_back();
        c.entries[0].name = "M";
        c.entries[1].name = "N";
        c.entries[2].name = "K";
        return c;
    }
    if (name == "T2p2_2q2") {
        int p = std::max(prm.p, 1), q = std::max(prm.q, 1);
        std::string xp = "x^" + std::to_string(p), yq = "y^" + std::to_string(q);
        Catalog c = from_factors(name, {P(xp + " - y"), P(xp + " + y"), P(yq + " + x"), P(yq + " - x")}, {},
                                 "T_{2p+2,2q+2}");
        c.entries.pop_back();
        c.entries[0].name = "M";
        c.entries[1].name = "N";
        c.entries[2].name = "K";
        return c;
    }
    if (name == "linear_forms") {
        std::vector<Rational> ls = prm.lambdas;
        if (ls.empty())
            for (int k = 0; k < (prm.n > 0 ? prm.n : 3); ++k) ls.push_back(k);
        std::vector<Series> fs;
        for (std::size_t i = 0; i < ls.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j)
                if (ls[i] == ls[j]) throw UsageError("linear forms must be distinct");
            fs.push_back(P("x") - lam_mul(ls[i], "y"));
        }
        Catalog c = from_factors(name, fs, {}, "distinct lines through the origin");
        for (auto& fl : c.factors.status) fl = Irreducibility::certified;
        return c;
    }
    throw UsageError("unknown catalog: " + name);
}

nlohmann::json to_json(const Series& s) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : s.terms()) {
        std::vector<int> e(m.e.begin(), m.e.begin() + s.nvars());
        terms.push_back({e, c.get_str()});
    }
    nlohmann::json j = {{"nvars", s.nvars()}, {"text", s.str()}, {"terms", terms}};
    j["precision"] = s.exact() ? nlohmann::json(nullptr) : nlohmann::json(s.precision());
    return j;
}

Series series_from_json(const nlohmann::json& j) {
    int nv = j.at("nvars").get<int>();
    std::uint32_t prec = j.contains("precision") && !j["precision"].is_null() ? j["precision"].get<std::uint32_t>() : kExact;
    Series s(nv, prec);
    for (const auto& t : j.at("terms")) {
        Monomial m;
        auto e = t.at(0).get<std::vector<int>>();
        for (std::size_t i = 0; i < e.size() && i < std::size_t(kMaxVars); ++i) m.e[i] = static_cast<std::uint16_t>(e[i]);
        s.add_term(m, parse_rational(t.at(1).get<std::string>()));
    }
    return s;
}

nlohmann::json to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const nlohmann::json& j) {
    std::vector<std::vector<Series>> rows;
    for (const auto& r : j) {
        rows.emplace_back();
        for (const auto& e : r) rows.back().push_back(series_from_json(e));
    }
    return Matrix::from_rows(rows);
}

nlohmann::json to_json(const MF& m) {
    return {{"name", m.name}, {"note", m.note}, {"f", to_json(m.f)}, {"rank", m.rank()},
            {"A", to_json(m.A)},  {"B", to_json(m.B)}};
}

MF mf_from_json(const nlohmann::json& j) {
    MF m;
    m.name = j.value("name", "");
    m.note = j.value("note", "");
    m.f = series_from_json(j.at("f"));
    m.A = matrix_from_json(j.at("A"));
    m.B = matrix_from_json(j.at("B"));
    return m;
}

std::string serialize(const MF& m) {
    std::ostringstream os;
    os << m.f.str() << "|" << m.A.str() << "|" << m.B.str();
    return os.str();
}

}  // namespace mfcat
