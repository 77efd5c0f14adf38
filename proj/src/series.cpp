#include "mfcat/series.hpp"

#include "mfcat/errors.hpp"

#include <algorithm>
#include <sstream>

namespace mfcat {

bool Monomial::divides(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
        unsigned s = unsigned(e[i]) + o.e[i];
        if (s > UINT16_MAX) throw std::overflow_error("exponent overflow");
        r.e[i] = static_cast<std::uint16_t>(s);
    }
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] - o.e[i]);
    return r;
}

std::string Ord::str() const {
    switch (kind) {
        case Kind::value: return std::to_string(n);
        case Kind::infinite: return "inf";
        case Kind::at_least: return ">=" + std::to_string(n);
    }
    return "?";
}

Series::Series(int nvars, std::uint32_t prec) : nv_(nvars), prec_(prec) {
    if (nvars < 1 || nvars > kMaxVars) throw UsageError("variable count must be between 1 and 4");
}

Series Series::constant(int nvars, const Rational& c, std::uint32_t prec) {
    return monomial(nvars, Monomial{}, c, prec);
}

Series Series::variable(int nvars, int index, std::uint32_t prec) {
    if (index < 0 || index >= nvars) throw UsageError("variable index out of range");
    Monomial m;
    m.e[index] = 1;
    return monomial(nvars, m, 1, prec);
}

Series Series::monomial(int nvars, const Monomial& m, const Rational& c, std::uint32_t prec) {
    Series s(nvars, prec);
    s.add_term(m, c);
    return s;
}

Rational Series::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Series::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

void Series::add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0 || m.degree() >= prec_) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void Series::check_same(const Series& o) const {
    if (nv_ != o.nv_) throw UsageError("variable-count mismatch");
}

Series Series::operator-() const {
    Series r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Series& Series::operator+=(const Series& o) {
    check_same(o);
    if (o.prec_ < prec_) *this = truncate(o.prec_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Series& Series::operator-=(const Series& o) {
    check_same(o);
    if (o.prec_ < prec_) *this = truncate(o.prec_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Series& Series::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    a.check_same(b);
    Series r(a.nv_, std::min(a.prec_, b.prec_));
    for (const auto& [ma, ca] : a.terms_) {
        if (ma.degree() >= r.prec_) break;
        for (const auto& [mb, cb] : b.terms_) {
            if (ma.degree() + mb.degree() >= r.prec_) break;
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

Series mul(const Series& a, const Series& b) { return a * b; }
Series add(const Series& a, const Series& b) { return a + b; }

bool Series::operator==(const Series& o) const {
    if (nv_ != o.nv_) return false;
    std::uint32_t n = std::min(prec_, o.prec_);
    if (n == prec_ && n == o.prec_) return terms_ == o.terms_;
    return truncate(n).terms_ == o.truncate(n).terms_;
}

Series Series::truncate(std::uint32_t n) const {
    Series r(nv_, std::min(n, prec_));
    for (const auto& [m, c] : terms_) {
        if (m.degree() >= r.prec_) break;
        r.terms_.emplace_hint(r.terms_.end(), m, c);
    }
    return r;
}

Series Series::as_exact() const {
    Series r = *this;
    r.prec_ = kExact;
    return r;
}

Ord Series::ord() const {
    Ord o;
    if (!terms_.empty()) {
        o.kind = Ord::Kind::value;
        o.n = terms_.begin()->first.degree();
    } else if (!exact()) {
        o.kind = Ord::Kind::at_least;
        o.n = prec_;
    }
    return o;
}

Series Series::derivative(int var) const {
    if (var < 0 || var >= nv_) throw UsageError("variable index out of range");
    Series r(nv_, prec_ == kExact ? kExact : (prec_ == 0 ? 0 : prec_ - 1));
    for (const auto& [m, c] : terms_) {
        if (m.e[var] == 0) continue;
        Monomial d = m;
        --d.e[var];
        r.add_term(d, c * m.e[var]);
    }
    return r;
}

Series Series::pow(unsigned k) const {
    Series r = constant(nv_, 1, prec_);
    Series b = *this;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

Series Series::invert_unit(std::uint32_t n) const {
    Rational c0 = constant_term();
    if (sgn(c0) == 0) throw UsageError("invert_unit: series is not a unit (ord >= 1)");
    Rational inv0 = 1 / c0;
    Series tail = truncate(n);
    tail.add_term(Monomial{}, -c0);
    tail.prec_ = std::min(n, prec_);
    Series one = constant(nv_, 1, tail.prec_);
    // b <- (1 - tail*b)/c0 gains one correct degree per step.
    Series b = constant(nv_, inv0, tail.prec_);
    for (std::uint32_t k = 1; k < tail.prec_; ++k) b = (one - tail * b) * inv0;
    return b;
}

Series Series::substitute(int var, const Series& s) const {
    check_same(s);
    Series r(nv_, std::min(prec_, s.exact() ? kExact : s.prec_));
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        rest.e[var] = 0;
        r += monomial(nv_, rest, c) * s.pow(m.e[var]);
    }
    return r;
}

std::vector<std::string> default_var_names(int nvars) {
    switch (nvars) {
        case 1: return {"t"};
        case 2: return {"x", "y"};
        case 3: return {"x", "y", "z"};
        default: return {"x", "y", "u", "v"};
    }
}

std::string Series::str(const std::vector<std::string>& names) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = sgn(c) < 0;
        Rational a = neg ? Rational(-c) : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        std::string mono;
        for (int i = 0; i < nv_; ++i) {
            if (m.e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names.at(i);
            if (m.e[i] > 1) mono += "^" + std::to_string(m.e[i]);
        }
        if (mono.empty())
            os << a.get_str();
        else if (a == 1)
            os << mono;
        else
            os << a.get_str() << "*" << mono;
    }
    if (first) os << "0";
    if (!exact()) os << " + O(" << prec_ << ")";
    return os.str();
}

std::string Series::str() const { return str(default_var_names(nv_)); }

std::optional<Series> exact_divide(const Series& a, const Series& b) {
    if (b.is_zero()) return std::nullopt;
    auto lex_lead = [](const Series& s) {
        auto best = s.terms().begin();
        for (auto it = s.terms().begin(); it != s.terms().end(); ++it)
            if (it->first.e > best->first.e) best = it;
        return *best;
    };
    Series r = a.as_exact(), q(a.nvars());
    auto [lb, cb] = lex_lead(b);
    Series bb = b.as_exact();
    while (!r.is_zero()) {
        auto [lr, cr] = lex_lead(r);
        if (!lb.divides(lr)) return std::nullopt;
        Series t = Series::monomial(a.nvars(), lr / lb, cr / cb);
        q += t;
        r -= t * bb;
    }
    return q;
}

bool are_associates(const Series& a, const Series& b) {
    if (auto q = exact_divide(a, b); q && sgn(q->constant_term()) != 0) return true;
    if (auto q = exact_divide(b, a); q && sgn(q->constant_term()) != 0) return true;
    return false;
}

}  // namespace mfcat
