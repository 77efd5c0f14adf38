#pragma once

#include "mfcat/field.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mfcat {

constexpr int kMaxVars = 4;
constexpr std::uint32_t kExact = UINT32_MAX;

struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};

    unsigned degree() const { return unsigned(e[0]) + e[1] + e[2] + e[3]; }
    bool divides(const Monomial& o) const;
    Monomial operator*(const Monomial& o) const;
    // Requires divides(o).
    Monomial operator/(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

// Ascending total degree, then descending lexicographic (x^2, x*y, y^2).
struct GradedOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.e > b.e;
    }
};

// Result of ord(): a value, infinity (exact zero) or a lower bound.
struct Ord {
    enum class Kind { value, infinite, at_least };
    Kind kind = Kind::infinite;
    unsigned n = 0;

    bool is_value() const { return kind == Kind::value; }
    std::string str() const;
    bool operator==(const Ord& o) const { return kind == o.kind && n == o.n; }
};

// Power series in nv variables, known modulo m^prec.  prec == kExact marks an
// exact polynomial.
class Series {
public:
    using Terms = std::map<Monomial, Rational, GradedOrder>;

    Series() = default;
    explicit Series(int nvars, std::uint32_t prec = kExact);

    static Series constant(int nvars, const Rational& c, std::uint32_t prec = kExact);
    static Series variable(int nvars, int index, std::uint32_t prec = kExact);
    static Series monomial(int nvars, const Monomial& m, const Rational& c = 1, std::uint32_t prec = kExact);

    int nvars() const { return nv_; }
    std::uint32_t precision() const { return prec_; }
    bool exact() const { return prec_ == kExact; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Monomial& m) const;
    Rational constant_term() const { return coeff(Monomial{}); }
    // Highest total degree of a stored term; 0 for zero.
    unsigned max_degree() const;

    void add_term(const Monomial& m, const Rational& c);

    Series operator-() const;
    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Rational& c);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(Series a, const Rational& c) { return a *= c; }
    friend Series operator*(const Rational& c, Series a) { return a *= c; }
    bool operator==(const Series& o) const;
    bool operator!=(const Series& o) const { return !(*this == o); }

    Series truncate(std::uint32_t n) const;
    // Same value with precision forgotten; used for known polynomials.
    Series as_exact() const;
    Ord ord() const;
    Series derivative(int var) const;
    Series pow(unsigned k) const;
    Series invert_unit(std::uint32_t n) const;
    // Substitute the variable `var` by the series `s`.
    Series substitute(int var, const Series& s) const;

    std::string str(const std::vector<std::string>& names) const;
    std::string str() const;

private:
    int nv_ = 2;
    std::uint32_t prec_ = kExact;
    Terms terms_;

    void check_same(const Series& o) const;
};

Series mul(const Series& a, const Series& b);
Series add(const Series& a, const Series& b);

// Exact polynomial quotient a/b when b divides a, otherwise nullopt.
std::optional<Series> exact_divide(const Series& a, const Series& b);
// Generators of the same principal ideal in k[[x..]] up to a polynomial unit.
bool are_associates(const Series& a, const Series& b);

std::vector<std::string> default_var_names(int nvars);

struct ParseOptions {
    // Accepts "x3+xy3": digits after a variable are an exponent and
    // juxtaposition is multiplication.
    bool compact = false;
};

Series parse(const std::string& text, const std::vector<std::string>& vars, ParseOptions opts = {});
Series parse(const std::string& text, ParseOptions opts = {});

}  // namespace mfcat
