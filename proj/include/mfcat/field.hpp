#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mfcat {

using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

// Exact field used by the linear-algebra kernels.  Series coefficients are
// always rational; in prime mode they are mapped into GF(p) before elimination.
struct RationalField {
    using value_type = Rational;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from(const Rational& q) const { return q; }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const { return 1 / a; }
    // a -= c*b
    void submul(value_type& a, const value_type& c, const value_type& b) const { a -= c * b; }
    Rational lift(const value_type& a) const { return a; }
};

struct PrimeField {
    using value_type = std::uint64_t;
    std::uint64_t p;

    explicit PrimeField(std::uint64_t prime);

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from(const Rational& q) const;
    bool is_zero(value_type a) const { return a == 0; }
    value_type add(value_type a, value_type b) const { return (a + b) % p; }
    value_type sub(value_type a, value_type b) const { return (a + p - b) % p; }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>((static_cast<unsigned __int128>(a) * b) % p);
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
    value_type inv(value_type a) const;
    void submul(value_type& a, value_type c, value_type b) const { a = sub(a, mul(c, b)); }
    // Symmetric representative, as a rational.
    Rational lift(value_type a) const;
};

bool is_prime(std::uint64_t n);

// Which field a computation runs over.
struct FieldContext {
    enum class Kind { rational, prime };
    Kind kind = Kind::rational;
    std::uint64_t p = 0;

    static FieldContext rational() { return {}; }
    static FieldContext prime(std::uint64_t p);
    std::string str() const;
    // Parses "rational", "Q", "gf:<p>" or "p:<p>".
    static FieldContext parse(const std::string& text);
};

}  // namespace mfcat
