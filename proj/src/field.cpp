#include "mfcat/field.hpp"

#include "mfcat/errors.hpp"

namespace mfcat {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw UsageError("not a rational number: " + text);
    q.canonicalize();
    if (q.get_den() == 0) throw UsageError("zero denominator: " + text);
    return q;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint64_t prime) : p(prime) {
    if (!is_prime(prime) || prime >= (1ULL << 62)) throw UsageError("field modulus must be a prime below 2^62");
}

PrimeField::value_type PrimeField::inv(value_type a) const {
    if (a == 0) throw std::domain_error("inverse of zero in GF(p)");
    // Fermat
    value_type r = 1, b = a, e = p - 2;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

PrimeField::value_type PrimeField::from(const Rational& q) const {
    mpz_class P(std::to_string(p));
    mpz_class num = q.get_num() % P;
    if (num < 0) num += P;
    mpz_class den = q.get_den() % P;
    if (den == 0) throw UsageError("denominator divisible by the field characteristic " + std::to_string(p));
    value_type n = std::stoull(num.get_str()), d = std::stoull(den.get_str());
    return mul(n, inv(d));
}

Rational PrimeField::lift(value_type a) const {
    mpz_class v(std::to_string(a));
    if (a > p / 2) v -= mpz_class(std::to_string(p));
    return Rational(v);
}

FieldContext FieldContext::prime(std::uint64_t p) {
    if (!is_prime(p)) throw UsageError("not a prime: " + std::to_string(p));
    FieldContext c;
    c.kind = Kind::prime;
    c.p = p;
    return c;
}

std::string FieldContext::str() const {
    return kind == Kind::rational ? std::string("Q") : "GF(" + std::to_string(p) + ")";
}

FieldContext FieldContext::parse(const std::string& text) {
    if (text.empty() || text == "rational" || text == "Q" || text == "q") return rational();
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        std::string head = text.substr(0, colon), tail = text.substr(colon + 1);
        if (head == "gf" || head == "GF" || head == "p") {
            try {
                return prime(std::stoull(tail));
            } catch (const std::logic_error&) {
                throw UsageError("bad field spec: " + text);
            }
        }
    }
    throw UsageError("bad field spec: " + text + " (expected rational or gf:<prime>)");
}

}  // namespace mfcat
