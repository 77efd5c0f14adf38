#include "mfcat/errors.hpp"
#include "mfcat/series.hpp"

#include <cctype>

namespace mfcat {

namespace {

constexpr unsigned kMaxExponent = 4096;

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars, ParseOptions opts)
        : s_(text), vars_(vars), opts_(opts), nv_(static_cast<int>(vars.size())) {}

    Series run() {
        skip();
        if (pos_ >= s_.size()) fail("empty expression");
        Series r = expr();
        skip();
        if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return r;
    }

private:
    const std::string& s_;
    const std::vector<std::string>& vars_;
    ParseOptions opts_;
    int nv_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Series expr() {
        Series r = term();
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-') return r;
            ++pos_;
            Series t = term();
            if (c == '+')
                r += t;
            else
                r -= t;
        }
    }

    bool starts_atom(char c) const {
        return std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '(';
    }

    Series term() {
        Series r = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                r = r * factor();
            } else if (c == '/') {
                ++pos_;
                std::size_t at = pos_;
                Series d = factor();
                if (d.terms().size() != 1 || d.max_degree() != 0) {
                    pos_ = at;
                    fail("division only by a nonzero constant");
                }
                r *= Rational(1) / d.constant_term();
            } else if (opts_.compact && starts_atom(c)) {
                r = r * power();
            } else {
                return r;
            }
        }
    }

    Series factor() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == '+') {
            ++pos_;
            return factor();
        }
        return power();
    }

    unsigned read_uint(const char* what) {
        std::size_t start = pos_;
        unsigned long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + unsigned(s_[pos_] - '0');
            if (v > kMaxExponent) {
                pos_ = start;
                fail(std::string(what) + " overflow");
            }
            ++pos_;
        }
        if (pos_ == start) fail(std::string("expected ") + what);
        return static_cast<unsigned>(v);
    }

    Series raise(const Series& b, unsigned k, std::size_t at) {
        if (b.max_degree() * std::size_t(k) > kMaxExponent) {
            pos_ = at;
            fail("exponent overflow");
        }
        return b.pow(k);
    }

    Series power() {
        Series b = atom();
        if (peek() == '^') {
            ++pos_;
            skip();
            std::size_t at = pos_;
            b = raise(b, read_uint("exponent"), at);
        }
        return b;
    }

    Series atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Series r = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Series::constant(nv_, Rational(mpz_class(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected '") + c + "'");
    }

    Series variable() {
        std::size_t start = pos_;
        std::string name;
        if (opts_.compact) {
            name = s_.substr(pos_++, 1);
        } else {
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            name = s_.substr(start, pos_ - start);
        }
        int idx = -1;
        for (int i = 0; i < nv_; ++i)
            if (vars_[i] == name) idx = i;
        if (idx < 0) {
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        Series v = Series::variable(nv_, idx);
        if (opts_.compact && pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t at = pos_;
            v = raise(v, read_uint("exponent"), at);
        }
        return v;
    }
};

}  // namespace

Series parse(const std::string& text, const std::vector<std::string>& vars, ParseOptions opts) {
    if (vars.empty() || vars.size() > std::size_t(kMaxVars)) throw UsageError("between 1 and 4 variables required");
    return Parser(text, vars, opts).run();
}

Series parse(const std::string& text, ParseOptions opts) { return parse(text, {"x", "y"}, opts); }

}  // namespace mfcat
