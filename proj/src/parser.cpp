#include "parser.hpp"

#include <cctype>

namespace lndkit {

namespace {

constexpr unsigned long kMaxExponent = 1u << 20;

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input", pos_);
        return p;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ == s_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg, size_t at) { throw ParseError(msg, at); }

    Poly expr() {
        bool negate = false;
        if (peek() == '-') {
            ++pos_;
            negate = true;
        }
        Poly acc = term();
        if (negate) acc = -acc;
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                Poly t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = factor();
        while (peek() == '*') {
            ++pos_;
            acc *= factor();
        }
        return acc;
    }

    Poly factor() {
        Poly base_val = base();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            size_t at = pos_;
            unsigned long e = natural(at);
            base_val = base_val.pow(static_cast<uint32_t>(e));
        }
        return base_val;
    }

    Poly base() {
        if (at_end()) fail("expected polynomial, found end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (peek() != ')') fail("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            return Poly::var(Var::X);
        }
        if (c == 'y') {
            ++pos_;
            return Poly::var(Var::Y);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational();
        fail(std::string("expected number, variable or '(', found '") + c + "'", pos_);
    }

    Poly rational() {
        mpz_class num = integer_digits();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            size_t at = pos_;
            if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("expected denominator digits after '/'", at);
            mpz_class den = integer_digits();
            if (den == 0) fail("zero denominator", at);
            Rat r(num, den);
            r.canonicalize();
            return Poly::constant(r);
        }
        return Poly::constant(Rat(num));
    }

    mpz_class integer_digits() {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return mpz_class(s_.substr(start, pos_ - start), 10);
    }

    unsigned long natural(size_t at) {
        if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected exponent digits after '^'", at);
        mpz_class n = integer_digits();
        if (n > kMaxExponent) fail("exponent too large", at);
        return n.get_ui();
    }
};

}  // namespace

Poly parse_poly(const std::string& text) { return Parser(text).run(); }

}  // namespace lndkit
