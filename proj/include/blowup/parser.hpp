#ifndef BLOWUP_PARSER_HPP
#define BLOWUP_PARSER_HPP

#include <cctype>
#include <string>

#include "blowup/ring.hpp"

namespace blowup {

struct parse_error : error {
    int line, col;
    parse_error(const std::string& msg, int l, int c)
        : error(msg + " (line " + std::to_string(l) + ", col " + std::to_string(c) + ")"),
          line(l), col(c) {}
};

// Recursive-descent parser for the polynomial grammar: integer literals,
// variable names, + - *, ^ with non-negative integer exponent, parentheses.
// Explicit * is required; "x y" or "2x" are syntax errors.
class PolyParser {
public:
    PolyParser(const RingCtx& R, const std::string& text)
        : R_(R), s_(text) {}

    Polynomial parse() {
        Polynomial f = expr();
        skip_ws();
        if (pos_ < s_.size())
            fail("unexpected trailing input");
        return f;
    }

private:
    const RingCtx& R_;
    std::string s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, line_, col_); }

    void advance() {
        if (s_[pos_] == '\n') { ++line_; col_ = 1; }
        else ++col_;
        ++pos_;
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            advance();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) { advance(); return true; }
        return false;
    }

    Polynomial expr() {
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        Polynomial f = term();
        if (neg) f = poly_neg(R_, f);
        for (;;) {
            if (accept('+')) f = poly_add(R_, f, term());
            else if (accept('-')) f = poly_sub(R_, f, term());
            else break;
        }
        return f;
    }

    Polynomial term() {
        Polynomial f = factor();
        while (accept('*')) f = poly_mul(R_, f, factor());
        return f;
    }

    Polynomial factor() {
        Polynomial f = base();
        if (accept('^')) {
            long k = integer();
            Polynomial r = Polynomial::constant(R_.nvars(), 1);
            for (long i = 0; i < k; ++i) r = poly_mul(R_, r, f);
            return r;
        }
        return f;
    }

    long integer() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000000L) fail("integer literal too large");
            advance();
        }
        return v;
    }

    Polynomial base() {
        char c = peek();
        if (c == '(') {
            advance();
            Polynomial f = expr();
            if (!accept(')')) fail("expected ')'");
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = integer();
            return Polynomial::constant(R_.nvars(), R_.field.reduce(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                name += s_[pos_];
                advance();
            }
            int idx = R_.var_index(name);
            if (idx < 0) fail("unknown variable '" + name + "'");
            return Polynomial::term(R_.var_monomial(idx), 1);
        }
        fail("unexpected character");
    }
};

inline Polynomial parse_poly(const RingCtx& R, const std::string& text) {
    return PolyParser(R, text).parse();
}

} // namespace blowup

#endif
