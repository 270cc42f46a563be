#include "ramanujan/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace ramanujan {

namespace {

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    RatFunc run() {
        RatFunc v = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("trailing input");
        return v;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + what +
                                    " in '" + std::string(src_) + "'");
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    RatFunc expr() {
        RatFunc v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }

    RatFunc term() {
        RatFunc v = factor();
        for (;;) {
            if (eat('*')) v *= factor();
            else if (eat('/')) {
                RatFunc d = factor();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else return v;
        }
    }

    RatFunc factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        RatFunc v = atom();
        if (eat('^')) {
            long e = integer_literal();
            if (e < 0 && v.is_zero()) fail("zero to a negative power");
            v = v.pow(e);
        }
        return v;
    }

    long integer_literal() {
        bool neg = false;
        skip_ws();
        if (eat('-')) neg = true;
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            fail("expected integer exponent");
        long v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + (src_[pos_] - '0');
            if (v > 1000000) fail("exponent too large");
            ++pos_;
        }
        return neg ? -v : v;
    }

    RatFunc atom() {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            return RatFunc(Rat(mpz_class(std::string(src_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            return RatFunc::variable(std::string(src_.substr(start, pos_ - start)));
        }
        fail("unexpected character");
    }
};

} // namespace

RatFunc parse_ratfunc(std::string_view src) { return Parser(src).run(); }

MultiPoly parse_poly(std::string_view src) {
    RatFunc f = parse_ratfunc(src);
    if (!f.is_polynomial())
        throw std::invalid_argument("parse_poly: expression is not a polynomial: '" + std::string(src) + "'");
    Rat d = f.den().constant_value();
    return d.inverse() * f.num();
}

} // namespace ramanujan
