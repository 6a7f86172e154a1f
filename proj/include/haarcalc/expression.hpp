#pragma once

// Recursive-descent reader for rational expressions in N, e.g.
//   "8(2(N+1)^2-3)/((N+1)N(N-1)(N-2))"
// Juxtaposition means multiplication; '^' takes a nonnegative integer exponent.

#include "exactmath.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace haarcalc {

class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

class RatFuncParser {
public:
    explicit RatFuncParser(std::string_view text) : s_(text) {}

    RatFuncN parse()
    {
        RatFuncN v = expr();
        skip_ws();
        if (pos_ != s_.size()) {
            fail("unexpected character");
        }
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw parse_error(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }

    char peek()
    {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    RatFuncN expr()
    {
        RatFuncN v = term();
        for (;;) {
            const char c = peek();
            if (c == '+') {
                ++pos_;
                v += term();
            } else if (c == '-') {
                ++pos_;
                v -= term();
            } else {
                return v;
            }
        }
    }

    static bool starts_factor(char c)
    {
        return c == '(' || c == 'N' || std::isdigit(static_cast<unsigned char>(c));
    }

    RatFuncN term()
    {
        RatFuncN v = unary();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                v *= unary();
            } else if (c == '/') {
                ++pos_;
                RatFuncN d = unary();
                if (d.is_zero()) {
                    fail("division by zero");
                }
                v /= d;
            } else if (starts_factor(c)) {
                v *= power();
            } else {
                return v;
            }
        }
    }

    RatFuncN unary()
    {
        const char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    RatFuncN power()
    {
        RatFuncN base = primary();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            const BigInt e = integer();
            if (e > 64) {
                fail("exponent too large");
            }
            RatFuncN acc(1);
            for (long k = 0; k < e.get_si(); ++k) {
                acc *= base;
            }
            return acc;
        }
        return base;
    }

    BigInt integer()
    {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected integer");
        }
        return BigInt(std::string(s_.substr(start, pos_ - start)));
    }

    RatFuncN primary()
    {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            RatFuncN v = expr();
            if (peek() != ')') {
                fail("expected ')'");
            }
            ++pos_;
            return v;
        }
        if (c == 'N') {
            ++pos_;
            return RatFuncN::variable();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return RatFuncN(BigRational(integer()));
        }
        fail("expected number, N or '('");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline RatFuncN parse_ratfunc(std::string_view text)
{
    return detail::RatFuncParser(text).parse();
}

} // namespace haarcalc
