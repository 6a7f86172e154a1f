#pragma once

// Text forms of polynomials and rational functions of N: a canonical ASCII
// form (used in JSON/CSV output and accepted back by parse_ratfunc), and a
// LaTeX form with integer roots factored out for documentation tables.

#include "exactmath.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

namespace haarcalc {

/// Descending-power form, e.g. "3*N^2-N+1/2".
inline std::string to_string(const PolyN& p, std::string_view var = "N")
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const BigRational c = p.coefficient(k);
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        const BigRational a = abs(c);
        if (negative) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        if (k == 0) {
            out += a.get_str();
            continue;
        }
        if (a != 1) {
            out += a.get_str();
            out += '*';
        }
        out += var;
        if (k > 1) {
            out += '^' + std::to_string(k);
        }
    }
    return out;
}

namespace detail {

inline int term_count(const PolyN& p)
{
    int count = 0;
    for (const auto& c : p.coefficients()) {
        count += (c != 0);
    }
    return count;
}

/// Rescales num/den to integer coefficients with no common content and a
/// positive leading denominator coefficient.
inline std::pair<PolyN, PolyN> integer_form(const PolyN& num, const PolyN& den)
{
    BigInt l = 1;
    BigInt g = 0;
    for (const PolyN* p : {&num, &den}) {
        for (const auto& c : p->coefficients()) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        }
    }
    for (const PolyN* p : {&num, &den}) {
        for (const auto& c : p->coefficients()) {
            const BigInt scaled = c.get_num() * (l / c.get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
        }
    }
    if (g == 0) {
        g = 1;
    }
    BigRational factor = make_rational(l, g);
    if (den.leading() < 0) {
        factor = -factor;
    }
    return {num * factor, den * factor};
}

} // namespace detail

/// Canonical ASCII form "num/den", e.g. "-1/(N^3-N)" or "(N+1)/N".
inline std::string to_string(const RatFuncN& f)
{
    if (f.is_zero()) {
        return "0";
    }
    const auto [num, den] = detail::integer_form(f.numerator(), f.denominator());
    const std::string n = to_string(num);
    if (den == PolyN(1)) {
        return n;
    }
    std::string out = detail::term_count(num) > 1 ? "(" + n + ")" : n;
    out += '/';
    const bool bare = detail::term_count(den) == 1 && (den.degree() == 0 || den.leading() == 1);
    out += bare ? to_string(den) : "(" + to_string(den) + ")";
    return out;
}

/// Integer roots of p with multiplicities, and the cofactor left after removing them.
inline std::pair<std::map<long, int>, PolyN> split_integer_roots(PolyN p, long search = 32)
{
    std::map<long, int> roots;
    if (p.degree() <= 0) {
        return {roots, p};
    }
    for (long r = -search; r <= search; ++r) {
        const PolyN factor = PolyN::linear(BigRational(-r));
        while (p.degree() > 0 && p(BigRational(r)) == 0) {
            p = exact_quotient(p, factor);
            ++roots[r];
        }
    }
    return {roots, p};
}

namespace detail {

inline std::string latex_factor(long root, int mult)
{
    std::string base;
    if (root == 0) {
        base = "N";
    } else {
        base = root > 0 ? "(N-" + std::to_string(root) + ")" : "(N+" + std::to_string(-root) + ")";
    }
    if (mult > 1) {
        base += "^{" + std::to_string(mult) + "}";
    }
    return base;
}

inline std::string latex_poly(const PolyN& p)
{
    std::string s = to_string(p);
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '*') {
            continue;
        }
        if (s[i] == '^') {
            std::size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                ++j;
            }
            out += "^{" + s.substr(i + 1, j - i - 1) + "}";
            i = j - 1;
            continue;
        }
        out += s[i];
    }
    return out;
}

/// Factored LaTeX for an integer polynomial; the sign is returned separately.
inline std::string latex_factored(const PolyN& p, bool& negative)
{
    auto [roots, rest] = split_integer_roots(p);
    negative = false;
    std::string out;
    std::string rest_str;
    if (rest.degree() == 0) {
        BigRational c = rest.leading();
        negative = c < 0;
        c = abs(c);
        if (c != 1 || roots.empty()) {
            rest_str = c.get_str();
        }
    } else {
        if (rest.leading() < 0) {
            negative = true;
            rest = -rest;
        }
        rest_str = roots.empty() ? latex_poly(rest) : "(" + latex_poly(rest) + ")";
    }
    out = rest_str;
    // Descending roots read as (N+1)N(N-1)... like the usual tables.
    for (auto it = roots.begin(); it != roots.end(); ++it) {
        out += latex_factor(it->first, it->second);
    }
    return out;
}

} // namespace detail

/// LaTeX form with integer roots factored, e.g. "-\frac{1}{(N+1)N(N-1)}".
inline std::string to_latex(const RatFuncN& f)
{
    if (f.is_zero()) {
        return "0";
    }
    const auto [num, den] = detail::integer_form(f.numerator(), f.denominator());
    bool neg_num = false;
    bool neg_den = false;
    const std::string n = detail::latex_factored(num, neg_num);
    const std::string d = detail::latex_factored(den, neg_den);
    const std::string sign = (neg_num != neg_den) ? "-" : "";
    if (d == "1") {
        return sign + n;
    }
    return sign + "\\frac{" + n + "}{" + d + "}";
}

} // namespace haarcalc
