#pragma once

// Exact arithmetic kernel: GMP-backed rationals, dense univariate polynomials
// in the symbolic dimension N, and reduced rational functions of N.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace haarcalc {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Raised when a rational function is evaluated at one of its poles.
class pole_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline BigRational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

inline BigInt factorial(unsigned long n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k)
{
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline int sign(const BigRational& q) { return sgn(q); }

// ---------------------------------------------------------------------------
// PolyN

/// Dense polynomial in N with rational coefficients, stored by ascending power.
/// The zero polynomial has no stored coefficients and degree -1.
class PolyN {
public:
    PolyN() = default;
    PolyN(const BigRational& c)
    {
        if (c != 0) {
            c_.push_back(c);
        }
    }
    PolyN(long c) : PolyN(BigRational(c)) {}

    static PolyN from_coefficients(std::vector<BigRational> ascending)
    {
        PolyN p;
        p.c_ = std::move(ascending);
        p.trim();
        return p;
    }

    /// The monomial N.
    static PolyN variable() { return from_coefficients({BigRational(0), BigRational(1)}); }

    /// N + c
    static PolyN linear(const BigRational& c) { return from_coefficients({c, BigRational(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::span<const BigRational> coefficients() const { return c_; }

    BigRational coefficient(int k) const
    {
        if (k < 0 || k > degree()) {
            return BigRational(0);
        }
        return c_[static_cast<std::size_t>(k)];
    }

    const BigRational& leading() const
    {
        if (c_.empty()) {
            throw std::domain_error("leading coefficient of the zero polynomial");
        }
        return c_.back();
    }

    BigRational operator()(const BigRational& x) const
    {
        BigRational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc *= x;
            acc += *it;
        }
        return acc;
    }

    /// p(N + by), computed by Horner composition.
    PolyN shifted(const BigRational& by = BigRational(1)) const
    {
        const PolyN step = linear(by);
        PolyN acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * step + PolyN(*it);
        }
        return acc;
    }

    PolyN monic() const
    {
        if (is_zero()) {
            return *this;
        }
        const BigRational lc = leading();
        PolyN r = *this;
        for (auto& c : r.c_) {
            c /= lc;
        }
        return r;
    }

    PolyN operator-() const
    {
        PolyN r = *this;
        for (auto& c : r.c_) {
            c = -c;
        }
        return r;
    }

    PolyN& operator+=(const PolyN& o)
    {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size(), BigRational(0));
        }
        for (std::size_t k = 0; k < o.c_.size(); ++k) {
            c_[k] += o.c_[k];
        }
        trim();
        return *this;
    }

    PolyN& operator-=(const PolyN& o) { return *this += -o; }

    PolyN& operator*=(const BigRational& s)
    {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& c : c_) {
            c *= s;
        }
        return *this;
    }

    friend PolyN operator+(PolyN a, const PolyN& b) { return a += b; }
    friend PolyN operator-(PolyN a, const PolyN& b) { return a -= b; }
    friend PolyN operator*(PolyN a, const BigRational& s) { return a *= s; }
    friend PolyN operator*(const BigRational& s, PolyN a) { return a *= s; }

    friend PolyN operator*(const PolyN& a, const PolyN& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<BigRational> out(a.c_.size() + b.c_.size() - 1, BigRational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                out[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return from_coefficients(std::move(out));
    }

    PolyN& operator*=(const PolyN& o) { return *this = *this * o; }

    friend bool operator==(const PolyN& a, const PolyN& b) { return a.c_ == b.c_; }

    /// Euclidean division: returns (q, r) with a = q*b + r and deg r < deg b.
    friend std::pair<PolyN, PolyN> divmod(const PolyN& a, const PolyN& b)
    {
        if (b.is_zero()) {
            throw std::domain_error("polynomial division by zero");
        }
        if (a.degree() < b.degree()) {
            return {PolyN{}, a};
        }
        std::vector<BigRational> rem = a.c_;
        std::vector<BigRational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), BigRational(0));
        const BigRational& lb = b.c_.back();
        const int db = b.degree();
        for (int k = a.degree(); k >= db; --k) {
            const BigRational f = rem[static_cast<std::size_t>(k)] / lb;
            if (f == 0) {
                continue;
            }
            quo[static_cast<std::size_t>(k - db)] = f;
            for (int j = 0; j <= db; ++j) {
                rem[static_cast<std::size_t>(k - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
            }
        }
        return {from_coefficients(std::move(quo)), from_coefficients(std::move(rem))};
    }

    /// Quotient of a division known to be exact; throws std::logic_error otherwise.
    friend PolyN exact_quotient(const PolyN& a, const PolyN& b)
    {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) {
            throw std::logic_error("polynomial division expected to be exact");
        }
        return q;
    }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    friend PolyN gcd(PolyN a, PolyN b)
    {
        while (!b.is_zero()) {
            PolyN r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) {
            c_.pop_back();
        }
    }

    std::vector<BigRational> c_;
};

// ---------------------------------------------------------------------------
// RatFuncN

/// Rational function of N in canonical form: numerator and denominator coprime,
/// denominator monic, zero stored as 0/1.
class RatFuncN {
public:
    RatFuncN() : den_(1) {}
    RatFuncN(const BigRational& c) : num_(c), den_(1) {}
    RatFuncN(long c) : num_(c), den_(1) {}
    RatFuncN(PolyN p) : num_(std::move(p)), den_(1) {}

    RatFuncN(PolyN num, PolyN den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero()) {
            throw std::domain_error("rational function with zero denominator");
        }
        canonicalize();
    }

    static RatFuncN variable() { return RatFuncN(PolyN::variable()); }

    const PolyN& numerator() const { return num_; }
    const PolyN& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// Exact substitution N = n0.
    BigRational evaluate(const BigRational& n0) const
    {
        const BigRational d = den_(n0);
        if (d == 0) {
            throw pole_error("rational function has a pole at N = " + n0.get_str());
        }
        return num_(n0) / d;
    }

    /// f(N + 1).
    RatFuncN shifted() const { return RatFuncN(num_.shifted(), den_.shifted()); }

    /// deg(denominator) - deg(numerator); the decay exponent as N grows.
    int degree_gap() const
    {
        if (is_zero()) {
            throw std::domain_error("degree gap of the zero rational function");
        }
        return den_.degree() - num_.degree();
    }

    /// Sign for large positive N (0 for the zero function).
    int sign_at_infinity() const { return is_zero() ? 0 : sgn(num_.leading()); }

    RatFuncN operator-() const
    {
        RatFuncN r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFuncN operator+(const RatFuncN& a, const RatFuncN& b)
    {
        if (a.den_ == b.den_) {
            return RatFuncN(a.num_ + b.num_, a.den_);
        }
        return RatFuncN(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend RatFuncN operator-(const RatFuncN& a, const RatFuncN& b) { return a + (-b); }

    friend RatFuncN operator*(const RatFuncN& a, const RatFuncN& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        // Cross-cancel first to keep intermediate degrees low.
        const PolyN g1 = gcd(a.num_, b.den_);
        const PolyN g2 = gcd(b.num_, a.den_);
        RatFuncN r;
        r.num_ = exact_quotient(a.num_, g1) * exact_quotient(b.num_, g2);
        r.den_ = exact_quotient(a.den_, g2) * exact_quotient(b.den_, g1);
        r.normalize_leading();
        return r;
    }

    friend RatFuncN operator/(const RatFuncN& a, const RatFuncN& b)
    {
        if (b.is_zero()) {
            throw std::domain_error("division by the zero rational function");
        }
        RatFuncN inv;
        inv.num_ = b.den_;
        inv.den_ = b.num_;
        inv.normalize_leading();
        return a * inv;
    }

    RatFuncN& operator+=(const RatFuncN& o) { return *this = *this + o; }
    RatFuncN& operator-=(const RatFuncN& o) { return *this = *this - o; }
    RatFuncN& operator*=(const RatFuncN& o) { return *this = *this * o; }
    RatFuncN& operator/=(const RatFuncN& o) { return *this = *this / o; }

    friend bool operator==(const RatFuncN& a, const RatFuncN& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void canonicalize()
    {
        if (num_.is_zero()) {
            den_ = PolyN(1);
            return;
        }
        const PolyN g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_quotient(num_, g);
            den_ = exact_quotient(den_, g);
        }
        normalize_leading();
    }

    void normalize_leading()
    {
        if (num_.is_zero()) {
            den_ = PolyN(1);
            return;
        }
        const BigRational lc = den_.leading();
        if (lc != 1) {
            const BigRational inv = 1 / lc;
            num_ *= inv;
            den_ *= inv;
        }
    }

    PolyN num_;
    PolyN den_;
};

inline bool is_zero(const BigRational& q) { return q == 0; }
inline bool is_zero(const RatFuncN& f) { return f.is_zero(); }

/// Falling product (N + hi)(N + hi - 1)...(N + lo) for hi >= lo; 1 if empty.
inline PolyN falling_product(long hi, long lo)
{
    PolyN acc(1);
    for (long k = hi; k >= lo; --k) {
        acc *= PolyN::linear(BigRational(k));
    }
    return acc;
}

} // namespace haarcalc
