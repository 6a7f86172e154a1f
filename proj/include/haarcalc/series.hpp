#pragma once

// Polynomials in commuting trace symbols t_1, t_2, ... (monomials keyed by
// partition), and univariate truncated power series over any such ring.

#include "exactmath.hpp"
#include "partitions.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace haarcalc {

/// Sum of c_alpha t_alpha with zero coefficients never stored.
template <typename Coeff>
class TracePolynomial {
public:
    using coefficient_type = Coeff;

    TracePolynomial() = default;
    TracePolynomial(const Coeff& constant) { add(Partition{}, constant); }

    static TracePolynomial monomial(const Partition& alpha, const Coeff& c)
    {
        TracePolynomial p;
        p.add(alpha, c);
        return p;
    }

    void add(const Partition& alpha, const Coeff& c)
    {
        if (is_zero(c)) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(alpha, c);
        if (!inserted) {
            it->second += c;
            if (is_zero(it->second)) {
                terms_.erase(it);
            }
        }
    }

    Coeff coefficient(const Partition& alpha) const
    {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    const std::map<Partition, Coeff>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    TracePolynomial& operator+=(const TracePolynomial& o)
    {
        for (const auto& [alpha, c] : o.terms_) {
            add(alpha, c);
        }
        return *this;
    }

    TracePolynomial& operator-=(const TracePolynomial& o)
    {
        for (const auto& [alpha, c] : o.terms_) {
            add(alpha, -c);
        }
        return *this;
    }

    TracePolynomial& operator*=(const Coeff& s)
    {
        if (is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [alpha, c] : terms_) {
            c *= s;
        }
        return *this;
    }

    friend TracePolynomial operator+(TracePolynomial a, const TracePolynomial& b) { return a += b; }
    friend TracePolynomial operator-(TracePolynomial a, const TracePolynomial& b) { return a -= b; }
    friend TracePolynomial operator*(TracePolynomial a, const Coeff& s) { return a *= s; }

    friend TracePolynomial operator*(const TracePolynomial& a, const TracePolynomial& b)
    {
        TracePolynomial out;
        for (const auto& [pa, ca] : a.terms_) {
            for (const auto& [pb, cb] : b.terms_) {
                out.add(pa + pb, ca * cb);
            }
        }
        return out;
    }

    friend bool operator==(const TracePolynomial& a, const TracePolynomial& b) { return a.terms_ == b.terms_; }

private:
    std::map<Partition, Coeff> terms_;
};

template <typename Coeff>
bool is_zero(const TracePolynomial<Coeff>& p)
{
    return p.empty();
}

/// a_0 + a_1 x + ... + a_order x^order, everything beyond order dropped.
template <typename Ring>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : c_(static_cast<std::size_t>(check(order)) + 1) {}

    int order() const { return static_cast<int>(c_.size()) - 1; }

    Ring& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
    const Ring& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }

    TruncatedSeries& operator+=(const TruncatedSeries& o)
    {
        same_order(o);
        for (std::size_t k = 0; k < c_.size(); ++k) {
            c_[k] += o.c_[k];
        }
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& o)
    {
        same_order(o);
        for (std::size_t k = 0; k < c_.size(); ++k) {
            c_[k] -= o.c_[k];
        }
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        a.same_order(b);
        TruncatedSeries out(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (is_zero(a[i])) {
                continue;
            }
            for (int j = 0; i + j <= a.order(); ++j) {
                if (!is_zero(b[j])) {
                    out[i + j] += a[i] * b[j];
                }
            }
        }
        return out;
    }

    /// Multiplication by the series variable.
    TruncatedSeries shifted_up() const
    {
        TruncatedSeries out(order());
        for (int k = order(); k >= 1; --k) {
            out[k] = (*this)[k - 1];
        }
        return out;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

private:
    static int check(int order)
    {
        if (order < 0) {
            throw std::invalid_argument("series order must be nonnegative");
        }
        return order;
    }

    void same_order(const TruncatedSeries& o) const
    {
        if (o.order() != order()) {
            throw std::invalid_argument("series orders differ");
        }
    }

    std::vector<Ring> c_;
};

} // namespace haarcalc
