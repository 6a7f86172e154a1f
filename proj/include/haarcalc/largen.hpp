#pragma once

// Large-N series in the trace variables.
//
// W_D = lim (1/N) log(Z_D / det K) with kappa = N kt and the traces t_q kept
// O(1), obtained three ways: the closed Catalan formula, the fixed-point
// equation y = kt sum_m f_m y^m (f_0 = 1, f_m = (-1)^{m-1} Cat(m-1) t_m,
// y = kt (1 + w)), and the N -> infinity limit of the exact finite-N
// logarithm built from the d_alpha tables.
//
// W_W is the strong-coupling expansion sum_n kt^{2n} sum_{alpha |- n} w_alpha tau_alpha.

#include "exactmath.hpp"
#include "partitions.hpp"
#include "series.hpp"
#include "su_shifted.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace haarcalc {

class divergent_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SeriesFamily {
    wd,  ///< grade n multiplies kt^n t_alpha
    ww,  ///< grade n multiplies kt^{2n} tau_alpha
};

/// Exact coefficients of a large-N trace series; the grade of a term is the
/// weight of its partition.
struct TraceSeries {
    SeriesFamily family = SeriesFamily::wd;
    int max_order = 0;
    std::map<Partition, BigRational> terms;

    BigRational coefficient(const Partition& alpha) const
    {
        auto it = terms.find(alpha);
        return it == terms.end() ? BigRational(0) : it->second;
    }

    void set(const Partition& alpha, const BigRational& c)
    {
        if (alpha.weight() < 1 || alpha.weight() > max_order) {
            throw std::out_of_range("series term outside grades 1..max_order");
        }
        if (c == 0) {
            terms.erase(alpha);
        } else {
            terms[alpha] = c;
        }
    }

    TraceSeries truncated(int order) const
    {
        TraceSeries out{family, std::min(order, max_order), {}};
        for (const auto& [alpha, c] : terms) {
            if (alpha.weight() <= out.max_order) {
                out.terms.emplace(alpha, c);
            }
        }
        return out;
    }

    friend bool operator==(const TraceSeries&, const TraceSeries&) = default;
};

/// a - b over the common grades.
inline TraceSeries difference(const TraceSeries& a, const TraceSeries& b)
{
    const int order = std::min(a.max_order, b.max_order);
    TraceSeries out{a.family, order, {}};
    for (int n = 1; n <= order; ++n) {
        for (const auto& alpha : enumerate_partitions(n)) {
            out.set(alpha, a.coefficient(alpha) - b.coefficient(alpha));
        }
    }
    return out;
}

namespace detail {

inline void require_order(int max_order)
{
    if (max_order < 1) {
        throw std::invalid_argument("series order must be at least 1");
    }
}

inline BigRational catalan_q(unsigned long m) { return BigRational(catalan(m)); }

/// f_m = (-1)^{m-1} Cat(m-1) for m >= 1.
inline BigRational free_cumulant_weight(int m)
{
    const BigRational c = catalan_q(static_cast<unsigned long>(m - 1));
    return (m % 2 == 1) ? c : BigRational(-c);
}

} // namespace detail

/// Coefficient of kt^n t_alpha in W_D:
///   (-1)^{n-c} (n-1)! / (n-c+1)! prod_p Cat(p-1)^{a_p} / a_p!
inline BigRational wd_coefficient(const Partition& alpha)
{
    const int n = alpha.weight();
    const int c = alpha.cycles();
    if (n < 1) {
        throw std::invalid_argument("W_D has no constant term");
    }
    BigRational v = make_rational(factorial(static_cast<unsigned long>(n - 1)),
                                  factorial(static_cast<unsigned long>(n - c + 1)));
    for (int p = 1; p <= alpha.largest_part(); ++p) {
        const int a = alpha.multiplicity(p);
        BigInt cat_pow;
        mpz_pow_ui(cat_pow.get_mpz_t(), catalan(static_cast<unsigned long>(p - 1)).get_mpz_t(),
                   static_cast<unsigned long>(a));
        v *= make_rational(cat_pow, factorial(static_cast<unsigned long>(a)));
    }
    return (n - c) % 2 == 0 ? v : BigRational(-v);
}

inline TraceSeries wd_closed(int max_order)
{
    detail::require_order(max_order);
    TraceSeries s{SeriesFamily::wd, max_order, {}};
    for (int n = 1; n <= max_order; ++n) {
        for (const auto& alpha : enumerate_partitions(n)) {
            s.set(alpha, wd_coefficient(alpha));
        }
    }
    return s;
}

using RationalTracePoly = TracePolynomial<BigRational>;

/// Moments w_n (coefficient of kt^n in w), n = 1..max_order, by iterating
/// y <- kt sum_{m >= 0} f_m y^m as a truncated series in kt.
inline std::vector<RationalTracePoly> fixedpoint_moments(int max_order)
{
    detail::require_order(max_order);
    const int order = max_order + 1;
    std::vector<RationalTracePoly> f(static_cast<std::size_t>(order) + 1);
    f[0] = RationalTracePoly(BigRational(1));
    for (int m = 1; m <= order; ++m) {
        f[static_cast<std::size_t>(m)] =
            RationalTracePoly::monomial(Partition::from_parts({m}), detail::free_cumulant_weight(m));
    }
    TruncatedSeries<RationalTracePoly> y(order);
    // Each pass fixes one more power of kt.
    for (int pass = 0; pass <= order; ++pass) {
        TruncatedSeries<RationalTracePoly> rhs(order);
        TruncatedSeries<RationalTracePoly> power(order);
        power[0] = RationalTracePoly(BigRational(1));
        for (int m = 0; m <= order; ++m) {
            TruncatedSeries<RationalTracePoly> term = power;
            for (int k = 0; k <= order; ++k) {
                term[k] = term[k] * f[static_cast<std::size_t>(m)];
            }
            rhs += term;
            power = power * y;
        }
        y = rhs.shifted_up();
    }
    std::vector<RationalTracePoly> w;
    for (int n = 1; n <= max_order; ++n) {
        w.push_back(y[n + 1]);
    }
    return w;
}

/// Lagrange-inversion form of the same moments:
///   w_n = sum_{alpha |- n} n! / ((n+1-c)! prod a_q!) prod f_q^{a_q}
inline std::vector<RationalTracePoly> lagrange_moments(int max_order)
{
    detail::require_order(max_order);
    std::vector<RationalTracePoly> w;
    for (int n = 1; n <= max_order; ++n) {
        RationalTracePoly wn;
        for (const auto& alpha : enumerate_partitions(n)) {
            BigInt denom = factorial(static_cast<unsigned long>(n + 1 - alpha.cycles()));
            BigRational fprod(1);
            for (int q = 1; q <= alpha.largest_part(); ++q) {
                const int a = alpha.multiplicity(q);
                denom *= factorial(static_cast<unsigned long>(a));
                for (int k = 0; k < a; ++k) {
                    fprod *= detail::free_cumulant_weight(q);
                }
            }
            wn.add(alpha, make_rational(factorial(static_cast<unsigned long>(n)), denom) * fprod);
        }
        w.push_back(std::move(wn));
    }
    return w;
}

/// W_D from the fixed point: the kt^n coefficient of W_D is w_n / n, since kt
/// is a homogeneity variable of the traces and W_D vanishes at kt = 0.
inline TraceSeries wd_fixedpoint(int max_order)
{
    const auto w = fixedpoint_moments(max_order);
    TraceSeries s{SeriesFamily::wd, max_order, {}};
    for (int n = 1; n <= max_order; ++n) {
        for (const auto& [alpha, c] : w[static_cast<std::size_t>(n - 1)].terms()) {
            if (alpha.weight() != n) {
                throw std::logic_error("fixed-point moment is not homogeneous");
            }
            s.set(alpha, c / n);
        }
    }
    return s;
}

/// Limit of f(N) as N -> infinity; divergent_limit_error if it grows.
inline BigRational limit_at_infinity(const RatFuncN& f)
{
    if (f.is_zero()) {
        return BigRational(0);
    }
    const int gap = f.degree_gap();
    if (gap < 0) {
        throw divergent_limit_error("rational function grows without bound as N -> infinity");
    }
    return gap == 0 ? BigRational(f.numerator().leading() / f.denominator().leading()) : BigRational(0);
}

/// Exact finite-N logarithm log(sum_n kappa^n/n! sum_alpha d_alpha t_alpha) through
/// kappa^max_order, coefficient of kappa^n at index n.
inline TruncatedSeries<TracePolynomial<RatFuncN>> log_shifted_generating_function(int max_order)
{
    using Poly = TracePolynomial<RatFuncN>;
    TruncatedSeries<Poly> z(max_order);
    z[0] = Poly(RatFuncN(1));
    for (int n = 1; n <= max_order; ++n) {
        const RatFuncN inv_fact(make_rational(1, factorial(static_cast<unsigned long>(n))));
        for (const auto& [alpha, d] : d_table_shift(n).entries) {
            z[n].add(alpha, d * inv_fact);
        }
    }
    // From L' Z = Z': n L_n = n Z_n - sum_{k=1}^{n-1} k L_k Z_{n-k}.
    TruncatedSeries<Poly> l(max_order);
    for (int n = 1; n <= max_order; ++n) {
        Poly acc = z[n] * RatFuncN(static_cast<long>(n));
        for (int k = 1; k < n; ++k) {
            acc -= (l[k] * z[n - k]) * RatFuncN(static_cast<long>(k));
        }
        l[n] = acc * RatFuncN(make_rational(1, n));
    }
    return l;
}

/// lim (1/N) log(Z_D / det K) with kappa = N kt, coefficient by coefficient.
inline TraceSeries wd_from_finite_N(int max_order)
{
    detail::require_order(max_order);
    const auto l = log_shifted_generating_function(max_order);
    TraceSeries s{SeriesFamily::wd, max_order, {}};
    for (int n = 1; n <= max_order; ++n) {
        PolyN scale(1);
        for (int k = 1; k < n; ++k) {
            scale *= PolyN::variable();
        }
        for (const auto& [alpha, c] : l[n].terms()) {
            try {
                s.set(alpha, limit_at_infinity(c * RatFuncN(scale)));
            } catch (const divergent_limit_error&) {
                throw divergent_limit_error("coefficient of kt^" + std::to_string(n) + " t[" + to_string(alpha) +
                                            "] diverges as N -> infinity");
            }
        }
    }
    return s;
}

/// Strong-coupling coefficient of kt^{2n} tau_alpha in W_W:
///   (-1)^n (2n-3+c)! / (2n)! prod_q (-(2q)!/(q!)^2)^{a_q} / a_q!
inline BigRational ww_coeff(const Partition& alpha)
{
    const int n = alpha.weight();
    if (n < 1) {
        throw std::invalid_argument("W_W coefficients start at weight 1");
    }
    const int top = 2 * n - 3 + alpha.cycles();
    if (top < 0) {
        throw std::domain_error("negative factorial argument in W_W coefficient");
    }
    BigRational v = make_rational(factorial(static_cast<unsigned long>(top)), factorial(2UL * static_cast<unsigned long>(n)));
    for (int q = 1; q <= alpha.largest_part(); ++q) {
        const int a = alpha.multiplicity(q);
        const BigRational central = -BigRational(binomial(2UL * static_cast<unsigned long>(q), static_cast<unsigned long>(q)));
        for (int k = 0; k < a; ++k) {
            v *= central;
        }
        v /= BigRational(factorial(static_cast<unsigned long>(a)));
    }
    return n % 2 == 0 ? v : BigRational(-v);
}

inline TraceSeries ww_series(int max_order)
{
    detail::require_order(max_order);
    TraceSeries s{SeriesFamily::ww, max_order, {}};
    for (int n = 1; n <= max_order; ++n) {
        for (const auto& alpha : enumerate_partitions(n)) {
            s.set(alpha, ww_coeff(alpha));
        }
    }
    return s;
}

} // namespace haarcalc
