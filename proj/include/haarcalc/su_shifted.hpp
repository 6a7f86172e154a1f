#pragma once

// The SU(N) sector with p = n + N factors of U against n of U^dag:
//   Z_{N+n,n}(J, K) = int dU (tr UK)^{N+n} (tr U^dag J)^n = det K sum_{alpha |- n} d_alpha t_alpha.
// d_alpha follows from z_alpha by d_alpha = (N+n)...(N+1) z_alpha(N+1), and
// independently from the contraction recursion with the det K contribution.

#include "recursion.hpp"
#include "sources.hpp"
#include "weingarten.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace haarcalc {

/// Levi-Civita symbol of a 1-based index list: +1, -1, or 0 on a repeat.
inline int levi_civita(std::span<const int> idx)
{
    const int n = static_cast<int>(idx.size());
    std::vector<bool> seen(idx.size(), false);
    for (int v : idx) {
        if (v < 1 || v > n) {
            throw std::out_of_range("epsilon index outside 1..N");
        }
        if (seen[static_cast<std::size_t>(v - 1)]) {
            return 0;
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    int inversions = 0;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            inversions += idx[static_cast<std::size_t>(a)] > idx[static_cast<std::size_t>(b)];
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

/// int_{SU(N0)} dU U_{i1 j1}...U_{iN jN} = eps_i eps_j / N0!
inline BigRational epsilon_integral(std::span<const int> i, std::span<const int> j, int n0)
{
    if (n0 < 1 || i.size() != static_cast<std::size_t>(n0) || j.size() != static_cast<std::size_t>(n0)) {
        throw std::invalid_argument("epsilon integral needs two index lists of length N");
    }
    return make_rational(levi_civita(i) * levi_civita(j), factorial(static_cast<unsigned long>(n0)));
}

/// d_alpha = (N+n)(N+n-1)...(N+1) * z_alpha(N+1)
inline CoeffTable d_table_shift(const CoeffTable& z)
{
    if (z.family != Family::weingarten) {
        throw std::invalid_argument("shift relation takes a weingarten table");
    }
    const RatFuncN prefactor(falling_product(z.n, 1));
    CoeffTable d{z.n, Family::su_shifted, {}};
    for (const auto& [alpha, c] : z.entries) {
        d.entries.emplace(alpha, prefactor * c.shifted());
    }
    return d;
}

inline CoeffTable d_table_shift(int n) { return d_table_shift(z_table_character(n)); }

inline CoeffTable d_table_recursive(int n, const CoeffTable& previous)
{
    if (n < 1) {
        throw std::invalid_argument("recursion starts at n = 1");
    }
    if (previous.n != n - 1 || previous.family != Family::su_shifted) {
        throw std::invalid_argument("recursion needs the su-shifted table of weight n - 1");
    }
    const RatFuncN pivot(PolyN::linear(BigRational(1)));
    const RatFuncN rhs = RatFuncN(static_cast<long>(n)) * RatFuncN(PolyN::linear(BigRational(n)));
    const auto sys = build_recursion_system(n, previous, pivot, rhs);
    return solve_recursion_system(n, Family::su_shifted, sys);
}

/// Runs the recursion up from Z_{N,0} = det K.
inline CoeffTable d_table_recursive(int n)
{
    if (n < 0) {
        throw std::invalid_argument("sector weight must be nonnegative");
    }
    CoeffTable t{0, Family::su_shifted, {{Partition{}, RatFuncN(1)}}};
    for (int k = 1; k <= n; ++k) {
        t = d_table_recursive(k, t);
    }
    return t;
}

/// Z_{N+n,n}(J, K) = det K * sum_alpha d_alpha(N) t_alpha, for n < N.
inline Complex eval_ZNnn(int n, const SourceMatrices& src)
{
    if (n < 0 || n >= src.N()) {
        throw std::domain_error("Z_{N+n,n} is evaluated only for 0 <= n < N");
    }
    const TraceVector t(src, std::max(n, 1));
    return src.K.determinant() * evaluate_trace_sum(d_table_shift(n), t, src.N());
}

struct ShiftCheck {
    Partition alpha;
    bool pass = false;
    PolyN numerator_z;    ///< P_alpha(N) = z_alpha * N^2 (N^2-1)...(N^2-(n-1)^2)
    RatFuncN scaled_d;    ///< d_alpha * (N+1) N (N-1)...(N-(n-2))
};

struct ShiftReport {
    int n = 0;
    std::vector<ShiftCheck> checks;

    bool all_pass() const
    {
        for (const auto& c : checks) {
            if (!c.pass) {
                return false;
            }
        }
        return true;
    }
};

/// Checks, for every alpha |- n, that writing z_alpha = P_alpha(N) / (N^2 (N^2-1)...(N^2-(n-1)^2))
/// gives d_alpha = P_alpha(N+1) / ((N+1) N ... (N-(n-2))).
inline ShiftReport verify_shift_identity(int n)
{
    if (n < 1) {
        throw std::invalid_argument("shift identity is stated for n >= 1");
    }
    const CoeffTable z = z_table_character(n);
    const CoeffTable d = d_table_recursive(n);
    PolyN z_denominator = PolyN::variable() * PolyN::variable();
    for (long k = 1; k < n; ++k) {
        z_denominator *= PolyN::variable() * PolyN::variable() - PolyN(k * k);
    }
    // n factors from N+1 down to N-(n-2).
    const PolyN d_denominator = falling_product(1, 2 - n);
    ShiftReport report{n, {}};
    for (const auto& [alpha, zc] : z.entries) {
        ShiftCheck c;
        c.alpha = alpha;
        const RatFuncN p = zc * RatFuncN(z_denominator);
        c.scaled_d = d.at(alpha) * RatFuncN(d_denominator);
        if (p.denominator() == PolyN(1)) {
            c.numerator_z = p.numerator();
            c.pass = c.scaled_d == RatFuncN(c.numerator_z.shifted());
        }
        report.checks.push_back(std::move(c));
    }
    return report;
}

} // namespace haarcalc
