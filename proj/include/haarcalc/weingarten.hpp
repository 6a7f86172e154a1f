#pragma once

// The p = n sector: Weingarten class function C([sigma]), the trace
// coefficients z_alpha = |alpha| C([alpha]) from characters and from the
// contraction recursion, exact monomial integrals, and Z_{n,n}(J, K).

#include "coeff_table.hpp"
#include "recursion.hpp"
#include "sources.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace haarcalc {

/// Largest weight the permutation-sum evaluators accept.
inline constexpr int max_tensor_weight = 6;

/// C([alpha]) = sum_lambda chi^lambda(1)^2 chi^lambda(alpha) / (n!^2 s_lambda(I_N)).
inline RatFuncN weingarten_C(const Partition& alpha)
{
    const int n = alpha.weight();
    const BigInt nf = factorial(static_cast<unsigned long>(n));
    const Partition id = Partition::identity(n);
    RatFuncN sum;
    for (const auto& lambda : enumerate_diagrams(n)) {
        const BigInt dim = character(lambda, id);
        const BigInt chi = character(lambda, alpha);
        if (chi == 0) {
            continue;
        }
        const BigRational weight = make_rational(dim * dim * chi, nf * nf);
        sum += RatFuncN(weight) / RatFuncN(dim_gl(lambda));
    }
    return sum;
}

inline CoeffTable z_table_character(int n)
{
    if (n < 0) {
        throw std::invalid_argument("sector weight must be nonnegative");
    }
    CoeffTable t{n, Family::weingarten, {}};
    for (const auto& alpha : enumerate_partitions(n)) {
        t.entries.emplace(alpha, RatFuncN(BigRational(class_size(alpha))) * weingarten_C(alpha));
    }
    return t;
}

/// Weight-n table from the weight-(n-1) one through the contraction recursion.
inline CoeffTable z_table_recursive(int n, const CoeffTable& previous)
{
    if (n < 1) {
        throw std::invalid_argument("recursion starts at n = 1");
    }
    if (previous.n != n - 1 || previous.family != Family::weingarten) {
        throw std::invalid_argument("recursion needs the weingarten table of weight n - 1");
    }
    const auto sys = build_recursion_system(n, previous, RatFuncN::variable(), RatFuncN(static_cast<long>(n)));
    return solve_recursion_system(n, Family::weingarten, sys);
}

/// Runs the recursion up from Z_{0,0} = 1.
inline CoeffTable z_table_recursive(int n)
{
    if (n < 0) {
        throw std::invalid_argument("sector weight must be nonnegative");
    }
    CoeffTable t{0, Family::weingarten, {{Partition{}, RatFuncN(1)}}};
    for (int k = 1; k <= n; ++k) {
        t = z_table_recursive(k, t);
    }
    return t;
}

namespace detail {

inline Partition cycle_type(std::span<const int> perm)
{
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> parts;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) {
            continue;
        }
        int len = 0;
        for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
            seen[x] = true;
            ++len;
        }
        parts.push_back(len);
    }
    return Partition::from_parts(parts);
}

inline std::vector<std::vector<int>> all_permutations(int n)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline void check_indices(std::span<const int> idx, int n0, const char* name)
{
    for (int v : idx) {
        if (v < 1 || v > n0) {
            throw std::out_of_range(std::string("index list ") + name + " has an entry outside 1..N");
        }
    }
}

} // namespace detail

/// Exact integral over U(N0) of U_{i1 j1}...U_{in jn} U^dag_{k1 l1}...U^dag_{kn ln}
/// (indices 1-based):
///   sum_{tau, sigma in S_n} C([sigma]) prod_a delta(i_a, l_tau(a)) delta(j_a, k_{tau sigma(a)}).
/// Requires n < N0; the same value holds on SU(N0) there.
inline BigRational monomial_integral_unitary(std::span<const int> i, std::span<const int> j, std::span<const int> k,
                                             std::span<const int> l, int n0)
{
    const std::size_t n = i.size();
    if (j.size() != n || k.size() != n || l.size() != n) {
        throw std::invalid_argument("monomial integral needs four index lists of equal length");
    }
    if (static_cast<int>(n) >= n0) {
        throw std::domain_error("monomial integral requires n < N (the n >= N regime is not supported)");
    }
    if (static_cast<int>(n) > max_tensor_weight) {
        throw std::domain_error("monomial integral supports n <= " + std::to_string(max_tensor_weight));
    }
    detail::check_indices(i, n0, "i");
    detail::check_indices(j, n0, "j");
    detail::check_indices(k, n0, "k");
    detail::check_indices(l, n0, "l");

    const auto perms = detail::all_permutations(static_cast<int>(n));
    // C once per class, looked up per sigma.
    std::map<Partition, BigRational> class_value;
    std::vector<const BigRational*> c_of_sigma;
    c_of_sigma.reserve(perms.size());
    for (const auto& sigma : perms) {
        const Partition type = detail::cycle_type(sigma);
        auto it = class_value.find(type);
        if (it == class_value.end()) {
            it = class_value.emplace(type, weingarten_C(type).evaluate(BigRational(n0))).first;
        }
        c_of_sigma.push_back(&it->second);
    }

    BigRational total(0);
    for (const auto& tau : perms) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
            ok = i[a] == l[static_cast<std::size_t>(tau[a])];
        }
        if (!ok) {
            continue;
        }
        for (std::size_t s = 0; s < perms.size(); ++s) {
            const auto& sigma = perms[s];
            bool match = true;
            for (std::size_t a = 0; a < n && match; ++a) {
                match = j[a] == k[static_cast<std::size_t>(tau[static_cast<std::size_t>(sigma[a])])];
            }
            if (match) {
                total += *c_of_sigma[s];
            }
        }
    }
    return total;
}

/// Evaluates sum_alpha c_alpha(N) t_alpha at N = src.N().
inline Complex evaluate_trace_sum(const CoeffTable& table, const TraceVector& t, int n0)
{
    Complex acc(0.0, 0.0);
    for (const auto& [alpha, c] : table.entries) {
        acc += to_double(c.evaluate(BigRational(n0))) * t.monomial(alpha);
    }
    return acc;
}

/// Z_{n,n}(J, K) = int dU (tr KU)^n (tr JU^dag)^n = n! sum_alpha z_alpha t_alpha, for n < N.
inline Complex eval_Znn(int n, const SourceMatrices& src)
{
    if (n < 0 || n >= src.N()) {
        throw std::domain_error("Z_{n,n} is evaluated only for 0 <= n < N");
    }
    const TraceVector t(src, std::max(n, 1));
    return to_double(BigRational(factorial(static_cast<unsigned long>(n)))) *
           evaluate_trace_sum(z_table_character(n), t, src.N());
}

} // namespace haarcalc
