#pragma once

// The contraction identity  delta_jk d^2/dJ_lk dK_ji Z = (rhs) delta_il Z'
// applied to a trace expansion sum_alpha c_alpha t_alpha (times det K in the
// shifted sector) produces, for each alpha |- n, a combination of the tensors
// (JK)^m_il t_beta with m + |beta| = n - 1. Treating those tensors as formally
// independent gives one equation per (m, beta). The two sectors differ only in
// the coefficient of the (JK)^{q-1} t_{alpha minus q} term (N, or N + 1 from the
// derivative of det K) and in the right-hand factor (n, or n (N + n)).

#include "coeff_table.hpp"
#include "linsolve.hpp"

#include <map>
#include <utility>
#include <vector>

namespace haarcalc {

/// Basis tensor (JK)^power_il * t_traces.
struct RecursionKey {
    int power = 0;
    Partition traces;

    friend auto operator<=>(const RecursionKey&, const RecursionKey&) = default;
};

/// Left-hand side image of the single monomial t_alpha (times det K when
/// pivot_coefficient carries the +1), expanded on the basis tensors.
inline std::map<RecursionKey, RatFuncN> contraction_image(const Partition& alpha, const RatFuncN& pivot_coefficient)
{
    std::map<RecursionKey, RatFuncN> out;
    auto add = [&](int m, const Partition& beta, const RatFuncN& c) {
        RatFuncN& slot = out[RecursionKey{m, beta}];
        slot += c;
    };
    for (int q = 1; q <= alpha.largest_part(); ++q) {
        const int aq = alpha.multiplicity(q);
        if (aq == 0) {
            continue;
        }
        const Partition minus_q = alpha.without_part(q);
        add(q - 1, minus_q, RatFuncN(static_cast<long>(q * aq)) * pivot_coefficient);
        for (int s = 1; s <= q - 1; ++s) {
            add(q - s - 1, minus_q.with_part(s), RatFuncN(static_cast<long>(q * aq)));
        }
        if (aq >= 2) {
            add(2 * q - 1, minus_q.without_part(q), RatFuncN(static_cast<long>(q * q * aq * (aq - 1))));
        }
        for (int r = q + 1; r <= alpha.largest_part(); ++r) {
            const int ar = alpha.multiplicity(r);
            if (ar == 0) {
                continue;
            }
            add(q + r - 1, minus_q.without_part(r), RatFuncN(static_cast<long>(2 * q * r * aq * ar)));
        }
    }
    return out;
}

struct RecursionSystem {
    std::vector<Partition> unknowns;
    std::vector<RecursionKey> rows;
    Matrix<RatFuncN> lhs;
    std::vector<RatFuncN> rhs;
};

/// Assembles the overdetermined system for the weight-n coefficients from the
/// weight-(n-1) table. Rows run over every (m, beta) with m + |beta| = n - 1.
inline RecursionSystem build_recursion_system(int n, const CoeffTable& previous, const RatFuncN& pivot_coefficient,
                                              const RatFuncN& rhs_factor)
{
    RecursionSystem sys;
    sys.unknowns = enumerate_partitions(n);
    std::map<RecursionKey, std::size_t> row_index;
    for (int m = 0; m <= n - 1; ++m) {
        for (const auto& beta : enumerate_partitions(n - 1 - m)) {
            row_index.emplace(RecursionKey{m, beta}, sys.rows.size());
            sys.rows.push_back(RecursionKey{m, beta});
        }
    }
    sys.lhs = Matrix<RatFuncN>(sys.rows.size(), sys.unknowns.size());
    sys.rhs.assign(sys.rows.size(), RatFuncN{});
    for (std::size_t col = 0; col < sys.unknowns.size(); ++col) {
        for (const auto& [key, c] : contraction_image(sys.unknowns[col], pivot_coefficient)) {
            sys.lhs(row_index.at(key), col) += c;
        }
    }
    for (const auto& [beta, c] : previous.entries) {
        sys.rhs[row_index.at(RecursionKey{0, beta})] = rhs_factor * c;
    }
    return sys;
}

inline CoeffTable solve_recursion_system(int n, Family family, const RecursionSystem& sys)
{
    const auto x = solve_linear_system(sys.lhs, sys.rhs);
    CoeffTable t{n, family, {}};
    for (std::size_t i = 0; i < x.size(); ++i) {
        t.entries.emplace(sys.unknowns[i], x[i]);
    }
    return t;
}

} // namespace haarcalc
