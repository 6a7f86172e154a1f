#pragma once

// Integer partitions as cycle types, Young diagrams, and the symmetric-group
// data the Weingarten formula needs: class sizes, irreducible characters
// (Murnaghan-Nakayama), GL(N) dimensions (hook-content) and Catalan numbers.
//
// Partition order. Partitions of the same weight are ordered by their part
// list written in decreasing order, compared lexicographically ascending;
// lower weight comes first. For n = 4 this gives
//   1^4, 1^2 2^1, 2^2, 1^1 3^1, 4^1
// The same order is used by every table, solver column and printed output.

#include "exactmath.hpp"

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace haarcalc {

/// A partition by multiplicities: alpha[q-1] is the number of parts equal to q.
class Partition {
public:
    Partition() = default;

    static Partition from_multiplicities(std::vector<int> alpha)
    {
        for (int a : alpha) {
            if (a < 0) {
                throw std::invalid_argument("negative multiplicity in partition");
            }
        }
        Partition p;
        p.alpha_ = std::move(alpha);
        p.trim();
        return p;
    }

    static Partition from_parts(const std::vector<int>& parts)
    {
        Partition p;
        for (int q : parts) {
            if (q <= 0) {
                throw std::invalid_argument("partition parts must be positive");
            }
            p.add_part(q);
        }
        return p;
    }

    /// The partition 1^n.
    static Partition identity(int n) { return n == 0 ? Partition{} : from_multiplicities({n}); }

    /// Number of parts equal to q (q >= 1).
    int multiplicity(int q) const
    {
        return (q >= 1 && q <= largest_part()) ? alpha_[static_cast<std::size_t>(q - 1)] : 0;
    }

    const std::vector<int>& multiplicities() const { return alpha_; }
    int largest_part() const { return static_cast<int>(alpha_.size()); }
    bool empty() const { return alpha_.empty(); }

    int weight() const
    {
        int n = 0;
        for (std::size_t q = 0; q < alpha_.size(); ++q) {
            n += static_cast<int>(q + 1) * alpha_[q];
        }
        return n;
    }

    /// Number of cycles c(alpha) = sum of multiplicities.
    int cycles() const
    {
        int c = 0;
        for (int a : alpha_) {
            c += a;
        }
        return c;
    }

    /// Parts in decreasing order.
    std::vector<int> parts() const
    {
        std::vector<int> out;
        for (int q = largest_part(); q >= 1; --q) {
            out.insert(out.end(), static_cast<std::size_t>(multiplicity(q)), q);
        }
        return out;
    }

    Partition with_part(int q) const
    {
        Partition p = *this;
        p.add_part(q);
        return p;
    }

    Partition without_part(int q) const
    {
        if (multiplicity(q) == 0) {
            throw std::invalid_argument("partition has no part " + std::to_string(q));
        }
        Partition p = *this;
        --p.alpha_[static_cast<std::size_t>(q - 1)];
        p.trim();
        return p;
    }

    /// Union of the parts (the monomial product t_a * t_b).
    friend Partition operator+(const Partition& a, const Partition& b)
    {
        std::vector<int> m(std::max(a.alpha_.size(), b.alpha_.size()), 0);
        for (std::size_t i = 0; i < a.alpha_.size(); ++i) {
            m[i] += a.alpha_[i];
        }
        for (std::size_t i = 0; i < b.alpha_.size(); ++i) {
            m[i] += b.alpha_[i];
        }
        return from_multiplicities(std::move(m));
    }

    friend bool operator==(const Partition&, const Partition&) = default;

    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        if (auto c = a.weight() <=> b.weight(); c != 0) {
            return c;
        }
        const auto pa = a.parts();
        const auto pb = b.parts();
        return std::lexicographical_compare_three_way(pa.begin(), pa.end(), pb.begin(), pb.end());
    }

private:
    void add_part(int q)
    {
        if (static_cast<int>(alpha_.size()) < q) {
            alpha_.resize(static_cast<std::size_t>(q), 0);
        }
        ++alpha_[static_cast<std::size_t>(q - 1)];
    }

    void trim()
    {
        while (!alpha_.empty() && alpha_.back() == 0) {
            alpha_.pop_back();
        }
    }

    std::vector<int> alpha_;
};

/// Exponent notation, e.g. "1^2 2^1"; the empty partition prints as "".
inline std::string to_string(const Partition& p)
{
    std::string out;
    for (int q = 1; q <= p.largest_part(); ++q) {
        if (p.multiplicity(q) == 0) {
            continue;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += std::to_string(q) + '^' + std::to_string(p.multiplicity(q));
    }
    return out;
}

/// Reads exponent notation; a bare "q" counts as q^1.
inline Partition parse_partition(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string tok;
    std::vector<int> parts;
    while (in >> tok) {
        const auto caret = tok.find('^');
        try {
            std::size_t used = 0;
            const int q = std::stoi(tok.substr(0, caret), &used);
            int m = 1;
            if (caret != std::string::npos) {
                std::size_t used_m = 0;
                m = std::stoi(tok.substr(caret + 1), &used_m);
                if (used_m != tok.size() - caret - 1) {
                    throw std::invalid_argument(tok);
                }
            } else if (used != tok.size()) {
                throw std::invalid_argument(tok);
            }
            if (q <= 0 || m < 0) {
                throw std::invalid_argument(tok);
            }
            parts.insert(parts.end(), static_cast<std::size_t>(m), q);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("malformed partition token \"" + tok + "\"");
        }
    }
    return Partition::from_parts(parts);
}

/// All partitions of n in the documented order.
inline std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0) {
        throw std::invalid_argument("cannot enumerate partitions of a negative integer");
    }
    std::vector<Partition> out;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(Partition::from_parts(parts));
            return;
        }
        for (int q = 1; q <= std::min(remaining, max_part); ++q) {
            parts.push_back(q);
            rec(remaining - q, q);
            parts.pop_back();
        }
    };
    rec(n, n);
    std::sort(out.begin(), out.end());
    return out;
}

/// Size of the conjugacy class of cycle type alpha in S_n: n! / prod q^{a_q} a_q!.
inline BigInt class_size(const Partition& alpha)
{
    BigInt denom = 1;
    for (int q = 1; q <= alpha.largest_part(); ++q) {
        const int a = alpha.multiplicity(q);
        BigInt qa;
        mpz_ui_pow_ui(qa.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(a));
        denom *= qa * factorial(static_cast<unsigned long>(a));
    }
    return factorial(static_cast<unsigned long>(alpha.weight())) / denom;
}

/// Young diagram by row lengths, weakly decreasing and positive.
class YoungDiagram {
public:
    YoungDiagram() = default;

    explicit YoungDiagram(std::vector<int> rows) : rows_(std::move(rows))
    {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i] <= 0 || (i > 0 && rows_[i] > rows_[i - 1])) {
                throw std::invalid_argument("Young diagram rows must be positive and weakly decreasing");
            }
        }
    }

    static YoungDiagram from_partition(const Partition& p) { return YoungDiagram(p.parts()); }

    const std::vector<int>& rows() const { return rows_; }
    int row_count() const { return static_cast<int>(rows_.size()); }

    int weight() const
    {
        int n = 0;
        for (int r : rows_) {
            n += r;
        }
        return n;
    }

    /// Length of column j (0-based).
    int column_length(int j) const
    {
        int len = 0;
        for (int r : rows_) {
            len += (r > j);
        }
        return len;
    }

    int hook(int i, int j) const
    {
        return rows_[static_cast<std::size_t>(i)] - j + column_length(j) - i - 1;
    }

    friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;

private:
    std::vector<int> rows_;
};

inline std::vector<YoungDiagram> enumerate_diagrams(int n)
{
    std::vector<YoungDiagram> out;
    for (const auto& p : enumerate_partitions(n)) {
        out.push_back(YoungDiagram::from_partition(p));
    }
    return out;
}

/// Dimension of the S_n irreducible labelled by lambda: n! / prod of hooks.
inline BigInt hook_dimension(const YoungDiagram& lambda)
{
    BigInt hooks = 1;
    for (int i = 0; i < lambda.row_count(); ++i) {
        for (int j = 0; j < lambda.rows()[static_cast<std::size_t>(i)]; ++j) {
            hooks *= lambda.hook(i, j);
        }
    }
    return factorial(static_cast<unsigned long>(lambda.weight())) / hooks;
}

namespace detail {

// Characters via rim-hook removal on beta-sets: with beta_i = lambda_i + (l - i),
// removing a rim hook of length k replaces some beta by beta - k (if free), and
// the hook's leg length is the number of betas strictly in between.
inline BigInt mn_character(const std::vector<int>& rows, const Partition& alpha,
                           std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt>& memo)
{
    if (alpha.empty()) {
        return rows.empty() ? BigInt(1) : BigInt(0);
    }
    auto key = std::make_pair(rows, alpha.multiplicities());
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    const int k = alpha.largest_part();
    const Partition rest = alpha.without_part(k);
    const int len = static_cast<int>(rows.size());
    std::vector<int> beta(rows.size());
    for (int i = 0; i < len; ++i) {
        beta[static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(i)] + (len - 1 - i);
    }
    BigInt total = 0;
    for (int i = 0; i < len; ++i) {
        const int b = beta[static_cast<std::size_t>(i)];
        const int nb = b - k;
        if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) {
            continue;
        }
        int leg = 0;
        for (int x : beta) {
            leg += (x > nb && x < b);
        }
        std::vector<int> nbeta = beta;
        nbeta[static_cast<std::size_t>(i)] = nb;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<>());
        std::vector<int> nrows;
        const int nl = static_cast<int>(nbeta.size());
        for (int r = 0; r < nl; ++r) {
            const int v = nbeta[static_cast<std::size_t>(r)] - (nl - 1 - r);
            if (v > 0) {
                nrows.push_back(v);
            }
        }
        const BigInt sub = mn_character(nrows, rest, memo);
        if (leg % 2 == 0) {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace detail

/// Irreducible character chi^lambda evaluated on the class of cycle type alpha.
inline BigInt character(const YoungDiagram& lambda, const Partition& alpha)
{
    if (lambda.weight() != alpha.weight()) {
        throw std::invalid_argument("character: weight of diagram and class differ");
    }
    thread_local std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> memo;
    return detail::mn_character(lambda.rows(), alpha, memo);
}

/// s_lambda(I_N) as a polynomial in N (hook-content formula).
inline PolyN dim_gl(const YoungDiagram& lambda)
{
    PolyN acc(1);
    BigInt hooks = 1;
    for (int i = 0; i < lambda.row_count(); ++i) {
        for (int j = 0; j < lambda.rows()[static_cast<std::size_t>(i)]; ++j) {
            acc *= PolyN::linear(BigRational(j - i));
            hooks *= lambda.hook(i, j);
        }
    }
    return acc * make_rational(1, hooks);
}

inline BigInt catalan(unsigned long m) { return binomial(2 * m, m) / (m + 1); }

} // namespace haarcalc
