#pragma once

// Exact linear solving over Q(N). Rows are cleared of denominators and
// eliminated fraction-free (Bareiss) over Q[N]; back substitution then runs in
// Q(N). Overdetermined systems are accepted: every row beyond the rank must
// reduce to 0 = 0.

#include "exactmath.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace haarcalc {

class rank_deficient_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class inconsistent_system_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Row-major dense matrix.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) {
            return;
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            std::swap((*this)(a, c), (*this)(b, c));
        }
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Solves A x = b exactly. A must have full column rank and the system must be
/// consistent; otherwise rank_deficient_error / inconsistent_system_error.
inline std::vector<RatFuncN> solve_linear_system(const Matrix<RatFuncN>& a, const std::vector<RatFuncN>& b)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (b.size() != m) {
        throw std::invalid_argument("right-hand side length does not match row count");
    }
    if (m < n) {
        throw rank_deficient_error("fewer equations than unknowns");
    }

    // Augmented polynomial matrix, each row scaled by the lcm of its denominators.
    Matrix<PolyN> w(m, n + 1);
    for (std::size_t r = 0; r < m; ++r) {
        PolyN l(1);
        for (std::size_t c = 0; c <= n; ++c) {
            const PolyN& d = (c < n ? a(r, c) : b[r]).denominator();
            l = exact_quotient(l * d, gcd(l, d));
        }
        for (std::size_t c = 0; c <= n; ++c) {
            const RatFuncN& e = c < n ? a(r, c) : b[r];
            w(r, c) = exact_quotient(e.numerator() * l, e.denominator());
        }
    }

    PolyN previous(1);
    for (std::size_t k = 0; k < n; ++k) {
        // Lowest-degree nonzero pivot keeps intermediate growth down.
        std::size_t pivot = m;
        for (std::size_t r = k; r < m; ++r) {
            if (!w(r, k).is_zero() && (pivot == m || w(r, k).degree() < w(pivot, k).degree())) {
                pivot = r;
            }
        }
        if (pivot == m) {
            throw rank_deficient_error("no pivot in column " + std::to_string(k));
        }
        w.swap_rows(k, pivot);
        for (std::size_t r = k + 1; r < m; ++r) {
            for (std::size_t c = k + 1; c <= n; ++c) {
                w(r, c) = exact_quotient(w(k, k) * w(r, c) - w(r, k) * w(k, c), previous);
            }
            w(r, k) = PolyN{};
        }
        previous = w(k, k);
    }

    for (std::size_t r = n; r < m; ++r) {
        if (!w(r, n).is_zero()) {
            throw inconsistent_system_error("redundant equation " + std::to_string(r) + " is not satisfied");
        }
    }

    std::vector<RatFuncN> x(n);
    for (std::size_t i = n; i-- > 0;) {
        RatFuncN acc(w(i, n));
        for (std::size_t j = i + 1; j < n; ++j) {
            acc -= RatFuncN(w(i, j)) * x[j];
        }
        x[i] = acc / RatFuncN(w(i, i));
    }
    return x;
}

} // namespace haarcalc
