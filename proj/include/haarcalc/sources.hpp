#pragma once

// Source matrices J, K of the generating functions and the power traces
// t_q = tr (JK)^q they enter through.

#include "partitions.hpp"

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <complex>
#include <stdexcept>
#include <vector>

namespace haarcalc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

struct SourceMatrices {
    ComplexMatrix J;
    ComplexMatrix K;

    SourceMatrices(ComplexMatrix j, ComplexMatrix k) : J(std::move(j)), K(std::move(k))
    {
        if (J.rows() != J.cols() || K.rows() != K.cols() || J.rows() != K.rows() || J.rows() < 1) {
            throw std::invalid_argument("J and K must be square matrices of the same dimension");
        }
    }

    static SourceMatrices identity(int n)
    {
        return {ComplexMatrix::Identity(n, n), ComplexMatrix::Identity(n, n)};
    }

    int N() const { return static_cast<int>(J.rows()); }
};

/// t[q-1] = tr (JK)^q for q = 1..order.
class TraceVector {
public:
    TraceVector(const SourceMatrices& src, int order)
    {
        const ComplexMatrix m = src.J * src.K;
        ComplexMatrix power = m;
        for (int q = 1; q <= order; ++q) {
            t_.push_back(power.trace());
            power = power * m;
        }
    }

    int order() const { return static_cast<int>(t_.size()); }

    Complex operator[](int q) const
    {
        if (q < 1 || q > order()) {
            throw std::out_of_range("trace index out of range");
        }
        return t_[static_cast<std::size_t>(q - 1)];
    }

    /// t_alpha = prod_q t_q^{alpha_q}
    Complex monomial(const Partition& alpha) const
    {
        Complex acc(1.0, 0.0);
        for (int q = 1; q <= alpha.largest_part(); ++q) {
            for (int k = 0; k < alpha.multiplicity(q); ++k) {
                acc *= (*this)[q];
            }
        }
        return acc;
    }

private:
    std::vector<Complex> t_;
};

namespace detail {

inline ComplexMatrix read_matrix(const nlohmann::json& entries, int n, const char* name)
{
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
        throw std::invalid_argument(std::string("matrix ") + name + " must list N*N [re, im] pairs");
    }
    ComplexMatrix m(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const auto& e = entries[static_cast<std::size_t>(r * n + c)];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
                throw std::invalid_argument(std::string("matrix ") + name + " entries must be [re, im]");
            }
            m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
        }
    }
    return m;
}

inline nlohmann::json write_matrix(const ComplexMatrix& m)
{
    nlohmann::json out = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            out.push_back({m(r, c).real(), m(r, c).imag()});
        }
    }
    return out;
}

} // namespace detail

/// { "N": int, "J": [[re, im], ...], "K": [[re, im], ...] }, row-major.
inline SourceMatrices sources_from_json(const nlohmann::json& doc)
{
    if (!doc.is_object() || !doc.contains("N") || !doc["N"].is_number_integer()) {
        throw std::invalid_argument("source file needs an integer \"N\"");
    }
    const int n = doc["N"].get<int>();
    if (n < 1) {
        throw std::invalid_argument("source dimension N must be positive");
    }
    if (!doc.contains("J") || !doc.contains("K")) {
        throw std::invalid_argument("source file needs \"J\" and \"K\"");
    }
    return {detail::read_matrix(doc["J"], n, "J"), detail::read_matrix(doc["K"], n, "K")};
}

inline nlohmann::json sources_to_json(const SourceMatrices& src)
{
    return {{"N", src.N()}, {"J", detail::write_matrix(src.J)}, {"K", detail::write_matrix(src.K)}};
}

inline double to_double(const BigRational& q) { return q.get_d(); }

} // namespace haarcalc
