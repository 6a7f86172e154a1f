#pragma once

// Haar sampling on U(N) / SU(N) and Monte Carlo estimation of Z_{p,n}(J, K) and
// of single monomials.
//
// Random numbers are counter-based: the draws of sample s come from a
// SplitMix64 stream keyed by (seed, s), so an estimate depends only on
// (seed, samples, spec) and never on how the samples are spread over workers.
// Samples are grouped into fixed-size blocks; each block keeps a Welford
// accumulator and blocks are merged in index order.

#include "sources.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace haarcalc {

enum class Group { unitary, special_unitary };

inline std::string to_string(Group g) { return g == Group::unitary ? "U" : "SU"; }

inline Group parse_group(std::string_view s)
{
    if (s == "U" || s == "u" || s == "unitary") {
        return Group::unitary;
    }
    if (s == "SU" || s == "su" || s == "special_unitary") {
        return Group::special_unitary;
    }
    throw std::invalid_argument("unknown group \"" + std::string(s) + "\"");
}

struct GroupSpec {
    Group group = Group::unitary;
    int N = 1;

    GroupSpec(Group g, int n) : group(g), N(n)
    {
        if (n < 1) {
            throw std::invalid_argument("group dimension must be positive");
        }
    }
};

/// SplitMix64 keyed by (seed, stream); satisfies UniformRandomBitGenerator.
class CounterRng {
public:
    using result_type = std::uint64_t;

    CounterRng(std::uint64_t seed, std::uint64_t stream) : key_(mix(mix(seed) ^ (stream + 0x632be59bd9b4e019ULL))) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return mix(key_ + (++counter_) * 0x9e3779b97f4a7c15ULL); }

private:
    static std::uint64_t mix(std::uint64_t z)
    {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Haar-distributed matrix: Ginibre sample, QR, column phases fixed so that
/// diag(R) > 0. For SU(N) the result is divided by the principal N-th root of
/// its determinant.
template <typename Rng>
ComplexMatrix sample_haar(const GroupSpec& spec, Rng& rng)
{
    const int n = spec.N;
    if (spec.group == Group::special_unitary && n == 1) {
        return ComplexMatrix::Identity(1, 1);
    }
    std::normal_distribution<double> normal(0.0, std::numbers::sqrt2 / 2.0);
    ComplexMatrix z(n, n);
    for (int c = 0; c < n; ++c) {
        for (int r = 0; r < n; ++r) {
            const double re = normal(rng);
            const double im = normal(rng);
            z(r, c) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
    const ComplexMatrix& r = qr.matrixQR();
    for (int c = 0; c < n; ++c) {
        const Complex d = r(c, c);
        const double mod = std::abs(d);
        if (mod > 0.0) {
            q.col(c) *= d / mod;
        }
    }
    if (spec.group == Group::special_unitary) {
        const Complex det = q.determinant();
        q /= std::polar(1.0, std::arg(det) / n);
    }
    return q;
}

struct MCEstimate {
    Complex mean;
    double stderr_real = 0.0;
    double stderr_imag = 0.0;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;

    friend bool operator==(const MCEstimate&, const MCEstimate&) = default;
};

namespace detail {

struct Welford {
    std::int64_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void push(double x)
    {
        ++count;
        const double delta = x - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (x - mean);
    }

    void merge(const Welford& o)
    {
        if (o.count == 0) {
            return;
        }
        if (count == 0) {
            *this = o;
            return;
        }
        const double total = static_cast<double>(count + o.count);
        const double delta = o.mean - mean;
        mean += delta * static_cast<double>(o.count) / total;
        m2 += o.m2 + delta * delta * static_cast<double>(count) * static_cast<double>(o.count) / total;
        count += o.count;
    }

    double standard_error() const
    {
        return std::sqrt(m2 / static_cast<double>(count - 1) / static_cast<double>(count));
    }
};

inline constexpr std::int64_t block_size = 4096;

} // namespace detail

/// Mean of observable(U) over Haar samples. threads = 0 uses the hardware
/// concurrency; the result does not depend on it.
inline MCEstimate estimate_observable(const GroupSpec& spec, std::int64_t samples, std::uint64_t seed,
                                      const std::function<Complex(const ComplexMatrix&)>& observable,
                                      unsigned threads = 0)
{
    if (samples < 2) {
        throw std::invalid_argument("Monte Carlo estimate needs at least 2 samples");
    }
    const std::int64_t blocks = (samples + detail::block_size - 1) / detail::block_size;
    std::vector<detail::Welford> re(static_cast<std::size_t>(blocks));
    std::vector<detail::Welford> im(static_cast<std::size_t>(blocks));

    auto run_block = [&](std::int64_t b) {
        const std::int64_t begin = b * detail::block_size;
        const std::int64_t end = std::min(samples, begin + detail::block_size);
        for (std::int64_t s = begin; s < end; ++s) {
            CounterRng rng(seed, static_cast<std::uint64_t>(s));
            const Complex v = observable(sample_haar(spec, rng));
            re[static_cast<std::size_t>(b)].push(v.real());
            im[static_cast<std::size_t>(b)].push(v.imag());
        }
    };

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::int64_t>(threads, blocks));
    if (threads <= 1) {
        for (std::int64_t b = 0; b < blocks; ++b) {
            run_block(b);
        }
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::int64_t b = t; b < blocks; b += threads) {
                    run_block(b);
                }
            });
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    detail::Welford total_re;
    detail::Welford total_im;
    for (std::int64_t b = 0; b < blocks; ++b) {
        total_re.merge(re[static_cast<std::size_t>(b)]);
        total_im.merge(im[static_cast<std::size_t>(b)]);
    }
    return {Complex(total_re.mean, total_im.mean), total_re.standard_error(), total_im.standard_error(), samples,
            seed};
}

/// Estimate of Z_{p,n}(J, K) = int dU (tr KU)^p (tr JU^dag)^n.
inline MCEstimate estimate_Z(int p, int n, const SourceMatrices& src, const GroupSpec& spec, std::int64_t samples,
                             std::uint64_t seed, unsigned threads = 0)
{
    if (p < 0 || n < 0) {
        throw std::invalid_argument("powers p and n must be nonnegative");
    }
    if (spec.N != src.N()) {
        throw std::invalid_argument("dimension of J, K does not match the group");
    }
    if (samples < 100) {
        throw std::invalid_argument("estimate_Z needs at least 100 samples");
    }
    auto observable = [&](const ComplexMatrix& u) {
        const Complex a = (src.K * u).trace();
        const Complex b = (src.J * u.adjoint()).trace();
        Complex v(1.0, 0.0);
        for (int k = 0; k < p; ++k) {
            v *= a;
        }
        for (int k = 0; k < n; ++k) {
            v *= b;
        }
        return v;
    };
    return estimate_observable(spec, samples, seed, observable, threads);
}

/// Estimate of prod_a U_{i_a j_a} prod_b U^dag_{k_b l_b}, with U^dag_{kl} = conj(U_{lk});
/// indices are 1-based.
inline MCEstimate estimate_monomial(std::span<const int> i, std::span<const int> j, std::span<const int> k,
                                    std::span<const int> l, const GroupSpec& spec, std::int64_t samples,
                                    std::uint64_t seed, unsigned threads = 0)
{
    if (i.size() != j.size() || k.size() != l.size()) {
        throw std::invalid_argument("index lists of U and of U^dag must pair up");
    }
    for (auto list : {i, j, k, l}) {
        for (int v : list) {
            if (v < 1 || v > spec.N) {
                throw std::out_of_range("monomial index outside 1..N");
            }
        }
    }
    const std::vector<int> iv(i.begin(), i.end()), jv(j.begin(), j.end()), kv(k.begin(), k.end()),
        lv(l.begin(), l.end());
    auto observable = [&](const ComplexMatrix& u) {
        Complex v(1.0, 0.0);
        for (std::size_t a = 0; a < iv.size(); ++a) {
            v *= u(iv[a] - 1, jv[a] - 1);
        }
        for (std::size_t b = 0; b < kv.size(); ++b) {
            v *= std::conj(u(lv[b] - 1, kv[b] - 1));
        }
        return v;
    };
    return estimate_observable(spec, samples, seed, observable, threads);
}

struct CompareReport {
    bool pass = false;
    double pull_real = 0.0;
    double pull_imag = 0.0;
    double sigmas = 0.0;
};

namespace detail {

inline double pull(double diff, double err)
{
    if (err > 0.0) {
        return diff / err;
    }
    return diff == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
}

} // namespace detail

/// Passes iff both |Re| and |Im| deviations are within sigmas standard errors.
inline CompareReport compare(const MCEstimate& est, Complex exact, double sigmas)
{
    if (!(sigmas > 0.0)) {
        throw std::invalid_argument("sigma threshold must be positive");
    }
    const Complex diff = est.mean - exact;
    CompareReport r;
    r.sigmas = sigmas;
    r.pull_real = detail::pull(diff.real(), est.stderr_real);
    r.pull_imag = detail::pull(diff.imag(), est.stderr_imag);
    r.pass = std::abs(diff.real()) <= sigmas * est.stderr_real && std::abs(diff.imag()) <= sigmas * est.stderr_imag;
    return r;
}

} // namespace haarcalc
