// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <haarcalc/verify.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace haarcalc;

namespace {

// Pinned tolerances.
constexpr double mc_sigmas = 5.0;
constexpr std::int64_t mc_samples = 1'000'000;
constexpr std::int64_t sampler_samples = 100'000;
constexpr double residual_bound = 1e-12;
constexpr std::uint64_t mc_seed = 20240611;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

void absorb(Outcome& out, const SuiteResult& suite)
{
    for (const auto& c : suite.checks) {
        out.require(c.pass, c.name + ": " + c.detail);
    }
}

Outcome table_regression()
{
    Outcome out;
    for (int n = 1; n <= 4; ++n) {
        const CoeffTable z = z_table_character(n);
        const CoeffTable d = d_table_shift(z);
        out.require(z == reference_table(Family::weingarten, n), "z table n=" + std::to_string(n));
        out.require(d == reference_table(Family::su_shifted, n), "d table n=" + std::to_string(n));
    }
    return out;
}

// Residual of every row of the assembled system, including the redundant ones.
bool system_consistent(int n, const CoeffTable& previous, const RatFuncN& pivot, const RatFuncN& rhs_factor,
                       const CoeffTable& solution)
{
    const RecursionSystem sys = build_recursion_system(n, previous, pivot, rhs_factor);
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        RatFuncN acc = -sys.rhs[r];
        for (std::size_t c = 0; c < sys.unknowns.size(); ++c) {
            acc += sys.lhs(r, c) * solution.at(sys.unknowns[c]);
        }
        if (!acc.is_zero()) {
            return false;
        }
    }
    return sys.rows.size() >= sys.unknowns.size();
}

Outcome dual_derivation()
{
    Outcome out;
    CoeffTable z = z_table_recursive(0);
    CoeffTable d = d_table_recursive(0);
    for (int n = 1; n <= 5; ++n) {
        const std::string tag = " n=" + std::to_string(n);
        const CoeffTable z_prev = z;
        const CoeffTable d_prev = d;
        z = z_table_recursive(n, z_prev);
        d = d_table_recursive(n, d_prev);
        out.require(z == z_table_character(n), "z recursion vs characters" + tag);
        out.require(d == d_table_shift(n), "d recursion vs shift" + tag);
        out.require(system_consistent(n, z_prev, RatFuncN::variable(), RatFuncN(static_cast<long>(n)), z),
                    "z system inconsistent" + tag);
        out.require(system_consistent(n, d_prev, RatFuncN(PolyN::linear(BigRational(1))),
                                      RatFuncN(static_cast<long>(n)) * RatFuncN(PolyN::linear(BigRational(n))), d),
                    "d system inconsistent" + tag);
    }
    return out;
}

Outcome shift_identity()
{
    Outcome out;
    absorb(out, run_shift_suite(5));
    return out;
}

Outcome sign_degree_laws()
{
    Outcome out;
    absorb(out, run_laws_suite(5));
    return out;
}

Outcome largen_triple()
{
    Outcome out;
    const TraceSeries closed = wd_closed(8);
    out.require(closed == wd_fixedpoint(8), "closed vs fixed point through order 8");
    out.require(closed.truncated(4) == wd_from_finite_N(4), "closed vs finite-N limit through order 4");
    out.require(closed.truncated(4) == series_from_display(reference_data().at("wd_display"), SeriesFamily::wd),
                "closed vs displayed W_D");
    const std::string text = series_to_text(closed.truncated(4));
    out.require(text.find("κ̃^4 (1/4)(t1^4 - 6 t1^2 t2 + 2 t2^2 + 8 t1 t3 - 5 t4)") != std::string::npos,
                "order-4 text: " + text);
    return out;
}

Outcome ww_regression()
{
    Outcome out;
    const TraceSeries ww = ww_series(4);
    out.require(ww == series_from_display(reference_data().at("ww_display"), SeriesFamily::ww), "ww vs display");
    const std::vector<std::pair<const char*, long>> top{
        {"1^4", 24}, {"1^2 2^1", -48}, {"2^2", 9}, {"1^1 3^1", 20}, {"4^1", -5}};
    for (const auto& [alpha, num] : top) {
        out.require(ww.coefficient(parse_partition(alpha)) == make_rational(num, 4),
                    std::string("kt^8 coefficient of ") + alpha);
    }
    return out;
}

Outcome monte_carlo()
{
    Outcome out;
    const SuiteResult suite = run_mc_suite(mc_samples, mc_seed);
    absorb(out, suite);
    for (const auto& c : suite.checks) {
        std::printf("      %-40s %s\n", c.name.c_str(), c.detail.c_str());
    }
    return out;
}

Outcome sampler_quality()
{
    Outcome out;
    for (int n = 1; n <= 6; ++n) {
        for (Group g : {Group::unitary, Group::special_unitary}) {
            const GroupSpec spec(g, n);
            double unit = 0.0;
            double det = 0.0;
            for (std::uint64_t s = 0; s < 1000; ++s) {
                CounterRng rng(mc_seed, s);
                const ComplexMatrix u = sample_haar(spec, rng);
                unit = std::max(unit, (u.adjoint() * u - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff());
                if (g == Group::special_unitary) {
                    det = std::max(det, std::abs(u.determinant() - Complex(1.0, 0.0)));
                }
            }
            const std::string tag = " " + to_string(g) + "(" + std::to_string(n) + ")";
            out.require(unit < residual_bound, "unitarity residual" + tag);
            out.require(det < residual_bound, "determinant residual" + tag);
        }
    }

    // E[U_ij] = 0 and E[U_ij conj(U_kl)] = delta_ik delta_jl / N.
    auto entry_moment = [&](const GroupSpec& spec, int i, int j, int k, int l, std::uint64_t seed) {
        return estimate_observable(spec, sampler_samples, seed, [=](const ComplexMatrix& u) {
            return u(i, j) * std::conj(u(k, l));
        });
    };
    std::uint64_t seed = mc_seed;
    for (Group g : {Group::unitary, Group::special_unitary}) {
        const GroupSpec spec(g, 3);
        const std::string tag = " " + to_string(g) + "(3)";
        const MCEstimate first = estimate_observable(spec, sampler_samples, ++seed,
                                                     [](const ComplexMatrix& u) { return u(0, 1); });
        out.require(compare(first, Complex(0.0, 0.0), mc_sigmas).pass, "first moment" + tag);
        const MCEstimate trace = estimate_observable(spec, sampler_samples, ++seed,
                                                     [](const ComplexMatrix& u) { return u.trace(); });
        out.require(compare(trace, Complex(0.0, 0.0), mc_sigmas).pass, "mean trace" + tag);
        out.require(compare(entry_moment(spec, 0, 0, 0, 0, ++seed), Complex(1.0 / 3.0, 0.0), mc_sigmas).pass,
                    "E|U11|^2" + tag);
        out.require(compare(entry_moment(spec, 1, 2, 1, 2, ++seed), Complex(1.0 / 3.0, 0.0), mc_sigmas).pass,
                    "E|U23|^2" + tag);
        out.require(compare(entry_moment(spec, 0, 0, 0, 1, ++seed), Complex(0.0, 0.0), mc_sigmas).pass,
                    "E U11 conj(U12)" + tag);
        out.require(compare(entry_moment(spec, 0, 0, 1, 0, ++seed), Complex(0.0, 0.0), mc_sigmas).pass,
                    "E U11 conj(U21)" + tag);
    }
    const MCEstimate su2 = estimate_observable(GroupSpec(Group::special_unitary, 2), sampler_samples, ++seed,
                                               [](const ComplexMatrix& u) { return u.trace(); });
    out.require(compare(su2, Complex(0.0, 0.0), mc_sigmas).pass, "mean trace SU(2)");

    const SourceMatrices src = random_sources(3, mc_seed);
    const GroupSpec su3(Group::special_unitary, 3);
    const MCEstimate a = estimate_Z(4, 1, src, su3, 20000, mc_seed, 1);
    const MCEstimate b = estimate_Z(4, 1, src, su3, 20000, mc_seed, 1);
    const MCEstimate c = estimate_Z(4, 1, src, su3, 20000, mc_seed, 4);
    out.require(a == b, "repeat run differs");
    out.require(a == c, "thread count changes the estimate");
    return out;
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "table regression (exact)", 1.0, table_regression},
        {2, "dual-derivation equivalence n<=5 (exact)", 30.0, dual_derivation},
        {3, "shift identity n=1..5 (exact)", 5.0, shift_identity},
        {4, "sign and degree laws n<=5 (exact)", 5.0, sign_degree_laws},
        {5, "large-N W_D triple agreement (exact)", 60.0, largen_triple},
        {6, "W_W regression through order 4 (exact)", 1.0, ww_regression},
        {7, "Monte Carlo SU(3)/SU(2), 1e6 samples, 5 sigma", 600.0, monte_carlo},
        {8, "sampler quality", 600.0, sampler_quality},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.require(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.require(seconds < c.limit_seconds, "over the runtime limit");
        failures += out.pass ? 0 : 1;
        std::printf("%s [%d] %s (%.2f s, limit %.0f s)%s%s\n", out.pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                    c.limit_seconds, out.detail.empty() ? "" : ": ", out.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
