#pragma once

// Regression suites behind `haarcalc verify`: reference tables, the shift
// identity, large-N agreement and Monte Carlo checks.

#include "haar_mc.hpp"
#include "largen.hpp"
#include "render.hpp"
#include "su_shifted.hpp"
#include "weingarten.hpp"

#include <haarcalc/reference_tables.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace haarcalc {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<Check> checks;

    bool pass() const
    {
        for (const auto& c : checks) {
            if (!c.pass) {
                return false;
            }
        }
        return true;
    }
};

inline json suite_to_json(const SuiteResult& r)
{
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    return {{"suite", r.suite}, {"pass", r.pass()}, {"checks", checks}};
}

inline const json& reference_data()
{
    static const json doc = json::parse(reference_tables_json);
    return doc;
}

inline CoeffTable reference_table(Family family, int n)
{
    for (const auto& t : reference_data().at("tables")) {
        if (t.at("n").get<int>() == n && t.at("family").get<std::string>() == to_string(family)) {
            return table_from_json(t);
        }
    }
    throw std::out_of_range("no reference table for " + to_string(family) + " n=" + std::to_string(n));
}

namespace detail {

inline std::string table_mismatch(const CoeffTable& got, const CoeffTable& want)
{
    for (const auto& [alpha, c] : want.entries) {
        auto it = got.entries.find(alpha);
        if (it == got.entries.end()) {
            return "missing " + to_string(alpha);
        }
        if (!(it->second == c)) {
            return to_string(alpha) + ": got " + to_string(it->second) + ", want " + to_string(c);
        }
    }
    if (got.entries.size() != want.entries.size()) {
        return "extra entries";
    }
    return "";
}

inline Check table_check(const std::string& name, const CoeffTable& got, const CoeffTable& want)
{
    const std::string m = table_mismatch(got, want);
    return {name, m.empty(), m.empty() ? "identical" : m};
}

} // namespace detail

inline SuiteResult run_tables_suite()
{
    SuiteResult r{"tables", {}};
    CoeffTable z_rec{0, Family::weingarten, {{Partition{}, RatFuncN(1)}}};
    CoeffTable d_rec{0, Family::su_shifted, {{Partition{}, RatFuncN(1)}}};
    for (int n = 1; n <= 4; ++n) {
        const std::string tag = " n=" + std::to_string(n);
        const CoeffTable z_ref = reference_table(Family::weingarten, n);
        const CoeffTable d_ref = reference_table(Family::su_shifted, n);
        const CoeffTable z_chr = z_table_character(n);
        z_rec = z_table_recursive(n, z_rec);
        d_rec = d_table_recursive(n, d_rec);
        r.checks.push_back(detail::table_check("z character" + tag, z_chr, z_ref));
        r.checks.push_back(detail::table_check("z recursion" + tag, z_rec, z_ref));
        r.checks.push_back(detail::table_check("d shift" + tag, d_table_shift(z_chr), d_ref));
        r.checks.push_back(detail::table_check("d recursion" + tag, d_rec, d_ref));
    }
    return r;
}

inline SuiteResult run_shift_suite(int max_n = 5)
{
    SuiteResult r{"shift", {}};
    for (int n = 1; n <= max_n; ++n) {
        const ShiftReport rep = verify_shift_identity(n);
        std::string failed;
        for (const auto& c : rep.checks) {
            if (!c.pass) {
                failed += (failed.empty() ? "" : ", ") + to_string(c.alpha);
            }
        }
        r.checks.push_back({"shift identity n=" + std::to_string(n), rep.all_pass(),
                            failed.empty() ? std::to_string(rep.checks.size()) + " partitions" : "failed: " + failed});
    }
    return r;
}

/// Sign law (-1)^{c+n} for z and d, degree gap 2n - c for z, and a strictly
/// smaller gap for d when n >= 2.
inline SuiteResult run_laws_suite(int max_n = 5)
{
    SuiteResult r{"laws", {}};
    for (int n = 1; n <= max_n; ++n) {
        const CoeffTable z = z_table_character(n);
        const CoeffTable d = d_table_shift(z);
        std::string bad;
        for (const auto& [alpha, zc] : z.entries) {
            const RatFuncN& dc = d.at(alpha);
            const int expected_sign = (alpha.cycles() + n) % 2 == 0 ? 1 : -1;
            if (zc.sign_at_infinity() != expected_sign || dc.sign_at_infinity() != expected_sign) {
                bad += " sign[" + to_string(alpha) + "]";
            }
            if (zc.degree_gap() != 2 * n - alpha.cycles()) {
                bad += " zgap[" + to_string(alpha) + "]";
            }
            if (n >= 2 && !(dc.degree_gap() < zc.degree_gap())) {
                bad += " dgap[" + to_string(alpha) + "]";
            }
        }
        r.checks.push_back({"sign and degree laws n=" + std::to_string(n), bad.empty(), bad.empty() ? "ok" : bad});
    }
    return r;
}

inline SuiteResult run_largen_suite()
{
    SuiteResult r{"largen", {}};
    auto series_check = [](const std::string& name, const TraceSeries& a, const TraceSeries& b) {
        const bool same = a.max_order == b.max_order && a.terms == b.terms;
        return Check{name, same, same ? "identical" : series_to_text(difference(a, b))};
    };
    const TraceSeries closed8 = wd_closed(8);
    r.checks.push_back(series_check("W_D closed = fixed point (order 8)", closed8, wd_fixedpoint(8)));
    r.checks.push_back(series_check("W_D closed = finite-N limit (order 4)", closed8.truncated(4), wd_from_finite_N(4)));
    r.checks.push_back(series_check("W_D closed = reference display (order 4)", closed8.truncated(4),
                                    series_from_display(reference_data().at("wd_display"), SeriesFamily::wd)));
    r.checks.push_back(series_check("W_W = reference display (order 4)", ww_series(4),
                                    series_from_display(reference_data().at("ww_display"), SeriesFamily::ww)));
    return r;
}

/// Gaussian source matrices with entries of standard deviation `scale`,
/// reproducible from the seed.
inline SourceMatrices random_sources(int n, std::uint64_t seed, double scale = 0.5)
{
    CounterRng rng(seed, 0xfeedULL);
    std::normal_distribution<double> normal(0.0, scale);
    auto draw = [&] {
        ComplexMatrix m(n, n);
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                const double re = normal(rng);
                const double im = normal(rng);
                m(r, c) = Complex(re, im);
            }
        }
        return m;
    };
    ComplexMatrix j = draw();
    ComplexMatrix k = draw();
    return {std::move(j), std::move(k)};
}

inline Check mc_check(const std::string& name, const MCEstimate& est, Complex exact, double sigmas = 5.0)
{
    const CompareReport c = compare(est, exact, sigmas);
    std::ostringstream os;
    os.precision(6);
    os << "estimate " << est.mean.real() << (est.mean.imag() < 0 ? "-" : "+") << std::abs(est.mean.imag()) << "i"
       << " exact " << exact.real() << (exact.imag() < 0 ? "-" : "+") << std::abs(exact.imag()) << "i"
       << " pulls " << c.pull_real << ", " << c.pull_imag;
    return {name, c.pass, os.str()};
}

inline SuiteResult run_mc_suite(std::int64_t samples, std::uint64_t seed)
{
    SuiteResult r{"mc", {}};
    const GroupSpec su3(Group::special_unitary, 3);
    const SourceMatrices src = random_sources(3, seed);
    const Complex det_k = src.K.determinant();
    auto z = [&](int p, int n) { return estimate_Z(p, n, src, su3, samples, seed + 1000 * p + n); };

    r.checks.push_back(mc_check("Z_{3,0} = det K (SU(3))", z(3, 0), det_k));
    r.checks.push_back(mc_check("Z_{4,1} = det K sum d t (SU(3))", z(4, 1), eval_ZNnn(1, src)));
    r.checks.push_back(mc_check("Z_{5,2} = det K sum d t (SU(3))", z(5, 2), eval_ZNnn(2, src)));
    r.checks.push_back(mc_check("Z_{1,1} = sum z t (SU(3))", z(1, 1), eval_Znn(1, src)));
    r.checks.push_back(mc_check("Z_{2,2} = 2 sum z t (SU(3))", z(2, 2), eval_Znn(2, src)));
    for (auto [p, n] : {std::pair{1, 0}, {2, 0}, {2, 1}, {3, 1}, {3, 2}, {4, 2}}) {
        r.checks.push_back(mc_check("selection rule Z_{" + std::to_string(p) + "," + std::to_string(n) + "} = 0",
                                    z(p, n), Complex(0.0, 0.0)));
    }
    const GroupSpec su2(Group::special_unitary, 2);
    const std::vector<int> i12{1, 2}, i21{2, 1}, none{};
    r.checks.push_back(mc_check("SU(2) U_11 U_22 = +1/2",
                                estimate_monomial(i12, i12, none, none, su2, samples, seed + 7), Complex(0.5, 0.0)));
    r.checks.push_back(mc_check("SU(2) U_12 U_21 = -1/2",
                                estimate_monomial(i12, i21, none, none, su2, samples, seed + 8), Complex(-0.5, 0.0)));
    return r;
}

} // namespace haarcalc
