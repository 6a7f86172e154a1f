// haarcalc: coefficient tables, large-N series, Monte Carlo runs, exact
// monomial integrals and the regression suites.
//
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include <haarcalc/haar_mc.hpp>
#include <haarcalc/largen.hpp>
#include <haarcalc/render.hpp>
#include <haarcalc/su_shifted.hpp>
#include <haarcalc/verify.hpp>
#include <haarcalc/weingarten.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using haarcalc::json;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct GlobalOptions {
    std::string format = "json";
    std::uint64_t seed = 42;
    std::string output;
};

class Output {
public:
    explicit Output(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw usage_error("cannot open output file " + path);
            }
        }
    }

    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

    void emit(const json& doc) { stream() << doc.dump(2) << '\n'; }
    void emit(const std::string& text) { stream() << text << (text.ends_with('\n') ? "" : "\n"); }

private:
    std::ofstream file_;
};

// --- coeffs -------------------------------------------------------------------

struct CoeffsOptions {
    std::string family = "weingarten";
    int n = -1;
    std::string method;
};

int run_coeffs(const CoeffsOptions& o, const GlobalOptions& g)
{
    const haarcalc::Family family = haarcalc::parse_family(o.family);
    std::string method = o.method;
    if (method.empty()) {
        method = family == haarcalc::Family::weingarten ? "character" : "shift";
    }
    if (o.n < 0) {
        throw usage_error("--n must be nonnegative");
    }
    haarcalc::CoeffTable table;
    if (family == haarcalc::Family::weingarten) {
        if (method == "character") {
            table = haarcalc::z_table_character(o.n);
        } else if (method == "recursion") {
            table = haarcalc::z_table_recursive(o.n);
        } else {
            throw usage_error("method '" + method + "' is not available for family weingarten");
        }
    } else {
        if (method == "shift") {
            table = haarcalc::d_table_shift(o.n);
        } else if (method == "recursion") {
            table = haarcalc::d_table_recursive(o.n);
        } else {
            throw usage_error("method '" + method + "' is not available for family su-shifted");
        }
    }
    Output out(g.output);
    if (g.format == "json") {
        json doc = haarcalc::table_to_json(table);
        doc["method"] = method;
        out.emit(doc);
    } else if (g.format == "csv") {
        out.emit(haarcalc::table_to_csv(table));
    } else if (g.format == "latex") {
        out.emit(haarcalc::table_to_latex(table));
    } else {
        throw usage_error("coeffs supports --format json, csv or latex");
    }
    return exit_ok;
}

// --- largen -------------------------------------------------------------------

struct LargeNOptions {
    std::string target;
    int order = 4;
    std::string method = "closed";
    bool compare = false;
};

int run_largen(const LargeNOptions& o, const GlobalOptions& g)
{
    if (o.order < 1) {
        throw usage_error("--order must be at least 1");
    }
    constexpr int finite_n_max_order = 4;
    auto compute = [&](const std::string& method) {
        if (o.target == "ww") {
            if (method != "closed") {
                throw usage_error("ww supports only --method closed");
            }
            return haarcalc::ww_series(o.order);
        }
        if (method == "closed") {
            return haarcalc::wd_closed(o.order);
        }
        if (method == "fixedpoint") {
            return haarcalc::wd_fixedpoint(o.order);
        }
        if (method == "finite-n") {
            if (o.order > finite_n_max_order) {
                throw usage_error("--method finite-n supports --order <= 4");
            }
            return haarcalc::wd_from_finite_N(o.order);
        }
        throw usage_error("unknown method '" + method + "'");
    };

    const haarcalc::TraceSeries series = compute(o.method);
    json doc = haarcalc::series_to_json(series);
    doc["target"] = o.target;
    doc["method"] = o.method;
    bool agree = true;
    if (o.compare) {
        json diffs = json::array();
        std::vector<std::string> others;
        if (o.target == "wd") {
            for (const std::string m : {"closed", "fixedpoint", "finite-n"}) {
                if (m != o.method && (m != "finite-n" || o.order <= finite_n_max_order)) {
                    others.push_back(m);
                }
            }
        }
        for (const auto& m : others) {
            const haarcalc::TraceSeries other = compute(m);
            const haarcalc::TraceSeries diff = haarcalc::difference(series, other);
            const bool zero = diff.terms.empty();
            agree = agree && zero;
            diffs.push_back({{"against", m}, {"agree", zero}, {"difference", haarcalc::series_to_text(diff)}});
        }
        doc["compare"] = diffs;
        doc["agree"] = agree;
    }
    Output out(g.output);
    if (g.format == "json") {
        out.emit(doc);
    } else if (g.format == "text") {
        out.emit(haarcalc::series_to_text(series));
    } else if (g.format == "latex") {
        out.emit(haarcalc::series_to_latex(series));
    } else {
        throw usage_error("largen supports --format json, text or latex");
    }
    return agree ? exit_ok : exit_failed;
}

// --- mc -----------------------------------------------------------------------

struct McOptions {
    int p = 0;
    int n = 0;
    int N = 0;
    std::string group = "SU";
    std::int64_t samples = 100000;
    std::string matrices;
    double sigmas = 5.0;
    unsigned threads = 0;
};

haarcalc::SourceMatrices load_sources(const std::string& path, int n)
{
    if (path.empty()) {
        return haarcalc::SourceMatrices::identity(n);
    }
    std::ifstream in(path);
    if (!in) {
        throw usage_error("cannot read matrices file " + path);
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw usage_error("matrices file is not valid JSON: " + std::string(e.what()));
    }
    return haarcalc::sources_from_json(doc);
}

/// Exact Z_{p,n} where known: selection-rule zeros, p = n < N, and p = n + N < 2N on SU(N).
std::optional<haarcalc::Complex> exact_Z(int p, int n, const haarcalc::SourceMatrices& src, haarcalc::Group group)
{
    const int N = src.N();
    if ((p - n) % N != 0 || (group == haarcalc::Group::unitary && p != n)) {
        return haarcalc::Complex(0.0, 0.0);
    }
    if (p == n && n < N) {
        return haarcalc::eval_Znn(n, src);
    }
    if (group == haarcalc::Group::special_unitary && p == n + N && n < N) {
        return haarcalc::eval_ZNnn(n, src);
    }
    return std::nullopt;
}

int run_mc(const McOptions& o, const GlobalOptions& g)
{
    if (o.p < 0 || o.n < 0) {
        throw usage_error("--p and --n must be nonnegative");
    }
    const haarcalc::SourceMatrices src = load_sources(o.matrices, o.N);
    if (src.N() != o.N) {
        throw usage_error("matrices have dimension " + std::to_string(src.N()) + " but --N is " + std::to_string(o.N));
    }
    const haarcalc::GroupSpec spec(haarcalc::parse_group(o.group), o.N);
    const haarcalc::MCEstimate est = haarcalc::estimate_Z(o.p, o.n, src, spec, o.samples, g.seed, o.threads);
    json doc{{"p", o.p}, {"n", o.n}, {"N", o.N}, {"group", haarcalc::to_string(spec.group)},
             {"estimate", haarcalc::estimate_to_json(est)}};
    int status = exit_ok;
    if (const auto exact = exact_Z(o.p, o.n, src, spec.group)) {
        const haarcalc::CompareReport c = haarcalc::compare(est, *exact, o.sigmas);
        doc["exact"] = haarcalc::complex_to_json(*exact);
        doc["comparison"] = haarcalc::compare_to_json(c);
        status = c.pass ? exit_ok : exit_failed;
    } else {
        doc["exact"] = nullptr;
    }
    Output(g.output).emit(doc);
    return status;
}

// --- tensor -------------------------------------------------------------------

struct TensorOptions {
    int N = 0;
    std::vector<int> i, j, k, l;
    std::string group = "U";
    std::int64_t samples = 0;
    double sigmas = 5.0;
};

int run_tensor(const TensorOptions& o, const GlobalOptions& g)
{
    if (o.i.size() != o.j.size() || o.k.size() != o.l.size()) {
        throw usage_error("--i/--j and --k/--l must have matching lengths");
    }
    if (o.N < 1) {
        throw usage_error("--N must be positive");
    }
    const haarcalc::GroupSpec spec(haarcalc::parse_group(o.group), o.N);
    const int p = static_cast<int>(o.i.size());
    const int n = static_cast<int>(o.k.size());
    for (const auto* list : {&o.i, &o.j, &o.k, &o.l}) {
        for (int v : *list) {
            if (v < 1 || v > o.N) {
                throw usage_error("indices must lie in 1..N");
            }
        }
    }
    haarcalc::BigRational value;
    if ((p - n) % o.N != 0 || (spec.group == haarcalc::Group::unitary && p != n)) {
        value = 0;
    } else if (p == n) {
        if (n >= o.N) {
            throw usage_error("monomial integrals with n >= N are not supported");
        }
        value = haarcalc::monomial_integral_unitary(o.i, o.j, o.k, o.l, o.N);
    } else if (p == o.N && n == 0) {
        value = haarcalc::epsilon_integral(o.i, o.j, o.N);
    } else {
        throw usage_error("no exact index-level formula for p = " + std::to_string(p) + ", n = " + std::to_string(n));
    }
    json doc{{"N", o.N}, {"group", haarcalc::to_string(spec.group)}, {"i", o.i}, {"j", o.j}, {"k", o.k}, {"l", o.l},
             {"re", value.get_str()}, {"im", "0"}};
    int status = exit_ok;
    if (o.samples > 0) {
        const auto est = haarcalc::estimate_monomial(o.i, o.j, o.k, o.l, spec, o.samples, g.seed);
        const auto c = haarcalc::compare(est, haarcalc::Complex(value.get_d(), 0.0), o.sigmas);
        doc["estimate"] = haarcalc::estimate_to_json(est);
        doc["comparison"] = haarcalc::compare_to_json(c);
        status = c.pass ? exit_ok : exit_failed;
    }
    Output(g.output).emit(doc);
    return status;
}

// --- verify -------------------------------------------------------------------

struct VerifyOptions {
    std::string suite = "all";
    std::int64_t samples = 100000;
};

int run_verify(const VerifyOptions& o, const GlobalOptions& g)
{
    std::vector<haarcalc::SuiteResult> results;
    const bool all = o.suite == "all";
    if (all || o.suite == "tables") {
        results.push_back(haarcalc::run_tables_suite());
        results.push_back(haarcalc::run_laws_suite());
    }
    if (all || o.suite == "shift") {
        results.push_back(haarcalc::run_shift_suite());
    }
    if (all || o.suite == "largen") {
        results.push_back(haarcalc::run_largen_suite());
    }
    if (all || o.suite == "mc") {
        if (o.samples < 100) {
            throw usage_error("--samples must be at least 100");
        }
        results.push_back(haarcalc::run_mc_suite(o.samples, g.seed));
    }
    json suites = json::array();
    bool pass = true;
    for (const auto& r : results) {
        suites.push_back(haarcalc::suite_to_json(r));
        pass = pass && r.pass();
        for (const auto& c : r.checks) {
            std::cerr << (c.pass ? "PASS " : "FAIL ") << r.suite << ": " << c.name << " (" << c.detail << ")\n";
        }
    }
    Output(g.output).emit(json{{"pass", pass}, {"suites", suites}});
    return pass ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact and Monte Carlo Haar integrals over U(N) and SU(N)", "haarcalc"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOptions global;
    app.add_option("--format", global.format, "Output format: json, csv, latex or text");
    app.add_option("--seed", global.seed, "Random seed for Monte Carlo commands");
    app.add_option("--output", global.output, "Write output to this file instead of stdout");

    CoeffsOptions coeffs;
    auto* cmd_coeffs = app.add_subcommand("coeffs", "Trace-expansion coefficient tables");
    cmd_coeffs->add_option("--family", coeffs.family, "weingarten or su-shifted")
        ->check(CLI::IsMember({"weingarten", "su-shifted"}));
    cmd_coeffs->add_option("--n", coeffs.n, "Sector weight n")->required();
    cmd_coeffs->add_option("--method", coeffs.method, "character, recursion or shift")
        ->check(CLI::IsMember({"character", "recursion", "shift"}));

    LargeNOptions largen;
    auto* cmd_largen = app.add_subcommand("largen", "Large-N trace series");
    cmd_largen->add_option("target", largen.target, "wd or ww")->required()->check(CLI::IsMember({"wd", "ww"}));
    cmd_largen->add_option("--order", largen.order, "Highest grade");
    cmd_largen->add_option("--method", largen.method, "closed, fixedpoint or finite-n")
        ->check(CLI::IsMember({"closed", "fixedpoint", "finite-n"}));
    cmd_largen->add_flag("--compare", largen.compare, "Diff against the other available methods");

    McOptions mc;
    auto* cmd_mc = app.add_subcommand("mc", "Monte Carlo estimate of Z_{p,n}(J, K)");
    cmd_mc->add_option("--p", mc.p, "Power of tr KU")->required();
    cmd_mc->add_option("--n", mc.n, "Power of tr JU^dag")->required();
    cmd_mc->add_option("--N", mc.N, "Group dimension")->required()->check(CLI::PositiveNumber);
    cmd_mc->add_option("--group", mc.group, "U or SU")->check(CLI::IsMember({"U", "SU", "u", "su"}));
    cmd_mc->add_option("--samples", mc.samples, "Number of Haar samples");
    cmd_mc->add_option("--matrices", mc.matrices, "JSON file with N, J and K (identity when omitted)");
    cmd_mc->add_option("--sigmas", mc.sigmas, "Pass threshold in standard errors");
    cmd_mc->add_option("--threads", mc.threads, "Worker threads (results do not depend on this)");

    TensorOptions tensor;
    auto* cmd_tensor = app.add_subcommand("tensor", "Exact monomial integral of matrix elements");
    cmd_tensor->add_option("--N", tensor.N, "Group dimension")->required();
    cmd_tensor->add_option("--i", tensor.i, "Row indices of the U factors")->delimiter(',');
    cmd_tensor->add_option("--j", tensor.j, "Column indices of the U factors")->delimiter(',');
    cmd_tensor->add_option("--k", tensor.k, "Row indices of the U^dag factors")->delimiter(',');
    cmd_tensor->add_option("--l", tensor.l, "Column indices of the U^dag factors")->delimiter(',');
    cmd_tensor->add_option("--group", tensor.group, "U or SU")->check(CLI::IsMember({"U", "SU", "u", "su"}));
    cmd_tensor->add_option("--samples", tensor.samples, "Also run a Monte Carlo check with this many samples");
    cmd_tensor->add_option("--sigmas", tensor.sigmas, "Pass threshold in standard errors");

    VerifyOptions verify;
    auto* cmd_verify = app.add_subcommand("verify", "Run regression suites");
    cmd_verify->add_option("--suite", verify.suite, "tables, shift, largen, mc or all")
        ->check(CLI::IsMember({"tables", "shift", "largen", "mc", "all"}));
    cmd_verify->add_option("--samples", verify.samples, "Samples per Monte Carlo check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "haarcalc: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (*cmd_coeffs) {
            return run_coeffs(coeffs, global);
        }
        if (*cmd_largen) {
            return run_largen(largen, global);
        }
        if (*cmd_mc) {
            return run_mc(mc, global);
        }
        if (*cmd_tensor) {
            return run_tensor(tensor, global);
        }
        if (*cmd_verify) {
            return run_verify(verify, global);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "haarcalc: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "haarcalc: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "haarcalc: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "haarcalc: " << e.what() << '\n';
        return exit_failed;
    }
    return exit_usage;
}
