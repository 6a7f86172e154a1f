#pragma once

// Output forms for coefficient tables, large-N series and Monte Carlo
// estimates: JSON (machine output), CSV, plain text and LaTeX.

#include "coeff_table.hpp"
#include "expression.hpp"
#include "format.hpp"
#include "haar_mc.hpp"
#include "largen.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace haarcalc {

using nlohmann::json;

// --- coefficient tables ----------------------------------------------------

inline json table_to_json(const CoeffTable& t)
{
    json entries = json::array();
    for (const auto& [alpha, c] : t.entries) {
        entries.push_back({{"partition", to_string(alpha)}, {"value", to_string(c)}});
    }
    return {{"n", t.n}, {"family", to_string(t.family)}, {"entries", entries}};
}

/// Reads the table schema; values may be any expression parse_ratfunc accepts.
inline CoeffTable table_from_json(const json& doc)
{
    CoeffTable t;
    t.n = doc.at("n").get<int>();
    t.family = parse_family(doc.at("family").get<std::string>());
    for (const auto& e : doc.at("entries")) {
        const Partition alpha = parse_partition(e.at("partition").get<std::string>());
        if (alpha.weight() != t.n) {
            throw std::invalid_argument("table entry \"" + to_string(alpha) + "\" has the wrong weight");
        }
        t.entries.emplace(alpha, parse_ratfunc(e.at("value").get<std::string>()));
    }
    return t;
}

inline std::string table_to_csv(const CoeffTable& t)
{
    std::string out = "partition,value\n";
    for (const auto& [alpha, c] : t.entries) {
        out += to_string(alpha) + ',' + to_string(c) + '\n';
    }
    return out;
}

/// Bracket label with ascending parts, e.g. "[1^{2},2]".
inline std::string latex_partition(const Partition& alpha)
{
    std::string out = "[";
    for (int q = 1; q <= alpha.largest_part(); ++q) {
        const int a = alpha.multiplicity(q);
        if (a == 0) {
            continue;
        }
        if (out.size() > 1) {
            out += ',';
        }
        out += std::to_string(q);
        if (a > 1) {
            out += "^{" + std::to_string(a) + "}";
        }
    }
    return out + "]";
}

/// One table row, largest part first, e.g. "n=2 & d_{[2]}=... \qquad d_{[1^{2}]}=... \\".
inline std::string table_to_latex(const CoeffTable& t)
{
    const char* symbol = t.family == Family::weingarten ? "z" : "d";
    std::string out = "n=" + std::to_string(t.n) + " & ";
    bool first = true;
    for (auto it = t.entries.rbegin(); it != t.entries.rend(); ++it) {
        if (!first) {
            out += " \\qquad ";
        }
        first = false;
        out += std::string(symbol) + "_{" + latex_partition(it->first) + "}=" + to_latex(it->second);
    }
    return out + " \\\\\n";
}

// --- trace series -----------------------------------------------------------

namespace detail {

inline BigRational content_of(const std::vector<BigRational>& cs)
{
    BigInt g = 0;
    BigInt l = 1;
    for (const auto& c : cs) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    BigRational content = make_rational(g, l);
    if (!cs.empty() && cs.front() < 0) {
        content = -content;
    }
    return content;
}

inline std::string monomial_text(const Partition& alpha, const std::string& var)
{
    std::string out;
    for (int q = 1; q <= alpha.largest_part(); ++q) {
        const int a = alpha.multiplicity(q);
        if (a == 0) {
            continue;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += var + std::to_string(q);
        if (a > 1) {
            out += '^' + std::to_string(a);
        }
    }
    return out;
}

struct GradeTerms {
    int grade;
    BigRational content;
    std::vector<std::pair<Partition, BigRational>> scaled;  // coefficient / content
};

inline std::vector<GradeTerms> group_by_grade(const TraceSeries& s)
{
    std::vector<GradeTerms> out;
    for (int n = 1; n <= s.max_order; ++n) {
        std::vector<std::pair<Partition, BigRational>> terms;
        std::vector<BigRational> cs;
        for (const auto& alpha : enumerate_partitions(n)) {
            const BigRational c = s.coefficient(alpha);
            if (c != 0) {
                terms.emplace_back(alpha, c);
                cs.push_back(c);
            }
        }
        if (terms.empty()) {
            continue;
        }
        const BigRational content = content_of(cs);
        for (auto& [alpha, c] : terms) {
            c /= content;
        }
        out.push_back({n, content, std::move(terms)});
    }
    return out;
}

} // namespace detail

/// Plain text with the content of each grade factored, e.g.
/// "κ̃ t1 + κ̃^2 (1/2)(t1^2 - t2)".
inline std::string series_to_text(const TraceSeries& s)
{
    const bool ww = s.family == SeriesFamily::ww;
    const std::string var = ww ? "τ" : "t";
    const std::string kappa = "κ̃";
    std::string out;
    for (const auto& g : detail::group_by_grade(s)) {
        const int power = ww ? 2 * g.grade : g.grade;
        std::string term = kappa + (power > 1 ? "^" + std::to_string(power) : "");
        if (g.content != 1) {
            term += " (" + g.content.get_str() + ")";
        }
        std::string inner;
        for (const auto& [alpha, c] : g.scaled) {
            const BigRational a = abs(c);
            if (inner.empty()) {
                inner += c < 0 ? "-" : "";
            } else {
                inner += c < 0 ? " - " : " + ";
            }
            if (a != 1) {
                inner += a.get_str() + ' ';
            }
            inner += detail::monomial_text(alpha, var);
        }
        term += g.scaled.size() == 1 && g.content == 1 ? " " + inner : (g.content != 1 ? "" : " ") + ("(" + inner + ")");
        out += out.empty() ? term : " + " + term;
    }
    return out.empty() ? "0" : out;
}

inline std::string series_to_latex(const TraceSeries& s)
{
    const bool ww = s.family == SeriesFamily::ww;
    const std::string var = ww ? "\\tau" : "t";
    std::string out;
    for (const auto& g : detail::group_by_grade(s)) {
        const int power = ww ? 2 * g.grade : g.grade;
        std::string term = "\\tilde\\kappa" + (power > 1 ? "^{" + std::to_string(power) + "}" : std::string());
        if (g.content != 1) {
            const BigRational a = abs(g.content);
            term += std::string(g.content < 0 ? "(-" : "") + "\\frac{" + a.get_num().get_str() + "}{" +
                    a.get_den().get_str() + "}" + (g.content < 0 ? ")" : "");
        }
        std::string inner;
        for (const auto& [alpha, c] : g.scaled) {
            const BigRational a = abs(c);
            if (!inner.empty() || c < 0) {
                inner += c < 0 ? " - " : " + ";
            }
            if (a != 1) {
                inner += a.get_str() + ' ';
            }
            std::string mono;
            for (int q = 1; q <= alpha.largest_part(); ++q) {
                const int m = alpha.multiplicity(q);
                if (m == 0) {
                    continue;
                }
                mono += var + "_{" + std::to_string(q) + "}" + (m > 1 ? "^{" + std::to_string(m) + "}" : "");
            }
            inner += mono;
        }
        term += "(" + inner + ")";
        out += out.empty() ? term : " + " + term;
    }
    return out.empty() ? "0" : out;
}

inline json series_to_json(const TraceSeries& s)
{
    json terms = json::array();
    for (int n = 1; n <= s.max_order; ++n) {
        for (const auto& alpha : enumerate_partitions(n)) {
            const BigRational c = s.coefficient(alpha);
            if (c != 0) {
                terms.push_back({{"grade", n}, {"partition", to_string(alpha)}, {"coefficient", c.get_str()}});
            }
        }
    }
    return {{"family", s.family == SeriesFamily::wd ? "wd" : "ww"},
            {"order", s.max_order},
            {"terms", terms},
            {"text", series_to_text(s)}};
}

/// Reads grade displays {"grade", "prefactor", "terms": {partition: integer}}
/// into a series.
inline TraceSeries series_from_display(const json& displays, SeriesFamily family)
{
    TraceSeries s{family, 0, {}};
    for (const auto& d : displays) {
        s.max_order = std::max(s.max_order, d.at("grade").get<int>());
    }
    for (const auto& d : displays) {
        const RatFuncN pre = parse_ratfunc(d.at("prefactor").get<std::string>());
        if (pre.numerator().degree() > 0 || pre.denominator().degree() > 0) {
            throw std::invalid_argument("series prefactor must be a number");
        }
        const BigRational factor = pre.numerator().coefficient(0);
        for (const auto& [key, value] : d.at("terms").items()) {
            const Partition alpha = parse_partition(key);
            if (alpha.weight() != d.at("grade").get<int>()) {
                throw std::invalid_argument("display term \"" + key + "\" has the wrong grade");
            }
            s.set(alpha, factor * BigRational(value.get<long>()));
        }
    }
    return s;
}

// --- Monte Carlo ------------------------------------------------------------

inline json complex_to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

inline json estimate_to_json(const MCEstimate& e)
{
    return {{"mean", complex_to_json(e.mean)},
            {"stderr_real", e.stderr_real},
            {"stderr_imag", e.stderr_imag},
            {"samples", e.samples},
            {"seed", e.seed}};
}

inline json compare_to_json(const CompareReport& r)
{
    auto finite = [](double x) -> json {
        if (std::isfinite(x)) {
            return x;
        }
        return x > 0 ? "inf" : "-inf";
    };
    return {{"pass", r.pass}, {"pull_real", finite(r.pull_real)}, {"pull_imag", finite(r.pull_imag)},
            {"sigmas", r.sigmas}};
}

} // namespace haarcalc
