// Acceptance run: one PASS/FAIL line per criterion, details for every failed item.

#include "charvar/chartables.hpp"
#include "charvar/error.hpp"
#include "charvar/homcount.hpp"
#include "charvar/qpoly.hpp"
#include "charvar/repclassify.hpp"
#include "charvar/strata.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace charvar;

namespace {

struct Report {
    int items = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what)
    {
        ++items;
        if (!ok)
            failures.push_back(what);
    }
};

std::string series_name(Series s) { return s == Series::GL ? "GL" : "SL"; }

QPolynomial Q() { return QPolynomial::q(); }

// --- 1: oracle against closed forms

void oracle_vs_formula(Report& r)
{
    struct Case {
        GroupFamily f;
        Series s;
        std::uint32_t q;
    };
    std::vector<Case> cases;
    for (std::uint32_t q : {3u, 5u, 13u})
        cases.push_back({GroupFamily::free(1), Series::SL, q});
    for (std::uint32_t q : {3u, 5u})
        cases.push_back({GroupFamily::free(2), Series::SL, q});
    cases.push_back({GroupFamily::orientable(1), Series::SL, 5});
    cases.push_back({GroupFamily::orientable(1), Series::GL, 3});
    for (std::uint32_t q : {5u, 9u, 13u})
        cases.push_back({GroupFamily::nonorientable(2), Series::SL, q});
    cases.push_back({GroupFamily::nonorientable(3), Series::SL, 5});
    cases.push_back({GroupFamily::torusknot(2, 3), Series::SL, 13});
    cases.push_back({GroupFamily::torusknot(2, 3), Series::GL, 13});
    for (const auto& c : cases) {
        mpq_class formula = closed_form_epoly(c.f, c.s, 2).evaluate(c.q);
        ClassCount cc = count_reductive_classes(c.f, {c.s, 2, c.q});
        std::ostringstream os;
        os << to_string(c.f) << " " << series_name(c.s) << "2 q=" << c.q << ": formula " << formula.get_str()
           << ", oracle " << cc.total;
        r.check(formula == mpq_class((unsigned long)cc.total), os.str());
        r.notes.push_back(os.str());
    }
}

// --- 2: enumeration against character sums

void frobenius_formula(Report& r)
{
    struct Case {
        GroupFamily f;
        GroupSpec s;
        const char* expected;
    };
    std::vector<Case> cases{
        {GroupFamily::orientable(1), {Series::SL, 2, 5}, "1080"},
        {GroupFamily::orientable(1), {Series::GL, 2, 3}, "384"},
        {GroupFamily::orientable(2), {Series::SL, 2, 5}, nullptr},
        {GroupFamily::torusknot(2, 3), {Series::SL, 2, 13}, "34944"},
    };
    for (int k = 1; k <= 3; ++k)
        for (Series s : {Series::SL, Series::GL})
            cases.push_back({GroupFamily::nonorientable(k), {s, 2, 5}, nullptr});
    for (const auto& c : cases) {
        mpz_class brute = hom_count_brute(c.f, c.s);
        mpz_class sum = hom_count(c.f, c.s);
        std::ostringstream os;
        os << to_string(c.f) << " " << to_string(c.s) << ": brute " << brute.get_str() << ", character sum "
           << sum.get_str();
        bool ok = brute == sum && (!c.expected || brute == mpz_class(c.expected));
        r.check(ok, os.str());
        r.notes.push_back(os.str());
    }
}

// --- 3: character tables

CyclotomicValue inner(const CharTable& t, std::size_t i, std::size_t j)
{
    CyclotomicValue s(t.L);
    for (std::size_t c = 0; c < t.class_labels.size(); ++c)
        s += (t.chars[i].values[c] * t.chars[j].values[c].conj()).scaled(std::int64_t(t.group->classes()[c].size));
    return s;
}

void character_tables(Report& r)
{
    for (std::uint32_t q : {5u, 13u})
        for (Series s : {Series::GL, Series::SL}) {
            CharTable t = s == Series::SL ? sl2_table(q) : gl2_table(q);
            std::string tag = series_name(s) + "2(F_" + std::to_string(q) + ")";
            std::size_t want = s == Series::SL ? q + 4 : q * q - 1;
            r.check(t.chars.size() == want, tag + ": " + std::to_string(t.chars.size()) + " characters");
            mpz_class sq = 0;
            for (const auto& d : t.chars)
                sq += mpz_class((long)d.degree) * d.degree;
            r.check(sq == group_order(t.spec), tag + ": sum of squared degrees");
            std::size_t bad = 0;
            mpq_class order((unsigned long)t.group->size());
            for (std::size_t i = 0; i < t.chars.size(); ++i)
                for (std::size_t j = i; j < t.chars.size(); ++j) {
                    mpq_class v;
                    if (!inner(t, i, j).to_rational(v) || v != (i == j ? order : mpq_class(0)))
                        ++bad;
                }
            r.check(bad == 0, tag + ": " + std::to_string(bad) + " row orthogonality failures");
        }
    for (std::uint32_t q : {7u, 13u}) {
        auto vals = gl3_degree_catalog(q);
        mpz_class order = group_order({Series::GL, 3, q});
        mpz_class cnt = 0;
        mpq_class sq = 0;
        for (const auto& v : vals) {
            cnt += v.count;
            mpq_class deg(order, v.ratio);
            deg.canonicalize();
            sq += v.count * deg * deg;
        }
        std::string tag = "GL3(F_" + std::to_string(q) + ") catalog";
        r.check(sq == mpq_class(order), tag + ": sum of squared degrees");
        r.check(cnt == mpz_class(q) * q * q - q, tag + ": " + cnt.get_str() + " characters");
        r.notes.push_back(tag + ": " + cnt.get_str() + " characters");
    }
}

// --- 4: Frobenius-Schur indicators

void frobenius_schur(Report& r)
{
    const std::uint32_t q = 13;
    for (Series s : {Series::GL, Series::SL}) {
        CharTable t = s == Series::SL ? sl2_table(q) : gl2_table(q);
        for (int a : {2, 3, 4, 6}) {
            if (!fs_closed_admissible(s, a, q)) {
                r.notes.push_back(series_name(s) + "2 a=" + std::to_string(a) + " not admissible at q=13");
                continue;
            }
            auto brute = fs_indicators_brute(t, a);
            std::size_t bad = 0;
            for (std::size_t i = 0; i < t.chars.size(); ++i)
                if (brute[i] != fs_indicator_closed(t.chars[i].label, a, q))
                    ++bad;
            r.check(bad == 0, series_name(s) + "2 a=" + std::to_string(a) + ": " + std::to_string(bad) +
                                  " characters disagree");
            r.notes.push_back(series_name(s) + "2 a=" + std::to_string(a) + ": " + std::to_string(t.chars.size()) +
                              " characters compared");
        }
    }
}

// --- 5: pipeline against closed forms

void pipeline_vs_closed(Report& r)
{
    std::vector<GroupFamily> fams;
    for (int x = 1; x <= 6; ++x)
        fams.push_back(GroupFamily::free(x));
    for (int g = 1; g <= 5; ++g)
        fams.push_back(GroupFamily::orientable(g));
    for (int k = 2; k <= 8; ++k)
        fams.push_back(GroupFamily::nonorientable(k));
    for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}, {3, 5}})
        fams.push_back(GroupFamily::torusknot(a, b));
    for (const auto& f : fams)
        for (Series s : {Series::GL, Series::SL}) {
            QPolynomial pipe = count_reductive_rank2(f, s), closed = closed_form_epoly(f, s, 2);
            r.check(pipe == closed, to_string(f) + " " + series_name(s) + "2: pipeline " + pipe.to_string() +
                                        " vs closed " + closed.to_string() + " (difference " +
                                        (pipe - closed).to_string() + ")");
        }
    for (int g = 2; g <= 4; ++g)
        for (Series s : {Series::GL, Series::SL}) {
            QPolynomial pipe = count_reductive_rank3_surface(g, s);
            QPolynomial closed = closed_form_epoly(GroupFamily::orientable(g), s, 3);
            r.check(pipe == closed, "Orientable(" + std::to_string(g) + ") " + series_name(s) +
                                        "3: pipeline minus closed = " + (pipe - closed).to_string());
        }
}

// --- 6: interpolation from point counts

void interpolation(Report& r)
{
    for (auto f : {GroupFamily::nonorientable(2), GroupFamily::free(2), GroupFamily::torusknot(2, 3)})
        for (Series s : {Series::GL, Series::SL}) {
            QPolynomial closed = closed_form_epoly(f, s, 2);
            int deg = closed.degree();
            std::uint64_t N = required_modulus(f, 2);
            std::vector<std::pair<mpq_class, mpq_class>> pts;
            for (std::uint32_t q = 5; int(pts.size()) < deg + 1; ++q)
                if (q % 2 == 1 && is_prime_power(q) && q % N == 1 % N)
                    pts.emplace_back(mpq_class(q), mpq_class(count_reductive_rank2(f, s, q)));
            QPolynomial p = interpolate(pts, deg);
            std::string nodes;
            for (const auto& pt : pts)
                nodes += (nodes.empty() ? "" : ",") + pt.first.get_str();
            std::string line = to_string(f) + " " + series_name(s) + "2 at q in {" + nodes + "}: " + p.to_string();
            r.check(p == closed, line + " vs closed " + closed.to_string());
            r.notes.push_back(line);
        }
}

// --- 7: Euler characteristics

void euler(Report& r)
{
    auto both = [&](const GroupFamily& f, Series s, int rank, const mpq_class& want) {
        QPolynomial closed = closed_form_epoly(f, s, rank);
        QPolynomial pipe = count_reductive(f, s, rank);
        mpq_class ec = euler_characteristic(closed), ep = euler_characteristic(pipe);
        r.check(ec == want && ep == want, to_string(f) + " " + series_name(s) + std::to_string(rank) + ": closed " +
                                              ec.get_str() + ", pipeline " + ep.get_str() + ", expected " +
                                              want.get_str());
    };
    for (int x = 1; x <= 6; ++x)
        both(GroupFamily::free(x), Series::GL, 2, 0);
    for (int g = 1; g <= 5; ++g)
        both(GroupFamily::orientable(g), Series::GL, 2, 0);
    for (int k = 2; k <= 8; ++k)
        both(GroupFamily::nonorientable(k), Series::GL, 2, 0);
    for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}, {3, 5}})
        both(GroupFamily::torusknot(a, b), Series::GL, 2, 0);
    for (int g = 2; g <= 4; ++g)
        both(GroupFamily::orientable(g), Series::GL, 3, 0);
    for (int k = 4; k <= 8; ++k) {
        mpz_class a = mpz_class(1) << (2 * k - 3), b = mpz_class(1) << (k - 2);
        both(GroupFamily::nonorientable(k), Series::SL, 2, k % 2 == 0 ? mpq_class(a - 3 * b) : mpq_class(b - a));
    }
    for (int g = 2; g <= 4; ++g) {
        mpz_class x, y;
        mpz_ui_pow_ui(x.get_mpz_t(), 3, unsigned(4 * g - 3));
        mpz_ui_pow_ui(y.get_mpz_t(), 3, unsigned(2 * g - 2));
        both(GroupFamily::orientable(g), Series::SL, 3, mpq_class(2 * x - 7 * y));
    }
    r.notes.push_back("Orientable(2) SL3 Euler characteristic: " +
                      euler_characteristic(closed_form_epoly(GroupFamily::orientable(2), Series::SL, 3)).get_str());
}

// --- 8: divisibility by powers of q - 1

void divisibility(Report& r)
{
    auto divides = [&](const QPolynomial& p, int e, const std::string& what) {
        bool ok = true;
        try {
            QPolynomial d = p.divexact((Q() - 1).pow(unsigned(e)));
            ok = d.is_integer_polynomial();
        } catch (const Error&) {
            ok = false;
        }
        r.check(ok, what + ": (q-1)^" + std::to_string(e) + " does not divide " + p.to_string());
    };
    auto both = [&](const GroupFamily& f, int rank, int e) {
        std::string tag = to_string(f) + " GL" + std::to_string(rank);
        divides(closed_form_epoly(f, Series::GL, rank), e, tag + " closed");
        divides(count_reductive(f, Series::GL, rank), e, tag + " pipeline");
    };
    for (int g = 1; g <= 5; ++g)
        both(GroupFamily::orientable(g), 2, 2 * g);
    for (int g = 2; g <= 4; ++g)
        both(GroupFamily::orientable(g), 3, 2 * g);
    for (int k = 2; k <= 8; ++k)
        both(GroupFamily::nonorientable(k), 2, k - 1);
    for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}, {3, 5}})
        both(GroupFamily::torusknot(a, b), 2, 1);
}

} // namespace

int main(int argc, char** argv)
{
    bool verbose = argc > 1 && std::string(argv[1]) == "-v";
    struct Criterion {
        int id;
        const char* title;
        std::function<void(Report&)> run;
    };
    std::vector<Criterion> all{
        {1, "oracle orbit counts equal the closed forms", oracle_vs_formula},
        {2, "enumerated hom counts equal character sums", frobenius_formula},
        {3, "character table integrity", character_tables},
        {4, "Frobenius-Schur indicators, brute force against closed tables", frobenius_schur},
        {5, "strata pipeline equals the closed forms", pipeline_vs_closed},
        {6, "interpolation of point counts reproduces the closed forms", interpolation},
        {7, "Euler characteristics", euler},
        {8, "divisibility by powers of q - 1", divisibility},
    };
    int failed = 0;
    for (const auto& c : all) {
        Report rep;
        auto t0 = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.run(rep);
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = error.empty() && rep.failures.empty();
        failed += pass ? 0 : 1;
        std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  ("
                  << rep.items - int(rep.failures.size()) << "/" << rep.items << " items, " << std::fixed
                  << std::setprecision(1) << secs << " s)\n";
        if (!error.empty())
            std::cout << "    error: " << error << "\n";
        for (const auto& f : rep.failures)
            std::cout << "    failed: " << f << "\n";
        if (verbose)
            for (const auto& n : rep.notes)
                std::cout << "    " << n << "\n";
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
    return failed ? 1 : 0;
}
