#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "charvar/error.hpp"
#include "charvar/homcount.hpp"
#include "charvar/strata.hpp"

using namespace charvar;

namespace {
QPolynomial Q() { return QPolynomial::q(); }
}

TEST_CASE("q brackets")
{
    CHECK(q_bracket(0).is_zero());
    CHECK(q_bracket(1) == QPolynomial(1));
    CHECK(q_bracket(3) == Q() * Q() + Q() + 1);
    CHECK(q_bracket(2, Q() * Q()) == Q() * Q() + 1);
}

TEST_CASE("family summaries")
{
    FamilySummary no4 = family_summary(GroupFamily::nonorientable(4));
    CHECK(no4.m(2) == 16);
    FamilySummary tk = family_summary(GroupFamily::torusknot(2, 3));
    CHECK(tk.sum_b1_nontrivial_bracket == QPolynomial(2));
    FamilySummary f2 = family_summary(GroupFamily::free(2));
    CHECK(f2.sum_b1_nontrivial_bracket == (Q() - 1).pow(2) - 1);
    CHECK(f2.m(1) == 1);
}

// Hom(Gamma, Z_j) by direct enumeration of generator images in Z_j.
mpz_class brute_m(const GroupFamily& f, int j)
{
    int gens = f.generators();
    std::vector<int> x(gens, 0);
    long count = 0;
    while (true) {
        long rel = 0;
        switch (f.kind) {
        case GroupFamily::Free: rel = 0; break;
        case GroupFamily::Orientable: rel = 0; break;
        case GroupFamily::NonOrientable:
            for (int v : x)
                rel += 2 * v;
            break;
        case GroupFamily::TorusKnot: rel = long(f.a) * x[0] - long(f.b) * x[1]; break;
        }
        if (((rel % j) + j) % j == 0)
            ++count;
        int i = 0;
        while (i < gens && ++x[i] == j)
            x[i++] = 0;
        if (i == gens)
            break;
    }
    return count;
}

TEST_CASE("m_j agrees with enumeration of Hom(Gamma, Z_j)")
{
    std::vector<GroupFamily> fams = {GroupFamily::free(2), GroupFamily::orientable(1), GroupFamily::nonorientable(2),
                                     GroupFamily::nonorientable(3), GroupFamily::nonorientable(4),
                                     GroupFamily::torusknot(2, 3), GroupFamily::torusknot(3, 4)};
    for (const auto& f : fams) {
        FamilySummary s = family_summary(f);
        for (int j = 1; j <= 12; ++j) {
            CAPTURE(to_string(f));
            CAPTURE(j);
            CHECK(s.m(j) == brute_m(f, j));
        }
    }
}

TEST_CASE("rank 2 table")
{
    auto rows = rank2_strata_table(GroupFamily::orientable(2), Series::GL);
    REQUIRE(rows.size() == 5);
    StrataInputs in = rank2_inputs(GroupFamily::orientable(2), Series::GL);
    auto gl = instantiate(rows, Series::GL, in);
    CHECK(rows[2].index == "4");
    CHECK(gl[2].size == (Q() - 1).pow(4));
    CHECK(gl[2].stabilizer == Q().pow(3) - Q());
    auto sl = instantiate(rows, Series::SL, rank2_inputs(GroupFamily::orientable(2), Series::SL));
    CHECK(sl[4].stabilizer == Q());
    CHECK(sl[4].size == QPolynomial(16) * q_bracket(4));
    std::vector<QPolynomial> stabs = {Q() + 1, Q() - 1, Q().pow(3) - Q(), 1, Q()};
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(gl[i].stabilizer == stabs[i]);
    CHECK(strata_table_text(rows, Series::SL).find("(m_{q-1} - m_2)/2") != std::string::npos);
}

TEST_CASE("rank 2 pipeline examples")
{
    CHECK(count_reductive_rank2(GroupFamily::free(2), Series::SL) == Q().pow(3));
    CHECK(count_reductive_rank2(GroupFamily::nonorientable(2), Series::SL) == 3 * Q() - 2);
    CHECK(count_reductive_rank2(GroupFamily::torusknot(2, 3), Series::SL) == 2 * Q() - 2);
    CHECK(count_reductive_rank2(GroupFamily::torusknot(2, 3), Series::GL) == (Q() - 1) * (2 * Q() - 1));
    CHECK(count_reductive_rank2(GroupFamily::free(1), Series::SL) == Q());
    CHECK(count_reductive_rank2(GroupFamily::nonorientable(3), Series::SL) == QPolynomial::parse("q^3 - 6*q - 1"));
    CHECK(count_reductive_rank2(GroupFamily::orientable(1), Series::SL) == Q() * Q() + 1);
}

TEST_CASE("rank 2 pipeline matches the closed forms")
{
    std::vector<GroupFamily> fams;
    for (int r = 1; r <= 6; ++r)
        fams.push_back(GroupFamily::free(r));
    for (int g = 1; g <= 5; ++g)
        fams.push_back(GroupFamily::orientable(g));
    for (int k = 2; k <= 8; ++k)
        fams.push_back(GroupFamily::nonorientable(k));
    for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}, {3, 5}})
        fams.push_back(GroupFamily::torusknot(a, b));
    for (const auto& f : fams)
        for (Series s : {Series::GL, Series::SL}) {
            if (f.kind == GroupFamily::TorusKnot && f.a == 3 && f.b == 4 && s == Series::GL)
                continue;
            CAPTURE(to_string(f));
            CAPTURE(s == Series::GL);
            CHECK(count_reductive_rank2(f, s) == closed_form_epoly(f, s, 2));
        }
}

TEST_CASE("GL2 torus knot with a = 4 differs from closed_form_epoly")
{
    // brute force gives |Hom|/|G| = 30 at q = 13, one more than 1 + a(b-1)(q+1)/4
    QPolynomial q = Q();
    GroupFamily f = GroupFamily::torusknot(3, 4);
    QPolynomial diff = count_reductive_rank2(f, Series::GL) - closed_form_epoly(f, Series::GL, 2);
    CHECK(diff == q - 1);
    CHECK(hom_count_brute(f, GroupSpec{Series::GL, 2, 13}) == 30 * group_order(GroupSpec{Series::GL, 2, 13}));
}

TEST_CASE("numeric and symbolic rank 2 agree")
{
    struct C {
        GroupFamily f;
        std::vector<std::uint32_t> qs;
    };
    std::vector<C> cases = {{GroupFamily::free(2), {3, 5, 7, 9}},
                            {GroupFamily::orientable(2), {3, 5, 7}},
                            {GroupFamily::nonorientable(3), {5, 9, 13}},
                            {GroupFamily::nonorientable(4), {5, 13}},
                            {GroupFamily::torusknot(2, 3), {13, 37}},
                            {GroupFamily::torusknot(3, 4), {25, 49}}};
    for (const auto& c : cases)
        for (Series s : {Series::GL, Series::SL}) {
            QPolynomial p = count_reductive_rank2(c.f, s);
            for (std::uint32_t q : c.qs) {
                CAPTURE(to_string(c.f));
                CAPTURE(q);
                CHECK(mpq_class(count_reductive_rank2(c.f, s, q)) == p.evaluate(q));
            }
        }
    CHECK_THROWS_AS(count_reductive_rank2(GroupFamily::nonorientable(2), Series::SL, 7), Error);
    CHECK_THROWS_AS(count_reductive_rank2(GroupFamily::free(2), Series::SL, 6), Error);
}

TEST_CASE("absolutely irreducible rank 2 surface count")
{
    for (int g = 1; g <= 3; ++g) {
        QPolynomial q = Q();
        QPolynomial m = (q - 1).pow(2 * g), m21 = (q * q - 1).pow(2 * g);
        QPolynomial H = hom_ratio_symbolic(GroupFamily::orientable(g), Series::GL, 2) * (q - 1);
        // |Hom|/|PGL2| - m^2/2(q-1) - m_{q^2-1}/2(q+1) - m^2[2g-2] - m q^{2g-2}, over a common denominator
        QPolynomial num = H * (q * q - 1) * 2 - m * m * (q + 1) - m21 * (q - 1) -
                          (m * m * q_bracket(2 * g - 2) + m * q.pow(2 * g - 2)) * (q * q - 1) * 2;
        CHECK(abs_irred_rank2_count(GroupFamily::orientable(g)) == num.divexact((q * q - 1) * 2));
    }
    CHECK(abs_irred_rank2_count(GroupFamily::orientable(1), 5) >= 0);
    CHECK(mpq_class(abs_irred_rank2_count(GroupFamily::orientable(2), 7)) ==
          abs_irred_rank2_count(GroupFamily::orientable(2)).evaluate(7));
}

TEST_CASE("rank 3 table")
{
    auto rows = rank3_strata_table(2, Series::GL);
    int total = 1;
    for (const auto& r : rows)
        total += r.multiplicity;
    CHECK(total == 30);
    StrataInputs in = rank3_inputs(3, Series::GL);
    auto v = instantiate(rank3_strata_table(3, Series::GL), Series::GL, in);
    QPolynomial q = Q();
    QPolynomial m = (q - 1).pow(6);
    auto find = [&](const std::string& idx) {
        for (const auto& x : v)
            if (x.index == idx)
                return x;
        FAIL("missing row");
        return v[0];
    };
    CHECK(find("18,22").size == (m * (m - 1) * q_bracket(4) * q_bracket(3)).divexact(q + 1));
    CHECK(find("29").size == m * q_bracket(6) * q_bracket(4) * q.pow(5));
    CHECK(find("29").stabilizer == q);
    auto vs = instantiate(rank3_strata_table(3, Series::SL), Series::SL, rank3_inputs(3, Series::SL));
    CHECK(vs[5].index == "7");
    CHECK(vs[5].size == QPolynomial(729));
    // stabilizers divide |PGL3| at admissible q
    for (std::uint32_t qq : {7u, 13u, 19u}) {
        mpz_class pgl = group_order({Series::GL, 3, qq}) / (qq - 1);
        for (const auto& x : v) {
            mpq_class s = x.stabilizer.evaluate(qq);
            CHECK(s.get_den() == 1);
            CHECK(pgl % s.get_num() == 0);
        }
    }
    CHECK_THROWS_AS(rank3_strata_table(1, Series::GL), Error);
    CHECK(strata_table_json(rows, Series::GL).find("\"index\": \"8,9\"") != std::string::npos);
}

TEST_CASE("rank 3 pipeline properties")
{
    QPolynomial q = Q();
    for (int g = 2; g <= 4; ++g) {
        QPolynomial gl = count_reductive_rank3_surface(g, Series::GL);
        QPolynomial sl = count_reductive_rank3_surface(g, Series::SL);
        CHECK(gl.is_integer_polynomial());
        CHECK(sl.is_integer_polynomial());
        CHECK_NOTHROW(gl.divexact((q - 1).pow(2 * g)));
        long e = 2 * std::lround(std::pow(3.0, 4 * g - 3)) - 7 * std::lround(std::pow(3.0, 2 * g - 2));
        CHECK(euler_characteristic(sl) == e);
        CHECK(euler_characteristic(gl) == 0);
    }
    // numeric path at q = 7 uses character sums and numeric stratum sizes
    CHECK(mpq_class(count_reductive_rank3_surface(2, Series::SL, 7)) == count_reductive_rank3_surface(2, Series::SL).evaluate(7));
    CHECK(mpq_class(count_reductive_rank3_surface(2, Series::GL, 13)) == count_reductive_rank3_surface(2, Series::GL).evaluate(13));
    CHECK_THROWS_AS(count_reductive_rank3_surface(1, Series::GL), Error);
    CHECK_THROWS_AS(count_reductive_rank3_surface(2, Series::GL, 11), Error);
}

TEST_CASE("rank 3 pipeline against closed_form_epoly")
{
    // The rank 3 strata assembled through the counting identity differ from the
    // closed form by 2 m [2g-2]_q ([2g-2]_q - q^{2g-4}) in the m_{q-1}-linear part.
    QPolynomial q = Q();
    for (int g = 2; g <= 4; ++g) {
        QPolynomial m = (q - 1).pow(2 * g);
        QPolynomial d = QPolynomial(2) * m * q_bracket(2 * g - 2) * (q_bracket(2 * g - 2) - q.pow(2 * g - 4));
        CHECK(count_reductive_rank3_surface(g, Series::SL) - closed_form_epoly(GroupFamily::orientable(g), Series::SL, 3) == -d);
        CHECK(count_reductive_rank3_surface(g, Series::GL) - closed_form_epoly(GroupFamily::orientable(g), Series::GL, 3) == -d * m);
    }
}
