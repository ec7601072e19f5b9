#include "charvar/strata.hpp"

#include "charvar/error.hpp"
#include "charvar/homcount.hpp"

#include <json.hpp>

#include <iomanip>
#include <numeric>
#include <sstream>

namespace charvar {

namespace {

using P = QPolynomial;

P ipow(const P& x, int k)
{
    if (k < 0)
        throw Error(ErrorKind::BadParams, "negative exponent in a stratum size");
    return x.pow(unsigned(k));
}

P constant(const mpz_class& v) { return P(v); }

P pgl_order(int n, const P& q)
{
    return group_order_poly(Series::GL, n).divexact(P::q() - 1).compose(q);
}

mpz_class require_integer(const P& v, const std::string& what)
{
    if (v.degree() > 0 || v.has_half_powers())
        throw Error(ErrorKind::BadParams, what + " is not a constant");
    mpq_class c = v.coeff(0);
    if (c.get_den() != 1)
        throw Error(ErrorKind::NonIntegerResult, what + " is not an integer: " + c.get_str());
    return c.get_num();
}

P require_integer_poly(const P& v, const std::string& what)
{
    if (!v.is_zero() && !v.is_integer_polynomial())
        throw Error(ErrorKind::NonIntegerCoefficients, what + " has non-integer coefficients: " + v.to_string());
    return v;
}

// A = Hom/|PGL_n| + sum_R (1 - 1/s) |X| - sum_N |X|/s, reduced over |PGL_n|.
P assemble(const std::vector<StrataRow>& rows, Series series, const StrataInputs& in, int n)
{
    P D = pgl_order(n, in.q);
    P num;
    for (const StrataValue& v : instantiate(rows, series, in)) {
        P Ds = D.divexact(v.stabilizer);
        P term = v.size * Ds * P(v.multiplicity);
        if (v.reductive)
            num += term * (v.stabilizer - 1);
        else
            num -= term;
    }
    return in.hom_over_pgl + num.divexact(D);
}

// sum_i |X^(i)| / s_i over the listed rows
P orbit_sum(const std::vector<StrataRow>& rows, Series series, const StrataInputs& in, int n)
{
    P D = pgl_order(n, in.q);
    P num;
    for (const StrataValue& v : instantiate(rows, series, in))
        num += v.size * D.divexact(v.stabilizer) * P(v.multiplicity);
    return num.divexact(D);
}

mpz_class mpz_pow(const mpz_class& b, int e)
{
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), unsigned(e));
    return r;
}

void fill_m_rank2(StrataInputs& in, const FamilySummary& fs, bool numeric, std::uint32_t q)
{
    if (numeric) {
        mpz_class Q(q);
        in.m_q1 = constant(fs.m(Q - 1));
        in.m_q21 = constant(fs.m(Q * Q - 1));
        in.m_qp1 = constant(fs.m(Q + 1));
        in.m_2 = constant(fs.m(2));
    } else {
        P x = P::q();
        in.m_q1 = fs.m_symbolic(x - 1, true);
        in.m_q21 = fs.m_symbolic(x * x - 1, true);
        in.m_qp1 = fs.m_symbolic(x + 1, true);
        in.m_2 = fs.m_symbolic(P(2), true);
    }
    in.b1 = fs.b1_trivial;
    in.sum_nontrivial = fs.nontrivial_sum(in.q, in.m_q1, in.m_2);
    in.sum_squares = fs.squares_sum(in.q, in.m_q1, in.m_2);
}

std::string poly_cell(const P& p) { return p.to_string(); }

} // namespace

P q_bracket(int m) { return q_bracket(m, P::q()); }

P q_bracket(int m, const P& x)
{
    if (m < 0)
        throw Error(ErrorKind::BadParams, "q-bracket of a negative integer");
    P s, t(1);
    for (int i = 0; i < m; ++i) {
        s += t;
        t = t * x;
    }
    return s;
}

FamilySummary family_summary(const GroupFamily& family)
{
    family.validate();
    FamilySummary fs;
    fs.family = family;
    switch (family.kind) {
    case GroupFamily::Free: {
        int r = family.r;
        fs.m = [r](const mpz_class& j) { return mpz_pow(j, r); };
        fs.m_symbolic = [r](const P& j, bool) { return ipow(j, r); };
        fs.b1_trivial = r;
        fs.nontrivial_sum = [r](const P& q, const P& m, const P&) { return (m - 1) * q_bracket(r - 1, q); };
        fs.squares_sum = [r](const P& q, const P& m, const P& m2) { return (m - m2) * q_bracket(r - 1, q); };
        break;
    }
    case GroupFamily::Orientable: {
        int g = family.g;
        fs.m = [g](const mpz_class& j) { return mpz_pow(j, 2 * g); };
        fs.m_symbolic = [g](const P& j, bool) { return ipow(j, 2 * g); };
        fs.b1_trivial = 2 * g;
        fs.nontrivial_sum = [g](const P& q, const P& m, const P&) { return (m - 1) * q_bracket(2 * g - 2, q); };
        fs.squares_sum = [g](const P& q, const P& m, const P& m2) { return (m - m2) * q_bracket(2 * g - 2, q); };
        break;
    }
    case GroupFamily::NonOrientable: {
        // abelianization Z^{k-1} + Z/2
        int k = family.k;
        fs.m = [k](const mpz_class& j) -> mpz_class {
            mpz_class g2;
            mpz_gcd_ui(g2.get_mpz_t(), j.get_mpz_t(), 2);
            return mpz_pow(j, k - 1) * g2;
        };
        fs.m_symbolic = [k](const P& j, bool even) { return ipow(j, k - 1) * P(even ? 2 : 1); };
        fs.b1_trivial = k - 1;
        // A_orn has b1 = k-1, every other nontrivial A has k-2
        fs.nontrivial_sum = [k](const P& q, const P& m, const P&) {
            return q_bracket(k - 1, q) + (m - 2) * q_bracket(k - 2, q);
        };
        // for k even, 2^k characters square to A_orn
        fs.squares_sum = [k](const P& q, const P& m, const P& m2) {
            P orn = k % 2 == 0 ? P(mpz_pow(2, k)) : P(0);
            return orn * q_bracket(k - 1, q) + (m - m2 - orn) * q_bracket(k - 2, q);
        };
        break;
    }
    case GroupFamily::TorusKnot: {
        std::int64_t c = std::int64_t(family.a - 1) * (family.b - 1);
        fs.m = [](const mpz_class& j) { return j; };
        fs.m_symbolic = [](const P& j, bool) { return j; };
        fs.b1_trivial = 1;
        // (a-1)(b-1) characters with b1_A = 1; each is a square with two roots
        fs.nontrivial_sum = [c](const P&, const P&, const P&) { return P(c); };
        fs.squares_sum = [c](const P&, const P&, const P&) { return P(2 * c); };
        break;
    }
    }
    P q = P::q();
    P mq1 = fs.m_symbolic(q - 1, true), m2 = fs.m_symbolic(P(2), true);
    fs.sum_b1_nontrivial_bracket = fs.nontrivial_sum(q, mq1, m2);
    fs.sum_b1_squares_bracket = fs.squares_sum(q, mq1, m2);
    return fs;
}

std::uint64_t required_modulus(const GroupFamily& family, int rank)
{
    if (rank == 3)
        return 6;
    switch (family.kind) {
    case GroupFamily::NonOrientable: return 4;
    case GroupFamily::TorusKnot: {
        std::uint64_t a = family.a, b = family.b;
        std::uint64_t N = std::lcm(std::uint64_t(4), a * b);
        if (a % 2 == 0)
            N = std::lcm(N, 2 * a);
        if (b % 2 == 0)
            N = std::lcm(N, 2 * b);
        return N;
    }
    default: return 2;
    }
}

void check_admissible(const GroupFamily& family, int rank, std::uint32_t q)
{
    if (!is_prime_power(q))
        throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
    std::uint64_t N = required_modulus(family, rank);
    if (q % 2 == 0)
        throw Error(ErrorKind::EvenQ, "the strata pipeline needs odd q, got " + std::to_string(q));
    if (q % N != 1)
        throw Error(ErrorKind::CongruenceViolated, to_string(family) + " at rank " + std::to_string(rank) +
                                                       " needs q = 1 mod " + std::to_string(N) + ", got q = " +
                                                       std::to_string(q));
}

StrataInputs rank2_inputs(const GroupFamily& family, Series series)
{
    FamilySummary fs = family_summary(family);
    StrataInputs in;
    in.q = P::q();
    fill_m_rank2(in, fs, false, 0);
    P ratio = hom_ratio_symbolic(family, series, 2);
    in.hom_over_pgl = series == Series::GL ? ratio * (in.q - 1) : ratio;
    return in;
}

StrataInputs rank2_inputs(const GroupFamily& family, Series series, std::uint32_t q)
{
    check_admissible(family, 2, q);
    FamilySummary fs = family_summary(family);
    StrataInputs in;
    in.q = P(long(q));
    fill_m_rank2(in, fs, true, q);
    mpz_class hom = hom_count(family, GroupSpec{series, 2, q});
    mpq_class h(hom, mpz_class(q) * q * q - q);
    h.canonicalize();
    in.hom_over_pgl = P(h);
    return in;
}

std::vector<StrataRow> rank2_strata_table(const GroupFamily& family, Series)
{
    family.validate();
    auto br = [](const StrataInputs& in) { return q_bracket(in.b1, in.q); };
    P half(mpq_class(1, 2));
    return {
        {"2", 1, "(m_{q^2-1} - m_{q-1})/2", "(m_{q+1} - m_2)/2", "q+1", true,
         [half](const StrataInputs& in) { return (in.m_q21 - in.m_q1) * half; },
         [half](const StrataInputs& in) { return (in.m_qp1 - in.m_2) * half; },
         [](const StrataInputs& in) { return in.q + 1; }},
        {"3", 1, "m_{q-1}(m_{q-1}-1)/2", "(m_{q-1} - m_2)/2", "q-1", true,
         [half](const StrataInputs& in) { return in.m_q1 * (in.m_q1 - 1) * half; },
         [half](const StrataInputs& in) { return (in.m_q1 - in.m_2) * half; },
         [](const StrataInputs& in) { return in.q - 1; }},
        {"4", 1, "m_{q-1}", "m_2", "q^3-q", true, [](const StrataInputs& in) { return in.m_q1; },
         [](const StrataInputs& in) { return in.m_2; },
         [](const StrataInputs& in) { return in.q.pow(3) - in.q; }},
        {"5", 1, "m_{q-1} sum_{A!=1} [b1_A]_q", "sum_{A^2!=1} [b1_{A^2}]_q", "1", false,
         [](const StrataInputs& in) { return in.m_q1 * in.sum_nontrivial; },
         [](const StrataInputs& in) { return in.sum_squares; }, [](const StrataInputs&) { return P(1); }},
        {"6", 1, "m_{q-1}[b1]_q", "m_2[b1]_q", "q", false,
         [br](const StrataInputs& in) { return in.m_q1 * br(in); },
         [br](const StrataInputs& in) { return in.m_2 * br(in); }, [](const StrataInputs& in) { return in.q; }},
    };
}

std::vector<StrataValue> instantiate(const std::vector<StrataRow>& rows, Series series, const StrataInputs& in)
{
    std::vector<StrataValue> out;
    for (const StrataRow& r : rows)
        out.push_back({r.index, r.multiplicity, series == Series::GL ? r.gl(in) : r.sl(in), r.stab(in), r.reductive});
    return out;
}

P count_reductive_rank2(const GroupFamily& family, Series series)
{
    StrataInputs in = rank2_inputs(family, series);
    P A = assemble(rank2_strata_table(family, series), series, in, 2);
    return require_integer_poly(A, "rank 2 count for " + to_string(family));
}

mpz_class count_reductive_rank2(const GroupFamily& family, Series series, std::uint32_t q)
{
    StrataInputs in = rank2_inputs(family, series, q);
    return require_integer(assemble(rank2_strata_table(family, series), series, in, 2), "rank 2 count");
}

P abs_irred_rank2_count(const GroupFamily& family)
{
    if (family.kind != GroupFamily::Orientable)
        throw Error(ErrorKind::BadParams, "abs_irred_rank2_count needs a surface group");
    StrataInputs in = rank2_inputs(family, Series::GL);
    return require_integer_poly(in.hom_over_pgl - orbit_sum(rank2_strata_table(family, Series::GL), Series::GL, in, 2),
                                "absolutely irreducible count");
}

mpz_class abs_irred_rank2_count(const GroupFamily& family, std::uint32_t q)
{
    if (family.kind != GroupFamily::Orientable)
        throw Error(ErrorKind::BadParams, "abs_irred_rank2_count needs a surface group");
    StrataInputs in = rank2_inputs(family, Series::GL, q);
    return require_integer(in.hom_over_pgl - orbit_sum(rank2_strata_table(family, Series::GL), Series::GL, in, 2),
                           "absolutely irreducible count");
}

StrataInputs rank3_inputs(int g, Series series)
{
    if (g < 2)
        throw Error(ErrorKind::BadGenus, "the rank 3 strata need g >= 2");
    GroupFamily f = GroupFamily::orientable(g);
    FamilySummary fs = family_summary(f);
    StrataInputs in;
    P q = P::q();
    in.q = q;
    in.g = g;
    in.m_q1 = fs.m_symbolic(q - 1, true);
    in.m_q21 = fs.m_symbolic(q * q - 1, true);
    in.m_3 = fs.m_symbolic(P(3), false);
    in.m_q31 = fs.m_symbolic(q.pow(3) - 1, true);
    in.m_qq1 = fs.m_symbolic(q * q + q + 1, false);
    P ratio = hom_ratio_symbolic(f, series, 3);
    in.hom_over_pgl = series == Series::GL ? ratio * (q - 1) : ratio;
    in.x21 = abs_irred_rank2_count(f);
    return in;
}

StrataInputs rank3_inputs(int g, Series series, std::uint32_t q)
{
    if (g < 2)
        throw Error(ErrorKind::BadGenus, "the rank 3 strata need g >= 2");
    GroupFamily f = GroupFamily::orientable(g);
    check_admissible(f, 3, q);
    FamilySummary fs = family_summary(f);
    StrataInputs in;
    mpz_class Q(q);
    in.q = P(long(q));
    in.g = g;
    in.m_q1 = constant(fs.m(Q - 1));
    in.m_q21 = constant(fs.m(Q * Q - 1));
    in.m_3 = constant(fs.m(3));
    in.m_q31 = constant(fs.m(Q * Q * Q - 1));
    in.m_qq1 = constant(fs.m(Q * Q + Q + 1));
    mpz_class hom = hom_count_surface(f, GroupSpec{series, 3, q});
    mpq_class h(hom, require_integer(pgl_order(3, in.q), "|PGL3|"));
    h.canonicalize();
    in.hom_over_pgl = P(h);
    in.x21 = P(abs_irred_rank2_count(f, q));
    return in;
}

std::vector<StrataRow> rank3_strata_table(int g, Series)
{
    if (g < 2)
        throw Error(ErrorKind::BadGenus, "the rank 3 strata need g >= 2");
    using In = const StrataInputs&;
    auto b = [](In in, int k) { return q_bracket(k, in.q); };
    auto T = [](In in) { return in.m_q1 * in.m_q1 - 3 * in.m_q1 + 2 * in.m_3; };
    auto mm1 = [](In in) { return in.m_q1 * (in.m_q1 - 1); };
    auto mm2 = [](In in) { return in.m_q1 * (in.m_q1 - 1) * (in.m_q1 - 2); };
    auto md3 = [](In in) { return in.m_q1 - in.m_3; };
    P third(mpq_class(1, 3)), half(mpq_class(1, 2)), sixth(mpq_class(1, 6));
    std::vector<StrataRow> rows = {
        {"2", 1, "(m_{q^3-1} - m_{q-1})/3", "(m_{q^2+q+1} - m_3)/3", "q^2+q+1", true,
         [=](In in) { return (in.m_q31 - in.m_q1) * third; }, [=](In in) { return (in.m_qq1 - in.m_3) * third; },
         [](In in) { return in.q * in.q + in.q + 1; }},
        {"3", 1, "m_{q-1}|X_2^(1)|", "|X_2^(1)|", "q-1", true, [](In in) { return in.m_q1 * in.x21; },
         [](In in) { return in.x21; }, [](In in) { return in.q - 1; }},
        {"4", 1, "(m_{q^2-1} - m_{q-1})m_{q-1}/2", "(m_{q^2-1} - m_{q-1})/2", "q^2-1", true,
         [=](In in) { return (in.m_q21 - in.m_q1) * in.m_q1 * half; },
         [=](In in) { return (in.m_q21 - in.m_q1) * half; }, [](In in) { return in.q * in.q - 1; }},
        {"5", 1, "binom(m_{q-1}, 3)", "(m_{q-1}^2 - 3m_{q-1} + 2m_3)/6", "(q-1)^2", true,
         [=](In in) { return mm2(in) * sixth; }, [=](In in) { return T(in) * sixth; },
         [](In in) { return (in.q - 1) * (in.q - 1); }},
        {"6", 1, "m_{q-1}(m_{q-1}-1)", "m_{q-1} - m_3", "q(q+1)(q-1)^2", true, mm1, md3,
         [](In in) { return in.q * (in.q + 1) * (in.q - 1) * (in.q - 1); }},
        {"7", 1, "m_{q-1}", "m_3", "q^3(q^2-1)(q^3-1)", true, [](In in) { return in.m_q1; },
         [](In in) { return in.m_3; }, [](In in) { return in.q.pow(3) * (in.q * in.q - 1) * (in.q.pow(3) - 1); }},
        {"8,9", 2, "m_{q-1}|X_2^(1)|[4g-4]_q", "|X_2^(1)|[4g-4]_q", "1", false,
         [=](In in) { return in.m_q1 * in.x21 * b(in, 4 * in.g - 4); },
         [=](In in) { return in.x21 * b(in, 4 * in.g - 4); }, [](In) { return P(1); }},
        {"10,11", 2, "m_{q-1}(m_{q^2-1} - m_{q-1})[2g-2]_{q^2}/2", "(m_{q^2-1} - m_{q-1})[2g-2]_{q^2}/2", "1", false,
         [=](In in) { return in.m_q1 * (in.m_q21 - in.m_q1) * q_bracket(2 * in.g - 2, in.q * in.q) * half; },
         [=](In in) { return (in.m_q21 - in.m_q1) * q_bracket(2 * in.g - 2, in.q * in.q) * half; },
         [](In) { return P(1); }},
        {"12", 1, "m_{q-1}(m_{q-1}-1)(m_{q-1}-2)[2g-2]_q", "(m_{q-1}^2 - 3m_{q-1} + 2m_3)[2g-2]_q", "q-1", false,
         [=](In in) { return mm2(in) * b(in, 2 * in.g - 2); }, [=](In in) { return T(in) * b(in, 2 * in.g - 2); },
         [](In in) { return in.q - 1; }},
        {"13,14", 2, "m_{q-1}(m_{q-1}-1)[2g-2]_q", "(m_{q-1} - m_3)[2g-2]_q", "q(q-1)", false,
         [=](In in) { return mm1(in) * b(in, 2 * in.g - 2); }, [=](In in) { return md3(in) * b(in, 2 * in.g - 2); },
         [](In in) { return in.q * (in.q - 1); }},
        {"15", 1, "m_{q-1}(m_{q-1}-1)[2g]_q", "(m_{q-1} - m_3)[2g]_q", "q(q-1)", false,
         [=](In in) { return mm1(in) * b(in, 2 * in.g); }, [=](In in) { return md3(in) * b(in, 2 * in.g); },
         [](In in) { return in.q * (in.q - 1); }},
        {"16", 1, "m_{q-1}[2g]_q", "m_3[2g]_q", "q^3(q-1)", false,
         [=](In in) { return in.m_q1 * b(in, 2 * in.g); }, [=](In in) { return in.m_3 * b(in, 2 * in.g); },
         [](In in) { return in.q.pow(3) * (in.q - 1); }},
        {"17,21", 2, "m_{q-1}(m_{q-1}-1)(m_{q-1}-2)[2g-2]_q^2/2", "(m_{q-1}^2 - 3m_{q-1} + 2m_3)[2g-2]_q^2/2", "1",
         false, [=](In in) { return mm2(in) * b(in, 2 * in.g - 2).pow(2) * half; },
         [=](In in) { return T(in) * b(in, 2 * in.g - 2).pow(2) * half; }, [](In) { return P(1); }},
        {"18,22", 2, "m_{q-1}(m_{q-1}-1)[2g-2]_q[2g-3]_q/(q+1)", "(m_{q-1} - m_3)[2g-2]_q[2g-3]_q/(q+1)", "1", false,
         [=](In in) { return mm1(in) * (b(in, 2 * in.g - 2) * b(in, 2 * in.g - 3)).divexact(in.q + 1); },
         [=](In in) { return md3(in) * (b(in, 2 * in.g - 2) * b(in, 2 * in.g - 3)).divexact(in.q + 1); },
         [](In) { return P(1); }},
        {"19,23", 2, "m_{q-1}(m_{q-1}-1)[2g-2]_q[2g]_q", "(m_{q-1} - m_3)[2g-2]_q[2g]_q", "q", false,
         [=](In in) { return mm1(in) * b(in, 2 * in.g - 2) * b(in, 2 * in.g); },
         [=](In in) { return md3(in) * b(in, 2 * in.g - 2) * b(in, 2 * in.g); }, [](In in) { return in.q; }},
        {"20,24", 2, "m_{q-1}[2g]_q[2g-1]_q/(q+1)", "m_3[2g]_q[2g-1]_q/(q+1)", "q^2", false,
         [=](In in) { return in.m_q1 * (b(in, 2 * in.g) * b(in, 2 * in.g - 1)).divexact(in.q + 1); },
         [=](In in) { return in.m_3 * (b(in, 2 * in.g) * b(in, 2 * in.g - 1)).divexact(in.q + 1); },
         [](In in) { return in.q * in.q; }},
        {"25", 1, "m_{q-1}(m_{q-1}-1)(m_{q-1}-2)[2g-2]_q^2 q^{2g-2}",
         "(m_{q-1}^2 - 3m_{q-1} + 2m_3)[2g-2]_q^2 q^{2g-2}", "1", false,
         [=](In in) { return mm2(in) * b(in, 2 * in.g - 2).pow(2) * ipow(in.q, 2 * in.g - 2); },
         [=](In in) { return T(in) * b(in, 2 * in.g - 2).pow(2) * ipow(in.q, 2 * in.g - 2); },
         [](In) { return P(1); }},
        {"26,27", 2, "m_{q-1}(m_{q-1}-1)[2g-2]_q[2g]_q q^{2g-3}", "(m_{q-1} - m_3)[2g-2]_q[2g]_q q^{2g-3}", "1", false,
         [=](In in) { return mm1(in) * b(in, 2 * in.g - 2) * b(in, 2 * in.g) * ipow(in.q, 2 * in.g - 3); },
         [=](In in) { return md3(in) * b(in, 2 * in.g - 2) * b(in, 2 * in.g) * ipow(in.q, 2 * in.g - 3); },
         [](In) { return P(1); }},
        {"28", 1, "m_{q-1}(m_{q-1}-1)[2g-2]_q[2g-3]_q q^{2g}", "(m_{q-1} - m_3)[2g-2]_q[2g-3]_q q^{2g}", "q", false,
         [=](In in) { return mm1(in) * b(in, 2 * in.g - 2) * b(in, 2 * in.g - 3) * ipow(in.q, 2 * in.g); },
         [=](In in) { return md3(in) * b(in, 2 * in.g - 2) * b(in, 2 * in.g - 3) * ipow(in.q, 2 * in.g); },
         [](In in) { return in.q; }},
        {"29", 1, "m_{q-1}[2g]_q[2g-2]_q q^{2g-1}", "m_3[2g]_q[2g-2]_q q^{2g-1}", "q", false,
         [=](In in) { return in.m_q1 * b(in, 2 * in.g) * b(in, 2 * in.g - 2) * ipow(in.q, 2 * in.g - 1); },
         [=](In in) { return in.m_3 * b(in, 2 * in.g) * b(in, 2 * in.g - 2) * ipow(in.q, 2 * in.g - 1); },
         [](In in) { return in.q; }},
        {"30", 1, "m_{q-1}[2g]_q q^{2g-1}", "m_3[2g]_q q^{2g-1}", "q^2", false,
         [=](In in) { return in.m_q1 * b(in, 2 * in.g) * ipow(in.q, 2 * in.g - 1); },
         [=](In in) { return in.m_3 * b(in, 2 * in.g) * ipow(in.q, 2 * in.g - 1); },
         [](In in) { return in.q * in.q; }},
    };
    return rows;
}

P count_reductive_rank3_surface(int g, Series series)
{
    StrataInputs in = rank3_inputs(g, series);
    P A = assemble(rank3_strata_table(g, series), series, in, 3);
    return require_integer_poly(A, "rank 3 count at g = " + std::to_string(g));
}

mpz_class count_reductive_rank3_surface(int g, Series series, std::uint32_t q)
{
    StrataInputs in = rank3_inputs(g, series, q);
    return require_integer(assemble(rank3_strata_table(g, series), series, in, 3), "rank 3 count");
}

P count_reductive(const GroupFamily& family, Series series, int rank)
{
    if (rank == 2)
        return count_reductive_rank2(family, series);
    if (rank == 3) {
        if (family.kind != GroupFamily::Orientable)
            throw Error(ErrorKind::BadParams, "the rank 3 pipeline covers orientable surfaces only");
        return count_reductive_rank3_surface(family.g, series);
    }
    throw Error(ErrorKind::UnsupportedRank, "rank must be 2 or 3");
}

mpz_class count_reductive(const GroupFamily& family, Series series, int rank, std::uint32_t q)
{
    if (rank == 2)
        return count_reductive_rank2(family, series, q);
    if (rank == 3) {
        if (family.kind != GroupFamily::Orientable)
            throw Error(ErrorKind::BadParams, "the rank 3 pipeline covers orientable surfaces only");
        return count_reductive_rank3_surface(family.g, series, q);
    }
    throw Error(ErrorKind::UnsupportedRank, "rank must be 2 or 3");
}

std::string strata_table_text(const std::vector<StrataRow>& rows, Series series, const std::vector<StrataValue>* values)
{
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"i", "size", "stabilizer", "reductive"});
    if (values)
        cells.back().insert(cells.back().end(), {"size value", "stabilizer value"});
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const StrataRow& row = rows[r];
        std::vector<std::string> line = {row.index, series == Series::GL ? row.size_gl : row.size_sl, row.stabilizer,
                                         row.reductive ? "yes" : "no"};
        if (values) {
            line.push_back(poly_cell((*values)[r].size));
            line.push_back(poly_cell((*values)[r].stabilizer));
        }
        cells.push_back(line);
    }
    std::vector<std::size_t> width(cells[0].size(), 0);
    for (const auto& line : cells)
        for (std::size_t c = 0; c < line.size(); ++c)
            width[c] = std::max(width[c], line[c].size());
    std::ostringstream os;
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            os << std::left << std::setw(int(width[c])) << line[c];
            if (c + 1 < line.size())
                os << "  ";
        }
        os << '\n';
    }
    return os.str();
}

std::string strata_table_json(const std::vector<StrataRow>& rows, Series series, const std::vector<StrataValue>* values)
{
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const StrataRow& row = rows[r];
        nlohmann::json j = {{"index", row.index},
                            {"multiplicity", row.multiplicity},
                            {"size", series == Series::GL ? row.size_gl : row.size_sl},
                            {"stabilizer", row.stabilizer},
                            {"reductive", row.reductive}};
        if (values) {
            j["size_value"] = poly_cell((*values)[r].size);
            j["stabilizer_value"] = poly_cell((*values)[r].stabilizer);
        }
        arr.push_back(j);
    }
    return arr.dump(2);
}

} // namespace charvar
