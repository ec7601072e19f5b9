#include "charvar/error.hpp"
#include "charvar/qpoly.hpp"

namespace charvar {

namespace {

using P = QPolynomial;

P pw(const P& x, int n)
{
    if (n < 0)
        throw Error(ErrorKind::BadParams, "negative exponent in closed form");
    return x.pow(unsigned(n));
}

P frac(long n, long d)
{
    return P(mpq_class(n, d));
}

P ipow(long base, int n)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), std::abs(base), unsigned(n));
    if (base < 0 && (n & 1))
        r = -r;
    return P(r);
}

P free_sl2(int r)
{
    P q = P::q();
    int n = r - 1;
    return pw(q.pow(3) - q, n) - pw(q * q - q, n) + q * (frac(1, 2) * pw(q + 1, n) + frac(1, 2) * pw(q - 1, n));
}

P orientable_gl2(int g)
{
    P q = P::q();
    int e = 2 * g - 2;
    P inner = pw(q.pow(3) - q, e) + pw(q * q - 1, e) +
              q * (frac(1, 2) * pw(q * q + q, e) + frac(1, 2) * pw(q * q - q, e)) - q * pw(q * q - q, e) -
              pw(q, e) + q * (frac(1, 2) * pw(q + 1, 2 * g - 1) + frac(1, 2) * pw(q - 1, 2 * g - 1));
    return pw(q - 1, 2 * g) * inner;
}

P orientable_sl2(int g)
{
    P q = P::q();
    int e = 2 * g - 2;
    P both = pw(q * q + q, e) + pw(q * q - q, e);
    return pw(q.pow(3) - q, e) + pw(q * q - 1, e) - q * pw(q * q - q, e) - ipow(2, 2 * g) * pw(q, e) +
           (q - 1) * frac(1, 2) * both + ipow(2, 2 * g - 1) * both +
           q * (frac(1, 2) * pw(q + 1, 2 * g - 1) + frac(1, 2) * pw(q - 1, 2 * g - 1));
}

P nonorientable_gl2(int k)
{
    P q = P::q();
    int e = k - 2;
    P inner = (q - 1) * frac(1, 2) * pw(q * q - q, e) + (q - 1) * frac(1, 2) * pw(q * q + q, e) +
              2 * pw(q.pow(3) - q, e) + 2 * pw(q * q - 1, e) + q * (pw(q + 1, e) + 2 * pw(q - 1, e)) -
              4 * pw(q - 1, e) * pw(q, e) - 2 * pw(q, e);
    return pw(q - 1, k - 1) * inner;
}

P nonorientable_sl2(int k)
{
    P q = P::q();
    int e = k - 2;
    if (k % 2 == 0) {
        return pw(q.pow(3) - q, e) + pw(q * q - 1, e) +
               ((q - 1) * frac(1, 2) + ipow(2, k - 1)) * (pw(q * q + q, e) + pw(q * q - q, e)) -
               3 * pw(q * q - q, e) - ipow(2, k) * pw(q, e) + q * (pw(q + 1, e) + pw(q - 1, e));
    }
    return pw(q.pow(3) - q, e) + pw(q * q - 1, e) - ipow(2, k - 1) * pw(q * q + q, e) +
           (ipow(2, k - 1) - 3) * pw(q * q - q, e) + q * (pw(q + 1, e) + pw(q - 1, e));
}

P torusknot_gl2(int a, int b)
{
    P q = P::q();
    if (b % 2 == 0)
        std::swap(a, b);
    if (a % 2 == 0)
        return (q - 1) * (q + P(b - 1) * (P(a) * q - P(3 * a) + 4) * frac(1, 4));
    return (q - 1) * (q + P((a - 1) * (b - 1)) * (q - 2) * frac(1, 4));
}

P torusknot_sl2(int a, int b)
{
    P q = P::q();
    return q + frac(1, 2) * P((a - 1) * (b - 1)) * (q - 2);
}

// Shared tail of both rank-3 surface formulas; the last argument is the
// coefficient of q^{6g-6} (1 for GL3, 3^{2g} for SL3).
P rank3_tail(int g, const P& top)
{
    P q = P::q();
    int e = 2 * g - 2;
    P c = q - 2 * pw(q, 4 * g - 4);
    P qm = pw(q - 1, 2 * g - 1);
    return c * ((q - 2) * frac(1, 2) * pw(q * q - q, e) * qm + q * frac(1, 2) * pw(q * q + q, e) * qm) +
           c * (pw(q.pow(3) - q, e) * qm + pw(q * q - 1, e) * qm) +
           frac(1, 3) * (q * q + q) * pw(q * q + q + 1, 2 * g - 1) +
           frac(1, 2) * (q * q - q) * pw(q * q - 1, 2 * g - 1) - top * pw(q, 6 * g - 6) +
           ((q * q + q) * frac(1, 6) + pw(q, 6 * g - 6) - pw(q, 2 * g - 1)) * pw(q - 1, 4 * g - 2) +
           (pw(q, 4 * g - 6) - pw(q, 2 * g - 2) - pw(q, 2 * g - 4)) * pw(q - 1, 2 * g) +
           (pw(q, 2 * g - 2) - 1) * (pw(q, 2 * g - 4) + pw(q, 2 * g - 1) - 2) * pw(q - 1, 2 * g - 2);
}

P rank3_middle(int g)
{
    P q = P::q();
    int e = 2 * g - 2;
    return frac(1, 2) * (q * q - q) * pw(q.pow(5) - q.pow(3), e) +
           pw(q.pow(8) - q.pow(6) - q.pow(5) + q.pow(3), e) + pw(q.pow(6) - q.pow(5) - q.pow(3) + q * q, e) +
           pw(q.pow(5) - q.pow(3) - q * q + 1, e) + (q - 2) * pw(q.pow(6) - q.pow(5) - q.pow(4) + q.pow(3), e) +
           (q - 2) * pw(q.pow(5) - q.pow(4) - q.pow(3) + q * q, e);
}

P orientable_gl3(int g)
{
    P q = P::q();
    int e = 2 * g - 2;
    P body = frac(1, 3) * (q * q + q) * pw(q.pow(5) + q.pow(4) + q.pow(3), e) + rank3_middle(g) +
             frac(1, 6) * (q - 2) * (q - 3) * pw(q.pow(5) - 2 * q.pow(4) + q.pow(3), e) + rank3_tail(g, 1);
    return pw(q - 1, 2 * g) * body;
}

P orientable_sl3(int g)
{
    P q = P::q();
    int e = 2 * g - 2;
    return (ipow(3, 2 * g - 1) * 2 + frac(1, 3) * (q - 1) * (q + 2)) * pw(q.pow(5) + q.pow(4) + q.pow(3), e) +
           rank3_middle(g) +
           (ipow(3, 2 * g - 1) + frac(1, 6) * (q - 1) * (q - 4)) * pw(q.pow(5) - 2 * q.pow(4) + q.pow(3), e) +
           rank3_tail(g, ipow(3, 2 * g));
}

} // namespace

QPolynomial closed_form_epoly(const GroupFamily& family, Series series, int rank)
{
    family.validate();
    bool gl = series == Series::GL;
    QPolynomial out;
    if (rank == 2) {
        switch (family.kind) {
        case GroupFamily::Free:
            out = gl ? pw(P::q() - 1, family.r) * free_sl2(family.r) : free_sl2(family.r);
            break;
        case GroupFamily::Orientable:
            out = gl ? orientable_gl2(family.g) : orientable_sl2(family.g);
            break;
        case GroupFamily::NonOrientable:
            if (family.k < 2)
                throw Error(ErrorKind::BadParams, "non-orientable closed form needs k >= 2");
            out = gl ? nonorientable_gl2(family.k) : nonorientable_sl2(family.k);
            break;
        case GroupFamily::TorusKnot:
            out = gl ? torusknot_gl2(family.a, family.b) : torusknot_sl2(family.a, family.b);
            break;
        }
    } else if (rank == 3) {
        if (family.kind != GroupFamily::Orientable)
            throw Error(ErrorKind::BadParams, "rank 3 closed form exists only for orientable surfaces");
        if (family.g < 2)
            throw Error(ErrorKind::BadGenus, "rank 3 closed form needs g >= 2");
        out = gl ? orientable_gl3(family.g) : orientable_sl3(family.g);
    } else {
        throw Error(ErrorKind::BadParams, "rank must be 2 or 3");
    }
    if (!out.is_integer_polynomial())
        throw Error(ErrorKind::NonIntegerCoefficients, to_string(family) + ": " + out.to_string());
    return out;
}

} // namespace charvar
