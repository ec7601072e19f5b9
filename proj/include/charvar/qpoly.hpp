#pragma once

#include "charvar/family.hpp"
#include "charvar/matgroup.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace charvar {

// Exact Laurent polynomial in s with q = s^2 and rational coefficients.
// Odd s-exponents (half powers of q) only arise through s_power(), which is
// meant for hook-polynomial arithmetic.
class QPolynomial {
public:
    QPolynomial() = default;
    QPolynomial(long c);
    QPolynomial(const mpz_class& c);
    QPolynomial(const mpq_class& c);

    // the variable q
    static QPolynomial q();
    // c * q^k
    static QPolynomial monomial(const mpq_class& c, int k);
    // q^{k/2}
    static QPolynomial s_power(int k);
    // From s-exponent terms; odd exponents need allow_half.
    static QPolynomial from_s_terms(const std::map<int, mpq_class>& terms, bool allow_half = false);
    // From ascending integer coefficients in q.
    static QPolynomial from_coeffs(const std::vector<mpq_class>& c);

    static QPolynomial parse(const std::string& text);

    const std::map<int, mpq_class>& s_terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool has_half_powers() const;
    // all exponents are nonnegative integers in q and all coefficients integral
    bool is_integer_polynomial() const;
    // Highest s-exponent, and the q-degree rounded down; INT_MIN for zero.
    int degree_s() const;
    int degree() const;
    // coefficient of q^k
    mpq_class coeff(int k) const;

    QPolynomial operator-() const;
    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    QPolynomial& operator*=(const QPolynomial& o);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
    bool operator==(const QPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const QPolynomial& o) const { return !(*this == o); }

    QPolynomial pow(unsigned k) const;
    // Exact quotient; throws InexactDivision if the remainder is nonzero.
    QPolynomial divexact(const QPolynomial& d) const;
    // Substitute q -> other (other must be a polynomial in q).
    QPolynomial compose(const QPolynomial& other) const;

    mpq_class evaluate(const mpq_class& q) const;
    mpq_class evaluate_s(const mpq_class& s) const;

    // "q^3 - 6*q - 1"
    std::string to_string() const;

private:
    void normalize();
    std::map<int, mpq_class> c_;
};

enum class PolyOp { Add, Sub, Mul, DivExact };
QPolynomial poly_arith(const QPolynomial& lhs, const QPolynomial& rhs, PolyOp op);

// Unique polynomial of degree <= degree_bound through the first degree_bound+1
// points; remaining points must agree.
QPolynomial interpolate(const std::vector<std::pair<mpq_class, mpq_class>>& points, int degree_bound);

mpq_class euler_characteristic(const QPolynomial& p);

// Closed-form E-polynomials of the character varieties (rank 2 all families,
// rank 3 orientable surfaces).
QPolynomial closed_form_epoly(const GroupFamily& family, Series series, int rank);

std::string to_string(const mpq_class& x);

} // namespace charvar
