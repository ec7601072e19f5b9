#include "charvar/qpoly.hpp"

#include "charvar/error.hpp"

#include <cctype>
#include <climits>
#include <sstream>

namespace charvar {

std::string to_string(const mpq_class& x)
{
    return x.get_str();
}

QPolynomial::QPolynomial(long c) : QPolynomial(mpq_class(c)) {}

QPolynomial::QPolynomial(const mpz_class& c) : QPolynomial(mpq_class(c)) {}

QPolynomial::QPolynomial(const mpq_class& c)
{
    if (c != 0)
        c_[0] = c;
}

QPolynomial QPolynomial::q()
{
    return monomial(1, 1);
}

QPolynomial QPolynomial::monomial(const mpq_class& c, int k)
{
    QPolynomial p;
    if (c != 0)
        p.c_[2 * k] = c;
    return p;
}

QPolynomial QPolynomial::s_power(int k)
{
    QPolynomial p;
    p.c_[k] = 1;
    return p;
}

QPolynomial QPolynomial::from_s_terms(const std::map<int, mpq_class>& terms, bool allow_half)
{
    QPolynomial p;
    for (const auto& [e, c] : terms) {
        if ((e & 1) && !allow_half && c != 0)
            throw Error(ErrorKind::BadParams, "half power of q in a public polynomial");
        p.c_[e] += c;
    }
    p.normalize();
    return p;
}

QPolynomial QPolynomial::from_coeffs(const std::vector<mpq_class>& c)
{
    QPolynomial p;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0)
            p.c_[2 * int(i)] = c[i];
    return p;
}

void QPolynomial::normalize()
{
    for (auto it = c_.begin(); it != c_.end();) {
        it->second.canonicalize();
        if (it->second == 0)
            it = c_.erase(it);
        else
            ++it;
    }
}

bool QPolynomial::has_half_powers() const
{
    for (const auto& [e, c] : c_)
        if (e & 1)
            return true;
    return false;
}

bool QPolynomial::is_integer_polynomial() const
{
    for (const auto& [e, c] : c_)
        if ((e & 1) || e < 0 || c.get_den() != 1)
            return false;
    return true;
}

int QPolynomial::degree_s() const
{
    return c_.empty() ? INT_MIN : c_.rbegin()->first;
}

int QPolynomial::degree() const
{
    if (c_.empty())
        return INT_MIN;
    int d = c_.rbegin()->first;
    return d >= 0 ? d / 2 : -((-d + 1) / 2);
}

mpq_class QPolynomial::coeff(int k) const
{
    auto it = c_.find(2 * k);
    return it == c_.end() ? mpq_class(0) : it->second;
}

QPolynomial QPolynomial::operator-() const
{
    QPolynomial r = *this;
    for (auto& [e, c] : r.c_)
        c = -c;
    return r;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o)
{
    for (const auto& [e, c] : o.c_)
        c_[e] += c;
    normalize();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o)
{
    for (const auto& [e, c] : o.c_)
        c_[e] -= c;
    normalize();
    return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o)
{
    std::map<int, mpq_class> r;
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : o.c_)
            r[e1 + e2] += c1 * c2;
    c_ = std::move(r);
    normalize();
    return *this;
}

QPolynomial QPolynomial::pow(unsigned k) const
{
    QPolynomial r(1), b = *this;
    while (k) {
        if (k & 1)
            r *= b;
        k >>= 1;
        if (k)
            b *= b;
    }
    return r;
}

QPolynomial QPolynomial::divexact(const QPolynomial& d) const
{
    if (d.is_zero())
        throw Error(ErrorKind::InexactDivision, "division by zero polynomial");
    if (is_zero())
        return {};
    int low = c_.begin()->first - d.c_.begin()->first;
    int dlead = d.c_.rbegin()->first;
    const mpq_class& dc = d.c_.rbegin()->second;
    QPolynomial rem = *this, quot;
    while (!rem.is_zero()) {
        int e = rem.c_.rbegin()->first - dlead;
        if (e < low)
            throw Error(ErrorKind::InexactDivision, to_string() + " is not divisible by " + d.to_string());
        mpq_class c = rem.c_.rbegin()->second / dc;
        quot.c_[e] = c;
        for (const auto& [de, dcoef] : d.c_)
            rem.c_[de + e] -= c * dcoef;
        rem.normalize();
    }
    quot.normalize();
    return quot;
}

QPolynomial QPolynomial::compose(const QPolynomial& other) const
{
    if (has_half_powers())
        throw Error(ErrorKind::BadParams, "compose needs integral powers of q");
    QPolynomial r;
    for (const auto& [e, c] : c_) {
        if (e < 0)
            throw Error(ErrorKind::BadParams, "compose needs nonnegative powers of q");
        r += QPolynomial(c) * other.pow(unsigned(e / 2));
    }
    return r;
}

namespace {

mpq_class qpow(const mpq_class& x, int k)
{
    if (k < 0) {
        if (x == 0)
            throw Error(ErrorKind::BadParams, "negative power of zero");
        return 1 / qpow(x, -k);
    }
    mpq_class r = 1;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), unsigned(k));
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), unsigned(k));
    r.canonicalize();
    return r;
}

} // namespace

mpq_class QPolynomial::evaluate(const mpq_class& q) const
{
    if (has_half_powers())
        throw Error(ErrorKind::BadParams, "evaluate needs integral powers of q; use evaluate_s");
    mpq_class r = 0;
    for (const auto& [e, c] : c_)
        r += c * qpow(q, e / 2);
    return r;
}

mpq_class QPolynomial::evaluate_s(const mpq_class& s) const
{
    mpq_class r = 0;
    for (const auto& [e, c] : c_)
        r += c * qpow(s, e);
    return r;
}

std::string QPolynomial::to_string() const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        int e = it->first;
        mpq_class c = it->second;
        bool neg = c < 0;
        if (neg)
            c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        std::string var;
        if (e != 0) {
            var = "q";
            if (e & 1)
                var += "^(" + std::to_string(e) + "/2)";
            else if (e != 2)
                var += "^" + std::to_string(e / 2);
        }
        if (var.empty())
            os << c.get_str();
        else if (c == 1)
            os << var;
        else
            os << c.get_str() << "*" << var;
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& t;
    std::size_t i = 0;

    void ws()
    {
        while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i])))
            ++i;
    }
    bool peek(char c)
    {
        ws();
        return i < t.size() && t[i] == c;
    }
    [[noreturn]] void fail(const std::string& what)
    {
        throw Error(ErrorKind::ParseError, what + " at position " + std::to_string(i) + " in \"" + t + "\"");
    }
    mpz_class integer()
    {
        ws();
        std::size_t start = i;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i])))
            ++i;
        if (start == i)
            fail("expected integer");
        return mpz_class(t.substr(start, i - start));
    }
    int small_signed()
    {
        ws();
        bool neg = false;
        if (i < t.size() && (t[i] == '-' || t[i] == '+')) {
            neg = t[i] == '-';
            ++i;
        }
        mpz_class v = integer();
        if (!v.fits_sint_p())
            fail("exponent too large");
        return neg ? -int(v.get_si()) : int(v.get_si());
    }
    // returns s-exponent
    int exponent()
    {
        if (!peek('^'))
            return 2;
        ++i;
        if (peek('(')) {
            ++i;
            int num = small_signed();
            int den = 1;
            if (peek('/')) {
                ++i;
                den = small_signed();
            }
            if (!peek(')'))
                fail("expected ')'");
            ++i;
            if (den == 1)
                return 2 * num;
            if (den == 2)
                return num;
            fail("exponent denominator must be 1 or 2");
        }
        return 2 * small_signed();
    }
};

} // namespace

QPolynomial QPolynomial::parse(const std::string& text)
{
    Parser ps{text};
    std::map<int, mpq_class> terms;
    bool first = true;
    ps.ws();
    if (ps.i == text.size())
        ps.fail("empty polynomial");
    while (true) {
        ps.ws();
        if (ps.i == text.size())
            break;
        bool neg = false;
        if (ps.peek('+') || ps.peek('-')) {
            neg = text[ps.i] == '-';
            ++ps.i;
        } else if (!first) {
            ps.fail("expected '+' or '-'");
        }
        first = false;
        mpq_class c = 1;
        int e = 0;
        bool have_coef = false;
        ps.ws();
        if (ps.i < text.size() && std::isdigit(static_cast<unsigned char>(text[ps.i]))) {
            have_coef = true;
            mpz_class num = ps.integer();
            mpz_class den = 1;
            if (ps.peek('/')) {
                ++ps.i;
                den = ps.integer();
                if (den == 0)
                    ps.fail("zero denominator");
            }
            c = mpq_class(num, den);
            c.canonicalize();
            if (ps.peek('*')) {
                ++ps.i;
                if (!ps.peek('q'))
                    ps.fail("expected 'q'");
            }
        }
        if (ps.peek('q')) {
            ++ps.i;
            e = ps.exponent();
        } else if (!have_coef) {
            ps.fail("expected term");
        }
        terms[e] += neg ? mpq_class(-c) : c;
    }
    return from_s_terms(terms, true);
}

QPolynomial poly_arith(const QPolynomial& lhs, const QPolynomial& rhs, PolyOp op)
{
    switch (op) {
    case PolyOp::Add: return lhs + rhs;
    case PolyOp::Sub: return lhs - rhs;
    case PolyOp::Mul: return lhs * rhs;
    case PolyOp::DivExact: return lhs.divexact(rhs);
    }
    return {};
}

QPolynomial interpolate(const std::vector<std::pair<mpq_class, mpq_class>>& points, int degree_bound)
{
    if (degree_bound < 0)
        throw Error(ErrorKind::BadParams, "negative degree bound");
    std::size_t n = std::size_t(degree_bound) + 1;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (points[i].first == points[j].first)
                throw Error(ErrorKind::BadParams, "interpolation nodes must be distinct");
    if (points.size() < n)
        throw Error(ErrorKind::InsufficientPoints, "need " + std::to_string(n) + " points, got " +
                                                       std::to_string(points.size()));
    // Newton divided differences
    std::vector<mpq_class> x(n), dd(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = points[i].first;
        dd[i] = points[i].second;
    }
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (x[i] - x[i - level]);
    QPolynomial p(dd[n - 1]);
    QPolynomial qv = QPolynomial::q();
    for (std::size_t i = n - 1; i-- > 0;)
        p = p * (qv - QPolynomial(x[i])) + QPolynomial(dd[i]);
    for (std::size_t i = n; i < points.size(); ++i)
        if (p.evaluate(points[i].first) != points[i].second)
            throw Error(ErrorKind::InconsistentPoints,
                        "point (" + points[i].first.get_str() + ", " + points[i].second.get_str() +
                            ") disagrees with " + p.to_string());
    return p;
}

mpq_class euler_characteristic(const QPolynomial& p)
{
    return p.evaluate_s(1);
}

} // namespace charvar
