#include "charvar/cyclotomic.hpp"

#include "charvar/error.hpp"

#include <mutex>
#include <numeric>
#include <sstream>

namespace charvar {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(ErrorKind::TooLarge, "cyclotomic coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(ErrorKind::TooLarge, "cyclotomic coefficient overflow");
    return r;
}

int mobius(std::uint32_t n)
{
    int m = 1;
    for (std::uint32_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0)
                return 0;
            m = -m;
        }
    }
    if (n > 1)
        m = -m;
    return m;
}

std::vector<std::int64_t> build_cyclotomic(std::uint32_t n)
{
    // Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}
    std::vector<std::int64_t> p{1};
    std::vector<std::uint32_t> divide_by;
    for (std::uint32_t d = 1; d <= n; ++d) {
        if (n % d)
            continue;
        int mu = mobius(n / d);
        if (mu == 1) {
            std::vector<std::int64_t> r(p.size() + d, 0);
            for (std::size_t i = 0; i < p.size(); ++i) {
                r[i + d] = checked_add(r[i + d], p[i]);
                r[i] = checked_add(r[i], -p[i]);
            }
            p = std::move(r);
        } else if (mu == -1) {
            divide_by.push_back(d);
        }
    }
    for (std::uint32_t d : divide_by) {
        // p = r * (x^d - 1): r_i = r_{i-d} - p_i
        std::size_t m = p.size() - d;
        std::vector<std::int64_t> r(m, 0);
        for (std::size_t i = 0; i < m; ++i)
            r[i] = (i >= d ? r[i - d] : 0) - p[i];
        p = std::move(r);
    }
    return p;
}

} // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t L)
{
    static std::mutex mu;
    static std::map<std::uint32_t, std::vector<std::int64_t>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(L);
    if (it == cache.end())
        it = cache.emplace(L, build_cyclotomic(L)).first;
    return it->second;
}

CyclotomicValue::CyclotomicValue(std::uint32_t L, std::int64_t c) : L_(L)
{
    if (L == 0)
        throw Error(ErrorKind::BadParams, "root of unity order must be positive");
    if (c != 0)
        t_[0] = c;
}

CyclotomicValue CyclotomicValue::root(std::uint32_t L, std::int64_t k, std::int64_t c)
{
    CyclotomicValue v(L);
    std::int64_t e = ((k % std::int64_t(L)) + L) % L;
    if (c != 0)
        v.t_[std::uint32_t(e)] = c;
    return v;
}

void CyclotomicValue::check_order(const CyclotomicValue& o) const
{
    if (o.L_ != L_)
        throw Error(ErrorKind::BadParams, "mixing cyclotomic values of different orders");
}

void CyclotomicValue::tidy()
{
    std::int64_t g = den_;
    for (auto it = t_.begin(); it != t_.end();) {
        if (it->second == 0) {
            it = t_.erase(it);
        } else {
            g = std::gcd(g, it->second);
            ++it;
        }
    }
    if (t_.empty()) {
        den_ = 1;
        return;
    }
    if (g < 0)
        g = -g;
    if (g > 1) {
        den_ /= g;
        for (auto& [k, c] : t_)
            c /= g;
    }
}

CyclotomicValue CyclotomicValue::operator-() const
{
    CyclotomicValue r = *this;
    for (auto& [k, c] : r.t_)
        c = -c;
    return r;
}

CyclotomicValue& CyclotomicValue::operator+=(const CyclotomicValue& o)
{
    check_order(o);
    std::int64_t l = std::lcm(den_, o.den_);
    std::int64_t fa = l / den_, fb = l / o.den_;
    if (fa != 1)
        for (auto& [k, c] : t_)
            c = checked_mul(c, fa);
    for (const auto& [k, c] : o.t_)
        t_[k] = checked_add(t_[k], checked_mul(c, fb));
    den_ = l;
    tidy();
    return *this;
}

CyclotomicValue& CyclotomicValue::operator-=(const CyclotomicValue& o)
{
    return *this += -o;
}

CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b)
{
    a.check_order(b);
    CyclotomicValue r(a.L_);
    for (const auto& [ka, ca] : a.t_)
        for (const auto& [kb, cb] : b.t_) {
            std::uint32_t k = std::uint32_t((std::uint64_t(ka) + kb) % a.L_);
            r.t_[k] = checked_add(r.t_[k], checked_mul(ca, cb));
        }
    r.den_ = checked_mul(a.den_, b.den_);
    r.tidy();
    return r;
}

CyclotomicValue CyclotomicValue::scaled(std::int64_t num, std::int64_t den) const
{
    if (den == 0)
        throw Error(ErrorKind::BadParams, "zero denominator");
    CyclotomicValue r = *this;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    for (auto& [k, c] : r.t_)
        c = checked_mul(c, num);
    r.den_ = checked_mul(r.den_, den);
    r.tidy();
    return r;
}

CyclotomicValue CyclotomicValue::conj() const
{
    CyclotomicValue r(L_);
    for (const auto& [k, c] : t_)
        r.t_[(L_ - k) % L_] = c;
    r.den_ = den_;
    return r;
}

std::vector<std::int64_t> CyclotomicValue::reduced() const
{
    const auto& phi = cyclotomic_polynomial(L_);
    std::size_t deg = phi.size() - 1;
    std::vector<std::int64_t> v(std::max<std::size_t>(L_, deg), 0);
    for (const auto& [k, c] : t_)
        v[k] = checked_add(v[k], c);
    for (std::size_t i = v.size(); i-- > deg;) {
        std::int64_t c = v[i];
        if (c == 0)
            continue;
        // phi is monic
        for (std::size_t j = 0; j <= deg; ++j)
            v[i - deg + j] = checked_add(v[i - deg + j], -checked_mul(c, phi[j]));
    }
    v.resize(deg);
    return v;
}

bool CyclotomicValue::is_zero() const
{
    if (t_.empty())
        return true;
    for (std::int64_t c : reduced())
        if (c != 0)
            return false;
    return true;
}

bool CyclotomicValue::to_rational(mpq_class& out) const
{
    std::vector<std::int64_t> r = reduced();
    for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i] != 0)
            return false;
    out = mpq_class(mpz_class(std::to_string(r.empty() ? 0 : r[0])), mpz_class(std::to_string(den_)));
    out.canonicalize();
    return true;
}

std::string CyclotomicValue::to_string() const
{
    std::vector<std::int64_t> r = reduced();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = r.size(); i-- > 0;) {
        if (r[i] == 0)
            continue;
        mpq_class c(mpz_class(std::to_string(r[i])), mpz_class(std::to_string(den_)));
        c.canonicalize();
        bool neg = c < 0;
        if (neg)
            c = -c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        std::string z = "ζ" + std::to_string(L_);
        if (i > 1)
            z += "^" + std::to_string(i);
        if (i == 0)
            os << c.get_str();
        else if (c == 1)
            os << z;
        else
            os << c.get_str() << "*" << z;
    }
    return first ? "0" : os.str();
}

} // namespace charvar
