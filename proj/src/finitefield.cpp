#include "charvar/finitefield.hpp"

#include "charvar/error.hpp"

#include <string>

namespace charvar {

namespace {

using Poly = std::vector<int>;

const std::uint32_t kMaxFieldSize = 1u << 20;

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

int inv_mod(int a, int p)
{
    int r = 1;
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1)
            r = int((long long)r * a % p);
        a = int((long long)a * a % p);
    }
    return r;
}

// a mod f, f monic
Poly poly_mod(Poly a, const Poly& f, int p)
{
    int m = int(f.size()) - 1;
    trim(a);
    while (int(a.size()) - 1 >= m) {
        int c = a.back();
        int shift = int(a.size()) - 1 - m;
        for (int i = 0; i <= m; ++i)
            a[shift + i] = ((a[shift + i] - c * f[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, int p)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = int((r[i + j] + (long long)a[i] * b[j]) % p);
    return poly_mod(r, f, p);
}

Poly poly_powmod(Poly a, std::uint64_t k, const Poly& f, int p)
{
    Poly r{1};
    a = poly_mod(a, f, p);
    while (k) {
        if (k & 1)
            r = poly_mulmod(r, a, f, p);
        a = poly_mulmod(a, a, f, p);
        k >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, int p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic for the reduction
        int c = inv_mod(b.back(), p);
        for (int& x : b)
            x = int((long long)x * c % p);
        a = poly_mod(a, b, p);
        std::swap(a, b);
    }
    return a;
}

Poly poly_sub(Poly a, const Poly& b, int p)
{
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = ((a[i] - b[i]) % p + p) % p;
    trim(a);
    return a;
}

std::vector<int> prime_factors(std::uint64_t n)
{
    std::vector<int> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(int(d));
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(int(n));
    return out;
}

// Rabin's test.
bool is_irreducible(const Poly& f, int p)
{
    int m = int(f.size()) - 1;
    if (m == 1)
        return true;
    Poly x{0, 1};
    // x^{p^k} mod f by iterated p-th powers
    std::vector<Poly> frob(m + 1);
    frob[0] = x;
    for (int k = 1; k <= m; ++k)
        frob[k] = poly_powmod(frob[k - 1], std::uint64_t(p), f, p);
    if (poly_sub(frob[m], poly_mod(x, f, p), p).size() != 0)
        return false;
    for (int r : prime_factors(std::uint64_t(m))) {
        Poly h = poly_sub(frob[m / r], x, p);
        Poly g = poly_gcd(f, h, p);
        if (g.size() != 1)
            return false;
    }
    return true;
}

Poly decode(std::uint32_t v, int p, int m)
{
    Poly c(m, 0);
    for (int i = 0; i < m; ++i) {
        c[i] = int(v % p);
        v /= p;
    }
    return c;
}

std::uint32_t encode(const Poly& c, int p)
{
    std::uint32_t v = 0;
    for (int i = int(c.size()) - 1; i >= 0; --i)
        v = v * p + std::uint32_t(c[i]);
    return v;
}

} // namespace

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

FieldCtx::FieldCtx(int p, int e, int d) : p_(p), e_(e), d_(d)
{
    if (!is_prime(p))
        throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (e < 1 || d < 1 || d > 3)
        throw Error(ErrorKind::BadParams, "need e >= 1 and d in {1,2,3}");
    int m = e * d;
    std::uint64_t size = 1, q = 1;
    for (int i = 0; i < m; ++i) {
        size *= std::uint64_t(p);
        if (size > kMaxFieldSize)
            throw Error(ErrorKind::TooLarge, "field size exceeds 2^20");
    }
    for (int i = 0; i < e; ++i)
        q *= std::uint64_t(p);
    size_ = std::uint32_t(size);
    q_ = std::uint32_t(q);

    // smallest monic irreducible of degree m
    std::uint32_t lower = 1;
    for (int i = 0; i < m; ++i)
        lower *= std::uint32_t(p);
    for (std::uint32_t v = 0; v < lower; ++v) {
        Poly f = decode(v, p, m);
        f.push_back(1);
        if (f[0] == 0 && m > 1)
            continue;
        if (is_irreducible(f, p)) {
            modulus_ = f;
            break;
        }
    }

    std::uint32_t ord = size_ - 1;
    std::vector<int> factors = prime_factors(ord);
    std::uint32_t gen_enc = 1;
    for (std::uint32_t v = 1; v < size_; ++v) {
        Poly c = decode(v, p, m);
        trim(c);
        bool ok = true;
        if (poly_powmod(c, ord, modulus_, p) != Poly{1})
            ok = false;
        for (int r : factors) {
            if (!ok)
                break;
            if (poly_powmod(c, ord / std::uint32_t(r), modulus_, p) == Poly{1})
                ok = false;
        }
        if (ok) {
            gen_enc = v;
            break;
        }
    }

    exp_.assign(ord, 0);
    log_.assign(size_, 0);
    Poly g = decode(gen_enc, p, m);
    trim(g);
    Poly cur{1};
    for (std::uint32_t k = 0; k < ord; ++k) {
        Poly full = cur;
        full.resize(m, 0);
        std::uint32_t enc = encode(full, p);
        exp_[k] = enc;
        log_[enc] = k + 1;
        cur = poly_mulmod(cur, g, modulus_, p);
    }

    zech_.assign(ord, 0);
    for (std::uint32_t k = 0; k < ord; ++k) {
        Poly c = decode(exp_[k], p, m);
        c[0] = (c[0] + 1) % p;
        zech_[k] = log_[encode(c, p)];
    }
    minus_one_ = (p == 2) ? 1 : Elem(ord / 2 + 1);
}

Elem FieldCtx::add(Elem a, Elem b) const
{
    if (a == 0)
        return b;
    if (b == 0)
        return a;
    std::uint32_t ord = order();
    std::uint32_t i = a - 1, j = b - 1;
    std::uint32_t t = j >= i ? j - i : j + ord - i;
    Elem z = zech_[t];
    if (z == 0)
        return 0;
    std::uint32_t k = i + (z - 1);
    if (k >= ord)
        k -= ord;
    return k + 1;
}

Elem FieldCtx::inv(Elem a) const
{
    if (a == 0)
        throw Error(ErrorKind::ZeroElement, "inverse of zero");
    std::uint32_t k = a - 1;
    return k == 0 ? 1 : order() - k + 1;
}

Elem FieldCtx::pow(Elem a, std::int64_t k) const
{
    if (a == 0) {
        if (k < 0)
            throw Error(ErrorKind::ZeroElement, "negative power of zero");
        return k == 0 ? 1 : 0;
    }
    std::int64_t ord = order();
    std::int64_t r = ((std::int64_t(a - 1) * (k % ord)) % ord + ord) % ord;
    return Elem(r + 1);
}

Elem FieldCtx::frobenius(Elem a) const
{
    if (a == 0)
        return 0;
    std::uint64_t k = (std::uint64_t(a - 1) * q_) % order();
    return Elem(k + 1);
}

std::uint32_t FieldCtx::discrete_log(Elem a) const
{
    if (a == 0)
        throw Error(ErrorKind::ZeroElement, "discrete log of zero");
    return a - 1;
}

Elem FieldCtx::exp(std::int64_t k) const
{
    std::int64_t ord = order();
    return Elem(((k % ord) + ord) % ord + 1);
}

std::vector<int> FieldCtx::coeffs(Elem a) const
{
    return decode(encoding(a), p_, e_ * d_);
}

Elem FieldCtx::from_coeffs(const std::vector<int>& c) const
{
    Poly full(e_ * d_, 0);
    for (std::size_t i = 0; i < c.size() && i < full.size(); ++i)
        full[i] = ((c[i] % p_) + p_) % p_;
    return log_[encode(full, p_)];
}

Elem FieldCtx::from_int(std::int64_t n) const
{
    int r = int(((n % p_) + p_) % p_);
    return from_coeffs({r});
}

bool FieldCtx::in_subfield(Elem a, int k) const
{
    if (a == 0)
        return true;
    std::uint64_t sub = 1;
    for (int i = 0; i < e_ * k; ++i)
        sub *= std::uint64_t(p_);
    if ((order()) % (sub - 1) != 0)
        return false;
    return (a - 1) % (order() / (sub - 1)) == 0;
}

std::vector<Elem> FieldCtx::embedding_into(const FieldCtx& big) const
{
    if (big.p() != p_ || (big.e() * big.d()) % (e_ * d_) != 0)
        throw Error(ErrorKind::BadParams, "no embedding between these fields");
    // find the root of our modulus with the smallest code in big
    Elem root = 0;
    bool found = false;
    for (Elem r = 0; r < big.size() && !found; ++r) {
        Elem acc = 0;
        Elem pw = big.one();
        for (int c : modulus_) {
            acc = big.add(acc, big.mul(big.from_int(c), pw));
            pw = big.mul(pw, r);
        }
        if (acc == 0) {
            root = r;
            found = true;
        }
    }
    if (!found)
        throw Error(ErrorKind::BadParams, "modulus has no root in target field");
    std::vector<Elem> table(size_, 0);
    for (Elem a = 1; a < size_; ++a) {
        std::vector<int> c = coeffs(a);
        Elem acc = 0;
        Elem pw = big.one();
        for (int ci : c) {
            acc = big.add(acc, big.mul(big.from_int(ci), pw));
            pw = big.mul(pw, root);
        }
        table[a] = acc;
    }
    return table;
}

FieldCtx field_make(int p, int e, int d)
{
    return FieldCtx(p, e, d);
}

FieldElement frobenius(const FieldElement& x)
{
    return {x.ctx, x.ctx->frobenius(x.code)};
}

std::uint32_t discrete_log(const FieldElement& x)
{
    return x.ctx->discrete_log(x.code);
}

} // namespace charvar
