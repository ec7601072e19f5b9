#include "charvar/homcount.hpp"

#include "charvar/chartables.hpp"
#include "charvar/error.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <thread>

namespace charvar {

namespace {

using u128 = unsigned __int128;
using P = QPolynomial;

mpz_class to_mpz(u128 v)
{
    mpz_class hi((unsigned long)(std::uint64_t(v >> 64)));
    mpz_class lo((unsigned long)(std::uint64_t(v)));
    return (hi << 64) + lo;
}

// Runs body(begin, end, worker) over [0, n) split into contiguous chunks.
template <class F>
void parallel_for(std::size_t n, unsigned workers, F body)
{
    if (workers <= 1 || n < 2) {
        body(std::size_t(0), n, 0u);
        return;
    }
    workers = unsigned(std::min<std::size_t>(workers, n));
    std::vector<std::thread> pool;
    std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t b = w * chunk, e = std::min(n, b + chunk);
        pool.emplace_back([&, b, e, w] { body(b, e, w); });
    }
    for (auto& t : pool)
        t.join();
}

void check_rank2_spec(const GroupSpec& spec)
{
    if (spec.n != 2)
        throw Error(ErrorKind::UnsupportedRank, "character sums for this family are rank 2 only");
    if (!is_prime_power(spec.q))
        throw Error(ErrorKind::NotPrime, std::to_string(spec.q) + " is not a prime power");
    if (spec.q % 2 == 0)
        throw Error(ErrorKind::EvenQ, "character tables need odd q");
}

std::vector<CharLabel> labels(Series s, std::uint64_t q)
{
    return s == Series::GL ? gl2_labels(q) : sl2_labels(q);
}

// catalog row for a rank-2 label, matching gl2/sl2_degree_catalog order
std::size_t row_of(const CharLabel& c)
{
    if (c.series == Series::GL) {
        switch (c.family) {
        case CharFamily::RT: return 0;
        case CharFamily::RTs: return 1;
        case CharFamily::Sigma1: return 2;
        case CharFamily::SigmaSt: return 3;
        default: break;
        }
    } else {
        switch (c.family) {
        case CharFamily::RT: return 0;
        case CharFamily::ChiAlpha0: return 1;
        case CharFamily::RTs: return 2;
        case CharFamily::ChiOmega0: return 3;
        case CharFamily::Trivial: return 4;
        case CharFamily::Steinberg: return 5;
        default: break;
        }
    }
    throw Error(ErrorKind::MissingTable, "no catalog row for " + to_string(c));
}

mpz_class require_integer(const mpq_class& v, const char* what)
{
    if (v.get_den() != 1)
        throw Error(ErrorKind::NonIntegerResult, std::string(what) + " is not an integer: " + v.get_str());
    return v.get_num();
}

mpq_class qpow(const mpq_class& x, int e)
{
    mpq_class r = 1;
    mpq_class b = e < 0 ? mpq_class(1) / x : x;
    for (int i = 0; i < std::abs(e); ++i)
        r *= b;
    return r;
}

// f * h over the group, pointwise values indexed by element.
std::vector<u128> convolve(const MatrixGroup& G, const std::vector<u128>& f, const std::vector<u128>& h,
                           unsigned workers)
{
    std::size_t n = G.size();
    std::vector<std::vector<u128>> part(std::max(1u, workers), std::vector<u128>(n, 0));
    parallel_for(n, workers, [&](std::size_t b, std::size_t e, unsigned w) {
        auto& acc = part[w];
        for (std::size_t x = b; x < e; ++x) {
            if (f[x] == 0)
                continue;
            for (std::size_t y = 0; y < n; ++y)
                if (h[y] != 0)
                    acc[G.mul(std::uint32_t(x), std::uint32_t(y))] += f[x] * h[y];
        }
    });
    std::vector<u128> out(n, 0);
    for (const auto& p : part)
        for (std::size_t i = 0; i < n; ++i)
            out[i] += p[i];
    return out;
}

// sum_z f(z) h(z^{-1})
u128 pair_at_identity(const MatrixGroup& G, const std::vector<u128>& f, const std::vector<u128>& h)
{
    u128 s = 0;
    for (std::uint32_t z = 0; z < G.size(); ++z)
        if (f[z] != 0)
            s += f[z] * h[G.inv(z)];
    return s;
}

void check_search(std::uint64_t work, const BruteOptions& opt, const std::string& what)
{
    if (work > opt.max_search)
        throw Error(ErrorKind::TooLarge, what + " needs " + std::to_string(work) + " steps, cap is " +
                                             std::to_string(opt.max_search));
}

// accumulators hold counts up to |G|^gens
void check_width(const MatrixGroup& G, int gens)
{
    if (std::log2(double(G.size())) * gens > 120.0)
        throw Error(ErrorKind::TooLarge, "hom count would overflow 128-bit accumulators");
}

std::vector<u128> commutator_counts(const MatrixGroup& G, unsigned workers)
{
    std::size_t n = G.size();
    std::vector<std::uint32_t> inv(n);
    for (std::uint32_t i = 0; i < n; ++i)
        inv[i] = G.inv(i);
    std::vector<std::vector<u128>> part(std::max(1u, workers), std::vector<u128>(n, 0));
    parallel_for(n, workers, [&](std::size_t b, std::size_t e, unsigned w) {
        auto& acc = part[w];
        for (std::size_t a = b; a < e; ++a)
            for (std::uint32_t c = 0; c < n; ++c) {
                std::uint32_t ab = G.mul(std::uint32_t(a), c);
                std::uint32_t abai = G.mul(ab, inv[a]);
                acc[G.mul(abai, inv[c])] += 1;
            }
    });
    std::vector<u128> out(n, 0);
    for (const auto& p : part)
        for (std::size_t i = 0; i < n; ++i)
            out[i] += p[i];
    return out;
}

std::vector<u128> power_preimages(const MatrixGroup& G, int a)
{
    std::vector<u128> out(G.size(), 0);
    for (std::uint32_t x = 0; x < G.size(); ++x)
        out[G.pow(x, a)] += 1;
    return out;
}

std::vector<std::uint64_t> virtual_nodes(std::uint64_t N, std::size_t count)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t t = 1; out.size() < count; ++t) {
        std::uint64_t q = 1 + N * t;
        if (q >= 5)
            out.push_back(q);
    }
    return out;
}

// Per-row census sum_{chi in row} w(chi) at virtual q, interpolated in q.
std::vector<P> rank2_census(Series s, std::uint64_t N, const std::function<std::int64_t(const CharLabel&, std::uint64_t)>& w)
{
    std::size_t rows = s == Series::GL ? 4 : 6;
    const int bound = 2;
    auto nodes = virtual_nodes(N, bound + 4);
    std::vector<std::vector<std::pair<mpq_class, mpq_class>>> pts(rows);
    for (std::uint64_t q : nodes) {
        std::vector<std::int64_t> acc(rows, 0);
        for (const CharLabel& c : labels(s, q))
            acc[row_of(c)] += w(c, q);
        for (std::size_t r = 0; r < rows; ++r)
            pts[r].emplace_back(mpq_class(std::to_string(q)), mpq_class(acc[r]));
    }
    std::vector<P> out;
    for (auto& p : pts)
        out.push_back(interpolate(p, bound));
    return out;
}

std::vector<DegreeRow> rank2_catalog(Series s)
{
    return s == Series::GL ? gl2_degree_catalog() : sl2_degree_catalog();
}

} // namespace

mpz_class ClassFunction::total_mass() const
{
    mpz_class s = 0;
    const auto& cls = group->classes();
    for (std::size_t i = 0; i < values.size(); ++i)
        s += values[i] * mpz_class(std::to_string(cls[i].size));
    return s;
}

QPolynomial group_order_poly(Series series, int n)
{
    P q = P::q();
    P order(1);
    P qn = q.pow(n), qi(1);
    for (int i = 0; i < n; ++i) {
        order = order * (qn - qi);
        qi = qi * q;
    }
    if (series == Series::SL)
        order = order.divexact(q - 1);
    return order;
}

mpz_class hom_count_surface(const GroupFamily& family, const GroupSpec& spec)
{
    family.validate();
    if (family.kind != GroupFamily::Orientable)
        throw Error(ErrorKind::BadParams, "hom_count_surface needs an orientable family");
    int e = 2 * family.g - 2;
    mpz_class order = group_order(spec);
    mpq_class sum = 0;
    if (spec.n == 2) {
        check_rank2_spec(spec);
        for (const CharLabel& c : labels(spec.series, spec.q)) {
            mpz_class ratio = order / mpz_class(std::to_string(char_degree(c, spec.q)));
            sum += qpow(mpq_class(ratio), e);
        }
    } else if (spec.n == 3) {
        if (spec.series == Series::GL) {
            for (const auto& v : gl3_degree_catalog(spec.q))
                sum += mpq_class(v.count) * qpow(mpq_class(v.ratio), e);
        } else {
            for (const auto& v : sl3_degree_catalog(spec.q)) {
                mpq_class share(v.t * v.t, spec.q - 1);
                share.canonicalize();
                sum += mpq_class(v.count) * share * qpow(mpq_class(v.ratio), e);
            }
        }
    } else {
        throw Error(ErrorKind::UnsupportedRank, "rank must be 2 or 3");
    }
    return require_integer(sum * mpq_class(order), "surface character sum");
}

mpz_class hom_count_nonorientable(const GroupFamily& family, const GroupSpec& spec)
{
    family.validate();
    if (family.kind != GroupFamily::NonOrientable)
        throw Error(ErrorKind::BadParams, "hom_count_nonorientable needs a non-orientable family");
    check_rank2_spec(spec);
    if (!fs_closed_admissible(spec.series, 2, spec.q))
        throw Error(ErrorKind::CongruenceViolated, "non-orientable count needs q = 1 mod 4, got " + std::to_string(spec.q));
    int k = family.k;
    mpz_class order = group_order(spec);
    mpq_class sum = 0;
    for (const CharLabel& c : labels(spec.series, spec.q)) {
        std::int64_t nu = fs_indicator_closed(c, 2, spec.q);
        if (nu == 0)
            continue;
        mpz_class ratio = order / mpz_class(std::to_string(char_degree(c, spec.q)));
        mpq_class term = qpow(mpq_class(ratio), k - 2);
        sum += (k % 2 == 1 && nu < 0) ? mpq_class(-term) : term;
    }
    return require_integer(sum * mpq_class(order), "non-orientable character sum");
}

mpz_class hom_count_torusknot(const GroupFamily& family, const GroupSpec& spec)
{
    family.validate();
    if (family.kind != GroupFamily::TorusKnot)
        throw Error(ErrorKind::BadParams, "hom_count_torusknot needs a torus knot family");
    check_rank2_spec(spec);
    if (!fs_closed_admissible(spec.series, family.a, spec.q) || !fs_closed_admissible(spec.series, family.b, spec.q))
        throw Error(ErrorKind::CongruenceViolated,
                    "torus knot count needs q = 1 mod " + std::to_string(census_modulus(family, spec.series)) +
                        ", got " + std::to_string(spec.q));
    std::int64_t sum = 0;
    for (const CharLabel& c : labels(spec.series, spec.q))
        sum += fs_indicator_closed(c, family.a, spec.q) * fs_indicator_closed(c, family.b, spec.q);
    return group_order(spec) * mpz_class(std::to_string(sum));
}

mpz_class hom_count(const GroupFamily& family, const GroupSpec& spec)
{
    family.validate();
    switch (family.kind) {
    case GroupFamily::Free: {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), group_order(spec).get_mpz_t(), unsigned(family.r));
        return r;
    }
    case GroupFamily::Orientable: return hom_count_surface(family, spec);
    case GroupFamily::NonOrientable: return hom_count_nonorientable(family, spec);
    case GroupFamily::TorusKnot: return hom_count_torusknot(family, spec);
    }
    return 0;
}

mpz_class hom_count_brute(const GroupFamily& family, const GroupSpec& spec, const BruteOptions& opt)
{
    family.validate();
    if (family.kind == GroupFamily::Free) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), group_order(spec).get_mpz_t(), unsigned(family.r));
        return r;
    }
    return hom_count_brute(family, std::make_shared<const MatrixGroup>(spec), opt);
}

mpz_class hom_count_brute(const GroupFamily& family, std::shared_ptr<const MatrixGroup> Gp, const BruteOptions& opt)
{
    family.validate();
    const MatrixGroup& G = *Gp;
    std::uint64_t n = G.size();
    if (family.kind == GroupFamily::Free) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), mpz_class((unsigned long)n).get_mpz_t(), unsigned(family.r));
        return r;
    }
    check_width(G, family.generators());
    switch (family.kind) {
    case GroupFamily::Orientable: {
        int g = family.g;
        check_search(n * n * std::uint64_t(std::max(1, g - 1)), opt, "orientable brute count");
        std::vector<u128> N = commutator_counts(G, opt.workers);
        if (g == 1)
            return to_mpz(N[G.identity_index()]);
        std::vector<u128> acc = N;
        for (int i = 2; i < g; ++i)
            acc = convolve(G, acc, N, opt.workers);
        return to_mpz(pair_at_identity(G, acc, N));
    }
    case GroupFamily::NonOrientable: {
        int k = family.k;
        std::vector<u128> S = power_preimages(G, 2);
        if (k == 1)
            return to_mpz(S[G.identity_index()]);
        check_search(n * n * std::uint64_t(std::max(1, k - 2)), opt, "non-orientable brute count");
        std::vector<u128> acc = S;
        for (int i = 2; i < k; ++i)
            acc = convolve(G, acc, S, opt.workers);
        return to_mpz(pair_at_identity(G, acc, S));
    }
    case GroupFamily::TorusKnot: {
        // x^a = y^b: bucket both power maps and join
        check_search(2 * n, opt, "torus knot brute count");
        std::vector<u128> A = power_preimages(G, family.a);
        std::vector<u128> B = power_preimages(G, family.b);
        u128 s = 0;
        for (std::uint64_t z = 0; z < n; ++z)
            s += A[z] * B[z];
        return to_mpz(s);
    }
    default: break;
    }
    return 0;
}

ClassFunction commutator_distribution(const GroupSpec& spec, const BruteOptions& opt)
{
    return commutator_distribution(std::make_shared<const MatrixGroup>(spec), opt);
}

ClassFunction commutator_distribution(std::shared_ptr<const MatrixGroup> Gp, const BruteOptions& opt)
{
    const MatrixGroup& G = *Gp;
    std::uint64_t n = G.size();
    check_search(n * n, opt, "commutator distribution");
    std::vector<u128> N = commutator_counts(G, opt.workers);
    ClassFunction out;
    out.group = Gp;
    const auto& cls = G.classes();
    out.values.assign(cls.size(), 0);
    std::vector<bool> seen(cls.size(), false);
    for (std::uint32_t z = 0; z < n; ++z) {
        std::uint32_t c = G.class_of_index(z);
        mpz_class v = to_mpz(N[z]);
        if (!seen[c]) {
            out.values[c] = v;
            seen[c] = true;
        } else if (out.values[c] != v) {
            throw Error(ErrorKind::NonIntegerResult, "commutator count is not a class function");
        }
    }
    return out;
}

std::uint64_t census_modulus(const GroupFamily& family, Series series)
{
    auto need = [&](std::uint64_t a) { return (series == Series::SL && a % 2 == 0) ? 2 * a : a; };
    switch (family.kind) {
    case GroupFamily::NonOrientable: return 4;
    case GroupFamily::TorusKnot:
        return std::lcm(std::uint64_t(4), std::lcm(need(std::uint64_t(family.a)), need(std::uint64_t(family.b))));
    default: return 2;
    }
}

QPolynomial hom_ratio_symbolic(const GroupFamily& family, Series series, int rank)
{
    family.validate();
    if (rank != 2 && rank != 3)
        throw Error(ErrorKind::UnsupportedRank, "rank must be 2 or 3");
    P order = group_order_poly(series, rank);
    if (family.kind == GroupFamily::Free)
        return order.pow(family.r - 1);
    if (rank == 3 && family.kind != GroupFamily::Orientable)
        throw Error(ErrorKind::UnsupportedRank, "rank 3 hom counts are only available for orientable surfaces");

    if (family.kind == GroupFamily::Orientable) {
        int e = 2 * family.g - 2;
        P sum;
        if (rank == 2) {
            for (const auto& r : rank2_catalog(series))
                sum += r.count * r.ratio.pow(e);
            return sum;
        }
        if (series == Series::GL) {
            for (const auto& r : gl3_degree_catalog_symbolic())
                sum += r.count * r.ratio.pow(e);
            return sum;
        }
        for (const auto& r : sl3_degree_catalog_symbolic())
            sum += r.count * P(r.t * r.t) * r.ratio.pow(e);
        return sum.divexact(P::q() - 1);
    }

    std::uint64_t N = census_modulus(family, series);
    if (family.kind == GroupFamily::NonOrientable) {
        int k = family.k;
        if (k < 2)
            throw Error(ErrorKind::BadParams, "symbolic non-orientable count needs k >= 2");
        auto census = rank2_census(series, N, [k](const CharLabel& c, std::uint64_t q) -> std::int64_t {
            std::int64_t nu = fs_indicator_closed(c, 2, q);
            if (nu == 0)
                return 0;
            return (k % 2 == 1) ? nu : 1;
        });
        auto rows = rank2_catalog(series);
        P sum;
        for (std::size_t i = 0; i < rows.size(); ++i)
            sum += census[i] * rows[i].ratio.pow(k - 2);
        return sum;
    }
    int a = family.a, b = family.b;
    auto census = rank2_census(series, N, [a, b](const CharLabel& c, std::uint64_t q) {
        return fs_indicator_closed(c, a, q) * fs_indicator_closed(c, b, q);
    });
    P sum;
    for (const P& c : census)
        sum += c;
    return sum;
}

} // namespace charvar
