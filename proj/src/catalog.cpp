#include "charvar/chartables.hpp"

#include "charvar/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace charvar {

namespace {

using P = QPolynomial;

std::vector<int> dual(const std::vector<int>& lambda)
{
    std::vector<int> d;
    if (lambda.empty())
        return d;
    for (int c = 1; c <= lambda[0]; ++c) {
        int len = 0;
        for (int r : lambda)
            if (r >= c)
                ++len;
        d.push_back(len);
    }
    return d;
}

std::string part_str(const std::vector<int>& lambda)
{
    std::string s;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        s += (i ? "+" : "") + std::to_string(lambda[i]);
    return s;
}

void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

struct Part {
    int d;
    std::vector<int> lambda;
};

struct Type {
    std::vector<std::pair<Part, int>> parts;  // (d, lambda) with multiplicity
    std::string name() const
    {
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            s += i ? ", " : "";
            s += "m_{" + std::to_string(parts[i].first.d) + "," + part_str(parts[i].first.lambda) +
                 "}=" + std::to_string(parts[i].second);
        }
        return s;
    }
};

std::vector<Type> types_of_size(int n)
{
    std::vector<Part> all;
    for (int d = n; d >= 1; --d) {
        for (int m = n / d; m >= 1; --m) {
            std::vector<std::vector<int>> ps;
            std::vector<int> cur;
            partitions(m, m, cur, ps);
            for (auto& l : ps)
                all.push_back({d, l});
        }
    }
    std::vector<Type> out;
    std::function<void(std::size_t, int, Type&)> rec = [&](std::size_t idx, int left, Type& t) {
        if (left == 0) {
            out.push_back(t);
            return;
        }
        if (idx == all.size())
            return;
        const Part& pt = all[idx];
        int w = pt.d * std::accumulate(pt.lambda.begin(), pt.lambda.end(), 0);
        for (int m = left / w; m >= 1; --m) {
            t.parts.push_back({pt, m});
            rec(idx + 1, left - m * w, t);
            t.parts.pop_back();
        }
        rec(idx + 1, left, t);
    };
    Type t;
    rec(0, n, t);
    return out;
}

int mobius(int n)
{
    int m = 1;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0)
                return 0;
            m = -m;
        }
    return n > 1 ? -m : m;
}

// number of Frobenius orbits of size d: (1/d) sum_{e | d} mu(d/e)(q^e - 1)
P orbit_count(int d)
{
    P q = P::q(), s;
    for (int e = 1; e <= d; ++e)
        if (d % e == 0)
            s += P(mobius(d / e)) * (q.pow(unsigned(e)) - 1);
    return s * P(mpq_class(1, d));
}

P type_count(const Type& t)
{
    std::map<int, std::vector<int>> by_degree;
    for (const auto& [pt, m] : t.parts)
        by_degree[pt.d].push_back(m);
    P out(1);
    for (const auto& [d, ms] : by_degree) {
        P N = orbit_count(d);
        int k = 0;
        mpz_class denom = 1;
        for (int m : ms) {
            for (int i = 1; i <= m; ++i)
                denom *= i;
            k += m;
        }
        for (int i = 0; i < k; ++i)
            out *= N - i;
        out *= P(mpq_class(1, denom));
    }
    return out;
}

P type_ratio(const Type& t, int n)
{
    P h(1);
    for (const auto& [pt, m] : t.parts)
        h *= hook_polynomial(dual(pt.lambda), pt.d).pow(unsigned(m));
    P sign(n % 2 ? -1 : 1);
    return sign * P::s_power(n * n) * h;
}

std::uint64_t upow(std::uint64_t b, int e)
{
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i)
        r *= b;
    return r;
}

} // namespace

QPolynomial hook_polynomial(const std::vector<int>& lambda, int d)
{
    if (lambda.empty())
        return P(1);
    int pairing = 0;
    for (std::size_t j = 0; j < lambda.size(); ++j)
        pairing += int(2 * j + 1) * lambda[j];
    std::vector<int> cols = dual(lambda);
    P out = P::s_power(-d * pairing);
    for (std::size_t r = 0; r < lambda.size(); ++r)
        for (int c = 0; c < lambda[r]; ++c) {
            int hook = (lambda[r] - c - 1) + (cols[std::size_t(c)] - int(r) - 1) + 1;
            out *= P(1) - P::q().pow(unsigned(d * hook));
        }
    return out;
}

std::vector<DegreeRow> gl2_degree_catalog()
{
    P q = P::q();
    P G = (q * q - 1) * (q * q - q);
    return {
        {"R_T", G.divexact(q + 1), (q - 1) * (q - 2) * P(mpq_class(1, 2)), 1},
        {"-R_Ts", G.divexact(q - 1), q * (q - 1) * P(mpq_class(1, 2)), 1},
        {"sigma(1)", G, q - 1, 1},
        {"sigma(St)", G.divexact(q), q - 1, 1},
    };
}

std::vector<DegreeRow> sl2_degree_catalog()
{
    P q = P::q();
    P G = q.pow(3) - q;
    return {
        {"R_T", G.divexact(q + 1), (q - 3) * P(mpq_class(1, 2)), 1},
        {"chi_alpha0", (G * 2).divexact(q + 1), P(2), 1},
        {"-R_Ts", G.divexact(q - 1), (q - 1) * P(mpq_class(1, 2)), 1},
        {"chi_omega0", (G * 2).divexact(q - 1), P(2), 1},
        {"1", G, P(1), 1},
        {"St", G.divexact(q), P(1), 1},
    };
}

std::vector<DegreeRow> gl3_degree_catalog_symbolic()
{
    std::vector<DegreeRow> out;
    for (const Type& t : types_of_size(3)) {
        P r = type_ratio(t, 3);
        if (r.has_half_powers() || !r.is_integer_polynomial())
            throw Error(ErrorKind::NonIntegerCoefficients, "hook ratio for " + t.name() + " is " + r.to_string());
        out.push_back({t.name(), r, type_count(t), 1});
    }
    return out;
}

// Lambda enumeration over exponent groups Z/(q^d - 1) at a virtual q.
std::vector<TwistCount> sl3_twist_census(std::uint64_t q)
{
    if (q % 3 != 1 || q < 4)
        throw Error(ErrorKind::CongruenceViolated, "twist census needs q = 1 mod 3");
    std::vector<TwistCount> out;
    const std::uint64_t n1 = q - 1;
    // orbits of degree exactly d, by canonical (minimal) element
    auto orbits = [&](int d) {
        std::uint64_t M = upow(q, d) - 1;
        std::vector<std::uint64_t> reps;
        for (std::uint64_t g = 0; g < M; ++g) {
            std::uint64_t x = g, best = g;
            int size = 0;
            do {
                x = x * q % M;
                best = std::min(best, x);
                ++size;
            } while (x != g);
            if (size == d && best == g)
                reps.push_back(g);
        }
        return reps;
    };
    auto canon = [&](std::uint64_t g, int d) {
        std::uint64_t M = upow(q, d) - 1;
        std::uint64_t x = g, best = g;
        do {
            x = x * q % M;
            best = std::min(best, x);
        } while (x != g);
        return best;
    };
    std::map<int, std::vector<std::uint64_t>> orb;
    for (int d = 1; d <= 3; ++d)
        orb[d] = orbits(d);

    for (const Type& t : types_of_size(3)) {
        // slots: one entry per orbit chosen, tagged by part index
        std::vector<std::pair<int, int>> slots;  // (d, part index)
        for (std::size_t pi = 0; pi < t.parts.size(); ++pi)
            for (int k = 0; k < t.parts[pi].second; ++k)
                slots.push_back({t.parts[pi].first.d, int(pi)});
        std::map<int, std::uint64_t> hist;
        std::vector<std::uint64_t> chosen(slots.size());
        std::function<void(std::size_t)> rec = [&](std::size_t s) {
            if (s == slots.size()) {
                std::set<std::pair<std::uint64_t, int>> lam;
                for (std::size_t i = 0; i < slots.size(); ++i)
                    lam.insert({chosen[i] * 4 + std::uint64_t(slots[i].first), slots[i].second});
                int stab = 0;
                for (std::uint64_t beta = 0; beta < n1; ++beta) {
                    bool ok = true;
                    for (std::size_t i = 0; i < slots.size() && ok; ++i) {
                        int d = slots[i].first;
                        std::uint64_t M = upow(q, d) - 1;
                        std::uint64_t shifted = (chosen[i] + beta * (M / n1)) % M;
                        ok = lam.count({canon(shifted, d) * 4 + std::uint64_t(d), slots[i].second}) > 0;
                    }
                    stab += ok;
                }
                ++hist[stab];
                return;
            }
            const auto& cand = orb[slots[s].first];
            // same part: strictly increasing; different parts: distinct orbits
            for (std::uint64_t g : cand) {
                bool clash = false;
                for (std::size_t i = 0; i < s; ++i) {
                    if (slots[i].first != slots[s].first)
                        continue;
                    if (chosen[i] == g || (slots[i].second == slots[s].second && chosen[i] > g))
                        clash = true;
                }
                if (clash)
                    continue;
                chosen[s] = g;
                rec(s + 1);
            }
        };
        rec(0);
        for (const auto& [tt, c] : hist)
            out.push_back({t.name(), tt, c});
    }
    return out;
}

std::vector<DegreeRow> sl3_degree_catalog_symbolic()
{
    static const std::vector<DegreeRow> cached = [] {
        std::vector<DegreeRow> gl = gl3_degree_catalog_symbolic();
        // census at virtual q = 1 mod 3, interpolated per (type, t)
        const std::vector<std::uint64_t> nodes{4, 7, 10, 13, 16, 19};
        std::map<std::pair<std::string, int>, std::vector<std::pair<mpq_class, mpq_class>>> pts;
        std::set<std::pair<std::string, int>> keys;
        std::vector<std::vector<TwistCount>> runs;
        for (std::uint64_t q : nodes) {
            runs.push_back(sl3_twist_census(q));
            for (const auto& tc : runs.back())
                keys.insert({tc.type, tc.t});
        }
        for (std::size_t k = 0; k < nodes.size(); ++k)
            for (const auto& key : keys) {
                mpq_class c = 0;
                for (const auto& tc : runs[k])
                    if (tc.type == key.first && tc.t == key.second)
                        c = tc.count;
                pts[key].push_back({mpq_class(nodes[k]), c});
            }
        P q = P::q();
        std::vector<DegreeRow> out;
        for (const DegreeRow& row : gl) {
            P total;
            for (const auto& key : keys) {
                if (key.first != row.type)
                    continue;
                P cnt = interpolate(pts[key], 3);
                total += cnt;
                if (cnt.is_zero())
                    continue;
                P ratio = (row.ratio * P(key.second)).divexact(q - 1);
                out.push_back({row.type, ratio, cnt, key.second});
            }
            if (total != row.count)
                throw Error(ErrorKind::InconsistentPoints, "twist census for " + row.type + " does not add up");
        }
        return out;
    }();
    return cached;
}

std::vector<DegreeValue> evaluate_catalog(const std::vector<DegreeRow>& rows, std::uint64_t q)
{
    std::vector<DegreeValue> out;
    mpq_class qv(q);
    for (const DegreeRow& r : rows) {
        mpq_class ratio = r.ratio.evaluate(qv), count = r.count.evaluate(qv);
        if (ratio.get_den() != 1 || count.get_den() != 1)
            throw Error(ErrorKind::NonIntegerResult, "catalog row " + r.type + " is not integral");
        out.push_back({r.type, ratio.get_num(), count.get_num(), r.t});
    }
    return out;
}

std::vector<DegreeValue> gl3_degree_catalog(std::uint32_t q)
{
    if (q % 3 != 1)
        throw Error(ErrorKind::CongruenceViolated, "GL3 catalog needs q = 1 mod 3, got " + std::to_string(q));
    if (!is_prime_power(q))
        throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
    return evaluate_catalog(gl3_degree_catalog_symbolic(), q);
}

std::vector<DegreeValue> sl3_degree_catalog(std::uint32_t q)
{
    if (q % 3 != 1)
        throw Error(ErrorKind::CongruenceViolated, "SL3 catalog needs q = 1 mod 3, got " + std::to_string(q));
    if (!is_prime_power(q))
        throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
    return evaluate_catalog(sl3_degree_catalog_symbolic(), q);
}

} // namespace charvar
