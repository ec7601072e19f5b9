#include "charvar/repclassify.hpp"

#include "charvar/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace charvar {

namespace {

constexpr std::uint64_t kSearchCap = 2000000000ULL;
constexpr std::uint64_t kNullspaceCap = 2000000ULL;

std::uint64_t sat_pow(std::uint64_t base, int e)
{
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (base != 0 && r > kSearchCap * 16 / base)
            return kSearchCap * 16;
        r *= base;
    }
    return r;
}

void check_work(std::uint64_t work, const std::string& what)
{
    if (work > kSearchCap)
        throw Error(ErrorKind::TooLarge, what + " needs about " + std::to_string(work) + " steps");
}

// Odometer over m coordinates in [0, n).
template <class F>
void for_each_tuple(std::uint32_t n, int m, F body)
{
    std::vector<std::uint32_t> t(std::size_t(m), 0);
    if (m == 0) {
        body(t);
        return;
    }
    while (true) {
        body(t);
        int i = m - 1;
        while (i >= 0 && ++t[std::size_t(i)] == n) {
            t[std::size_t(i)] = 0;
            --i;
        }
        if (i < 0)
            return;
    }
}

// Preimage lists of x -> x^e, grouped by image.
std::vector<std::vector<std::uint32_t>> power_fibres(const MatrixGroup& G, int e)
{
    std::vector<std::vector<std::uint32_t>> out(G.size());
    for (std::uint32_t x = 0; x < G.size(); ++x)
        out[G.pow(x, e)].push_back(x);
    return out;
}

using Vec = std::vector<Elem>;

// Nullspace basis of a row-major system over F.
std::vector<Vec> nullspace(const FieldCtx& F, std::vector<Vec> rows, int cols)
{
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (int c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][std::size_t(c)] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[r], rows[piv]);
        Elem iv = F.inv(rows[r][std::size_t(c)]);
        for (auto& x : rows[r])
            x = F.mul(x, iv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][std::size_t(c)] == 0)
                continue;
            Elem f = rows[i][std::size_t(c)];
            for (int j = 0; j < cols; ++j)
                rows[i][std::size_t(j)] = F.sub(rows[i][std::size_t(j)], F.mul(f, rows[r][std::size_t(j)]));
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(std::size_t(cols), false);
    for (int c : pivot_col)
        is_pivot[std::size_t(c)] = true;
    std::vector<Vec> basis;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[std::size_t(fc)])
            continue;
        Vec v(std::size_t(cols), 0);
        v[std::size_t(fc)] = F.one();
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[std::size_t(pivot_col[i])] = F.neg(rows[i][std::size_t(fc)]);
        basis.push_back(std::move(v));
    }
    return basis;
}

// v and w span at most a line
bool parallel(const FieldCtx& F, const Vec& v, const Vec& w)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (F.mul(v[i], w[j]) != F.mul(v[j], w[i]))
                return false;
    return true;
}

Vec apply(const FieldCtx& F, const std::vector<Elem>& m, int n, const Vec& v)
{
    Vec w(std::size_t(n), 0);
    for (int i = 0; i < n; ++i) {
        Elem s = 0;
        for (int j = 0; j < n; ++j)
            s = F.add(s, F.mul(m[std::size_t(i * n + j)], v[std::size_t(j)]));
        w[std::size_t(i)] = s;
    }
    return w;
}

Vec matvec(const MatOps& ops, const Matrix& m, const Vec& v)
{
    return apply(ops.field(), std::vector<Elem>(m.a.begin(), m.a.begin() + ops.n() * ops.n()), ops.n(), v);
}

bool is_scalar(const Matrix& m)
{
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (i != j ? m.at(i, j) != 0 : m.at(i, i) != m.at(0, 0))
                return false;
    return true;
}

// Roots in F of t^2 - tr t + det.
std::vector<Elem> quadratic_roots(const FieldCtx& F, Elem tr, Elem det)
{
    std::vector<Elem> out;
    for (Elem x = 0; x < F.size(); ++x)
        if (F.add(F.sub(F.mul(x, x), F.mul(tr, x)), det) == 0)
            out.push_back(x);
    return out;
}

// kernel vector of m - lambda, m non-scalar 2x2
Vec eigenline(const FieldCtx& F, const Matrix& m, Elem lambda)
{
    Elem a = F.sub(m.at(0, 0), lambda), b = m.at(0, 1);
    Elem c = m.at(1, 0), d = F.sub(m.at(1, 1), lambda);
    if (a != 0 || b != 0)
        return {b, F.neg(a)};
    return {d, F.neg(c)};
}

bool line_invariant(const MatOps& ops, const std::vector<Matrix>& images, const Vec& v)
{
    for (const auto& m : images)
        if (!parallel(ops.field(), v, matvec(ops, m, v)))
            return false;
    return true;
}

struct Rank2Analysis {
    Reductivity tag = Reductivity::AbsIrred;
    bool all_scalar = false;
    Vec line;  // the unique invariant line when non-reductive
};

Rank2Analysis analyse_rank2(const MatOps& ops, const std::vector<Matrix>& images)
{
    const FieldCtx& F = ops.field();
    Rank2Analysis out;
    const Matrix* M = nullptr;
    for (const auto& m : images)
        if (!is_scalar(m)) {
            M = &m;
            break;
        }
    if (!M) {
        out.tag = Reductivity::ReductiveDecomposable;
        out.all_scalar = true;
        return out;
    }
    std::vector<Elem> roots = quadratic_roots(F, ops.trace(*M), ops.det(*M));
    if (roots.empty()) {
        // eigenlines live over F_{q^2}; they are shared exactly when everything commutes with M
        for (const auto& m : images)
            if (!(ops.mul(m, *M) == ops.mul(*M, m))) {
                out.tag = Reductivity::AbsIrred;
                return out;
            }
        out.tag = Reductivity::IrredNotAbs;
        return out;
    }
    std::vector<Vec> common;
    for (Elem r : roots) {
        Vec v = eigenline(F, *M, r);
        if (line_invariant(ops, images, v))
            common.push_back(v);
    }
    if (common.empty())
        out.tag = Reductivity::AbsIrred;
    else if (common.size() == 1) {
        out.tag = Reductivity::NonReductive;
        out.line = common[0];
    } else
        out.tag = Reductivity::ReductiveDecomposable;
    return out;
}

// Normalised representatives of P^{n-1}(F).
std::vector<Vec> projective_points(const FieldCtx& F, int n)
{
    std::vector<Vec> pts;
    for (int lead = 0; lead < n; ++lead) {
        int free = n - lead - 1;
        for_each_tuple(F.size(), free, [&](const std::vector<std::uint32_t>& t) {
            Vec v(std::size_t(n), 0);
            v[std::size_t(lead)] = F.one();
            for (int i = 0; i < free; ++i)
                v[std::size_t(lead + 1 + i)] = Elem(t[std::size_t(i)]);
            pts.push_back(std::move(v));
        });
    }
    return pts;
}

std::vector<Vec> invariant_lines(const FieldCtx& F, int n, const std::vector<std::vector<Elem>>& mats)
{
    std::vector<Vec> out;
    for (const auto& v : projective_points(F, n)) {
        bool ok = true;
        for (const auto& m : mats)
            if (!parallel(F, v, apply(F, m, n, v))) {
                ok = false;
                break;
            }
        if (ok)
            out.push_back(v);
    }
    return out;
}

std::vector<std::vector<Elem>> embed(const MatOps& ops, const std::vector<Matrix>& images, const std::vector<Elem>* emb,
                                     bool transpose)
{
    int n = ops.n();
    std::vector<std::vector<Elem>> out;
    for (const auto& m : images) {
        std::vector<Elem> e(std::size_t(n * n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Elem x = transpose ? m.at(j, i) : m.at(i, j);
                e[std::size_t(i * n + j)] = emb ? (*emb)[x] : x;
            }
        out.push_back(std::move(e));
    }
    return out;
}

Elem dot(const FieldCtx& F, const Vec& u, const Vec& v)
{
    Elem s = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        s = F.add(s, F.mul(u[i], v[i]));
    return s;
}

std::vector<Elem> charpoly_key(const MatOps& ops, const std::vector<Matrix>& images)
{
    std::vector<Elem> key;
    auto push = [&](const Matrix& m) {
        for (Elem c : ops.charpoly(m))
            key.push_back(c);
    };
    for (const auto& m : images)
        push(m);
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = i + 1; j < images.size(); ++j)
            push(ops.mul(images[i], images[j]));
    if (images.size() >= 2) {
        const Matrix& a = images[0];
        const Matrix& b = images[1];
        push(ops.mul(ops.mul(a, b), ops.mul(ops.inv(a), ops.inv(b))));
    }
    return key;
}

struct KeyHash {
    std::size_t operator()(const std::vector<Elem>& k) const
    {
        std::size_t h = 1469598103934665603ULL;
        for (Elem e : k) {
            h ^= e;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

} // namespace

std::string to_string(Reductivity r)
{
    switch (r) {
    case Reductivity::AbsIrred: return "AbsIrred";
    case Reductivity::IrredNotAbs: return "IrredNotAbs";
    case Reductivity::ReductiveDecomposable: return "ReductiveDecomposable";
    case Reductivity::NonReductive: return "NonReductive";
    }
    return "?";
}

bool is_reductive(Reductivity r) { return r != Reductivity::NonReductive; }

bool satisfies_relator(const GroupFamily& family, const MatOps& ops, const std::vector<Matrix>& images)
{
    if (int(images.size()) != family.generators())
        return false;
    Matrix I = ops.identity();
    switch (family.kind) {
    case GroupFamily::Free: return true;
    case GroupFamily::Orientable: {
        Matrix acc = I;
        for (int i = 0; i < family.g; ++i) {
            const Matrix& a = images[std::size_t(2 * i)];
            const Matrix& b = images[std::size_t(2 * i + 1)];
            acc = ops.mul(acc, ops.mul(ops.mul(a, b), ops.mul(ops.inv(a), ops.inv(b))));
        }
        return acc == I;
    }
    case GroupFamily::NonOrientable: {
        Matrix acc = I;
        for (const auto& a : images)
            acc = ops.mul(acc, ops.mul(a, a));
        return acc == I;
    }
    case GroupFamily::TorusKnot:
        return ops.pow(images[0], family.a) == ops.pow(images[1], family.b);
    }
    return false;
}

void enumerate_reps(const GroupFamily& family, const MatrixGroup& G,
                    const std::function<void(const std::vector<std::uint32_t>&)>& visit, std::uint64_t max_reps)
{
    family.validate();
    const std::uint32_t n = std::uint32_t(G.size());
    std::uint64_t produced = 0;
    std::vector<std::uint32_t> sol(std::size_t(family.generators()));
    auto emit = [&]() {
        if (++produced > max_reps)
            throw Error(ErrorKind::TooLarge, "more than " + std::to_string(max_reps) + " representations");
        visit(sol);
    };

    switch (family.kind) {
    case GroupFamily::Free: {
        std::uint64_t total = sat_pow(n, family.r);
        if (total > max_reps)
            throw Error(ErrorKind::TooLarge, "Hom has " + std::to_string(total) + " elements, cap is " +
                                                 std::to_string(max_reps));
        for_each_tuple(n, family.r, [&](const std::vector<std::uint32_t>& t) {
            sol = t;
            emit();
        });
        return;
    }
    case GroupFamily::Orientable: {
        int g = family.g;
        if (g == 1) {
            check_work(std::uint64_t(n) * n, "commuting pair search");
            for (std::uint32_t a = 0; a < n; ++a)
                for (std::uint32_t b = 0; b < n; ++b)
                    if (G.mul(a, b) == G.mul(b, a)) {
                        sol[0] = a;
                        sol[1] = b;
                        emit();
                    }
            return;
        }
        // last b solves [a_g, b] = z; table of (commutator, b) per a
        check_work(sat_pow(n, 2 * g - 1), "surface relator search");
        std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> table(n);
        for (std::uint32_t a = 0; a < n; ++a) {
            auto& row = table[a];
            row.reserve(n);
            std::uint32_t ai = G.inv(a);
            for (std::uint32_t b = 0; b < n; ++b)
                row.emplace_back(G.mul(G.mul(G.mul(a, b), ai), G.inv(b)), b);
            std::sort(row.begin(), row.end());
        }
        for_each_tuple(n, 2 * g - 1, [&](const std::vector<std::uint32_t>& t) {
            std::uint32_t acc = G.identity_index();
            for (int i = 0; i + 1 < g; ++i) {
                std::uint32_t a = t[std::size_t(2 * i)], b = t[std::size_t(2 * i + 1)];
                acc = G.mul(acc, G.mul(G.mul(G.mul(a, b), G.inv(a)), G.inv(b)));
            }
            std::uint32_t z = G.inv(acc);
            std::uint32_t a = t[std::size_t(2 * g - 2)];
            const auto& row = table[a];
            auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(z, std::uint32_t(0)));
            for (; it != row.end() && it->first == z; ++it) {
                std::copy(t.begin(), t.end(), sol.begin());
                sol.back() = it->second;
                emit();
            }
        });
        return;
    }
    case GroupFamily::NonOrientable: {
        int k = family.k;
        check_work(sat_pow(n, k - 1) + n, "non-orientable relator search");
        auto roots = power_fibres(G, 2);
        for_each_tuple(n, k - 1, [&](const std::vector<std::uint32_t>& t) {
            std::uint32_t acc = G.identity_index();
            for (std::uint32_t x : t)
                acc = G.mul(acc, G.mul(x, x));
            for (std::uint32_t last : roots[G.inv(acc)]) {
                std::copy(t.begin(), t.end(), sol.begin());
                sol.back() = last;
                emit();
            }
        });
        return;
    }
    case GroupFamily::TorusKnot: {
        auto X = power_fibres(G, family.a);
        auto Y = power_fibres(G, family.b);
        for (std::uint32_t z = 0; z < n; ++z)
            for (std::uint32_t x : X[z])
                for (std::uint32_t y : Y[z]) {
                    sol[0] = x;
                    sol[1] = y;
                    emit();
                }
        return;
    }
    }
}

std::vector<Representation> enumerate_reps(const GroupFamily& family, const GroupSpec& spec, std::uint64_t max_reps)
{
    MatrixGroup G(spec);
    std::vector<Representation> out;
    enumerate_reps(
        family, G,
        [&](const std::vector<std::uint32_t>& idx) {
            Representation r{family, spec, {}};
            for (std::uint32_t i : idx)
                r.images.push_back(G.element(i));
            out.push_back(std::move(r));
        },
        max_reps);
    return out;
}

Reductivity classify_images(const MatOps& ops, const std::vector<Matrix>& images)
{
    if (ops.n() == 2)
        return analyse_rank2(ops, images).tag;
    return classify_images_exhaustive(ops, images);
}

Reductivity classify_images_exhaustive(const MatOps& ops, const std::vector<Matrix>& images)
{
    const FieldCtx& F = ops.field();
    int n = ops.n();
    if (n != 2 && n != 3)
        throw Error(ErrorKind::UnsupportedRank, "classification needs n = 2 or 3, got " + std::to_string(n));
    auto lines = invariant_lines(F, n, embed(ops, images, nullptr, false));
    // hyperplanes u.x = 0 are invariant lines of the transposes
    auto planes = invariant_lines(F, n, embed(ops, images, nullptr, true));
    if (lines.empty() && planes.empty()) {
        FieldCtx big(F.p(), F.e(), n);
        std::vector<Elem> emb = F.embedding_into(big);
        auto ext = invariant_lines(big, n, embed(ops, images, &emb, false));
        return ext.empty() ? Reductivity::AbsIrred : Reductivity::IrredNotAbs;
    }
    // semisimple iff every submodule has a complement
    for (const auto& v : lines) {
        bool ok = std::any_of(planes.begin(), planes.end(), [&](const Vec& u) { return dot(F, u, v) != 0; });
        if (!ok)
            return Reductivity::NonReductive;
    }
    for (const auto& u : planes) {
        bool ok = std::any_of(lines.begin(), lines.end(), [&](const Vec& v) { return dot(F, u, v) != 0; });
        if (!ok)
            return Reductivity::NonReductive;
    }
    return Reductivity::ReductiveDecomposable;
}

Reductivity classify_rep(const Representation& rep)
{
    auto [p, e] = prime_power(rep.spec.q);
    FieldCtx F(p, e, 1);
    MatOps ops(F, rep.spec.n);
    return classify_images(ops, rep.images);
}

int rank2_stratum(const MatOps& ops, const std::vector<Matrix>& images)
{
    if (ops.n() != 2)
        throw Error(ErrorKind::UnsupportedRank, "strata indices are defined for n = 2");
    const FieldCtx& F = ops.field();
    Rank2Analysis r = analyse_rank2(ops, images);
    switch (r.tag) {
    case Reductivity::AbsIrred: return 1;
    case Reductivity::IrredNotAbs: return 2;
    case Reductivity::ReductiveDecomposable: return r.all_scalar ? 4 : 3;
    case Reductivity::NonReductive: break;
    }
    // characters on the line and on the quotient
    for (const auto& m : images) {
        Vec w = matvec(ops, m, r.line);
        std::size_t i = r.line[0] != 0 ? 0 : 1;
        Elem lam = F.div(w[i], r.line[i]);
        Elem mu = F.sub(ops.trace(m), lam);
        if (lam != mu)
            return 5;
    }
    return 6;
}

bool conjugate_tuples(const MatOps& ops, const std::vector<Matrix>& a, const std::vector<Matrix>& b, bool sl)
{
    if (a.size() != b.size())
        return false;
    const FieldCtx& F = ops.field();
    int n = ops.n();
    if (a == b && !sl)
        return true;
    // X a_i - b_i X = 0, unknown X row-major
    std::vector<Vec> rows;
    for (std::size_t t = 0; t < a.size(); ++t)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Vec row(std::size_t(n * n), 0);
                for (int k = 0; k < n; ++k) {
                    Elem& x = row[std::size_t(i * n + k)];
                    x = F.add(x, a[t].at(k, j));
                    Elem& y = row[std::size_t(k * n + j)];
                    y = F.sub(y, b[t].at(i, k));
                }
                rows.push_back(std::move(row));
            }
    std::vector<Vec> basis = nullspace(F, rows, n * n);
    if (basis.empty())
        return false;
    std::uint64_t total = sat_pow(F.size(), int(basis.size()));
    if (total > kNullspaceCap)
        throw Error(ErrorKind::TooLarge, "intertwiner space of dimension " + std::to_string(basis.size()));
    std::uint32_t qm1 = F.size() - 1;
    std::uint32_t nth = std::gcd(std::uint32_t(n), qm1);
    bool found = false;
    for_each_tuple(F.size(), int(basis.size()), [&](const std::vector<std::uint32_t>& c) {
        if (found)
            return;
        Matrix X;
        X.n = n;
        for (std::size_t t = 0; t < basis.size(); ++t) {
            if (c[t] == 0)
                continue;
            for (int i = 0; i < n * n; ++i)
                X.a[std::size_t(i)] = F.add(X.a[std::size_t(i)], F.mul(Elem(c[t]), basis[t][std::size_t(i)]));
        }
        Elem d = ops.det(X);
        if (d == 0)
            return;
        // det(cX) = c^n det X, so SL-conjugacy needs det X to be an n-th power
        if (sl && F.discrete_log(d) % nth != 0)
            return;
        found = true;
    });
    return found;
}

ClassCount count_reductive_classes(const GroupFamily& family, const GroupSpec& spec, const ClassifyOptions& opt)
{
    if (spec.n != 2 && spec.n != 3)
        throw Error(ErrorKind::UnsupportedRank, "oracle supports n = 2 and 3");
    MatrixGroup G(spec);
    const MatOps& ops = G.ops();
    ClassCount out;
    std::vector<OrbitRecord> orbits;
    std::unordered_map<std::vector<Elem>, std::vector<std::size_t>, KeyHash> buckets;
    std::vector<Matrix> images(std::size_t(family.generators()));

    enumerate_reps(
        family, G,
        [&](const std::vector<std::uint32_t>& idx) {
            for (std::size_t i = 0; i < idx.size(); ++i)
                images[i] = G.element(idx[i]);
            ++out.hom;
            Reductivity tag = classify_images(ops, images);
            ++out.raw[tag];
            int stratum = spec.n == 2 ? rank2_stratum(ops, images) : 0;
            std::vector<Elem> key = charpoly_key(ops, images);
            key.push_back(Elem(tag));
            key.push_back(Elem(stratum));
            auto& bucket = buckets[key];
            for (std::size_t id : bucket)
                if (conjugate_tuples(ops, orbits[id].images, images, opt.sl_conjugacy)) {
                    ++orbits[id].size;
                    return;
                }
            bucket.push_back(orbits.size());
            orbits.push_back({images, tag, stratum, 1});
        },
        opt.max_reps);

    for (const auto& o : orbits) {
        ++out.orbits[o.tag];
        if (is_reductive(o.tag))
            ++out.total;
        if (spec.n == 2)
            ++out.strata_orbits[o.stratum];
    }
    if (opt.keep_orbits)
        out.orbit_list = std::move(orbits);
    return out;
}

std::string orbit_dump_json(const ClassCount& c, const GroupFamily& family, const GroupSpec& spec, const FieldCtx& F)
{
    nlohmann::json j;
    j["family"] = to_string(family);
    j["group"] = to_string(spec);
    j["total"] = c.total;
    j["hom"] = c.hom;
    nlohmann::json by = nlohmann::json::object();
    for (const auto& [tag, cnt] : c.orbits)
        by[to_string(tag)] = cnt;
    j["by_class"] = by;
    nlohmann::json reps = nlohmann::json::array();
    for (const auto& o : c.orbit_list) {
        if (!is_reductive(o.tag))
            continue;
        nlohmann::json r;
        r["class"] = to_string(o.tag);
        if (o.stratum)
            r["stratum"] = o.stratum;
        r["orbit_size"] = o.size;
        nlohmann::json mats = nlohmann::json::array();
        for (const auto& m : o.images) {
            nlohmann::json rows = nlohmann::json::array();
            for (int i = 0; i < m.n; ++i) {
                nlohmann::json row = nlohmann::json::array();
                for (int k = 0; k < m.n; ++k)
                    row.push_back(F.encoding(m.at(i, k)));
                rows.push_back(row);
            }
            mats.push_back(rows);
        }
        r["images"] = mats;
        reps.push_back(r);
    }
    j["representatives"] = reps;
    return j.dump(2);
}

} // namespace charvar
