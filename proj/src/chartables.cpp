#include "charvar/chartables.hpp"

#include "charvar/error.hpp"

#include <sstream>

namespace charvar {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m)
{
    return ((a % m) + m) % m;
}

void require_odd(std::uint64_t q)
{
    if (q % 2 == 0)
        throw Error(ErrorKind::EvenQ, "character tables need odd q, got " + std::to_string(q));
    if (q < 3)
        throw Error(ErrorKind::BadParams, "q must be at least 3");
}

const char* family_name(CharFamily f)
{
    switch (f) {
    case CharFamily::RT: return "R_T";
    case CharFamily::RTs: return "-R_Ts";
    case CharFamily::Sigma1: return "sigma(1)";
    case CharFamily::SigmaSt: return "sigma(St)";
    case CharFamily::ChiAlpha0: return "chi_alpha0";
    case CharFamily::ChiOmega0: return "chi_omega0";
    case CharFamily::Trivial: return "1";
    case CharFamily::Steinberg: return "St";
    }
    return "?";
}

} // namespace

std::string to_string(const CharLabel& c)
{
    std::string s = family_name(c.family);
    bool gl = c.series == Series::GL;
    switch (c.family) {
    case CharFamily::RT:
        s += gl ? "(alpha" + std::to_string(c.i) + ",alpha" + std::to_string(c.j) + ")"
                : "(alpha" + std::to_string(c.i) + ")";
        break;
    case CharFamily::RTs: s += "(omega" + std::to_string(c.j) + ")"; break;
    case CharFamily::Sigma1:
    case CharFamily::SigmaSt: s += "[alpha" + std::to_string(c.i) + "]"; break;
    case CharFamily::ChiAlpha0:
    case CharFamily::ChiOmega0: s += c.sign > 0 ? "+" : "-"; break;
    default: break;
    }
    return s;
}

std::string to_string(const ClassLabel& c)
{
    switch (c.type) {
    case ClassType::Scalar: return "scalar(a=h^" + std::to_string(c.a) + ")";
    case ClassType::Unipotent:
        return "unipotent(a=h^" + std::to_string(c.a) + (c.b_nonsquare ? ",b=y)" : ",b=1)");
    case ClassType::Split: return "split(h^" + std::to_string(c.a) + ",h^" + std::to_string(c.b) + ")";
    case ClassType::Elliptic: return "elliptic(x=g^" + std::to_string(c.x) + ")";
    }
    return "?";
}

std::vector<CharLabel> gl2_labels(std::uint64_t q)
{
    require_odd(q);
    std::int64_t n1 = std::int64_t(q) - 1, n2 = std::int64_t(q * q) - 1;
    std::vector<CharLabel> out;
    for (std::int64_t i = 0; i < n1; ++i)
        for (std::int64_t j = i + 1; j < n1; ++j)
            out.push_back({Series::GL, CharFamily::RT, i, j, 0});
    for (std::int64_t j = 0; j < n2; ++j) {
        std::int64_t jq = mod(j * std::int64_t(q), n2);
        if (jq == j || jq < j)
            continue;
        out.push_back({Series::GL, CharFamily::RTs, 0, j, 0});
    }
    for (std::int64_t i = 0; i < n1; ++i)
        out.push_back({Series::GL, CharFamily::Sigma1, i, 0, 0});
    for (std::int64_t i = 0; i < n1; ++i)
        out.push_back({Series::GL, CharFamily::SigmaSt, i, 0, 0});
    return out;
}

std::vector<CharLabel> sl2_labels(std::uint64_t q)
{
    require_odd(q);
    std::int64_t n1 = std::int64_t(q) - 1, np = std::int64_t(q) + 1;
    std::vector<CharLabel> out;
    for (std::int64_t i = 1; 2 * i < n1; ++i)
        out.push_back({Series::SL, CharFamily::RT, i, 0, 0});
    out.push_back({Series::SL, CharFamily::ChiAlpha0, n1 / 2, 0, +1});
    out.push_back({Series::SL, CharFamily::ChiAlpha0, n1 / 2, 0, -1});
    for (std::int64_t j = 1; 2 * j < np; ++j)
        out.push_back({Series::SL, CharFamily::RTs, 0, j, 0});
    out.push_back({Series::SL, CharFamily::ChiOmega0, 0, np / 2, +1});
    out.push_back({Series::SL, CharFamily::ChiOmega0, 0, np / 2, -1});
    out.push_back({Series::SL, CharFamily::Trivial, 0, 0, 0});
    out.push_back({Series::SL, CharFamily::Steinberg, 0, 0, 0});
    return out;
}

std::uint64_t char_degree(const CharLabel& c, std::uint64_t q)
{
    switch (c.family) {
    case CharFamily::RT: return q + 1;
    case CharFamily::RTs: return q - 1;
    case CharFamily::Sigma1: return 1;
    case CharFamily::SigmaSt: return q;
    case CharFamily::ChiAlpha0: return (q + 1) / 2;
    case CharFamily::ChiOmega0: return (q - 1) / 2;
    case CharFamily::Trivial: return 1;
    case CharFamily::Steinberg: return q;
    }
    return 0;
}

namespace {

struct TableBuilder {
    std::uint32_t q;
    Series series;
    std::shared_ptr<MatrixGroup> G;
    const FieldCtx* Fq = nullptr;
    std::unique_ptr<FieldCtx> F2;
    std::vector<Elem> emb;      // F_q code -> F_{q^2} code
    std::vector<Elem> unemb;    // F_{q^2} code -> F_q code (subfield only)
    std::uint32_t L = 1;
    std::int64_t n1 = 0, n2 = 0;

    TableBuilder(std::uint32_t q_, Series s) : q(q_), series(s)
    {
        require_odd(q);
        G = std::make_shared<MatrixGroup>(GroupSpec{s, 2, q});
        Fq = &G->field();
        F2 = std::make_unique<FieldCtx>(Fq->p(), Fq->e(), 2);
        emb = Fq->embedding_into(*F2);
        unemb.assign(F2->size(), 0);
        for (Elem a = 1; a < Fq->size(); ++a)
            unemb[emb[a]] = a;
        n1 = q - 1;
        n2 = std::int64_t(q) * q - 1;
        L = std::uint32_t(n2);
        if (s == Series::SL)
            L *= std::uint32_t(Fq->p());
    }

    std::int64_t log_q(Elem a) const { return Fq->discrete_log(a); }
    std::int64_t log_2(Elem a) const { return F2->discrete_log(a); }

    ClassLabel label(const Matrix& M) const
    {
        const FieldCtx& F = *Fq;
        const MatOps& ops = G->ops();
        Elem tr = ops.trace(M), det = ops.det(M);
        Elem two = F.from_int(2), four = F.from_int(4);
        Elem disc = F.sub(F.mul(tr, tr), F.mul(four, det));
        ClassLabel c;
        if (disc == 0) {
            Elem a = F.div(tr, two);
            c.a = log_q(a);
            if (M == ops.scalar(a)) {
                c.type = ClassType::Scalar;
            } else {
                c.type = ClassType::Unipotent;
                Matrix N = ops.sub(M, ops.scalar(a));
                Elem b = N.at(0, 1) != 0 ? N.at(0, 1) : F.neg(N.at(1, 0));
                c.b_nonsquare = log_q(b) % 2 == 1;
            }
            return c;
        }
        std::int64_t ld = log_q(disc);
        if (ld % 2 == 0) {
            Elem r = F.exp(ld / 2);
            c.type = ClassType::Split;
            c.a = log_q(F.div(F.add(tr, r), two));
            c.b = log_q(F.div(F.sub(tr, r), two));
            return c;
        }
        const FieldCtx& E = *F2;
        std::int64_t ld2 = log_2(emb[disc]);
        Elem r = E.exp(ld2 / 2);
        Elem x = E.div(E.add(emb[tr], r), emb[two]);
        c.type = ClassType::Elliptic;
        c.x = log_2(x);
        return c;
    }

    // zeta_{q-1}^{i * k}
    CyclotomicValue alpha(std::int64_t i, std::int64_t k) const
    {
        return CyclotomicValue::root(L, mod(i * k, n1) * (L / n1));
    }
    // zeta_{q^2-1}^{j * k}
    CyclotomicValue omega(std::int64_t j, std::int64_t k) const
    {
        return CyclotomicValue::root(L, mod(j * k, n2) * (L / n2));
    }
    // omega_j on mu_{q+1}; k is a log in F_{q^2} divisible by q-1
    CyclotomicValue omega_mu(std::int64_t j, std::int64_t k) const
    {
        std::int64_t np = q + 1;
        return CyclotomicValue::root(L, mod(j * (k / n1), np) * (L / np));
    }
    std::int64_t scalar_log2(std::int64_t a) const { return log_2(emb[Fq->exp(a)]); }
    std::int64_t norm_log(std::int64_t x) const
    {
        Elem n = F2->exp(x * (std::int64_t(q) + 1));
        return log_q(unemb[n]);
    }

    // sqrt(alpha0(-1) q) inside Q(zeta_L)
    CyclotomicValue sqrt_term() const
    {
        int p = Fq->p(), e = Fq->e();
        std::int64_t pe = 1;
        for (int i = 0; i < e / 2; ++i)
            pe *= p;
        if (e % 2 == 0)
            return CyclotomicValue(L, pe);
        CyclotomicValue G(L);
        for (int t = 1; t < p; ++t) {
            int leg = 1;
            // Euler criterion
            long long r = 1, b = t;
            for (int k = (p - 1) / 2; k > 0; k >>= 1) {
                if (k & 1)
                    r = r * b % p;
                b = b * b % p;
            }
            leg = r == 1 ? 1 : -1;
            G += CyclotomicValue::root(L, std::int64_t(t) * (L / p), leg);
        }
        return G.scaled(pe);
    }
};

CharTable finish(TableBuilder& B)
{
    CharTable t;
    t.spec = B.G->spec();
    t.group = B.G;
    t.L = B.L;
    for (const auto& c : B.G->classes())
        t.class_labels.push_back(B.label(c.rep));
    return t;
}

} // namespace

CharTable gl2_table(std::uint32_t q)
{
    TableBuilder B(q, Series::GL);
    CharTable t = finish(B);
    std::uint32_t L = B.L;
    std::int64_t qq = q;
    for (const CharLabel& lab : gl2_labels(q)) {
        CharDatum d;
        d.label = lab;
        d.degree = std::int64_t(char_degree(lab, q));
        for (const ClassLabel& c : t.class_labels) {
            CyclotomicValue v(L);
            switch (lab.family) {
            case CharFamily::RT: {
                std::int64_t i = lab.i, j = lab.j;
                if (c.type == ClassType::Scalar)
                    v = (B.alpha(i, c.a) * B.alpha(j, c.a)).scaled(qq + 1);
                else if (c.type == ClassType::Unipotent)
                    v = B.alpha(i, c.a) * B.alpha(j, c.a);
                else if (c.type == ClassType::Split)
                    v = B.alpha(i, c.a) * B.alpha(j, c.b) + B.alpha(i, c.b) * B.alpha(j, c.a);
                break;
            }
            case CharFamily::RTs: {
                std::int64_t j = lab.j;
                if (c.type == ClassType::Scalar)
                    v = B.omega(j, B.scalar_log2(c.a)).scaled(qq - 1);
                else if (c.type == ClassType::Unipotent)
                    v = -B.omega(j, B.scalar_log2(c.a));
                else if (c.type == ClassType::Elliptic)
                    v = -(B.omega(j, c.x) + B.omega(j, c.x * qq));
                break;
            }
            case CharFamily::Sigma1:
            case CharFamily::SigmaSt: {
                bool st = lab.family == CharFamily::SigmaSt;
                std::int64_t i = lab.i;
                if (c.type == ClassType::Scalar)
                    v = B.alpha(i, 2 * c.a).scaled(st ? qq : 1);
                else if (c.type == ClassType::Unipotent)
                    v = st ? CyclotomicValue(L) : B.alpha(i, 2 * c.a);
                else if (c.type == ClassType::Split)
                    v = B.alpha(i, c.a + c.b);
                else
                    v = B.alpha(i, B.norm_log(c.x)).scaled(st ? -1 : 1);
                break;
            }
            default: throw Error(ErrorKind::MissingTable, "unexpected GL2 character family");
            }
            d.values.push_back(v);
        }
        t.chars.push_back(std::move(d));
    }
    return t;
}

CharTable sl2_table(std::uint32_t q)
{
    TableBuilder B(q, Series::SL);
    CharTable t = finish(B);
    std::uint32_t L = B.L;
    std::int64_t qq = q;
    std::int64_t half = B.n1 / 2;
    CyclotomicValue root = B.sqrt_term();
    for (const CharLabel& lab : sl2_labels(q)) {
        CharDatum d;
        d.label = lab;
        d.degree = std::int64_t(char_degree(lab, q));
        for (const ClassLabel& c : t.class_labels) {
            CyclotomicValue v(L);
            // alpha0(a) for central a, phi = alpha0(ab) sqrt(alpha0(-1) q)
            auto phi = [&] {
                int s = ((c.a % 2 == 1) != c.b_nonsquare) ? -1 : 1;
                return root.scaled(s);
            };
            switch (lab.family) {
            case CharFamily::RT:
                if (c.type == ClassType::Scalar)
                    v = B.alpha(lab.i, c.a).scaled(qq + 1);
                else if (c.type == ClassType::Unipotent)
                    v = B.alpha(lab.i, c.a);
                else if (c.type == ClassType::Split)
                    v = B.alpha(lab.i, c.a) + B.alpha(lab.i, -c.a);
                break;
            case CharFamily::ChiAlpha0:
                if (c.type == ClassType::Scalar)
                    v = B.alpha(half, c.a).scaled(qq + 1, 2);
                else if (c.type == ClassType::Unipotent)
                    v = (B.alpha(half, c.a) * (CyclotomicValue(L, 1) + phi().scaled(lab.sign))).scaled(1, 2);
                else if (c.type == ClassType::Split)
                    v = B.alpha(half, c.a);
                break;
            case CharFamily::RTs:
                if (c.type == ClassType::Scalar)
                    v = B.omega_mu(lab.j, B.scalar_log2(c.a)).scaled(qq - 1);
                else if (c.type == ClassType::Unipotent)
                    v = -B.omega_mu(lab.j, B.scalar_log2(c.a));
                else if (c.type == ClassType::Elliptic)
                    v = -(B.omega_mu(lab.j, c.x) + B.omega_mu(lab.j, c.x * qq));
                break;
            case CharFamily::ChiOmega0:
                if (c.type == ClassType::Scalar)
                    v = B.omega_mu(lab.j, B.scalar_log2(c.a)).scaled(qq - 1, 2);
                else if (c.type == ClassType::Unipotent)
                    v = (B.omega_mu(lab.j, B.scalar_log2(c.a)) *
                         (CyclotomicValue(L, -1) + phi().scaled(lab.sign)))
                            .scaled(1, 2);
                else if (c.type == ClassType::Elliptic)
                    v = -B.omega_mu(lab.j, c.x);
                break;
            case CharFamily::Trivial: v = CyclotomicValue(L, 1); break;
            case CharFamily::Steinberg:
                if (c.type == ClassType::Scalar)
                    v = CyclotomicValue(L, qq);
                else if (c.type == ClassType::Split)
                    v = CyclotomicValue(L, 1);
                else if (c.type == ClassType::Elliptic)
                    v = CyclotomicValue(L, -1);
                break;
            default: throw Error(ErrorKind::MissingTable, "unexpected SL2 character family");
            }
            d.values.push_back(v);
        }
        t.chars.push_back(std::move(d));
    }
    return t;
}

std::string CharTable::dump() const
{
    std::ostringstream os;
    const FieldCtx& F = group->field();
    auto rep_str = [&](const Matrix& m) {
        std::string s = "[";
        for (int i = 0; i < m.n; ++i) {
            s += i ? ";" : "";
            for (int j = 0; j < m.n; ++j) {
                s += j ? "," : "";
                s += std::to_string(F.encoding(m.at(i, j)));
            }
        }
        return s + "]";
    };
    os << to_string(spec) << ": " << chars.size() << " characters, " << class_labels.size() << " classes\n";
    for (const CharDatum& d : chars) {
        os << to_string(d.label) << " deg=" << d.degree << ":";
        for (std::size_t c = 0; c < d.values.size(); ++c)
            os << (c ? "; " : " ") << rep_str(group->classes()[c].rep) << " -> " << d.values[c].to_string();
        os << "\n";
    }
    return os.str();
}

bool fs_closed_admissible(Series series, int a, std::uint64_t q)
{
    if (a < 1)
        return false;
    std::uint64_t m = std::uint64_t(a);
    if (series == Series::SL && a % 2 == 0)
        m *= 2;
    return q % 4 == 1 && q % m == 1 % m;
}

std::int64_t fs_indicator_closed(const CharLabel& c, int a, std::uint64_t q)
{
    if (a < 1)
        throw Error(ErrorKind::BadParams, "indicator order must be positive");
    if (!fs_closed_admissible(c.series, a, q))
        throw Error(ErrorKind::CongruenceViolated,
                    std::string(c.series == Series::SL ? "SL2" : "GL2") + " indicator table with a = " +
                        std::to_string(a) + " does not cover q = " + std::to_string(q));
    std::int64_t n1 = std::int64_t(q) - 1, n2 = std::int64_t(q * q) - 1, qq = std::int64_t(q);
    auto d1 = [&](std::int64_t k) { return std::int64_t(mod(k, n1) == 0); };
    auto d2 = [&](std::int64_t k) { return std::int64_t(mod(k, n2) == 0); };
    bool even = a % 2 == 0;
    std::int64_t A = a;
    if (c.series == Series::GL) {
        switch (c.family) {
        case CharFamily::RT:
            if (even)
                return d1(c.i * A) * d1(c.j * A) + d1((c.i + c.j) * (A / 2)) + (A - 2) / 2 * d1((c.i + c.j) * A);
            return d1(c.i * A) * d1(c.j * A) + (A - 1) / 2 * d1((c.i + c.j) * A);
        case CharFamily::RTs:
            if (even)
                return -d2(c.j * A) + d2(c.j * (qq + 1) * (A / 2)) + (A - 2) / 2 * d2(c.j * (qq + 1) * A);
            return -d2(c.j * A) + (A - 1) / 2 * d2(c.j * (qq + 1) * A);
        case CharFamily::Sigma1: return d1(c.i * A);
        case CharFamily::SigmaSt:
            if (even)
                return d1(c.i * A) + (A - 2) / 2 * d1(2 * c.i * A);
            return (A - 1) / 2 * d1(2 * c.i * A);
        default: break;
        }
        throw Error(ErrorKind::MissingTable, "no GL2 indicator for " + to_string(c));
    }
    auto sgn = [](std::int64_t k) { return std::int64_t(k % 2 == 0 ? 1 : -1); };
    switch (c.family) {
    case CharFamily::RT:
        if (even)
            return d1(c.i * A) - 1 + A / 2 * (1 + sgn(c.i));
        return d1(c.i * A) + (A - 1) / 2 * (1 + sgn(c.i));
    case CharFamily::ChiAlpha0: return even ? A / 2 : (A - 1) / 2;
    case CharFamily::RTs:
        if (even)
            return -1 + A / 2 * (1 + sgn(c.j));
        return (A - 1) / 2 * (1 + sgn(c.j));
    case CharFamily::ChiOmega0: return even ? -1 : 0;
    case CharFamily::Trivial: return 1;
    case CharFamily::Steinberg: return A - 1;
    default: break;
    }
    throw Error(ErrorKind::MissingTable, "no SL2 indicator for " + to_string(c));
}

std::vector<std::int64_t> fs_indicators_brute(const CharTable& t, int a)
{
    if (a < 1)
        throw Error(ErrorKind::BadParams, "indicator order must be positive");
    const MatrixGroup& G = *t.group;
    std::vector<std::int64_t> count(G.classes().size(), 0);
    for (std::uint32_t x = 0; x < G.size(); ++x)
        ++count[G.class_of_index(G.pow(x, a))];
    std::vector<std::int64_t> out;
    std::int64_t order = std::int64_t(G.size());
    for (const CharDatum& d : t.chars) {
        CyclotomicValue s(t.L);
        for (std::size_t c = 0; c < count.size(); ++c)
            if (count[c])
                s += d.values[c].scaled(count[c]);
        mpq_class r;
        if (!s.to_rational(r))
            throw Error(ErrorKind::NonIntegerResult, "indicator of " + to_string(d.label) + " is irrational");
        r /= order;
        if (r.get_den() != 1)
            throw Error(ErrorKind::NonIntegerResult,
                        "indicator of " + to_string(d.label) + " is " + r.get_str());
        out.push_back(r.get_num().get_si());
    }
    return out;
}

std::int64_t fs_indicator_brute(const CharTable& t, std::size_t char_index, int a)
{
    if (char_index >= t.chars.size())
        throw Error(ErrorKind::BadParams, "character index out of range");
    return fs_indicators_brute(t, a)[char_index];
}

} // namespace charvar
