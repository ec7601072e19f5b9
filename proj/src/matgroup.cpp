#include "charvar/matgroup.hpp"

#include "charvar/error.hpp"

#include <algorithm>
#include <deque>

namespace charvar {

std::string to_string(const GroupSpec& spec)
{
    return std::string(spec.series == Series::GL ? "GL" : "SL") + std::to_string(spec.n) + "(F_" +
           std::to_string(spec.q) + ")";
}

std::pair<int, int> prime_power(std::uint32_t q)
{
    if (q < 2)
        throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
    std::uint32_t p = 2;
    while (q % p != 0)
        ++p;
    int e = 0;
    std::uint32_t r = q;
    while (r % p == 0) {
        r /= p;
        ++e;
    }
    if (r != 1)
        throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
    return {int(p), e};
}

bool is_prime_power(std::uint32_t q)
{
    try {
        prime_power(q);
        return true;
    } catch (const Error&) {
        return false;
    }
}

mpz_class group_order(const GroupSpec& spec)
{
    mpz_class qn, qi = 1, order = 1;
    mpz_ui_pow_ui(qn.get_mpz_t(), spec.q, spec.n);
    for (int i = 0; i < spec.n; ++i) {
        order *= qn - qi;
        qi *= spec.q;
    }
    if (spec.series == Series::SL)
        order /= (spec.q - 1);
    return order;
}

Matrix MatOps::identity() const
{
    return scalar(F_.one());
}

Matrix MatOps::scalar(Elem c) const
{
    Matrix m;
    m.n = n_;
    for (int i = 0; i < n_; ++i)
        m.at(i, i) = c;
    return m;
}

Matrix MatOps::mul(const Matrix& x, const Matrix& y) const
{
    Matrix r;
    r.n = n_;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            Elem s = 0;
            for (int k = 0; k < n_; ++k)
                s = F_.add(s, F_.mul(x.at(i, k), y.at(k, j)));
            r.at(i, j) = s;
        }
    return r;
}

Matrix MatOps::add(const Matrix& x, const Matrix& y) const
{
    Matrix r;
    r.n = n_;
    for (int i = 0; i < n_ * n_; ++i)
        r.a[i] = F_.add(x.a[i], y.a[i]);
    return r;
}

Matrix MatOps::sub(const Matrix& x, const Matrix& y) const
{
    Matrix r;
    r.n = n_;
    for (int i = 0; i < n_ * n_; ++i)
        r.a[i] = F_.sub(x.a[i], y.a[i]);
    return r;
}

Matrix MatOps::transpose(const Matrix& x) const
{
    Matrix r;
    r.n = n_;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            r.at(i, j) = x.at(j, i);
    return r;
}

Elem MatOps::det(const Matrix& x) const
{
    const FieldCtx& F = F_;
    if (n_ == 1)
        return x.a[0];
    if (n_ == 2)
        return F.sub(F.mul(x.a[0], x.a[3]), F.mul(x.a[1], x.a[2]));
    Elem t0 = F.mul(x.a[0], F.sub(F.mul(x.a[4], x.a[8]), F.mul(x.a[5], x.a[7])));
    Elem t1 = F.mul(x.a[1], F.sub(F.mul(x.a[3], x.a[8]), F.mul(x.a[5], x.a[6])));
    Elem t2 = F.mul(x.a[2], F.sub(F.mul(x.a[3], x.a[7]), F.mul(x.a[4], x.a[6])));
    return F.add(F.sub(t0, t1), t2);
}

Elem MatOps::trace(const Matrix& x) const
{
    Elem s = 0;
    for (int i = 0; i < n_; ++i)
        s = F_.add(s, x.at(i, i));
    return s;
}

std::vector<Elem> MatOps::charpoly(const Matrix& x) const
{
    if (n_ == 1)
        return {x.a[0]};
    if (n_ == 2)
        return {trace(x), det(x)};
    const FieldCtx& F = F_;
    Elem m2 = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            m2 = F.add(m2, F.sub(F.mul(x.at(i, i), x.at(j, j)), F.mul(x.at(i, j), x.at(j, i))));
    return {trace(x), m2, det(x)};
}

Matrix MatOps::inv(const Matrix& x) const
{
    const FieldCtx& F = F_;
    Elem d = det(x);
    if (d == 0)
        throw Error(ErrorKind::ZeroElement, "singular matrix");
    Elem di = F.inv(d);
    Matrix r;
    r.n = n_;
    if (n_ == 1) {
        r.a[0] = di;
    } else if (n_ == 2) {
        r.a[0] = F.mul(x.a[3], di);
        r.a[1] = F.neg(F.mul(x.a[1], di));
        r.a[2] = F.neg(F.mul(x.a[2], di));
        r.a[3] = F.mul(x.a[0], di);
    } else {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                // cofactor of (j, i)
                int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
                Elem c = F.sub(F.mul(x.at(r0, c0), x.at(r1, c1)), F.mul(x.at(r0, c1), x.at(r1, c0)));
                r.at(i, j) = F.mul(c, di);
            }
    }
    return r;
}

Matrix MatOps::pow(const Matrix& x, std::int64_t k) const
{
    Matrix base = k < 0 ? inv(x) : x;
    std::uint64_t e = std::uint64_t(k < 0 ? -k : k);
    Matrix r = identity();
    while (e) {
        if (e & 1)
            r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

int MatOps::rank(const Matrix& x) const
{
    const FieldCtx& F = F_;
    Matrix m = x;
    int rank = 0;
    for (int col = 0; col < n_ && rank < n_; ++col) {
        int piv = -1;
        for (int r = rank; r < n_; ++r)
            if (m.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        for (int c = 0; c < n_; ++c)
            std::swap(m.at(piv, c), m.at(rank, c));
        Elem pinv = F.inv(m.at(rank, col));
        for (int r = 0; r < n_; ++r) {
            if (r == rank || m.at(r, col) == 0)
                continue;
            Elem f = F.mul(m.at(r, col), pinv);
            for (int c = 0; c < n_; ++c)
                m.at(r, c) = F.sub(m.at(r, c), F.mul(f, m.at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

std::uint64_t MatOps::pack(const Matrix& x) const
{
    std::uint64_t key = 0;
    std::uint64_t q = F_.size();
    for (int i = 0; i < n_ * n_; ++i)
        key = key * q + x.a[i];
    return key;
}

Matrix MatOps::unpack(std::uint64_t key) const
{
    Matrix m;
    m.n = n_;
    std::uint64_t q = F_.size();
    for (int i = n_ * n_ - 1; i >= 0; --i) {
        m.a[i] = Elem(key % q);
        key /= q;
    }
    return m;
}

std::vector<std::uint32_t> invariant_key(const MatOps& ops, const Matrix& x)
{
    const FieldCtx& F = ops.field();
    std::vector<std::uint32_t> key;
    for (Elem c : ops.charpoly(x))
        key.push_back(c);
    for (Elem lam = 1; lam < F.size(); ++lam) {
        Matrix d = ops.sub(x, ops.scalar(lam));
        if (ops.det(d) == 0) {
            key.push_back(lam);
            key.push_back(std::uint32_t(ops.rank(d)));
        }
    }
    return key;
}

namespace {

std::uint64_t ipow(std::uint64_t b, int e)
{
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i)
        r *= b;
    return r;
}

void check_spec(const GroupSpec& spec)
{
    if (spec.n < 1 || spec.n > 3)
        throw Error(ErrorKind::UnsupportedRank, "rank must be 1, 2 or 3");
    prime_power(spec.q);
}

} // namespace

void enumerate_group(const GroupSpec& spec, const std::function<void(const Matrix&)>& visit,
                     std::uint64_t cap)
{
    check_spec(spec);
    if (group_order(spec) > mpz_class(std::to_string(cap)))
        throw Error(ErrorKind::TooLarge, to_string(spec) + " exceeds the enumeration cap");
    auto [p, e] = prime_power(spec.q);
    FieldCtx F(p, e, 1);
    MatOps ops(F, spec.n);
    std::uint64_t total = ipow(spec.q, spec.n * spec.n);
    for (std::uint64_t key = 0; key < total; ++key) {
        Matrix m = ops.unpack(key);
        Elem d = ops.det(m);
        if (d == 0)
            continue;
        if (spec.series == Series::SL && d != F.one())
            continue;
        visit(m);
    }
}

MatrixGroup::MatrixGroup(const GroupSpec& spec, std::uint64_t cap)
    : spec_(spec),
      F_([&] {
          check_spec(spec);
          auto [p, e] = prime_power(spec.q);
          return std::make_unique<FieldCtx>(p, e, 1);
      }()),
      ops_(*F_, spec.n)
{
    std::uint64_t total = ipow(spec.q, spec.n * spec.n);
    use_dense_ = total <= (1ULL << 26);
    if (use_dense_)
        dense_.assign(total, -1);
    enumerate_group(
        spec,
        [&](const Matrix& m) {
            std::uint64_t key = ops_.pack(m);
            std::uint32_t idx = std::uint32_t(elems_.size());
            if (use_dense_)
                dense_[key] = std::int32_t(idx);
            else
                sparse_.emplace(key, idx);
            elems_.push_back(m);
        },
        cap);
    identity_ = std::uint32_t(index_of(ops_.identity()));
}

std::int64_t MatrixGroup::index_of(const Matrix& x) const
{
    if (x.n != spec_.n)
        return -1;
    std::uint64_t key = ops_.pack(x);
    if (use_dense_)
        return key < dense_.size() ? dense_[key] : -1;
    auto it = sparse_.find(key);
    return it == sparse_.end() ? -1 : std::int64_t(it->second);
}

std::uint32_t MatrixGroup::mul(std::uint32_t i, std::uint32_t j) const
{
    return std::uint32_t(index_of(ops_.mul(elems_[i], elems_[j])));
}

std::uint32_t MatrixGroup::inv(std::uint32_t i) const
{
    return std::uint32_t(index_of(ops_.inv(elems_[i])));
}

std::uint32_t MatrixGroup::pow(std::uint32_t i, std::int64_t k) const
{
    return std::uint32_t(index_of(ops_.pow(elems_[i], k)));
}

void MatrixGroup::build_classes() const
{
    const FieldCtx& F = *F_;
    int n = spec_.n;
    std::vector<Matrix> gens;
    std::vector<Matrix> gens_inv;
    // transvections over an F_p-basis of F_q
    for (int b = 0; b < F.e(); ++b) {
        std::vector<int> c(F.e(), 0);
        c[b] = 1;
        Elem t = F.from_coeffs(c);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j)
                    continue;
                Matrix m = ops_.identity();
                m.at(i, j) = t;
                gens.push_back(m);
            }
    }
    if (spec_.series == Series::GL) {
        Matrix m = ops_.identity();
        m.at(0, 0) = F.generator();
        gens.push_back(m);
    }
    for (const Matrix& g : gens)
        gens_inv.push_back(ops_.inv(g));

    const std::uint32_t none = ~0u;
    class_id_.assign(elems_.size(), none);
    classes_.clear();
    std::deque<std::uint32_t> queue;
    for (std::uint32_t start = 0; start < elems_.size(); ++start) {
        if (class_id_[start] != none)
            continue;
        std::uint32_t cid = std::uint32_t(classes_.size());
        class_id_[start] = cid;
        queue.push_back(start);
        std::uint64_t count = 0;
        while (!queue.empty()) {
            std::uint32_t cur = queue.front();
            queue.pop_front();
            ++count;
            for (std::size_t g = 0; g < gens.size(); ++g) {
                Matrix y = ops_.mul(ops_.mul(gens[g], elems_[cur]), gens_inv[g]);
                std::uint32_t yi = std::uint32_t(index_of(y));
                if (class_id_[yi] == none) {
                    class_id_[yi] = cid;
                    queue.push_back(yi);
                }
            }
        }
        classes_.push_back({elems_[start], count});
    }
    classes_built_ = true;
}

const std::vector<ConjClass>& MatrixGroup::classes() const
{
    if (!classes_built_)
        build_classes();
    return classes_;
}

std::uint32_t MatrixGroup::class_of_index(std::uint32_t i) const
{
    if (!classes_built_)
        build_classes();
    return class_id_[i];
}

std::uint32_t MatrixGroup::class_of(const Matrix& x) const
{
    std::int64_t i = index_of(x);
    if (i < 0)
        throw Error(ErrorKind::ElementNotInGroup, "matrix is not in " + to_string(spec_));
    return class_of_index(std::uint32_t(i));
}

std::vector<ConjClass> conjugacy_classes(const GroupSpec& spec)
{
    MatrixGroup G(spec);
    return G.classes();
}

} // namespace charvar
