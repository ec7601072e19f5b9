#pragma once

#include "charvar/finitefield.hpp"

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace charvar {

enum class Series { GL, SL };

struct GroupSpec {
    Series series = Series::GL;
    int n = 2;
    std::uint32_t q = 3;
};

std::string to_string(const GroupSpec& spec);

// q = p^e; throws NotPrime if q is not a prime power.
std::pair<int, int> prime_power(std::uint32_t q);
bool is_prime_power(std::uint32_t q);

mpz_class group_order(const GroupSpec& spec);

// Square matrix over F_q, entries stored as field codes, row-major.
struct Matrix {
    int n = 0;
    std::array<Elem, 9> a{};

    Elem at(int i, int j) const { return a[i * n + j]; }
    Elem& at(int i, int j) { return a[i * n + j]; }
    bool operator==(const Matrix& o) const { return n == o.n && a == o.a; }
};

// Matrix arithmetic over a fixed field.
class MatOps {
public:
    MatOps(const FieldCtx& F, int n) : F_(F), n_(n) {}

    int n() const { return n_; }
    const FieldCtx& field() const { return F_; }
    Matrix identity() const;
    Matrix scalar(Elem c) const;
    Matrix mul(const Matrix& x, const Matrix& y) const;
    Matrix add(const Matrix& x, const Matrix& y) const;
    Matrix sub(const Matrix& x, const Matrix& y) const;
    Matrix inv(const Matrix& x) const;
    Matrix pow(const Matrix& x, std::int64_t k) const;
    Matrix transpose(const Matrix& x) const;
    Elem det(const Matrix& x) const;
    Elem trace(const Matrix& x) const;
    // coefficients c_1..c_n with char poly t^n - c_1 t^{n-1} + c_2 t^{n-2} - ...
    std::vector<Elem> charpoly(const Matrix& x) const;
    int rank(const Matrix& x) const;
    // packed code tuple, first entry most significant
    std::uint64_t pack(const Matrix& x) const;
    Matrix unpack(std::uint64_t key) const;

private:
    const FieldCtx& F_;
    int n_;
};

struct ConjClass {
    Matrix rep;
    std::uint64_t size = 0;
};

// An enumerated matrix group with element indexing and a lazily built class table.
class MatrixGroup {
public:
    explicit MatrixGroup(const GroupSpec& spec, std::uint64_t cap = 100000000ULL);

    const GroupSpec& spec() const { return spec_; }
    const FieldCtx& field() const { return *F_; }
    const MatOps& ops() const { return ops_; }
    std::size_t size() const { return elems_.size(); }
    const Matrix& element(std::size_t i) const { return elems_[i]; }
    const std::vector<Matrix>& elements() const { return elems_; }

    // -1 when x is not in the group
    std::int64_t index_of(const Matrix& x) const;
    std::uint32_t identity_index() const { return identity_; }
    std::uint32_t mul(std::uint32_t i, std::uint32_t j) const;
    std::uint32_t inv(std::uint32_t i) const;
    std::uint32_t pow(std::uint32_t i, std::int64_t k) const;

    const std::vector<ConjClass>& classes() const;
    std::uint32_t class_of_index(std::uint32_t i) const;
    std::uint32_t class_of(const Matrix& x) const;

private:
    void build_classes() const;

    GroupSpec spec_;
    std::unique_ptr<FieldCtx> F_;
    MatOps ops_;
    std::vector<Matrix> elems_;
    std::vector<std::int32_t> dense_;
    std::unordered_map<std::uint64_t, std::uint32_t> sparse_;
    bool use_dense_ = true;
    std::uint32_t identity_ = 0;

    mutable std::vector<ConjClass> classes_;
    mutable std::vector<std::uint32_t> class_id_;
    mutable bool classes_built_ = false;
};

// Visits every element in enumeration order.
void enumerate_group(const GroupSpec& spec, const std::function<void(const Matrix&)>& visit,
                     std::uint64_t cap = 100000000ULL);

std::vector<ConjClass> conjugacy_classes(const GroupSpec& spec);

// Invariant key: char poly plus rank of (x - lambda I) for each F_q eigenvalue.
std::vector<std::uint32_t> invariant_key(const MatOps& ops, const Matrix& x);

} // namespace charvar
