#pragma once

#include <cstdint>
#include <vector>

namespace charvar {

// Field element code: 0 is zero, 1 + k is g^k for the context generator g.
using Elem = std::uint32_t;

bool is_prime(std::int64_t n);

// F_{q^d} with q = p^e, stored as Zech-log tables.
class FieldCtx {
public:
    FieldCtx(int p, int e, int d = 1);

    int p() const { return p_; }
    int e() const { return e_; }
    int d() const { return d_; }
    // q = p^e
    std::uint32_t q() const { return q_; }
    // q^d, the number of elements
    std::uint32_t size() const { return size_; }
    std::uint32_t order() const { return size_ - 1; }

    // Monic modulus over F_p, coefficients from x^0 up to x^{e*d}.
    const std::vector<int>& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem generator() const { return order() > 1 ? 2 : 1; }
    Elem minus_one() const { return minus_one_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const { return mul(a, minus_one_); }
    Elem mul(Elem a, Elem b) const
    {
        if (a == 0 || b == 0)
            return 0;
        std::uint32_t k = (a - 1) + (b - 1);
        if (k >= order())
            k -= order();
        return k + 1;
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::int64_t k) const;
    Elem frobenius(Elem a) const;

    std::uint32_t discrete_log(Elem a) const;
    Elem exp(std::int64_t k) const;

    // Coefficients over F_p in the polynomial basis (length e*d).
    std::vector<int> coeffs(Elem a) const;
    Elem from_coeffs(const std::vector<int>& c) const;
    // Integer encoding sum c_i p^i, used for modulus/generator ordering.
    std::uint32_t encoding(Elem a) const { return a == 0 ? 0 : exp_[a - 1]; }
    Elem from_encoding(std::uint32_t v) const { return log_[v]; }
    // The image of the integer n under Z -> F_p.
    Elem from_int(std::int64_t n) const;

    // x lies in the subfield with p^{e*k} elements
    bool in_subfield(Elem a, int k) const;

    // Field embedding of this field into big (same p, degree divisible), as a code table.
    std::vector<Elem> embedding_into(const FieldCtx& big) const;

private:
    int p_, e_, d_;
    std::uint32_t q_, size_;
    std::vector<int> modulus_;
    std::vector<std::uint32_t> exp_;  // k -> encoding of g^k
    std::vector<Elem> log_;           // encoding -> code
    std::vector<Elem> zech_;          // k -> code of 1 + g^k
    Elem minus_one_ = 1;
};

// Value type carrying its context; convenient for tests and small computations.
struct FieldElement {
    const FieldCtx* ctx = nullptr;
    Elem code = 0;

    FieldElement operator+(const FieldElement& o) const { return {ctx, ctx->add(code, o.code)}; }
    FieldElement operator-(const FieldElement& o) const { return {ctx, ctx->sub(code, o.code)}; }
    FieldElement operator*(const FieldElement& o) const { return {ctx, ctx->mul(code, o.code)}; }
    FieldElement operator/(const FieldElement& o) const { return {ctx, ctx->div(code, o.code)}; }
    FieldElement operator-() const { return {ctx, ctx->neg(code)}; }
    bool operator==(const FieldElement& o) const { return code == o.code; }
    bool operator!=(const FieldElement& o) const { return code != o.code; }
};

FieldCtx field_make(int p, int e, int d);
FieldElement frobenius(const FieldElement& x);
std::uint32_t discrete_log(const FieldElement& x);

} // namespace charvar
