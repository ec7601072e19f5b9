#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace charvar {

// Element of Q(zeta_L): sum_k c_k zeta_L^k / den with integer c_k.
// Terms are kept unreduced; equality and rationality go through reduction mod Phi_L.
class CyclotomicValue {
public:
    CyclotomicValue() = default;
    explicit CyclotomicValue(std::uint32_t L, std::int64_t c = 0);

    static CyclotomicValue root(std::uint32_t L, std::int64_t k, std::int64_t c = 1);

    std::uint32_t order() const { return L_; }
    std::int64_t denominator() const { return den_; }
    const std::map<std::uint32_t, std::int64_t>& terms() const { return t_; }

    CyclotomicValue operator-() const;
    CyclotomicValue& operator+=(const CyclotomicValue& o);
    CyclotomicValue& operator-=(const CyclotomicValue& o);
    friend CyclotomicValue operator+(CyclotomicValue a, const CyclotomicValue& b) { return a += b; }
    friend CyclotomicValue operator-(CyclotomicValue a, const CyclotomicValue& b) { return a -= b; }
    friend CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b);
    CyclotomicValue scaled(std::int64_t num, std::int64_t den = 1) const;
    CyclotomicValue conj() const;

    // Coefficients of the canonical representative (degree < phi(L)), over den.
    std::vector<std::int64_t> reduced() const;
    bool is_zero() const;
    bool equals(const CyclotomicValue& o) const { return (*this - o).is_zero(); }
    // Returns true and sets out when the value is rational.
    bool to_rational(mpq_class& out) const;

    // "3/2*ζ168^5 + ζ168^7 - 2"
    std::string to_string() const;

private:
    void check_order(const CyclotomicValue& o) const;
    void tidy();

    std::uint32_t L_ = 1;
    std::int64_t den_ = 1;
    std::map<std::uint32_t, std::int64_t> t_;
};

// Coefficients of the L-th cyclotomic polynomial, ascending.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t L);

} // namespace charvar
