#pragma once

#include "charvar/family.hpp"
#include "charvar/matgroup.hpp"
#include "charvar/qpoly.hpp"

#include <gmpxx.h>

#include <functional>
#include <string>
#include <vector>

namespace charvar {

// [m]_x = 1 + x + ... + x^{m-1}; [0] = 0.
QPolynomial q_bracket(int m);
QPolynomial q_bracket(int m, const QPolynomial& x);

struct FamilySummary {
    GroupFamily family;
    // number of homomorphisms Gamma -> Z_j
    std::function<mpz_class(const mpz_class& j)> m;
    // m_j for j given as a polynomial in q; j_even decides gcd(2, j)
    std::function<QPolynomial(const QPolynomial& j, bool j_even)> m_symbolic;
    int b1_trivial = 0;
    // sum over A != 1 of [b1_A]_q, and over A^2 != 1 of [b1_{A^2}]_q, in terms of q, m_{q-1}, m_2
    std::function<QPolynomial(const QPolynomial& q, const QPolynomial& m_q1, const QPolynomial& m_2)> nontrivial_sum;
    std::function<QPolynomial(const QPolynomial& q, const QPolynomial& m_q1, const QPolynomial& m_2)> squares_sum;
    // the same two sums with the symbolic m substituted
    QPolynomial sum_b1_nontrivial_bracket;
    QPolynomial sum_b1_squares_bracket;
};

FamilySummary family_summary(const GroupFamily& family);

// Everything a stratum size depends on. Symbolic inputs carry q as the
// variable; numeric ones carry constants, so one table serves both.
struct StrataInputs {
    QPolynomial q;
    QPolynomial m_q1, m_q21, m_qp1, m_2;  // m_{q-1}, m_{q^2-1}, m_{q+1}, m_2
    QPolynomial m_3, m_q31, m_qq1;        // m_3, m_{q^3-1}, m_{q^2+q+1}
    int b1 = 0;
    QPolynomial sum_nontrivial, sum_squares;
    QPolynomial hom_over_pgl;             // |Hom(Gamma, G)| / |PGL_n|
    QPolynomial x21;                      // |X_2^(1)|, rank 3 only
    int g = 0;
};

struct StrataRow {
    std::string index;  // "8,9" for merged rows
    int multiplicity = 1;
    std::string size_gl, size_sl, stabilizer;
    bool reductive = true;
    std::function<QPolynomial(const StrataInputs&)> gl, sl, stab;
};

struct StrataValue {
    std::string index;
    int multiplicity = 1;
    QPolynomial size, stabilizer;
    bool reductive = true;
};

// Congruence modulus N required by the pipeline (q = 1 mod N; N = 2 means q odd).
std::uint64_t required_modulus(const GroupFamily& family, int rank);
// Throws NotPrime / CongruenceViolated / EvenQ when q is not usable.
void check_admissible(const GroupFamily& family, int rank, std::uint32_t q);

StrataInputs rank2_inputs(const GroupFamily& family, Series series);
StrataInputs rank2_inputs(const GroupFamily& family, Series series, std::uint32_t q);
StrataInputs rank3_inputs(int g, Series series);
StrataInputs rank3_inputs(int g, Series series, std::uint32_t q);

// Rank 2 strata, rows 2..6 (row 1 is solved for).
std::vector<StrataRow> rank2_strata_table(const GroupFamily& family, Series series);
// Rank 3 strata, rows 2..30; merged rows carry multiplicity 2.
std::vector<StrataRow> rank3_strata_table(int g, Series series);

std::vector<StrataValue> instantiate(const std::vector<StrataRow>& rows, Series series, const StrataInputs& in);

// A_{GL_2} / A_{SL_2}, symbolic or at a concrete q.
QPolynomial count_reductive_rank2(const GroupFamily& family, Series series);
mpz_class count_reductive_rank2(const GroupFamily& family, Series series, std::uint32_t q);

// |X_2^(1)| for a surface group.
QPolynomial abs_irred_rank2_count(const GroupFamily& family);
mpz_class abs_irred_rank2_count(const GroupFamily& family, std::uint32_t q);

QPolynomial count_reductive_rank3_surface(int g, Series series);
mpz_class count_reductive_rank3_surface(int g, Series series, std::uint32_t q);

// Pipeline dispatch on rank.
QPolynomial count_reductive(const GroupFamily& family, Series series, int rank);
mpz_class count_reductive(const GroupFamily& family, Series series, int rank, std::uint32_t q);

// Aligned text and JSON dumps; values is optional.
std::string strata_table_text(const std::vector<StrataRow>& rows, Series series,
                              const std::vector<StrataValue>* values = nullptr);
std::string strata_table_json(const std::vector<StrataRow>& rows, Series series,
                              const std::vector<StrataValue>* values = nullptr);

} // namespace charvar
