#pragma once

#include "charvar/cyclotomic.hpp"
#include "charvar/matgroup.hpp"
#include "charvar/qpoly.hpp"

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace charvar {

// GL2: RT(i,j), RTs(j), Sigma1(i), SigmaSt(i).
// SL2: RT(i), ChiAlpha0(sign), RTs(j), ChiOmega0(sign), Trivial, Steinberg.
// Exponents: alpha_i(h^k) = zeta_{q-1}^{ik}; omega_j is taken mod q^2-1 for GL2
// and mod q+1 (on mu_{q+1}) for SL2.
enum class CharFamily { RT, RTs, Sigma1, SigmaSt, ChiAlpha0, ChiOmega0, Trivial, Steinberg };

struct CharLabel {
    Series series = Series::GL;
    CharFamily family = CharFamily::Trivial;
    std::int64_t i = 0;
    std::int64_t j = 0;
    int sign = 0;  // +1 / -1 for the split pairs

    bool operator==(const CharLabel& o) const = default;
};

std::string to_string(const CharLabel& c);

// Canonical parameter sets for odd q. q only enters through exponent
// arithmetic, so any odd integer q >= 3 is accepted here.
std::vector<CharLabel> gl2_labels(std::uint64_t q);
std::vector<CharLabel> sl2_labels(std::uint64_t q);
std::uint64_t char_degree(const CharLabel& c, std::uint64_t q);

enum class ClassType { Scalar, Unipotent, Split, Elliptic };

// Class parameters: a, b are discrete logs in F_q, x a discrete log in F_{q^2};
// b_nonsquare marks the SL2 unipotent class with b = y.
struct ClassLabel {
    ClassType type = ClassType::Scalar;
    std::int64_t a = 0, b = 0, x = 0;
    bool b_nonsquare = false;
};

std::string to_string(const ClassLabel& c);

struct CharDatum {
    CharLabel label;
    std::int64_t degree = 0;
    std::vector<CyclotomicValue> values;  // indexed like the group's classes
};

struct CharTable {
    GroupSpec spec;
    std::shared_ptr<const MatrixGroup> group;
    std::vector<ClassLabel> class_labels;
    std::vector<CharDatum> chars;
    std::uint32_t L = 1;

    // one character per line, values keyed by class representative
    std::string dump() const;
};

CharTable gl2_table(std::uint32_t q);
CharTable sl2_table(std::uint32_t q);

// q = 1 mod 4 and mod a; SL2 with a even also needs q = 1 mod 2a
bool fs_closed_admissible(Series series, int a, std::uint64_t q);
// Closed indicator table, throws CongruenceViolated outside fs_closed_admissible.
std::int64_t fs_indicator_closed(const CharLabel& c, int a, std::uint64_t q);
// nu_a from the definition, averaging chi(x^a) over every element.
std::int64_t fs_indicator_brute(const CharTable& t, std::size_t char_index, int a);
std::vector<std::int64_t> fs_indicators_brute(const CharTable& t, int a);

// One row of a degree catalog: ratio = |G|/chi(1), count = number of characters.
struct DegreeRow {
    std::string type;
    QPolynomial ratio;
    QPolynomial count;
    int t = 1;
};

struct DegreeValue {
    std::string type;
    mpz_class ratio;
    mpz_class count;
    int t = 1;
};

std::vector<DegreeRow> gl2_degree_catalog();
std::vector<DegreeRow> sl2_degree_catalog();
std::vector<DegreeRow> gl3_degree_catalog_symbolic();
std::vector<DegreeRow> sl3_degree_catalog_symbolic();
// q = 1 mod 3 required.
std::vector<DegreeValue> gl3_degree_catalog(std::uint32_t q);
std::vector<DegreeValue> sl3_degree_catalog(std::uint32_t q);
std::vector<DegreeValue> evaluate_catalog(const std::vector<DegreeRow>& rows, std::uint64_t q);

// Modified hook polynomial of a partition in q^d (half powers allowed).
QPolynomial hook_polynomial(const std::vector<int>& lambda, int d = 1);

// SL3 twisting census at a virtual q = 1 mod 3: for each type, the number of
// Lambda with stabiliser size t under translation by degree-one characters.
struct TwistCount {
    std::string type;
    int t;
    std::uint64_t count;
};
std::vector<TwistCount> sl3_twist_census(std::uint64_t q);

} // namespace charvar
