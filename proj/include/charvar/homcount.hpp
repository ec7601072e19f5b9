#pragma once

#include "charvar/family.hpp"
#include "charvar/matgroup.hpp"
#include "charvar/qpoly.hpp"

#include <gmpxx.h>

#include <memory>
#include <vector>

namespace charvar {

// Integer-valued class function on an enumerated group.
struct ClassFunction {
    std::shared_ptr<const MatrixGroup> group;
    std::vector<mpz_class> values;  // indexed by class

    const mpz_class& at_element(std::uint32_t idx) const { return values[group->class_of_index(idx)]; }
    // sum over classes of size * value
    mpz_class total_mass() const;
};

struct BruteOptions {
    std::uint64_t max_search = 1000000000ULL;
    unsigned workers = 1;
};

// |G| as a polynomial in q.
QPolynomial group_order_poly(Series series, int n);

// Character-sum counts at a concrete prime power q.
mpz_class hom_count_surface(const GroupFamily& family, const GroupSpec& spec);
mpz_class hom_count_nonorientable(const GroupFamily& family, const GroupSpec& spec);
mpz_class hom_count_torusknot(const GroupFamily& family, const GroupSpec& spec);
// dispatch on the family kind; Free(r) gives |G|^r
mpz_class hom_count(const GroupFamily& family, const GroupSpec& spec);

// Number of generator tuples satisfying the relator, by enumeration.
mpz_class hom_count_brute(const GroupFamily& family, const GroupSpec& spec, const BruteOptions& opt = {});
mpz_class hom_count_brute(const GroupFamily& family, std::shared_ptr<const MatrixGroup> G,
                          const BruteOptions& opt = {});

// N(z) = #{(a,b) : [a,b] = z}.
ClassFunction commutator_distribution(const GroupSpec& spec, const BruteOptions& opt = {});
ClassFunction commutator_distribution(std::shared_ptr<const MatrixGroup> G, const BruteOptions& opt = {});

// |Hom(Gamma, G)| / |G| as a polynomial in q. Rank 3 only for surfaces.
QPolynomial hom_ratio_symbolic(const GroupFamily& family, Series series, int rank);

// Moduli for the virtual-q census behind the symbolic non-orientable and torus knot counts.
std::uint64_t census_modulus(const GroupFamily& family, Series series);

} // namespace charvar
