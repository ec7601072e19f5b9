#pragma once

#include "charvar/family.hpp"
#include "charvar/matgroup.hpp"

#include <gmpxx.h>

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace charvar {

enum class Reductivity { AbsIrred, IrredNotAbs, ReductiveDecomposable, NonReductive };

std::string to_string(Reductivity r);
bool is_reductive(Reductivity r);

struct Representation {
    GroupFamily family;
    GroupSpec spec;
    std::vector<Matrix> images;  // one per generator
};

// True when the relator evaluates to the identity on the images.
bool satisfies_relator(const GroupFamily& family, const MatOps& ops, const std::vector<Matrix>& images);

// Streams every solution of the relator once, as element indices into G.
// Throws TooLarge when more than max_reps solutions would be produced.
void enumerate_reps(const GroupFamily& family, const MatrixGroup& G,
                    const std::function<void(const std::vector<std::uint32_t>&)>& visit,
                    std::uint64_t max_reps = 10000000ULL);
std::vector<Representation> enumerate_reps(const GroupFamily& family, const GroupSpec& spec,
                                           std::uint64_t max_reps = 10000000ULL);

Reductivity classify_rep(const Representation& rep);
Reductivity classify_images(const MatOps& ops, const std::vector<Matrix>& images);

// Rank 2 stratum index 1..6 (abs. irreducible, irreducible, A+B, A+A, extensions with A != B, A = B).
int rank2_stratum(const MatOps& ops, const std::vector<Matrix>& images);

// Reference classifier: exhaustive search for invariant lines and hyperplanes over F_q and F_{q^n}.
Reductivity classify_images_exhaustive(const MatOps& ops, const std::vector<Matrix>& images);

// Is there an invertible X with X a_i X^{-1} = b_i for all i? With sl, X must have a
// determinant that some scalar multiple turns into 1.
bool conjugate_tuples(const MatOps& ops, const std::vector<Matrix>& a, const std::vector<Matrix>& b, bool sl = false);

struct ClassifyOptions {
    std::uint64_t max_reps = 10000000ULL;
    // conjugate by SL_n instead of GL_n (diagnostic)
    bool sl_conjugacy = false;
    bool keep_orbits = false;
};

struct OrbitRecord {
    std::vector<Matrix> images;
    Reductivity tag = Reductivity::AbsIrred;
    int stratum = 0;  // rank 2 only
    std::uint64_t size = 0;
};

struct ClassCount {
    std::uint64_t total = 0;  // reductive orbits
    std::map<Reductivity, std::uint64_t> orbits;
    std::map<Reductivity, std::uint64_t> raw;
    std::map<int, std::uint64_t> strata_orbits;  // rank 2 only
    std::uint64_t hom = 0;
    std::vector<OrbitRecord> orbit_list;  // filled when keep_orbits
};

ClassCount count_reductive_classes(const GroupFamily& family, const GroupSpec& spec, const ClassifyOptions& opt = {});

// One representative per reductive orbit, generator images as matrices of field encodings.
std::string orbit_dump_json(const ClassCount& c, const GroupFamily& family, const GroupSpec& spec,
                            const FieldCtx& F);

} // namespace charvar
