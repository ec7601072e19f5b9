#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charvar/error.hpp"
#include "charvar/homcount.hpp"
#include "charvar/repclassify.hpp"
#include "charvar/strata.hpp"

using namespace charvar;

namespace {

GroupSpec gl2(std::uint32_t q) { return {Series::GL, 2, q}; }
GroupSpec sl2(std::uint32_t q) { return {Series::SL, 2, q}; }

Matrix mat2(const FieldCtx& F, int a, int b, int c, int d)
{
    Matrix m;
    m.n = 2;
    m.at(0, 0) = F.from_int(a);
    m.at(0, 1) = F.from_int(b);
    m.at(1, 0) = F.from_int(c);
    m.at(1, 1) = F.from_int(d);
    return m;
}

} // namespace

TEST_CASE("relator check on hand-made tuples")
{
    FieldCtx F(5, 1);
    MatOps ops(F, 2);
    Matrix s = mat2(F, 0, -1, 1, 0);  // order 4
    Matrix t = mat2(F, 0, -1, 1, 1);  // order 6
    CHECK(satisfies_relator(GroupFamily::nonorientable(1), ops, {ops.scalar(F.minus_one())}));
    CHECK_FALSE(satisfies_relator(GroupFamily::nonorientable(1), ops, {s}));
    // s^2 = t^3 = -1
    CHECK(satisfies_relator(GroupFamily::torusknot(2, 3), ops, {s, t}));
    CHECK(satisfies_relator(GroupFamily::orientable(1), ops, {s, ops.pow(s, 3)}));
    CHECK_FALSE(satisfies_relator(GroupFamily::orientable(1), ops, {s, t}));
}

TEST_CASE("enumeration size equals the hom count and every tuple satisfies the relator")
{
    for (auto fam : {GroupFamily::orientable(1), GroupFamily::nonorientable(2), GroupFamily::nonorientable(3),
                     GroupFamily::torusknot(2, 3), GroupFamily::free(1)}) {
        for (auto spec : {sl2(3), sl2(5), gl2(3)}) {
            MatrixGroup G(spec);
            std::uint64_t n = 0;
            bool ok = true;
            enumerate_reps(fam, G, [&](const std::vector<std::uint32_t>& idx) {
                ++n;
                std::vector<Matrix> im;
                for (auto i : idx)
                    im.push_back(G.element(i));
                ok = ok && satisfies_relator(fam, G.ops(), im);
            });
            CAPTURE(to_string(fam));
            CAPTURE(to_string(spec));
            CHECK(ok);
            CHECK(mpz_class((unsigned long)n) == hom_count_brute(fam, spec));
        }
    }
}

TEST_CASE("orientable genus 2 enumeration")
{
    MatrixGroup G(sl2(3));
    std::uint64_t n = 0;
    enumerate_reps(GroupFamily::orientable(2), G, [&](const std::vector<std::uint32_t>&) { ++n; });
    CHECK(mpz_class((unsigned long)n) == hom_count(GroupFamily::orientable(2), sl2(3)));
}

TEST_CASE("enumeration cap")
{
    CHECK_THROWS_AS(enumerate_reps(GroupFamily::free(3), gl2(5), 1000), Error);
    try {
        enumerate_reps(GroupFamily::torusknot(2, 3), sl2(5), 10);
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TooLarge);
    }
}

TEST_CASE("classification of basic tuples")
{
    FieldCtx F(5, 1);
    MatOps ops(F, 2);
    Matrix I = ops.identity();
    Matrix u = mat2(F, 1, 1, 0, 1);
    Matrix l = mat2(F, 1, 0, 1, 1);
    Matrix d = mat2(F, 2, 0, 0, 3);
    Matrix r = mat2(F, 0, -1, 1, 0);  // x^2 + 1 splits mod 5
    Matrix c = mat2(F, 0, 3, 1, 0);   // x^2 - 3 irreducible mod 5
    CHECK(classify_images(ops, {I, I}) == Reductivity::ReductiveDecomposable);
    CHECK(classify_images(ops, {u}) == Reductivity::NonReductive);
    CHECK(classify_images(ops, {u, l}) == Reductivity::AbsIrred);
    CHECK(classify_images(ops, {d}) == Reductivity::ReductiveDecomposable);
    CHECK(classify_images(ops, {d, u}) == Reductivity::NonReductive);
    CHECK(classify_images(ops, {r}) == Reductivity::ReductiveDecomposable);
    CHECK(classify_images(ops, {c}) == Reductivity::IrredNotAbs);
    CHECK(classify_images(ops, {c, ops.pow(c, 3)}) == Reductivity::IrredNotAbs);
    CHECK(classify_images(ops, {c, u}) == Reductivity::AbsIrred);
    CHECK(rank2_stratum(ops, {I, ops.scalar(F.from_int(2))}) == 4);
    CHECK(rank2_stratum(ops, {d}) == 3);
    CHECK(rank2_stratum(ops, {u}) == 6);
    CHECK(rank2_stratum(ops, {d, u}) == 5);
    CHECK(rank2_stratum(ops, {c}) == 2);
}

TEST_CASE("fast rank 2 classifier agrees with the exhaustive one")
{
    for (std::uint32_t q : {3u, 4u, 5u, 9u}) {
        MatrixGroup G(gl2(q));
        std::size_t n = G.size();
        std::size_t step = n > 200 ? 7 : 1;
        int mism = 0;
        for (std::size_t i = 0; i < n; i += step)
            for (std::size_t j = 0; j < n; j += step * 3) {
                std::vector<Matrix> im{G.element(i), G.element(j)};
                if (classify_images(G.ops(), im) != classify_images_exhaustive(G.ops(), im))
                    ++mism;
            }
        CAPTURE(q);
        CHECK(mism == 0);
    }
}

TEST_CASE("rank 3 classification")
{
    FieldCtx F(3, 1);
    MatOps ops(F, 3);
    Matrix I = ops.identity();
    Matrix J = I;  // single Jordan block
    J.at(0, 1) = F.one();
    J.at(1, 2) = F.one();
    Matrix C;  // companion of x^3 - x - 1, irreducible over F_3
    C.n = 3;
    C.at(1, 0) = F.one();
    C.at(2, 1) = F.one();
    C.at(0, 2) = F.one();
    C.at(1, 2) = F.one();
    Matrix D = I;
    D.at(2, 2) = F.minus_one();
    CHECK(classify_images(ops, {I}) == Reductivity::ReductiveDecomposable);
    CHECK(classify_images(ops, {J}) == Reductivity::NonReductive);
    CHECK(classify_images(ops, {C}) == Reductivity::IrredNotAbs);
    CHECK(classify_images(ops, {D}) == Reductivity::ReductiveDecomposable);
    CHECK(classify_images(ops, {C, J}) == Reductivity::AbsIrred);
    CHECK(classify_images(ops, {J, ops.transpose(J)}) == Reductivity::AbsIrred);
}

TEST_CASE("conjugacy of tuples")
{
    FieldCtx F(7, 1);
    MatOps ops(F, 2);
    Matrix a = mat2(F, 1, 1, 0, 1), b = mat2(F, 2, 0, 3, 5);
    Matrix x = mat2(F, 1, 2, 3, 5);
    Matrix xi = ops.inv(x);
    std::vector<Matrix> t{a, b};
    std::vector<Matrix> s{ops.mul(ops.mul(x, a), xi), ops.mul(ops.mul(x, b), xi)};
    CHECK(conjugate_tuples(ops, t, s));
    CHECK_FALSE(conjugate_tuples(ops, t, {a, ops.transpose(b)}));
    // diag(1,3) conjugates u to u^3; det 3 is a non-square mod 7, and scaling cannot fix that
    Matrix u = mat2(F, 1, 1, 0, 1);
    CHECK(conjugate_tuples(ops, {u}, {ops.pow(u, 3)}));
    CHECK_FALSE(conjugate_tuples(ops, {u}, {ops.pow(u, 3)}, true));
    CHECK(conjugate_tuples(ops, {u}, {ops.pow(u, 2)}, true));
}

TEST_CASE("oracle orbit counts")
{
    struct Case {
        GroupFamily f;
        GroupSpec s;
        std::uint64_t expected;
    };
    std::vector<Case> cases{
        {GroupFamily::free(1), sl2(5), 5},
        {GroupFamily::free(2), sl2(3), 27},
        {GroupFamily::free(2), sl2(5), 125},
        {GroupFamily::nonorientable(2), sl2(5), 13},
        {GroupFamily::nonorientable(2), sl2(9), 25},
        {GroupFamily::nonorientable(2), sl2(13), 37},
        {GroupFamily::nonorientable(3), sl2(5), 94},
        {GroupFamily::orientable(1), sl2(5), 26},
        {GroupFamily::torusknot(2, 3), sl2(13), 24},
    };
    for (const auto& c : cases) {
        ClassCount r = count_reductive_classes(c.f, c.s);
        CAPTURE(to_string(c.f));
        CAPTURE(to_string(c.s));
        CHECK(r.total == c.expected);
        CHECK(mpz_class((unsigned long)r.hom) == hom_count(c.f, c.s));
    }
}

TEST_CASE("oracle matches the strata pipeline for admissible q")
{
    struct Case {
        GroupFamily f;
        Series s;
        std::uint32_t q;
    };
    std::vector<Case> cases{
        {GroupFamily::orientable(1), Series::GL, 3},  {GroupFamily::orientable(1), Series::GL, 5},
        {GroupFamily::orientable(1), Series::SL, 5},  {GroupFamily::nonorientable(2), Series::SL, 5},
        {GroupFamily::nonorientable(2), Series::GL, 5}, {GroupFamily::free(2), Series::GL, 3},
        {GroupFamily::torusknot(2, 3), Series::SL, 13}, {GroupFamily::nonorientable(3), Series::SL, 5},
    };
    for (const auto& c : cases) {
        CAPTURE(to_string(c.f));
        CAPTURE(c.q);
        ClassCount r = count_reductive_classes(c.f, {c.s, 2, c.q});
        CHECK(mpz_class((unsigned long)r.total) == count_reductive_rank2(c.f, c.s, c.q));
    }
}

TEST_CASE("oracle strata sizes and orbit-stabilizer identity")
{
    struct Case {
        GroupFamily f;
        Series s;
        std::uint32_t q;
    };
    for (const auto& c : std::vector<Case>{{GroupFamily::orientable(1), Series::GL, 5},
                                           {GroupFamily::nonorientable(2), Series::SL, 5},
                                           {GroupFamily::torusknot(2, 3), Series::SL, 13}}) {
        CAPTURE(to_string(c.f));
        GroupSpec spec{c.s, 2, c.q};
        ClassifyOptions opt;
        opt.keep_orbits = true;
        ClassCount r = count_reductive_classes(c.f, spec, opt);
        auto vals = instantiate(rank2_strata_table(c.f, c.s), c.s, rank2_inputs(c.f, c.s, c.q));
        for (const auto& v : vals) {
            int i = std::stoi(v.index);
            CAPTURE(i);
            CHECK(v.size.evaluate(0) == mpq_class((unsigned long)r.strata_orbits[i]));
        }
        // orbit size times stabilizer is |PGL_2|
        mpz_class pgl = group_order(gl2(c.q)) / (c.q - 1);
        mpq_class lhs = 0;
        for (const auto& o : r.orbit_list) {
            CHECK(pgl % o.size == 0);
            lhs += mpq_class(1) / mpq_class(pgl / o.size);
        }
        CHECK(lhs == mpq_class(hom_count(c.f, spec)) / mpq_class(pgl));
    }
}

TEST_CASE("GL torus knot (2,3) over F_13")
{
    ClassCount r = count_reductive_classes(GroupFamily::torusknot(2, 3), gl2(13));
    CHECK(r.total == 300);
    CHECK(mpz_class((unsigned long)r.total) == count_reductive_rank2(GroupFamily::torusknot(2, 3), Series::GL, 13));
}

TEST_CASE("SL conjugacy refines GL conjugacy")
{
    ClassifyOptions opt;
    opt.sl_conjugacy = true;
    ClassCount gl = count_reductive_classes(GroupFamily::free(1), sl2(5));
    ClassCount sl = count_reductive_classes(GroupFamily::free(1), sl2(5), opt);
    CHECK(sl.total >= gl.total);
    // the two unipotent classes of SL_2(5) and their negatives split, semisimple classes do not
    CHECK(gl.orbits[Reductivity::NonReductive] == 2);
    CHECK(sl.orbits[Reductivity::NonReductive] == 4);
}

TEST_CASE("raw tags partition Hom and the JSON dump lists reductive orbits")
{
    ClassifyOptions opt;
    opt.keep_orbits = true;
    GroupSpec spec = sl2(5);
    ClassCount r = count_reductive_classes(GroupFamily::nonorientable(2), spec, opt);
    std::uint64_t s = 0;
    for (const auto& [tag, n] : r.raw)
        s += n;
    CHECK(s == r.hom);
    FieldCtx F(5, 1);
    std::string js = orbit_dump_json(r, GroupFamily::nonorientable(2), spec, F);
    CHECK(js.find("\"total\": 13") != std::string::npos);
    CHECK(js.find("\"representatives\"") != std::string::npos);
}

TEST_CASE("rank 3 oracle on a small case")
{
    ClassCount r = count_reductive_classes(GroupFamily::free(1), {Series::GL, 3, 2});
    // GL_3(2) has six classes; the transvection and order-4 classes are not semisimple
    CHECK(r.hom == 168);
    CHECK(r.orbits[Reductivity::AbsIrred] == 0);
    CHECK(r.orbits[Reductivity::IrredNotAbs] == 2);
    CHECK(r.total == 4);
}
