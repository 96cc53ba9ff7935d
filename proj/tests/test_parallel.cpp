#include <gtest/gtest.h>

#include "liequiv/catalog.hpp"
#include "liequiv/connection.hpp"
#include "liequiv/equiv.hpp"
#include "liequiv/errors.hpp"
#include "liequiv/parallel.hpp"
#include "oracle.hpp"

using namespace liequiv;

namespace {

struct Instance {
    LieAlgebra alg;
    MetricMatrix s;
    ConnectionForms omega;
};

Instance make(const std::string& name, std::vector<Rational> params) {
    auto [alg, s] = catalog(name, params);
    ConnectionForms omega = levi_civita(alg, s);
    return {std::move(alg), std::move(s), std::move(omega)};
}

}  // namespace

TEST(ParallelVectors, CatalogExamples) {
    const Vector e4 = basis_vector(4, 3);
    EXPECT_EQ(parallel_vectors(make("g4", {1}).omega), std::vector<Vector>{e4});
    EXPECT_EQ(parallel_vectors(make("rh3xr", {1, 0}).omega), std::vector<Vector>{e4});
    EXPECT_TRUE(parallel_vectors(make("rh3xr", {1, Rational(1, 2)}).omega).empty());
    EXPECT_TRUE(parallel_vectors(make("so3", {1, 2, 3}).omega).empty());
    EXPECT_TRUE(parallel_vectors(make("heisenberg3", {}).omega).empty());
    EXPECT_EQ(parallel_vectors(make("abelian", {3}).omega).size(), 3u);
}

TEST(CausalType, Examples) {
    const auto g4 = make("g4", {1});
    const auto g4_class = causal_type(g4.s, basis_vector(4, 3));
    EXPECT_EQ(g4_class.type, CausalType::Null);
    EXPECT_EQ(g4_class.norm, 0);

    const auto rh = causal_type(make("rh3xr", {1, 0}).s, basis_vector(4, 3));
    EXPECT_EQ(rh.type, CausalType::Spacelike);
    EXPECT_EQ(rh.norm, 1);

    const MetricMatrix lor(Matrix::diagonal(std::vector<Rational>{-1, 1}));
    EXPECT_EQ(causal_type(lor, basis_vector(2, 0)).type, CausalType::Timelike);
    EXPECT_EQ(to_string(CausalType::Timelike), "timelike");
    EXPECT_THROW(causal_type(lor, Vector{0, 0}), InvalidArgument);
}

TEST(AffineFamily, Generators) {
    const auto g4 = make("g4", {1});
    const auto fam = affine_family(g4.s, g4.omega, basis_vector(4, 3));
    EXPECT_EQ(fam.metric, g4.s.matrix());
    EXPECT_EQ(fam.dual_square, Matrix::unit(4, 0, 0));
    EXPECT_EQ(fam.member(2, 3), g4.s.matrix() * Rational(2) + Matrix::unit(4, 0, 0) * Rational(3));

    const auto rh = make("rh3xr", {1, 0});
    EXPECT_EQ(affine_family(rh.s, rh.omega, basis_vector(4, 3)).dual_square, Matrix::unit(4, 3, 3));

    const auto rh2 = make("rh3xr", {3, 0});
    EXPECT_EQ(affine_family(rh2.s, rh2.omega, basis_vector(4, 3)).dual_square, Matrix::unit(4, 3, 3));

    const auto ab = make("abelian", {3});
    const auto ab_fam = affine_family(ab.s, ab.omega, basis_vector(3, 0));
    EXPECT_EQ(ab_fam.metric, Matrix::identity(3));
    EXPECT_EQ(ab_fam.dual_square, Matrix::unit(3, 0, 0));
}

TEST(AffineFamily, RejectsNonParallelVector) {
    const auto g4 = make("g4", {1});
    EXPECT_THROW(affine_family(g4.s, g4.omega, basis_vector(4, 0)), InvalidArgument);
    EXPECT_THROW(affine_family(g4.s, g4.omega, Vector(4, Rational(0))), InvalidArgument);
}

TEST(AffineFamily, MembersLieInAffAndKeepVNull) {
    oracle::Gen gen(211);
    const auto g4 = make("g4", {1});
    const Vector v = basis_vector(4, 3);
    const auto fam = affine_family(g4.s, g4.omega, v);
    for (int trial = 0; trial < 20; ++trial) {
        const Rational lambda = gen.nonzero_rational(), mu = gen.small_rational();
        const Matrix member = fam.member(lambda, mu);
        EXPECT_TRUE(aff_residual(member, g4.omega).all_zero());
        const MetricMatrix sbar(member);
        EXPECT_EQ(sbar.inner(v, v), 0);
        EXPECT_EQ(parallel_vectors(levi_civita(g4.alg, sbar)), std::vector<Vector>{v});
    }
}

TEST(OrthogonalComplement, IsOmegaInvariant) {
    for (const auto& [name, params] :
         std::vector<std::pair<std::string, std::vector<Rational>>>{
             {"g4", {1}}, {"g4", {2}}, {"rh3xr", {1, 0}}, {"rh3xr", {5, 0}}, {"abelian", {3}}}) {
        const auto inst = make(name, params);
        for (const auto& v : parallel_vectors(inst.omega)) {
            const auto perp = orthogonal_complement(inst.s, v);
            EXPECT_EQ(perp.size(), inst.s.dim() - 1);
            for (const auto& x : perp) {
                EXPECT_EQ(inst.s.inner(v, x), 0);
                for (const auto& w : inst.omega.omega) EXPECT_EQ(inst.s.inner(v, w * x), 0) << name;
            }
        }
    }
}

TEST(OrthogonalComplement, NullVectorLiesInItsComplement) {
    const auto g4 = make("g4", {1});
    const Vector v = basis_vector(4, 3);
    const auto perp = orthogonal_complement(g4.s, v);
    IncrementalSpan span(4);
    for (const auto& x : perp) span.insert(x);
    EXPECT_TRUE(span.contains(v));
}

TEST(Decomposability, Summaries) {
    const auto split = parallel_report(make("rh3xr", {1, 0}).s, make("rh3xr", {1, 0}).omega);
    EXPECT_TRUE(split.decomposition.split_certified());
    EXPECT_EQ(split.decomposition.summary, "local de Rham split certified by non-null parallel field");
    ASSERT_EQ(split.causal.size(), 1u);
    EXPECT_EQ(split.causal[0].type, CausalType::Spacelike);

    const auto g4 = make("g4", {1});
    const auto null = parallel_report(g4.s, g4.omega);
    EXPECT_FALSE(null.decomposition.split_certified());
    EXPECT_EQ(null.decomposition.summary, "v in v^perp (null parallel field), no split implied");
    EXPECT_EQ(null.gram, Matrix(1, 1));
    ASSERT_EQ(null.families.size(), 1u);
    EXPECT_EQ(null.families[0].dual_square, Matrix::unit(4, 0, 0));

    const auto twisted = make("rh3xr", {1, Rational(1, 2)});
    const auto none = parallel_report(twisted.s, twisted.omega);
    EXPECT_TRUE(none.basis.empty());
    EXPECT_FALSE(none.decomposition.split_certified());
    EXPECT_EQ(none.decomposition.summary, "no parallel-field evidence");
}

TEST(ParallelReport, AbelianEveryVectorParallel) {
    const auto ab = make("abelian", {3});
    const auto report = parallel_report(ab.s, ab.omega);
    EXPECT_EQ(report.basis.size(), 3u);
    EXPECT_EQ(report.gram, Matrix::identity(3));
    EXPECT_TRUE(report.decomposition.split_certified());
}
