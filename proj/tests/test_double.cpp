#include <gtest/gtest.h>

#include "support.hpp"

using namespace liebw;
using liebw::test::P;

namespace {

const Catalog& cat() { return test::catalog(); }

}  // namespace

TEST(Double, MatchesReferenceTables) {
  const DoubleAlgebra sl2 = build_double(cat().bialgebra("sl2-eta"));
  EXPECT_TRUE(test::table_diff(sl2.algebra(), cat().algebra("d-sl2-eta")).empty());
  EXPECT_EQ(sl2.labels(), cat().algebra("d-sl2-eta").labels());
  const DoubleAlgebra iso = build_double(cat().bialgebra("iso11-eta"));
  EXPECT_TRUE(test::table_diff(iso.algebra(), cat().algebra("d-iso11-eta")).empty());
}

TEST(Double, BracketFormulaOnBasis) {
  // [x^i, X_j] = C_jk^i x^k - f_j^{ik} X_k for sl2-eta: [x0, X1] = x2 + eta/2 X1.
  const DoubleAlgebra d = build_double(cat().bialgebra("sl2-eta"));
  const PolyVec v = d.algebra().bracket(unit_vector(6, 3), unit_vector(6, 1));
  EXPECT_EQ(format_vector(v, d.labels()), "1/2*eta*X1 + x2");
}

TEST(Double, PairingIsInvariant) {
  std::mt19937_64 rng(31);
  for (const char* key : {"sl2-eta", "iso11-eta", "so22-twisted"}) {
    const DoubleAlgebra d = build_double(cat().bialgebra(key));
    const LieAlgebra& l = d.algebra();
    for (int trial = 0; trial < 10; ++trial) {
      const PolyVec u = test::random_vector(rng, d.dim()), v = test::random_vector(rng, d.dim()),
                    w = test::random_vector(rng, d.dim());
      ASSERT_EQ(d.pairing(l.bracket(u, v), w) + d.pairing(v, l.bracket(u, w)), PolyExpr()) << key;
    }
  }
}

TEST(Double, CanonicalRMatrix) {
  for (const char* key : {"sl2-eta", "iso11-eta", "sl2-par"}) {
    const DoubleAlgebra d = build_double(cat().bialgebra(key));
    EXPECT_TRUE(is_mcybe(d.algebra(), d.canonical_r())) << key;
    EXPECT_EQ(cocommutator_from_r(d.algebra(), d.canonical_r()), d.canonical_cocomm()) << key;
    const LieBialgebra db = d.as_bialgebra();
    EXPECT_EQ(db.cocomm(), d.canonical_cocomm());
  }
}

TEST(Double, ReconstructsSo22FromSl2) {
  const DoubleAlgebra d = build_double(cat().bialgebra("sl2-eta"));
  const auto& cs = cat().basis_change("csbasis6");
  const LieAlgebra target = cat().algebra("gLambda").substitute(cs.target_substitute);
  EXPECT_EQ(d.algebra().change_basis(cs.change), target);
  EXPECT_EQ(d.canonical_r().change_basis(cs.change), cat().rmatrix("so22.r1.r").r);
}

TEST(Double, ReconstructsSo22FromIso11) {
  const DoubleAlgebra d = build_double(cat().bialgebra("iso11-eta"));
  const auto& cs = cat().basis_change("csbasis7");
  const LieAlgebra target = cat().algebra("gLambda").substitute(cs.target_substitute);
  EXPECT_EQ(d.algebra().substitute(cs.source_substitute).change_basis(cs.change), target);
  const RMatrix twisted_r = cat().rmatrix("so22.twisted.r").r.substitute({{"xi", P("1")}});
  EXPECT_EQ(d.canonical_r().substitute(cs.source_substitute).change_basis(cs.change), twisted_r);
}

TEST(Double, FullWedgeGivesTwiceTheClassicalDoubleR) {
  const DoubleAlgebra d = build_double(cat().bialgebra("sl2-eta"));
  const auto& cs = cat().basis_change("csbasis6");
  Tensor2 twice(6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) twice(i, j) = 2 * d.canonical_r()(i, j);
  const RMatrix r1 = cat().rmatrix("so22.r1.r").r;
  const RMatrix full = RMatrix(twice).change_basis(cs.change);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) ASSERT_EQ(full(i, j), 2 * r1(i, j));
}

class DoubleOfDouble : public ::testing::TestWithParam<const char*> {};

TEST_P(DoubleOfDouble, CrossedBracketsMatchClosedForm) {
  const auto& b = cat().bialgebra(GetParam());
  const DoubleAlgebra dd = double_of_double(b);
  const LieAlgebra formula = iterated_double_formula(b);
  EXPECT_TRUE(test::table_diff(dd.algebra(), formula).empty());
  EXPECT_EQ(dd.labels(), formula.labels());
  EXPECT_EQ(dd.algebra(), build_double(build_double(b).as_bialgebra()).algebra());
}

TEST_P(DoubleOfDouble, FirstFactorIsACoisotropicPoissonSubgroup) {
  const auto& b = cat().bialgebra(GetParam());
  const std::size_t n = b.dim();
  const DoubleAlgebra d = build_double(b);
  const DoubleAlgebra dd = double_of_double(b);
  LagrangianSpec spec;
  for (std::size_t i = 0; i < n; ++i) spec.h_basis.push_back(unit_vector(2 * n, i));
  for (std::size_t i = 0; i < n; ++i) spec.complement.push_back(unit_vector(2 * n, n + i));
  const ClosureReport r = classify(dd, d.as_bialgebra(), spec);
  EXPECT_TRUE(r.lagrangian && r.subalgebra && r.coisotropic && r.poisson_subgroup);

  // l = a + a^perp is a semidirect product of a with itself under ad.
  const LieAlgebra l = lagrangian_bracket_table(dd, spec);
  Tensor3 want(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const PolyExpr& c = b.algebra().c(i, j, k);
        want(i, j, k) = c;
        want(n + i, n + j, n + k) = c;
        want(n + i, j, n + k) = c;
        want(j, n + i, n + k) = -c;
      }
    }
  }
  EXPECT_EQ(l.structure(), want);
  EXPECT_TRUE(is_semidirect(l, {0, 1, 2}, {3, 4, 5}));
}

TEST(DoubleOfTrivialDouble, MatchesClosedForm) {
  const auto& b = cat().bialgebra("sl2-trivial");
  EXPECT_EQ(double_of_double(b).algebra(), iterated_double_formula(b));
}

INSTANTIATE_TEST_SUITE_P(Catalog, DoubleOfDouble, ::testing::Values("sl2-eta", "iso11-eta"));
