#include <gtest/gtest.h>

#include "reference_tables.hpp"

using namespace liebw;
using liebw::test::P;

namespace {

const Catalog& cat() { return test::catalog(); }

LagrangianSpec spec_for(const LieBialgebra& b, const std::vector<std::string>& h,
                        const std::vector<std::string>& complement = {}) {
  const auto& labels = b.algebra().labels();
  LagrangianSpec s;
  for (const auto& v : h) s.h_basis.push_back(parse_vector(v, labels));
  if (complement.empty()) {
    std::vector<PolyVec> cur = s.h_basis;
    for (std::size_t k = 0; k < b.dim() && cur.size() < b.dim(); ++k) {
      cur.push_back(unit_vector(b.dim(), k));
      if (rank(cur) == cur.size()) {
        s.complement.push_back(cur.back());
      } else {
        cur.pop_back();
      }
    }
  } else {
    for (const auto& v : complement) s.complement.push_back(parse_vector(v, labels));
  }
  return s;
}

ClosureReport run(const char* key, const std::vector<std::string>& h) {
  const auto& b = cat().bialgebra(key);
  return classify(build_double(b), b, spec_for(b, h));
}

}  // namespace

TEST(Homogeneous, Sl2ClassificationGrid) {
  const std::vector<const char*> families{"sl2-hyp", "sl2-ell", "sl2-par"};
  const std::vector<std::string> subalgebras{"J12", "P1", "P1 + P2"};
  for (std::size_t f = 0; f < 3; ++f) {
    for (std::size_t h = 0; h < 3; ++h) {
      const ClosureReport r = run(families[f], {subalgebras[h]});
      EXPECT_TRUE(r.lagrangian && r.subalgebra && r.coisotropic) << families[f] << " / " << subalgebras[h];
      EXPECT_EQ(r.poisson_subgroup, f == h) << families[f] << " / " << subalgebras[h];
    }
  }
}

TEST(Homogeneous, LorentzSubalgebraOfSo22) {
  const ClosureReport r1 = run("so22-r1", {"J", "K1", "K2"});
  EXPECT_TRUE(r1.coisotropic);
  EXPECT_TRUE(r1.poisson_subgroup);
  const ClosureReport tw = run("so22-twisted", {"J", "K1", "K2"});
  EXPECT_TRUE(tw.coisotropic);
  EXPECT_FALSE(tw.poisson_subgroup);
  EXPECT_FALSE(tw.violations.empty());
}

TEST(Homogeneous, ThreeDimensionalTables) {
  const auto& hyp = cat().bialgebra("sl2-hyp");
  const LieAlgebra t1 = lagrangian_bracket_table(build_double(hyp), spec_for(hyp, {"J12"}));
  EXPECT_EQ(t1.labels(), test::hyperbolic_table().labels());
  EXPECT_TRUE(test::table_diff(t1, test::hyperbolic_table()).empty());

  const auto& ell = cat().bialgebra("sl2-ell");
  const LieAlgebra t2 = lagrangian_bracket_table(build_double(ell), spec_for(ell, {"P1"}));
  EXPECT_EQ(t2.labels(), test::elliptic_table().labels());
  EXPECT_TRUE(test::table_diff(t2, test::elliptic_table()).empty());

  const auto& par = cat().bialgebra("sl2-par-pm");
  const LieAlgebra t3 = lagrangian_bracket_table(build_double(par), spec_for(par, {"J+"}, {"J3", "J-"}));
  EXPECT_EQ(t3.labels(), test::parabolic_table().labels());
  EXPECT_TRUE(test::table_diff(t3, test::parabolic_table()).empty());
}

TEST(Homogeneous, PoissonSubgroupTableOfAdS3) {
  const auto& b = cat().bialgebra("so22-r1");
  const LieAlgebra t = lagrangian_bracket_table(build_double(b), spec_for(b, {"J", "K1", "K2"}));
  EXPECT_EQ(t.labels(), test::ads3_labels());
  EXPECT_TRUE(test::table_diff(t, test::linear_table()).empty());
  EXPECT_TRUE(is_semidirect(t, {0, 1, 2}, {3, 4, 5}));
}

TEST(Homogeneous, TwistedTableDiffersFromReferenceAtOneEntry) {
  const auto& b = cat().bialgebra("so22-twisted");
  const LieAlgebra t = lagrangian_bracket_table(build_double(b), spec_for(b, {"J", "K1", "K2"}));
  EXPECT_TRUE(test::table_diff(t, test::corrected_twisted_table()).empty());
  const auto diff = test::table_diff(t, test::twisted_table());
  ASSERT_EQ(diff.size(), 1u);
  EXPECT_EQ(diff[0], "[J, p2]: 1/2*J - 1/2*K2 - p1 vs -1/2*J + 1/2*K2");
  EXPECT_FALSE(is_semidirect(t, {0, 1, 2}, {3, 4, 5}));
}

TEST(Homogeneous, ReferenceTwistedTableIsNotALieAlgebra) {
  EXPECT_EQ(test::twisted_table().jacobi_residual().nonzero().size(), 72u);
  EXPECT_TRUE(test::corrected_twisted_table().satisfies_jacobi());
}

TEST(Homogeneous, InvariantPiOnTrivialBialgebraCloses) {
  // delta = 0, h = J3, pi = p J+ ^ J-: an ad(J3)-invariant bivector, so l is a
  // Lagrangian subalgebra that is not coisotropic.
  const auto& b = cat().bialgebra("sl2-trivial");
  LagrangianSpec s = spec_for(b, {"J3"}, {"J+", "J-"});
  s.pi = {{P("0"), P("p")}, {P("-p"), P("0")}};
  const DoubleAlgebra d = build_double(b);
  const ClosureReport r = classify(d, b, s);
  EXPECT_TRUE(r.lagrangian);
  EXPECT_TRUE(r.subalgebra);
  EXPECT_FALSE(r.pi_zero);
  EXPECT_FALSE(r.coisotropic);
  for (const auto& row : r.m_i)
    for (const auto& v : row) EXPECT_TRUE(v[0].is_zero());
  EXPECT_NO_THROW(lagrangian_bracket_table(d, s));
}

TEST(Homogeneous, NonInvariantPiIsNotClosed) {
  const auto& b = cat().bialgebra("so22-r1");
  LagrangianSpec s = spec_for(b, {"J", "K1", "K2"}, {"P0", "P1", "P2"});
  s.pi.assign(3, PolyVec(3));
  s.pi[0][1] = P("p");
  s.pi[1][0] = P("-p");
  const DoubleAlgebra d = build_double(b);
  const ClosureReport r = classify(d, b, s);
  EXPECT_TRUE(r.lagrangian);
  EXPECT_FALSE(r.subalgebra);
  EXPECT_EQ(r.m_i[0][2][0], P("p"));
  EXPECT_EQ(r.m_i[1][2][2], P("-p"));
  EXPECT_THROW(lagrangian_bracket_table(d, s), NotClosed);
}

class MTensorProperty : public ::testing::TestWithParam<const char*> {};

// M^{ab}_i is the h^i component of [t^a + pi^{ae} T_e, t^b + pi^{bd} T_d],
// computed here straight from the double bracket.
TEST_P(MTensorProperty, IsTheDualComponentOfLBrackets) {
  const auto& b = cat().bialgebra(GetParam());
  const DoubleAlgebra d = build_double(b);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    LagrangianSpec s = spec_for(b, {"J", "K1", "K2"}, {"P0", "P1", "P2"});
    s.pi.assign(3, PolyVec(3));
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t c = a + 1; c < 3; ++c) {
        s.pi[a][c] = test::random_rational(rng, 4, 3);
        s.pi[c][a] = -s.pi[a][c];
      }
    const ClosureReport r = classify(d, b, s);
    auto l_vector = [&](std::size_t a) {
      PolyVec v(12);
      v[9 + a] = 1;
      for (std::size_t e = 0; e < 3; ++e) v[3 + e] = s.pi[a][e];
      return v;
    };
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t c = 0; c < 3; ++c) {
        const PolyVec br = d.algebra().bracket(l_vector(a), l_vector(c));
        for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(r.m_i[a][c][i], br[6 + i]) << a << c << i;
      }
  }
}

INSTANTIATE_TEST_SUITE_P(Catalog, MTensorProperty, ::testing::Values("so22-r1", "so22-twisted"));

TEST(Homogeneous, AnnihilatorAndDimensions) {
  const auto& b = cat().bialgebra("so22-r1");
  const DoubleAlgebra d = build_double(b);
  const LagrangianSpec s = spec_for(b, {"J", "K1", "K2"});
  const Subspace hp = annihilator(d, Subspace{6, s.h_basis});
  EXPECT_EQ(hp.dim(), 3u);
  for (const auto& v : hp.vectors) {
    for (const auto& h : s.h_basis) {
      PolyVec hd = h;
      hd.resize(12);
      EXPECT_TRUE(d.pairing(hd, v).is_zero());
    }
  }
  const Subspace l = lagrangian_from_pi(d, s);
  EXPECT_EQ(l.dim(), 6u);
  EXPECT_TRUE(is_lagrangian(d, l));
  EXPECT_TRUE(is_subalgebra(d, l));
  EXPECT_THROW(is_lagrangian(d, hp), WrongDimension);
}

TEST(Homogeneous, InputErrors) {
  const auto& b = cat().bialgebra("sl2-hyp");
  const DoubleAlgebra d = build_double(b);
  LagrangianSpec bad = spec_for(b, {"J12"}, {"J12", "P1"});
  EXPECT_THROW(classify(d, b, bad), BasisNotComplete);
  const LieAlgebra t = lagrangian_bracket_table(d, spec_for(b, {"J12"}));
  EXPECT_THROW(is_semidirect(t, {0, 1}, {1, 2}), BadPartition);
}
