#include <gtest/gtest.h>

#include "support.hpp"

using namespace liebw;
using liebw::test::P;

namespace {

// [[r,r]] = [r12,r13] + [r12,r23] + [r13,r23] summed over pairs of wedge
// terms, using only the vector bracket.
Tensor3 schouten_oracle(const LieAlgebra& l, const RMatrix& r) {
  const std::size_t n = l.dim();
  Tensor3 t(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (r(a, b).is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          if (r(c, d).is_zero()) continue;
          const PolyExpr coef = r(a, b) * r(c, d);
          // [r12, r13]: [X_a, X_c] (x) X_b (x) X_d
          const PolyVec ac = l.bracket(unit_vector(n, a), unit_vector(n, c));
          for (std::size_t i = 0; i < n; ++i) t(i, b, d) += coef * ac[i];
          // [r12, r23]: X_a (x) [X_b, X_c] (x) X_d
          const PolyVec bc = l.bracket(unit_vector(n, b), unit_vector(n, c));
          for (std::size_t j = 0; j < n; ++j) t(a, j, d) += coef * bc[j];
          // [r13, r23]: X_a (x) X_c (x) [X_b, X_d]
          const PolyVec bd = l.bracket(unit_vector(n, b), unit_vector(n, d));
          for (std::size_t k = 0; k < n; ++k) t(a, c, k) += coef * bd[k];
        }
      }
    }
  }
  return t;
}

// delta(X_i) = [X_i (x) 1 + 1 (x) X_i, r].
Tensor3 cocomm_oracle(const LieAlgebra& l, const RMatrix& r) {
  const std::size_t n = l.dim();
  Tensor3 f(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (r(a, b).is_zero()) continue;
        const PolyVec ia = l.bracket(unit_vector(n, i), unit_vector(n, a));
        const PolyVec ib = l.bracket(unit_vector(n, i), unit_vector(n, b));
        for (std::size_t k = 0; k < n; ++k) {
          f(i, k, b) += r(a, b) * ia[k];
          f(i, a, k) += r(a, b) * ib[k];
        }
      }
    }
  }
  return f;
}

const RMatrixPayload& rm(const char* key) { return test::catalog().rmatrix(key); }

}  // namespace

TEST(RMatrix, WedgeConvention) {
  const RMatrix r(3, {{1, 2, P("2*eta")}});
  EXPECT_EQ(r(1, 2), P("2*eta"));
  EXPECT_EQ(r(2, 1), P("-2*eta"));
  EXPECT_THROW(RMatrix(3, {{1, 1, P("1")}}), SymmetricEntry);
  EXPECT_THROW(RMatrix(3, {{0, 3, P("1")}}), IndexOutOfRange);
}

TEST(RMatrix, SchoutenMatchesTensorOracle) {
  for (const char* key : {"sl2.hyperbolic.r", "sl2.elliptic.r.pm", "sl2.parabolic.r", "so22.generic.r", "so22.twisted.r"}) {
    const auto& e = rm(key);
    EXPECT_EQ(schouten(e.algebra, e.r), schouten_oracle(e.algebra, e.r)) << key;
  }
}

TEST(RMatrix, CocommutatorMatchesTensorOracle) {
  for (const char* key : {"sl2.hyperbolic.r", "sl2.elliptic.r", "so22.generic.r", "so22.r1.r"}) {
    const auto& e = rm(key);
    EXPECT_EQ(cocommutator_from_r(e.algebra, e.r).components(), cocomm_oracle(e.algebra, e.r)) << key;
  }
}

TEST(RMatrix, Sl2CocommutatorsInCayleyKleinBasis) {
  // Basis J12, P1, P2. delta(X) = f^{jk} X_j (x) X_k with wedge pairs.
  const auto hyp = cocommutator_from_r(rm("sl2.hyperbolic.r").algebra, rm("sl2.hyperbolic.r").r);
  EXPECT_TRUE(is_zero_vector({hyp(0, 0, 1), hyp(0, 0, 2), hyp(0, 1, 2)}));
  EXPECT_EQ(hyp(1, 1, 0), P("2*eta"));  // delta(P1) = 2 eta P1 ^ J12
  EXPECT_EQ(hyp(2, 2, 0), P("2*eta"));  // delta(P2) = 2 eta P2 ^ J12
  EXPECT_EQ(hyp(1, 0, 1), P("-2*eta"));

  const auto ell = cocommutator_from_r(rm("sl2.elliptic.r").algebra, rm("sl2.elliptic.r").r);
  EXPECT_EQ(ell(0, 0, 1), P("2*z"));  // delta(J12) = 2 z J12 ^ P1
  EXPECT_EQ(ell(2, 2, 1), P("2*z"));  // delta(P2) = 2 z P2 ^ P1
  EXPECT_TRUE(is_zero_vector({ell(1, 0, 1), ell(1, 0, 2), ell(1, 1, 2)}));

  const auto par = cocommutator_from_r(rm("sl2.parabolic.r").algebra, rm("sl2.parabolic.r").r);
  EXPECT_EQ(par(0, 0, 1), P("1"));  // delta(J12) = J12 ^ (P1 + P2)
  EXPECT_EQ(par(0, 0, 2), P("1"));
  EXPECT_EQ(par(1, 1, 2), P("1"));  // delta(P1) = P1 ^ P2
  EXPECT_EQ(par(2, 2, 1), P("1"));  // delta(P2) = P2 ^ P1
}

TEST(RMatrix, YangBaxterVerdicts) {
  EXPECT_TRUE(is_cybe(rm("sl2.parabolic.r").algebra, rm("sl2.parabolic.r").r));
  EXPECT_TRUE(is_cybe(rm("sl2.parabolic.r.pm").algebra, rm("sl2.parabolic.r.pm").r));
  for (const char* key : {"sl2.hyperbolic.r", "sl2.hyperbolic.r.pm", "sl2.elliptic.r", "sl2.elliptic.r.pm"}) {
    EXPECT_FALSE(is_cybe(rm(key).algebra, rm(key).r)) << key;
    EXPECT_TRUE(is_mcybe(rm(key).algebra, rm(key).r)) << key;
  }
  EXPECT_TRUE(is_mcybe(rm("so22.r1.r").algebra, rm("so22.r1.r").r));
  EXPECT_TRUE(is_mcybe(rm("so22.twisted.r").algebra, rm("so22.twisted.r").r));
  EXPECT_FALSE(is_mcybe(rm("so22.generic.r").algebra, rm("so22.generic.r").r));
}

TEST(RMatrix, CarrierIsTriangularOnItsCone) {
  const auto& e = rm("so22.carrier.r");
  const Substitution on{{"a2", P("3")}, {"b2", P("4")}, {"c2", P("5")}};
  const Substitution off{{"a2", P("3")}, {"b2", P("4")}, {"c2", P("6")}};
  EXPECT_TRUE(is_cybe(e.algebra, e.r.substitute(on)));
  EXPECT_FALSE(is_cybe(e.algebra, e.r.substitute(off)));
}

TEST(RMatrix, SolveAffine) {
  const PolyExpr c = P("a^2 - 4*kappa*b^2");
  const auto pt = solve_affine(c, "kappa", {{"a", Rational(2)}, {"b", Rational(1)}});
  EXPECT_EQ(pt.at("kappa"), Rational(1));
  EXPECT_THROW(solve_affine(P("kappa^2 - 1"), "kappa", {}), DomainError);
  EXPECT_THROW(solve_affine(c, "kappa", {{"a", Rational(2)}, {"b", Rational(0)}}), DomainError);
}

TEST(RMatrixProperty, PscFamilyIsModifiedOnVarietyOnly) {
  const auto& e = rm("so22.psc.r");
  ASSERT_TRUE(e.constraint.has_value());
  std::mt19937_64 rng(17);
  int on = 0, off = 0;
  while (on < 10) {
    ExactAssignment p;
    for (const char* v : {"a2", "b2", "c2", "a6"}) p[v] = test::random_rational(rng, 9, 4);
    if (p["a6"] == 0) continue;
    const ExactAssignment q = solve_affine(e.constraint->poly, *e.constraint->solve_for, p);
    ASSERT_TRUE(is_mcybe_at(e.algebra, e.r, q));
    ExactAssignment shifted = q;
    shifted["kappa"] += 1;
    if (!is_mcybe_at(e.algebra, e.r, shifted)) ++off;
    ++on;
  }
  EXPECT_EQ(off, 10);
}

TEST(RMatrixProperty, SchoutenIsQuadraticAndCovariant) {
  std::mt19937_64 rng(23);
  const auto& e = rm("so22.twisted.r");
  const Tensor3 t = schouten(e.algebra, e.r);
  Tensor2 tripled(6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) tripled(i, j) = 3 * e.r(i, j);
  const RMatrix tripled_r{tripled};
  const Tensor3 t3 = schouten(e.algebra, tripled_r);
  for (std::size_t k = 0; k < t.data().size(); ++k) ASSERT_EQ(t3.data()[k], 9 * t.data()[k]);

  for (int trial = 0; trial < 3; ++trial) {
    const BasisChange m(test::random_unimodular(rng, 6));
    ASSERT_TRUE(is_mcybe(e.algebra.change_basis(m), e.r.change_basis(m)));
  }
}
