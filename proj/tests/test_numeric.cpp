#include <gtest/gtest.h>

#include "reference_tables.hpp"

using namespace liebw;

namespace {

const Catalog& cat() { return test::catalog(); }

// Coefficient of p_c in [p_a, p_b] of a six-dimensional Lagrangian table.
double p_block(const LieAlgebra& t, std::size_t a, std::size_t b, std::size_t c) {
  return to_double(*t.c(3 + a, 3 + b, 3 + c).constant_value());
}

LieAlgebra lorentz_table(const char* key) {
  const auto& b = cat().bialgebra(key);
  LagrangianSpec s;
  for (std::size_t i = 0; i < 6; ++i) (i < 3 ? s.h_basis : s.complement).push_back(unit_vector(6, i));
  return lagrangian_bracket_table(build_double(b), s);
}

}  // namespace

TEST(Brackets, LibraryAndErrors) {
  EXPECT_EQ(bracket_library().size(), 8u);
  EXPECT_THROW(bracket_fn("nope"), UnknownBracket);
  EXPECT_THROW(closed_form("hyp-CK", 0, 1, {ChartId::PM, Eigen::Vector3d::Zero()}, {{"eta", 1.0}}), WrongChart);
  EXPECT_THROW(closed_form("hyp-CK", 0, 1, {ChartId::CK, Eigen::Vector3d::Zero()}, {}), UnassignedParameter);
  EXPECT_THROW(linear_target("hyp-CK", {}), UnknownBracket);
}

TEST(Brackets, ReferenceFormulasAtAPoint) {
  const double eta = 0.7, z = 0.35, th = 0.3, a1 = -0.4, a2 = 0.6;
  const ChartPoint ck{ChartId::CK, {th, a1, a2}};
  EXPECT_NEAR(closed_form("hyp-CK", 0, 1, ck, {{"eta", eta}}), -2 * eta * std::sin(a1) / std::cosh(a2), 1e-15);
  EXPECT_NEAR(closed_form("ell-CK", 0, 2, ck, {{"z", z}}), -2 * z * (1 / std::cosh(a2) - std::cosh(th)), 1e-15);
  EXPECT_NEAR(closed_form("par-CK", 1, 2, ck, {}), std::sin(a1) - std::tanh(a2), 1e-15);
  const double ap = 0.2, am = -0.5, chi = 0.4;
  const ChartPoint pm{ChartId::PM, {ap, am, chi}};
  EXPECT_NEAR(closed_form("ell-PM", 2, 0, pm, {{"z", z}}),
              -z * (1 - std::exp(2 * chi)) + z * ap * ap * std::exp(-2 * chi), 1e-15);
  EXPECT_NEAR(closed_form("par-PM", 0, 1, pm, {}), -am * (1 + ap * am), 1e-15);
  EXPECT_NEAR(closed_form("hyp-PM", 2, 1, pm, {{"eta", eta}}), -eta * am, 1e-15);
}

TEST(Brackets, ClosedFormsAreAntisymmetric) {
  for (const auto& fn : bracket_library()) {
    Assignment params;
    for (const auto& p : fn.params) params[p] = 0.4;
    const Eigen::Matrix3d m = bracket_matrix(fn.id, {fn.chart, {0.1, -0.2, 0.3}}, params);
    EXPECT_LT((m + m.transpose()).cwiseAbs().maxCoeff(), 1e-15) << fn.id;
  }
}

TEST(Verification, DefaultRunPasses) {
  const auto cells = cat().verification_cells();
  ASSERT_EQ(cells.size(), 20u);
  EXPECT_EQ(std::count_if(cells.begin(), cells.end(), [](const VerifyCell& c) { return c.is_sklyanin(); }), 18);
  for (const auto& r : run_verification(cells, {})) {
    EXPECT_TRUE(r.pass) << r.bracket_id << " " << r.pair << " rel " << r.max_rel_err;
    EXPECT_EQ(r.n_points, 20u);
  }
}

TEST(Verification, DeterministicAndIndependentOfSelection) {
  const auto cells = cat().verification_cells();
  VerifyOptions all;
  VerifyOptions one;
  one.filter = {"ell-PM"};
  const auto full = run_verification(cells, all);
  const auto sub = run_verification(cells, one);
  ASSERT_EQ(sub.size(), 3u);
  for (const auto& s : sub) {
    const auto it = std::find_if(full.begin(), full.end(), [&](const CellResult& f) {
      return f.bracket_id == s.bracket_id && f.pair == s.pair;
    });
    ASSERT_NE(it, full.end());
    EXPECT_EQ(it->max_abs_err, s.max_abs_err);
    EXPECT_EQ(it->max_rel_err, s.max_rel_err);
  }
  const auto again = run_verification(cells, all);
  for (std::size_t k = 0; k < full.size(); ++k) EXPECT_EQ(full[k].max_abs_err, again[k].max_abs_err);
}

TEST(Verification, ToleranceBelowNoiseFloorFails) {
  VerifyOptions strict;
  strict.tol_rel = strict.tol_abs = 1e-15;
  strict.filter = {"ads3-twisted"};
  const auto r = run_verification(cat().verification_cells(), strict);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_FALSE(r[0].pass);
}

TEST(Verification, TwistedJacobiCellIsTight) {
  VerifyOptions opts;
  opts.points = 50;
  opts.filter = {"ads3-twisted"};
  const auto r = run_verification(cat().verification_cells(), opts);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_TRUE(r[0].pass);
  EXPECT_LT(r[0].max_rel_err, 1e-9);
}

TEST(Verification, EveryBracketIsPoisson) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1, 1);
  for (const auto& fn : bracket_library()) {
    Assignment params;
    for (const auto& p : fn.params) params[p] = 0.45;
    for (int k = 0; k < 5; ++k) {
      const JacobiValue j = jacobi_numeric(fn.id, params, {fn.chart, {u(rng), u(rng), u(rng)}});
      ASSERT_LT(j.residual, 1e-6) << fn.id;
    }
  }
}

TEST(Linearization, MatchesLagrangianTables) {
  const LieAlgebra linear = lorentz_table("so22-r1");
  const LieAlgebra twisted_l = lorentz_table("so22-twisted");
  const LinearBracket d1 = linearize("ads3-double1", {{"eta", 0.4}});
  const LinearBracket tw = linearize("ads3-twisted", {{"eta", 0.3}, {"xi", 1.0}});
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      for (std::size_t c = 0; c < 3; ++c) {
        EXPECT_NEAR(d1[c](a, b), p_block(linear, a, b, c), 1e-6);
        EXPECT_NEAR(tw[c](a, b), p_block(twisted_l, a, b, c), 1e-6);
      }
    }
  }
}

TEST(Linearization, MatchesReferenceLinearPart) {
  for (const double xi : {0.0, 0.5, 1.0}) {
    const Assignment params{{"eta", 0.3}, {"xi", xi}};
    const LinearBracket got = linearize("ads3-twisted", params);
    const LinearBracket want = linear_target("ads3-twisted", params);
    for (std::size_t c = 0; c < 3; ++c) EXPECT_LT((got[c] - want[c]).cwiseAbs().maxCoeff(), 1e-6) << xi;
  }
}

TEST(FlatLimit, ConvergesToLinearBrackets) {
  const std::vector<double> seq{0.2, 0.1, 0.05, 0.025, 0.0125};
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int k = 0; k < 5; ++k) {
    const ChartPoint p{ChartId::ADS3, {u(rng), u(rng), u(rng)}};
    for (const auto& [a, b] : std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}, {1, 2}}) {
      EXPECT_LT(flat_limit_check("ads3-double1", a, b, p, {}, seq).abs_err, 1e-6);
      for (const double xi : {0.0, 1.0}) {
        const FlatLimitReport f = flat_limit_check("ads3-twisted", a, b, p, {{"xi", xi}}, seq);
        EXPECT_LT(f.abs_err, 1e-6) << a << b << " xi " << xi;
        EXPECT_EQ(f.values.size(), seq.size());
      }
    }
  }
}
