#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liebw/brackets.hpp"

namespace liebw {

/// Central-difference step used by every finite-difference check.
inline constexpr double kFdStep = 1e-5;

/// d{x_a, x_b}/dx_c at the chart origin: central differences with one
/// Richardson level.
LinearBracket linearize(std::string_view id, const Assignment& params, double step = kFdStep);

struct JacobiValue {
  double residual = 0.0;  // |sum_cyc {{x_a,x_b},x_c}|
  double scale = 0.0;     // sum of |d_e{x_a,x_b} {x_e,x_c}| over all nine products
};

/// Jacobiator of the bracket at p with finite-difference outer derivatives.
JacobiValue jacobi_numeric(std::string_view id, const Assignment& params, const ChartPoint& p,
                           double step = kFdStep);

struct FlatLimitReport {
  std::string bracket_id;
  std::size_t i = 0;
  std::size_t j = 0;
  ChartPoint point;
  std::string param;
  std::vector<double> sequence;
  std::vector<double> values;
  double extrapolated = 0.0;
  double target = 0.0;
  double abs_err = 0.0;
};

/// Evaluates {x_i, x_j}(p) along `sequence` of values of `param` and
/// extrapolates to 0 as a polynomial in param (Neville). The target is the
/// reference linear bracket at p.
FlatLimitReport flat_limit_check(std::string_view id, std::size_t i, std::size_t j, const ChartPoint& p,
                                 const Assignment& params, const std::vector<double>& sequence,
                                 const std::string& param = "eta");

/// One row of the verification matrix. Sklyanin cells compare the numeric
/// Sklyanin bracket of `r` with the closed form on one coordinate pair; Jacobi
/// cells (no r) check the Poisson property of a bracket by finite differences.
struct VerifyCell {
  std::string bracket_id;
  ChartId chart = ChartId::CK;
  std::size_t i = 0;
  std::size_t j = 0;
  Assignment params;
  std::optional<RMatrix> r;
  std::vector<std::string> r_labels;

  bool is_sklyanin() const { return r.has_value(); }
  /// "hyp-CK{theta,a1}" or "ads3-twisted{jacobi}".
  std::string name() const;
};

struct VerifyOptions {
  std::size_t points = 20;
  std::uint64_t seed = 42;
  double tol_rel = 1e-9;
  double tol_abs = 1e-12;
  /// Bracket ids or cell names; empty selects every cell.
  std::vector<std::string> filter;
};

struct CellResult {
  std::string bracket_id;
  std::string chart;
  std::string pair;
  std::size_t n_points = 0;
  double max_abs_err = 0.0;
  /// Over points whose reference magnitude is at least tol_abs.
  double max_rel_err = 0.0;
  bool pass = true;
};

bool cell_selected(const VerifyCell& cell, const std::vector<std::string>& filter);

/// Points are uniform in [-1, 1]^3, drawn from a generator seeded with the
/// run seed and the cell name, so a cell's points do not depend on which other
/// cells are selected. A point passes if |err| <= tol_abs or
/// |err| <= tol_rel * |ref|.
CellResult run_cell(const VerifyCell& cell, const VerifyOptions& opts);
std::vector<CellResult> run_verification(const std::vector<VerifyCell>& cells, const VerifyOptions& opts);

}  // namespace liebw
