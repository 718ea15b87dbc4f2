#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "liebw/charts.hpp"

namespace liebw {

/// A closed-form Poisson bracket on a 3-dimensional chart.
struct BracketFn {
  std::string id;
  ChartId chart;
  std::vector<std::string> params;
  /// Full antisymmetric matrix {x_a, x_b}(p).
  Eigen::Matrix3d (*eval)(const Eigen::Vector3d& x, const Assignment& params);
};

/// Compiled formulas: hyp-CK, ell-CK, par-CK, hyp-PM, ell-PM, par-PM,
/// ads3-double1, ads3-twisted.
const std::vector<BracketFn>& bracket_library();
/// Throws UnknownBracket.
const BracketFn& bracket_fn(std::string_view id);

/// Throws UnknownBracket, WrongChart, IndexOutOfRange, UnassignedParameter.
double closed_form(std::string_view id, std::size_t i, std::size_t j, const ChartPoint& p, const Assignment& params);
Eigen::Matrix3d bracket_matrix(std::string_view id, const ChartPoint& p, const Assignment& params);

/// Structure constants L[c](a, b) of the linear bracket {x_a, x_b} = L[c](a,b) x_c.
using LinearBracket = std::array<Eigen::Matrix3d, 3>;

/// Reference linear part of the AdS3 brackets, which is also their eta -> 0
/// limit: so(2,1) for ads3-double1 and the xi-dependent kappa-Minkowski type
/// bracket for ads3-twisted. Throws UnknownBracket for the 2d families.
LinearBracket linear_target(std::string_view id, const Assignment& params);

}  // namespace liebw
