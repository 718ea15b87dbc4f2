#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "liebw/rmatrix.hpp"

namespace liebw {

/// CK: (theta, a1, a2) with g = exp(a1 P1) exp(a2 P2) exp(theta J12).
/// PM: (a+, a-, chi) with T = exp(a- J-) exp(a+ J+) exp(chi J3).
/// ADS3: (x0, x1, x2).
enum class ChartId { CK, PM, ADS3 };

std::string to_string(ChartId c);
ChartId chart_from_string(std::string_view s);
/// Coordinate names in slot order, e.g. {"theta","a1","a2"}.
const std::array<std::string, 3>& coordinate_names(ChartId c);
std::size_t coordinate_index(ChartId c, std::string_view name);

struct ChartPoint {
  ChartId chart = ChartId::CK;
  Eigen::Vector3d coords = Eigen::Vector3d::Zero();
};

/// Chart formulas are only used on |coords| < 5.
inline constexpr double kChartRadius = 5.0;

/// D(g) for the Cayley-Klein group G_(k1,k2), with C/S the curvature-dependent
/// cosine and sine (a1 uses k1, a2 uses k1*k2, theta uses k2).
Eigen::Matrix3d ck_matrix(const ChartPoint& p, double k1 = 1.0, double k2 = -1.0);
/// Generators D(P1), D(P2), D(J12) of the same representation.
std::array<Eigen::Matrix3d, 3> ck_generators(double k1 = 1.0, double k2 = -1.0);
/// Inverse of ck_matrix at (k1,k2) = (1,-1). Throws OutOfChart.
ChartPoint ck_chart_inverse(const Eigen::Matrix3d& m);

Eigen::Matrix2d pm_matrix(const ChartPoint& p);
/// Generators J3, J+, J- of the 2x2 representation.
std::array<Eigen::Matrix2d, 3> pm_generators();
/// Throws OutOfChart when T_11 <= 0.
ChartPoint pm_chart_inverse(const Eigen::Matrix2d& t);

enum class Side { Left, Right };

/// Components of the six invariant fields at p in the chart's coordinate
/// slots, keyed by generator label (CK: J12, P1, P2; PM: J3, J+, J-).
/// Throws WrongChart for ADS3.
std::map<std::string, Eigen::Vector3d> invariant_fields(ChartId chart, Side side, const ChartPoint& p);
/// Generator labels of a chart in the order of its algebra's basis.
const std::vector<std::string>& chart_basis_labels(ChartId chart);

/// {x_i, x_j}(p) = r^{ab} (X^L_a x_i X^L_b x_j - X^R_a x_i X^R_b x_j), with r
/// given in a basis whose labels match the chart's fields. Exactly
/// antisymmetric in (i, j).
double sklyanin_numeric(ChartId chart, const RMatrix& r, const std::vector<std::string>& basis_labels,
                        const Assignment& params, std::size_t i, std::size_t j, const ChartPoint& p);

}  // namespace liebw
