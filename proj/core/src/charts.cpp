#include "liebw/charts.hpp"

#include <cmath>

#include "liebw/errors.hpp"

namespace liebw {

namespace {

double cos_k(double k, double x) {
  if (k > 0) return std::cos(std::sqrt(k) * x);
  if (k < 0) return std::cosh(std::sqrt(-k) * x);
  return 1.0;
}

double sin_k(double k, double x) {
  if (k > 0) return std::sin(std::sqrt(k) * x) / std::sqrt(k);
  if (k < 0) return std::sinh(std::sqrt(-k) * x) / std::sqrt(-k);
  return x;
}

void require(const ChartPoint& p, ChartId c) {
  if (p.chart != c) throw WrongChart("expected a " + to_string(c) + " point, got " + to_string(p.chart));
  if (c != ChartId::ADS3 && !(p.coords.cwiseAbs().maxCoeff() < kChartRadius)) {
    throw OutOfChart("coordinates outside |x| < 5");
  }
}

}  // namespace

std::string to_string(ChartId c) {
  switch (c) {
    case ChartId::CK: return "CK";
    case ChartId::PM: return "PM";
    case ChartId::ADS3: return "ADS3";
  }
  return "?";
}

ChartId chart_from_string(std::string_view s) {
  if (s == "CK") return ChartId::CK;
  if (s == "PM") return ChartId::PM;
  if (s == "ADS3") return ChartId::ADS3;
  throw ParseError("unknown chart '" + std::string(s) + "'");
}

const std::array<std::string, 3>& coordinate_names(ChartId c) {
  static const std::array<std::string, 3> ck{"theta", "a1", "a2"};
  static const std::array<std::string, 3> pm{"a+", "a-", "chi"};
  static const std::array<std::string, 3> ads{"x0", "x1", "x2"};
  switch (c) {
    case ChartId::CK: return ck;
    case ChartId::PM: return pm;
    case ChartId::ADS3: return ads;
  }
  return ads;
}

std::size_t coordinate_index(ChartId c, std::string_view name) {
  const auto& names = coordinate_names(c);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  throw ParseError("chart " + to_string(c) + " has no coordinate '" + std::string(name) + "'");
}

Eigen::Matrix3d ck_matrix(const ChartPoint& p, double k1, double k2) {
  require(p, ChartId::CK);
  const double th = p.coords[0];
  const double a1 = p.coords[1];
  const double a2 = p.coords[2];
  const double k12 = k1 * k2;
  const double c1 = cos_k(k1, a1), s1 = sin_k(k1, a1);
  const double c2 = cos_k(k12, a2), s2 = sin_k(k12, a2);
  const double ct = cos_k(k2, th), st = sin_k(k2, th);
  Eigen::Matrix3d m;
  m << c1 * c2, -k1 * s1 * ct - k12 * c1 * s2 * st, k12 * s1 * st - k12 * c1 * s2 * ct,
      s1 * c2, c1 * ct - k12 * s1 * s2 * st, -k2 * c1 * st - k12 * s1 * s2 * ct,
      s2, c2 * st, c2 * ct;
  return m;
}

std::array<Eigen::Matrix3d, 3> ck_generators(double k1, double k2) {
  Eigen::Matrix3d p1 = Eigen::Matrix3d::Zero();
  Eigen::Matrix3d p2 = Eigen::Matrix3d::Zero();
  Eigen::Matrix3d j = Eigen::Matrix3d::Zero();
  p1(0, 1) = -k1;
  p1(1, 0) = 1;
  p2(0, 2) = -k1 * k2;
  p2(2, 0) = 1;
  j(1, 2) = -k2;
  j(2, 1) = 1;
  return {p1, p2, j};
}

ChartPoint ck_chart_inverse(const Eigen::Matrix3d& m) {
  if (!m.allFinite()) throw OutOfChart("non-finite matrix");
  if (m(2, 2) == 0.0) throw OutOfChart("M33 = 0");
  const double ratio = m(2, 1) / m(2, 2);
  if (!(std::abs(ratio) < 1.0)) throw OutOfChart("|M32/M33| >= 1");
  if (m(0, 0) <= 0.0) throw OutOfChart("|a1| >= pi/2");
  return {ChartId::CK, {std::atanh(ratio), std::atan2(m(1, 0), m(0, 0)), std::asinh(m(2, 0))}};
}

Eigen::Matrix2d pm_matrix(const ChartPoint& p) {
  require(p, ChartId::PM);
  const double ap = p.coords[0];
  const double am = p.coords[1];
  const double chi = p.coords[2];
  Eigen::Matrix2d t;
  t << std::exp(chi), ap * std::exp(-chi), am * std::exp(chi), (1 + am * ap) * std::exp(-chi);
  return t;
}

std::array<Eigen::Matrix2d, 3> pm_generators() {
  Eigen::Matrix2d j3, jp, jm;
  j3 << 1, 0, 0, -1;
  jp << 0, 1, 0, 0;
  jm << 0, 0, 1, 0;
  return {j3, jp, jm};
}

ChartPoint pm_chart_inverse(const Eigen::Matrix2d& t) {
  if (!t.allFinite()) throw OutOfChart("non-finite matrix");
  if (!(t(0, 0) > 0.0)) throw OutOfChart("T11 <= 0");
  return {ChartId::PM, {t(0, 1) * t(0, 0), t(1, 0) / t(0, 0), std::log(t(0, 0))}};
}

const std::vector<std::string>& chart_basis_labels(ChartId chart) {
  static const std::vector<std::string> ck{"J12", "P1", "P2"};
  static const std::vector<std::string> pm{"J3", "J+", "J-"};
  switch (chart) {
    case ChartId::CK: return ck;
    case ChartId::PM: return pm;
    case ChartId::ADS3: break;
  }
  throw WrongChart("the AdS3 chart carries no invariant fields");
}

std::map<std::string, Eigen::Vector3d> invariant_fields(ChartId chart, Side side, const ChartPoint& p) {
  require(p, chart);
  std::map<std::string, Eigen::Vector3d> out;
  if (chart == ChartId::CK) {
    const double th = p.coords[0], a1 = p.coords[1], a2 = p.coords[2];
    if (side == Side::Left) {
      out["J12"] = {1, 0, 0};
      out["P1"] = {-std::tanh(a2) * std::cosh(th), std::cosh(th) / std::cosh(a2), std::sinh(th)};
      out["P2"] = {-std::tanh(a2) * std::sinh(th), std::sinh(th) / std::cosh(a2), std::cosh(th)};
    } else {
      out["J12"] = {std::cos(a1) / std::cosh(a2), std::tanh(a2) * std::cos(a1), std::sin(a1)};
      out["P1"] = {0, 1, 0};
      out["P2"] = {-std::sin(a1) / std::cosh(a2), -std::tanh(a2) * std::sin(a1), std::cos(a1)};
    }
    return out;
  }
  if (chart == ChartId::PM) {
    const double ap = p.coords[0], am = p.coords[1], chi = p.coords[2];
    if (side == Side::Left) {
      const double e = std::exp(-2 * chi);
      out["J+"] = {std::exp(2 * chi), 0, 0};
      out["J-"] = {ap * ap * e, e, ap * e};
      out["J3"] = {0, 0, 1};
    } else {
      out["J+"] = {1 + 2 * am * ap, -am * am, am};
      out["J-"] = {0, 1, 0};
      out["J3"] = {2 * ap, -2 * am, 1};
    }
    return out;
  }
  throw WrongChart("the AdS3 chart carries no invariant fields");
}

double sklyanin_numeric(ChartId chart, const RMatrix& r, const std::vector<std::string>& basis_labels,
                        const Assignment& params, std::size_t i, std::size_t j, const ChartPoint& p) {
  require(p, chart);
  if (i > 2 || j > 2) throw IndexOutOfRange("coordinate index");
  if (basis_labels.size() != r.dim()) throw DimensionMismatch("r-matrix labels");
  const auto left = invariant_fields(chart, Side::Left, p);
  const auto right = invariant_fields(chart, Side::Right, p);
  double sum = 0.0;
  for (const auto& t : r.wedge_terms()) {
    const auto la = left.find(basis_labels[t.i]);
    const auto lb = left.find(basis_labels[t.j]);
    if (la == left.end() || lb == left.end()) {
      throw WrongChart("r-matrix basis '" + basis_labels[t.i] + "," + basis_labels[t.j] +
                       "' does not match chart " + to_string(chart));
    }
    const auto& ra = right.at(basis_labels[t.i]);
    const auto& rb = right.at(basis_labels[t.j]);
    const double c = t.coef.eval(params);
    const double lterm = la->second[i] * lb->second[j] - lb->second[i] * la->second[j];
    const double rterm = ra[i] * rb[j] - rb[i] * ra[j];
    sum += c * lterm - c * rterm;
  }
  return sum;
}

}  // namespace liebw
