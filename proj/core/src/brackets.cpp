#include "liebw/brackets.hpp"

#include <cmath>

#include "liebw/errors.hpp"

namespace liebw {

namespace {

double param(const Assignment& a, const char* name) {
  auto it = a.find(name);
  if (it == a.end()) throw UnassignedParameter(std::string("bracket parameter '") + name + "' not assigned");
  return it->second;
}

Eigen::Matrix3d from_upper(double b01, double b02, double b12) {
  Eigen::Matrix3d m;
  m << 0, b01, b02, -b01, 0, b12, -b02, -b12, 0;
  return m;
}

// CK slots (theta, a1, a2).

Eigen::Matrix3d hyp_ck(const Eigen::Vector3d& x, const Assignment& a) {
  const double eta = param(a, "eta");
  const double a1 = x[1], a2 = x[2];
  return from_upper(-2 * eta * std::sin(a1) / std::cosh(a2), -2 * eta * std::tanh(a2),
                    2 * eta * (1 / std::cosh(a2) - std::cos(a1)));
}

Eigen::Matrix3d ell_ck(const Eigen::Vector3d& x, const Assignment& a) {
  const double z = param(a, "z");
  const double th = x[0], a2 = x[2];
  return from_upper(2 * z * std::sinh(th) / std::cosh(a2), -2 * z * (1 / std::cosh(a2) - std::cosh(th)),
                    -2 * z * std::tanh(a2));
}

Eigen::Matrix3d par_ck(const Eigen::Vector3d& x, const Assignment&) {
  const double th = x[0], a1 = x[1], a2 = x[2];
  return from_upper((std::exp(th) - std::cos(a1)) / std::cosh(a2), std::exp(th) - 1 / std::cosh(a2),
                    std::sin(a1) - std::tanh(a2));
}

// PM slots (a+, a-, chi); the reference pairs are {a+,a-}, {chi,a+}, {chi,a-}.

Eigen::Matrix3d hyp_pm(const Eigen::Vector3d& x, const Assignment& a) {
  const double eta = param(a, "eta");
  const double ap = x[0], am = x[1];
  const double chi_ap = -eta * ap;
  const double chi_am = -eta * am;
  return from_upper(-2 * eta * ap * am, -chi_ap, -chi_am);
}

Eigen::Matrix3d ell_pm(const Eigen::Vector3d& x, const Assignment& a) {
  const double z = param(a, "z");
  const double ap = x[0], am = x[1], chi = x[2];
  const double chi_ap = -z * (1 - std::exp(2 * chi)) + z * ap * ap * std::exp(-2 * chi);
  const double chi_am = -z * (1 - std::exp(-2 * chi)) - z * am * am;
  return from_upper(-2 * z * am * (1 + ap * am) - 2 * z * ap, -chi_ap, -chi_am);
}

Eigen::Matrix3d par_pm(const Eigen::Vector3d& x, const Assignment&) {
  const double ap = x[0], am = x[1], chi = x[2];
  const double chi_ap = -0.5 * (1 - std::exp(2 * chi));
  const double chi_am = -0.5 * am * am;
  return from_upper(-am * (1 + ap * am), -chi_ap, -chi_am);
}

// AdS3 group coordinates (x0, x1, x2).

Eigen::Matrix3d ads3_double1(const Eigen::Vector3d& x, const Assignment& a) {
  const double eta = param(a, "eta");
  const double c0 = std::cos(eta * x[0]);
  const double upsilon = c0 * (c0 * std::cosh(eta * x[1]) + std::sinh(eta * x[1]));
  return from_upper(-std::tanh(eta * x[2]) / eta * upsilon, std::tanh(eta * x[1]) / eta * upsilon,
                    std::tan(eta * x[0]) / eta * upsilon);
}

Eigen::Matrix3d ads3_twisted(const Eigen::Vector3d& x, const Assignment& a) {
  const double eta = param(a, "eta");
  const double xi = param(a, "xi");
  const double s0 = std::sin(eta * x[0]), c0 = std::cos(eta * x[0]);
  const double s1 = std::sinh(eta * x[1]), c1 = std::cosh(eta * x[1]);
  const double b01 = xi / 2 * std::tanh(eta * x[2]) / eta / c1 * (c0 * c0 * s1 * s1 - s0 * s0);
  const double b02 = -0.5 * s0 / eta * c1 + s1 / (2 * eta) * (s0 * std::tanh(eta * x[1]) - xi * c0 * c0);
  const double b12 = -0.5 * s1 / eta * c0 - xi / 2 * s0 / eta * c0 * c1;
  return from_upper(b01, b02, b12);
}

}  // namespace

const std::vector<BracketFn>& bracket_library() {
  static const std::vector<BracketFn> lib{
      {"hyp-CK", ChartId::CK, {"eta"}, hyp_ck},
      {"ell-CK", ChartId::CK, {"z"}, ell_ck},
      {"par-CK", ChartId::CK, {}, par_ck},
      {"hyp-PM", ChartId::PM, {"eta"}, hyp_pm},
      {"ell-PM", ChartId::PM, {"z"}, ell_pm},
      {"par-PM", ChartId::PM, {}, par_pm},
      {"ads3-double1", ChartId::ADS3, {"eta"}, ads3_double1},
      {"ads3-twisted", ChartId::ADS3, {"eta", "xi"}, ads3_twisted},
  };
  return lib;
}

const BracketFn& bracket_fn(std::string_view id) {
  for (const auto& b : bracket_library()) {
    if (b.id == id) return b;
  }
  throw UnknownBracket("no closed-form bracket '" + std::string(id) + "'");
}

Eigen::Matrix3d bracket_matrix(std::string_view id, const ChartPoint& p, const Assignment& params) {
  const auto& b = bracket_fn(id);
  if (p.chart != b.chart) {
    throw WrongChart("bracket " + b.id + " lives on chart " + to_string(b.chart) + ", got " + to_string(p.chart));
  }
  return b.eval(p.coords, params);
}

double closed_form(std::string_view id, std::size_t i, std::size_t j, const ChartPoint& p, const Assignment& params) {
  if (i > 2 || j > 2) throw IndexOutOfRange("coordinate pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return bracket_matrix(id, p, params)(i, j);
}

LinearBracket linear_target(std::string_view id, const Assignment& params) {
  LinearBracket l{Eigen::Matrix3d::Zero(), Eigen::Matrix3d::Zero(), Eigen::Matrix3d::Zero()};
  auto set = [&l](int a, int b, int c, double v) {
    l[c](a, b) += v;
    l[c](b, a) -= v;
  };
  if (id == "ads3-double1") {
    set(0, 1, 2, -1);
    set(0, 2, 1, 1);
    set(1, 2, 0, 1);
    return l;
  }
  if (id == "ads3-twisted") {
    const double xi = param(params, "xi");
    set(0, 2, 0, -0.5);
    set(0, 2, 1, -0.5 * xi);
    set(1, 2, 0, -0.5 * xi);
    set(1, 2, 1, -0.5);
    return l;
  }
  bracket_fn(id);
  throw UnknownBracket("no reference linear target for '" + std::string(id) + "'");
}

}  // namespace liebw
