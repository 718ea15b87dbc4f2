#include "liebw/numeric_checks.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "liebw/errors.hpp"

namespace liebw {

namespace {

using Matrix3 = Eigen::Matrix3d;

// Derivative of the bracket matrix along coordinate c at p, Richardson on
// central differences with steps h and h/2.
Matrix3 partial(const BracketFn& b, const Assignment& params, const Eigen::Vector3d& x, int c, double h) {
  auto central = [&](double step) {
    Eigen::Vector3d plus = x, minus = x;
    plus[c] += step;
    minus[c] -= step;
    return Matrix3((b.eval(plus, params) - b.eval(minus, params)) / (2 * step));
  };
  return (4 * central(h / 2) - central(h)) / 3;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

LinearBracket linearize(std::string_view id, const Assignment& params, double step) {
  const auto& b = bracket_fn(id);
  const Eigen::Vector3d origin = Eigen::Vector3d::Zero();
  LinearBracket out;
  for (int c = 0; c < 3; ++c) out[c] = partial(b, params, origin, c, step);
  return out;
}

JacobiValue jacobi_numeric(std::string_view id, const Assignment& params, const ChartPoint& p, double step) {
  const auto& b = bracket_fn(id);
  if (p.chart != b.chart) throw WrongChart("bracket " + b.id + " lives on chart " + to_string(b.chart));
  const Matrix3 pb = b.eval(p.coords, params);
  std::array<Matrix3, 3> d;
  for (int c = 0; c < 3; ++c) d[c] = partial(b, params, p.coords, c, step);
  // {{x_a,x_b},x_c} = sum_e d_e{x_a,x_b} {x_e,x_c}
  JacobiValue out;
  double sum = 0.0;
  for (const auto& [a, bb, c] : {std::array{0, 1, 2}, std::array{1, 2, 0}, std::array{2, 0, 1}}) {
    for (int e = 0; e < 3; ++e) {
      const double t = d[e](a, bb) * pb(e, c);
      sum += t;
      out.scale += std::abs(t);
    }
  }
  out.residual = std::abs(sum);
  return out;
}

FlatLimitReport flat_limit_check(std::string_view id, std::size_t i, std::size_t j, const ChartPoint& p,
                                 const Assignment& params, const std::vector<double>& sequence,
                                 const std::string& param) {
  if (sequence.empty()) throw DimensionMismatch("empty flat-limit sequence");
  FlatLimitReport rep;
  rep.bracket_id = std::string(id);
  rep.i = i;
  rep.j = j;
  rep.point = p;
  rep.param = param;
  rep.sequence = sequence;
  Assignment a = params;
  for (double t : sequence) {
    a[param] = t;
    rep.values.push_back(closed_form(id, i, j, p, a));
  }
  // Neville extrapolation to param = 0. Not in param^2: ads3-double1 has odd
  // powers of eta through sinh(eta x1).
  const std::vector<double>& t = sequence;
  std::vector<double> q = rep.values;
  const std::size_t n = q.size();
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t k = 0; k + m < n; ++k) {
      q[k] = (t[k + m] * q[k] - t[k] * q[k + 1]) / (t[k + m] - t[k]);
    }
  }
  rep.extrapolated = q[0];
  const auto lin = linear_target(id, params);
  for (int c = 0; c < 3; ++c) rep.target += lin[c](i, j) * p.coords[c];
  rep.abs_err = std::abs(rep.extrapolated - rep.target);
  return rep;
}

std::string VerifyCell::name() const {
  if (!is_sklyanin()) return bracket_id + "{jacobi}";
  const auto& names = coordinate_names(chart);
  return bracket_id + "{" + names[i] + "," + names[j] + "}";
}

bool cell_selected(const VerifyCell& cell, const std::vector<std::string>& filter) {
  if (filter.empty()) return true;
  const std::string name = cell.name();
  return std::any_of(filter.begin(), filter.end(),
                     [&](const std::string& f) { return f == cell.bracket_id || f == name; });
}

CellResult run_cell(const VerifyCell& cell, const VerifyOptions& opts) {
  CellResult res;
  res.bracket_id = cell.bracket_id;
  res.chart = to_string(cell.chart);
  if (cell.is_sklyanin()) {
    const auto& names = coordinate_names(cell.chart);
    res.pair = names[cell.i] + "," + names[cell.j];
  } else {
    res.pair = "jacobi";
  }
  res.n_points = opts.points;

  const std::uint64_t key = fnv1a(cell.name());
  std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                    static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)};
  std::mt19937_64 gen(seq);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);

  for (std::size_t n = 0; n < opts.points; ++n) {
    ChartPoint p{cell.chart, {coord(gen), coord(gen), coord(gen)}};
    double err = 0.0;
    double ref = 0.0;
    if (cell.is_sklyanin()) {
      const double num = sklyanin_numeric(cell.chart, *cell.r, cell.r_labels, cell.params, cell.i, cell.j, p);
      ref = closed_form(cell.bracket_id, cell.i, cell.j, p, cell.params);
      err = std::abs(num - ref);
    } else {
      const auto jv = jacobi_numeric(cell.bracket_id, cell.params, p);
      err = jv.residual;
      ref = jv.scale;
    }
    res.max_abs_err = std::max(res.max_abs_err, err);
    if (std::abs(ref) >= opts.tol_abs && std::abs(ref) > 0.0) {
      res.max_rel_err = std::max(res.max_rel_err, err / std::abs(ref));
    }
    const bool ok = err <= opts.tol_abs || err <= opts.tol_rel * std::abs(ref);
    if (!ok || !std::isfinite(err)) res.pass = false;
  }
  return res;
}

std::vector<CellResult> run_verification(const std::vector<VerifyCell>& cells, const VerifyOptions& opts) {
  std::vector<CellResult> out;
  for (const auto& c : cells) {
    if (cell_selected(c, opts.filter)) out.push_back(run_cell(c, opts));
  }
  return out;
}

}  // namespace liebw
