#include "liebw/exact_linalg.hpp"

#include <algorithm>
#include <map>

#include "liebw/errors.hpp"

namespace liebw {

namespace {

void check_rectangular(const PolyMatrix& m, std::size_t cols) {
  for (const auto& row : m) {
    if (row.size() != cols) throw DimensionMismatch("ragged matrix");
  }
}

/// Divide a row by the rational content and the Laurent monomial gcd of all
/// its entries. Keeps fraction-free elimination from blowing up.
void normalize_row(PolyVec& row) {
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  std::map<std::string, int> mins;
  bool any = false;
  for (const auto& p : row) {
    for (const auto& [m, c] : p.terms()) {
      num_gcd = gcd(num_gcd, mpz_class(abs(c.get_num())));
      den_lcm = lcm(den_lcm, c.get_den());
    }
  }
  if (num_gcd == 0) return;
  // Minimum exponent of each name over all terms (absent counts as 0).
  for (const auto& p : row) {
    for (const auto& [m, c] : p.terms()) {
      for (const auto& [n, e] : m.factors()) mins.try_emplace(n, e);
    }
  }
  for (auto& [n, e] : mins) {
    for (const auto& p : row) {
      for (const auto& [m, c] : p.terms()) e = std::min(e, m.exponent_of(n));
    }
    any = any || e != 0;
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  std::vector<Monomial::Factor> f;
  for (const auto& [n, e] : mins) {
    if (e != 0) f.emplace_back(n, -e);
  }
  const PolyExpr factor(scale, Monomial(std::move(f)));
  if (scale == 1 && !any) return;
  for (auto& p : row) p = p * factor;
}

std::size_t weight(const PolyExpr& p) { return p.term_count(); }

struct Echelon {
  PolyMatrix rows;
  std::vector<std::size_t> pivot_cols;  // pivot column of rows[k]
};

/// Fraction-free Gauss-Jordan: every pivot column ends with a single nonzero.
Echelon reduce(PolyMatrix rows, std::size_t cols) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t best = rows.size();
    for (std::size_t k = r; k < rows.size(); ++k) {
      if (rows[k][c].is_zero()) continue;
      if (best == rows.size() || weight(rows[k][c]) < weight(rows[best][c])) best = k;
    }
    if (best == rows.size()) continue;
    std::swap(rows[r], rows[best]);
    const PolyExpr piv = rows[r][c];
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c].is_zero()) continue;
      const PolyExpr a = rows[k][c];
      for (std::size_t j = 0; j < cols; ++j) {
        PolyExpr v = rows[k][j] * piv;
        v.add_product(a, rows[r][j], -1);
        rows[k][j] = std::move(v);
      }
      normalize_row(rows[k]);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

}  // namespace

PolyMatrix identity_matrix(std::size_t n) {
  PolyMatrix m(n, PolyVec(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

PolyMatrix transpose(const PolyMatrix& m) {
  if (m.empty()) return {};
  PolyMatrix t(m[0].size(), PolyVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  }
  return t;
}

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  check_rectangular(a, inner);
  PolyMatrix out(a.size(), PolyVec(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j].add_product(a[i][k], b[k][j]);
    }
  }
  return out;
}

PolyVec matvec(const PolyMatrix& a, const PolyVec& v) {
  check_rectangular(a, v.size());
  PolyVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i].add_product(a[i][j], v[j]);
  }
  return out;
}

PolyVec unit_vector(std::size_t n, std::size_t i) {
  PolyVec v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero_vector(const PolyVec& v) {
  return std::all_of(v.begin(), v.end(), [](const PolyExpr& p) { return p.is_zero(); });
}

PolyMatrix substitute(const PolyMatrix& m, const Substitution& s) {
  PolyMatrix out = m;
  for (auto& row : out) {
    for (auto& p : row) p = p.substitute(s);
  }
  return out;
}

namespace {

/// Gauss-Jordan on the first `cols` columns of `aug` with monomial pivots,
/// normalizing each pivot to 1. Returns the row holding each column's pivot.
std::vector<std::size_t> unit_gauss_jordan(PolyMatrix& aug, std::size_t cols) {
  std::vector<std::size_t> pivot_row;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t best = aug.size();
    bool nonzero_seen = false;
    for (std::size_t k = r; k < aug.size(); ++k) {
      if (aug[k][c].is_zero()) continue;
      nonzero_seen = true;
      if (aug[k][c].is_unit() &&
          (best == aug.size() || aug[k][c].is_constant())) {
        best = k;
      }
    }
    if (best == aug.size()) {
      throw SingularMatrix(nonzero_seen ? "no monomial pivot in column " + std::to_string(c)
                                        : "dependent column " + std::to_string(c));
    }
    std::swap(aug[r], aug[best]);
    const PolyExpr inv = aug[r][c].inverse();
    for (auto& p : aug[r]) p = p * inv;
    for (std::size_t k = 0; k < aug.size(); ++k) {
      if (k == r || aug[k][c].is_zero()) continue;
      const PolyExpr a = aug[k][c];
      for (std::size_t j = 0; j < aug[k].size(); ++j) aug[k][j].add_product(a, aug[r][j], -1);
    }
    pivot_row.push_back(r);
    ++r;
  }
  return pivot_row;
}

}  // namespace

PolyMatrix invert(const PolyMatrix& m) {
  const std::size_t n = m.size();
  check_rectangular(m, n);
  PolyMatrix aug(n, PolyVec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  unit_gauss_jordan(aug, n);
  PolyMatrix inv(n, PolyVec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  }
  return inv;
}

std::optional<PolyVec> solve(const PolyMatrix& a, const PolyVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("solve: rhs length");
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  check_rectangular(a, cols);
  PolyMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const auto pivots = unit_gauss_jordan(aug, cols);
  for (std::size_t k = pivots.size(); k < aug.size(); ++k) {
    if (!aug[k][cols].is_zero()) return std::nullopt;
  }
  PolyVec x(cols);
  for (std::size_t c = 0; c < cols; ++c) x[c] = aug[pivots[c]][cols];
  return x;
}

std::size_t rank(const std::vector<PolyVec>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  check_rectangular(rows, cols);
  return reduce(rows, cols).rows.size();
}

bool in_span(const std::vector<PolyVec>& rows, const PolyVec& v) {
  if (is_zero_vector(v)) return true;
  auto extended = rows;
  extended.push_back(v);
  return rank(extended) == rank(rows);
}

std::vector<PolyVec> nullspace(const PolyMatrix& m) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  check_rectangular(m, cols);
  const Echelon e = reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<PolyVec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    PolyVec x(cols);
    PolyExpr all = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) all *= e.rows[r][e.pivot_cols[r]];
    x[f] = all;
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      if (e.rows[r][f].is_zero()) continue;
      PolyExpr others = 1;
      for (std::size_t s = 0; s < e.rows.size(); ++s) {
        if (s != r) others *= e.rows[s][e.pivot_cols[s]];
      }
      x[e.pivot_cols[r]] = -(e.rows[r][f] * others);
    }
    normalize_row(x);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace liebw
