#pragma once

#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "liebw/catalog.hpp"

namespace liebw::test {

inline PolyExpr P(std::string_view s) { return PolyExpr::parse(s); }

inline const Catalog& catalog() {
  static const Catalog c = Catalog::load(LIEBW_TEST_CATALOG_DIR);
  return c;
}

/// Lie algebra from rows {"a", "b", "vector"} meaning [a, b] = vector.
using TableRow = std::tuple<std::string, std::string, std::string>;

inline LieAlgebra table(const std::vector<std::string>& labels, const std::vector<TableRow>& rows) {
  std::vector<BracketEntry> entries;
  auto index = [&](const std::string& l) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == l) return i;
    }
    throw std::invalid_argument("unknown label " + l);
  };
  for (const auto& [a, b, v] : rows) {
    const PolyVec vec = parse_vector(v, labels);
    for (std::size_t k = 0; k < vec.size(); ++k) {
      if (!vec[k].is_zero()) entries.push_back({index(a), index(b), k, vec[k]});
    }
  }
  return LieAlgebra(labels, entries);
}

/// Entries where two tables differ, as "[a, b]: x vs y".
inline std::vector<std::string> table_diff(const LieAlgebra& got, const LieAlgebra& want) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < got.dim(); ++i) {
    for (std::size_t j = i + 1; j < got.dim(); ++j) {
      PolyVec g(got.dim()), w(got.dim());
      for (std::size_t k = 0; k < got.dim(); ++k) {
        g[k] = got.c(i, j, k);
        w[k] = want.c(i, j, k);
      }
      if (g != w) {
        out.push_back("[" + got.label(i) + ", " + got.label(j) + "]: " + format_vector(g, got.labels()) + " vs " +
                      format_vector(w, got.labels()));
      }
    }
  }
  return out;
}

/// Canonical num/den; the two-argument gmpxx constructor does not reduce.
inline Rational Q(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Random rational num/den with num in [-lim, lim], den in [1, max_den].
inline Rational random_rational(std::mt19937_64& rng, int lim, int max_den) {
  std::uniform_int_distribution<int> num(-lim, lim), den(1, max_den);
  const int n = num(rng);
  return Q(n, den(rng));
}

/// Random polynomial in the given parameters with small integer data.
inline PolyExpr random_poly(std::mt19937_64& rng, const std::vector<std::string>& params, int terms = 3) {
  std::uniform_int_distribution<int> expo(0, 2);
  PolyExpr p;
  for (int t = 0; t < terms; ++t) {
    PolyExpr m = random_rational(rng, 5, 3);
    for (const auto& name : params) {
      const int e = expo(rng);
      if (e > 0) m *= PolyExpr::param(name, e);
    }
    p += m;
  }
  return p;
}

/// Random unimodular integer matrix: a product of elementary row operations.
inline PolyMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 8) {
  PolyMatrix m = identity_matrix(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> c(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = idx(rng), b = idx(rng);
    if (a == b) continue;
    const PolyExpr k = c(rng);
    for (std::size_t col = 0; col < n; ++col) m[a][col] += k * m[b][col];
  }
  return m;
}

inline PolyVec random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> c(-3, 3);
  PolyVec v(n);
  for (auto& x : v) x = c(rng);
  return v;
}

}  // namespace liebw::test
