#include "liebw/homogeneous.hpp"

#include <algorithm>

#include "liebw/errors.hpp"

namespace liebw {

namespace {

std::vector<std::string> first_labels(const DoubleAlgebra& d) {
  return {d.labels().begin(), d.labels().begin() + static_cast<std::ptrdiff_t>(d.half())};
}

const PolyExpr& pi_at(const LagrangianSpec& spec, std::size_t a, std::size_t b) {
  static const PolyExpr zero;
  return spec.pi.empty() ? zero : spec.pi[a][b];
}

}  // namespace

AdaptedBasis adapted_basis(const LagrangianSpec& spec) {
  AdaptedBasis out;
  out.n = spec.h_basis.size();
  out.basis = spec.h_basis;
  out.basis.insert(out.basis.end(), spec.complement.begin(), spec.complement.end());
  const std::size_t dim = out.basis.size();
  for (const auto& v : out.basis) {
    if (v.size() != dim) {
      throw BasisNotComplete("h basis plus complement has " + std::to_string(dim) +
                             " vectors of length " + std::to_string(v.size()));
    }
  }
  const std::size_t m = spec.complement.size();
  if (!spec.pi.empty()) {
    if (spec.pi.size() != m) throw DimensionMismatch("pi must be square on the complement");
    for (const auto& row : spec.pi) {
      if (row.size() != m) throw DimensionMismatch("pi must be square on the complement");
    }
  }
  PolyMatrix inv;
  try {
    inv = invert(out.basis);
  } catch (const SingularMatrix& e) {
    throw BasisNotComplete(std::string("h basis plus complement is not a basis: ") + e.what());
  }
  out.dual_basis = transpose(inv);
  return out;
}

Subspace annihilator(const DoubleAlgebra& d, const Subspace& h) {
  const std::size_t n = d.half();
  PolyMatrix rows;
  for (const auto& v : h.vectors) {
    if (v.size() == n) {
      rows.push_back(v);
    } else if (v.size() == 2 * n) {
      for (std::size_t k = n; k < 2 * n; ++k) {
        if (!v[k].is_zero()) throw NotInFirstFactor("vector has a nonzero dual component");
      }
      rows.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
    } else {
      throw DimensionMismatch("annihilator: vector length " + std::to_string(v.size()));
    }
  }
  Subspace out{2 * n, {}};
  std::vector<PolyVec> kernel;
  if (rows.empty()) {
    for (std::size_t k = 0; k < n; ++k) kernel.push_back(unit_vector(n, k));
  } else {
    kernel = nullspace(rows);
  }
  for (const auto& c : kernel) {
    PolyVec v(2 * n);
    std::copy(c.begin(), c.end(), v.begin() + static_cast<std::ptrdiff_t>(n));
    out.vectors.push_back(std::move(v));
  }
  return out;
}

Subspace lagrangian_from_pi(const DoubleAlgebra& d, const LagrangianSpec& spec) {
  const std::size_t n = d.half();
  const AdaptedBasis ab = adapted_basis(spec);
  if (ab.basis.size() != n) throw BasisNotComplete("basis size differs from dim g");
  Subspace out{2 * n, {}};
  for (std::size_t i = 0; i < ab.n; ++i) {
    PolyVec v(2 * n);
    std::copy(ab.basis[i].begin(), ab.basis[i].end(), v.begin());
    out.vectors.push_back(std::move(v));
  }
  const std::size_t m = n - ab.n;
  for (std::size_t a = 0; a < m; ++a) {
    PolyVec v(2 * n);
    for (std::size_t k = 0; k < n; ++k) v[n + k] = ab.dual_basis[ab.n + a][k];
    for (std::size_t b = 0; b < m; ++b) {
      const PolyExpr& p = pi_at(spec, a, b);
      if (p.is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) v[k].add_product(p, ab.basis[ab.n + b][k]);
    }
    out.vectors.push_back(std::move(v));
  }
  return out;
}

bool is_lagrangian(const DoubleAlgebra& d, const Subspace& l) {
  if (l.dim() != d.half()) {
    throw WrongDimension("subspace has dimension " + std::to_string(l.dim()) + ", expected " +
                         std::to_string(d.half()));
  }
  for (std::size_t a = 0; a < l.vectors.size(); ++a) {
    for (std::size_t b = a; b < l.vectors.size(); ++b) {
      if (!d.pairing(l.vectors[a], l.vectors[b]).is_zero()) return false;
    }
  }
  return true;
}

bool is_subalgebra(const DoubleAlgebra& d, const Subspace& l) {
  for (std::size_t a = 0; a < l.vectors.size(); ++a) {
    for (std::size_t b = a + 1; b < l.vectors.size(); ++b) {
      if (!in_span(l.vectors, d.algebra().bracket(l.vectors[a], l.vectors[b]))) return false;
    }
  }
  return true;
}

ClosureReport classify(const DoubleAlgebra& d, const LieBialgebra& source, const LagrangianSpec& spec) {
  const std::size_t n = d.half();
  if (source.dim() != n) throw DimensionMismatch("source bialgebra vs double");
  ClosureReport rep;
  const AdaptedBasis ab = adapted_basis(spec);
  const Subspace l = lagrangian_from_pi(d, spec);
  const auto g_labels = first_labels(d);
  const auto name = [&](std::size_t a) { return "(" + format_vector(ab.basis[a], g_labels) + ")"; };
  const auto l_name = [&](std::size_t a) { return "(" + format_vector(l.vectors[a], d.labels()) + ")"; };

  rep.lagrangian = l.dim() == n;
  for (std::size_t a = 0; a < l.vectors.size(); ++a) {
    for (std::size_t b = a; b < l.vectors.size(); ++b) {
      const PolyExpr p = d.pairing(l.vectors[a], l.vectors[b]);
      if (p.is_zero()) continue;
      rep.lagrangian = false;
      rep.violations.push_back({"lagrangian", "<" + l_name(a) + ", " + l_name(b) + ">", p.str()});
    }
  }

  rep.subalgebra = true;
  for (std::size_t a = 0; a < l.vectors.size(); ++a) {
    for (std::size_t b = a + 1; b < l.vectors.size(); ++b) {
      const PolyVec br = d.algebra().bracket(l.vectors[a], l.vectors[b]);
      if (in_span(l.vectors, br)) continue;
      rep.subalgebra = false;
      rep.violations.push_back({"subalgebra", "[" + l_name(a) + ", " + l_name(b) + "]",
                                format_vector(br, d.labels())});
    }
  }

  const std::size_t m = n - ab.n;
  rep.pi_zero = true;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const PolyExpr& p = pi_at(spec, a, b);
      if (p.is_zero()) continue;
      rep.pi_zero = false;
      rep.violations.push_back({"coisotropic", "pi^{" + name(ab.n + a) + " " + name(ab.n + b) + "}", p.str()});
    }
  }
  rep.coisotropic = rep.lagrangian && rep.subalgebra && rep.pi_zero;

  const BasisChange bc(ab.basis);
  const LieAlgebra c = source.algebra().change_basis(bc);
  const CocommTensor f = source.cocomm().change_basis(bc);

  // Greek indices are offset by ab.n in the adapted basis.
  rep.m_gamma.assign(m, std::vector<PolyVec>(m, PolyVec(m)));
  rep.m_i.assign(m, std::vector<PolyVec>(m, PolyVec(ab.n)));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t g = 0; g < m + ab.n; ++g) {
        // pi^{ae} in the last term (not pi^{ea}): this is the h^i / t^g
        // component of [t^a + pi^{ae} T_e, t^b + pi^{bd} T_d] and is
        // antisymmetric in (a, b).
        PolyExpr v = f(g, ab.n + a, ab.n + b);
        for (std::size_t e = 0; e < m; ++e) {
          v.add_product(pi_at(spec, e, b), c.c(g, ab.n + e, ab.n + a));
          v.add_product(pi_at(spec, a, e), c.c(g, ab.n + e, ab.n + b));
        }
        if (g < ab.n) {
          if (!v.is_zero() && a < b) {
            rep.violations.push_back({"M_i", "M^{" + name(ab.n + a) + " " + name(ab.n + b) + "}_" + name(g), v.str()});
          }
          rep.m_i[a][b][g] = std::move(v);
        } else {
          rep.m_gamma[a][b][g - ab.n] = std::move(v);
        }
      }
    }
  }

  rep.poisson_subgroup = rep.coisotropic;
  for (std::size_t i = 0; i < ab.n; ++i) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = std::max(x + 1, ab.n); y < n; ++y) {
        if (f(i, x, y).is_zero()) continue;
        rep.poisson_subgroup = false;
        rep.violations.push_back({"poisson_subgroup", "f_" + name(i) + "^{" + name(x) + " " + name(y) + "}",
                                  f(i, x, y).str()});
      }
    }
  }
  return rep;
}

LieAlgebra lagrangian_bracket_table(const DoubleAlgebra& d, const LagrangianSpec& spec,
                                    std::vector<std::string> labels) {
  const Subspace l = lagrangian_from_pi(d, spec);
  const std::size_t n = l.vectors.size();
  if (labels.empty()) {
    for (std::size_t a = 0; a < n; ++a) {
      std::string label = "l" + std::to_string(a);
      std::size_t nonzero = 0;
      std::size_t where = 0;
      for (std::size_t k = 0; k < l.vectors[a].size(); ++k) {
        if (!l.vectors[a][k].is_zero()) {
          ++nonzero;
          where = k;
        }
      }
      if (nonzero == 1 && l.vectors[a][where] == PolyExpr(1)) label = d.labels()[where];
      labels.push_back(std::move(label));
    }
  }
  if (labels.size() != n) throw DimensionMismatch("bracket table labels");
  const PolyMatrix columns = transpose(l.vectors);
  Tensor3 c(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const PolyVec br = d.algebra().bracket(l.vectors[a], l.vectors[b]);
      std::optional<PolyVec> coords;
      try {
        coords = solve(columns, br);
      } catch (const SingularMatrix& e) {
        throw NotClosed(std::string("basis of l unusable: ") + e.what());
      }
      if (!coords) {
        throw NotClosed("[" + labels[a] + ", " + labels[b] + "] = " + format_vector(br, d.labels()) +
                        " leaves l");
      }
      for (std::size_t k = 0; k < n; ++k) {
        c(a, b, k) = (*coords)[k];
        c(b, a, k) = -(*coords)[k];
      }
    }
  }
  return LieAlgebra(std::move(labels), std::move(c));
}

bool is_semidirect(const LieAlgebra& table, const std::vector<std::size_t>& h_indices,
                   const std::vector<std::size_t>& t_indices) {
  const std::size_t n = table.dim();
  std::vector<int> part(n, -1);
  for (auto i : h_indices) {
    if (i >= n || part[i] != -1) throw BadPartition("index " + std::to_string(i) + " repeated or out of range");
    part[i] = 0;
  }
  for (auto i : t_indices) {
    if (i >= n || part[i] != -1) throw BadPartition("index " + std::to_string(i) + " repeated or out of range");
    part[i] = 1;
  }
  if (std::find(part.begin(), part.end(), -1) != part.end()) {
    throw BadPartition("indices do not cover the basis");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      // [h,h] lands in h; anything touching t lands in t.
      const int target = (part[a] == 0 && part[b] == 0) ? 0 : 1;
      for (std::size_t k = 0; k < n; ++k) {
        if (!table.c(a, b, k).is_zero() && part[k] != target) return false;
      }
    }
  }
  return true;
}

}  // namespace liebw
