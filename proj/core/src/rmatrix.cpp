#include "liebw/rmatrix.hpp"

#include "liebw/errors.hpp"

namespace liebw {

CocommTensor::CocommTensor(Tensor3 f) : f_(std::move(f)) {
  const std::size_t n = f_.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = j; k < n; ++k) {
        if (!(f_(i, j, k) == -f_(i, k, j))) {
          throw ShapeError("cocommutator not antisymmetric at (" + std::to_string(i) + "," +
                           std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    }
  }
}

CocommTensor::CocommTensor(std::size_t n, const std::vector<BracketEntry>& entries) : f_(n) {
  for (const auto& e : entries) {
    if (e.i >= n || e.j >= n || e.k >= n) throw IndexOutOfRange("cocommutator entry index");
    if (e.j == e.k) {
      if (e.coef.is_zero()) continue;
      throw SymmetricEntry("cocommutator entry with equal upper indices");
    }
    f_(e.i, e.j, e.k) += e.coef;
    f_(e.i, e.k, e.j) -= e.coef;
  }
}

PolyMatrix CocommTensor::apply(const PolyVec& v) const {
  const std::size_t n = dim();
  if (v.size() != n) throw DimensionMismatch("cocommutator argument length");
  PolyMatrix out(n, PolyVec(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out[j][k].add_product(v[i], f_(i, j, k));
    }
  }
  return out;
}

CocommTensor CocommTensor::change_basis(const BasisChange& m) const {
  const std::size_t n = dim();
  if (m.dim() != n) throw DimensionMismatch("basis change dimension");
  const auto& mm = m.matrix();
  const auto& inv = m.inverse_matrix();
  // g_a^{jk} = M_a^i f_i^{jk}, then transform both upper slots.
  Tensor3 g(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < n; ++i) {
      if (mm[a][i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (!f_(i, j, k).is_zero()) g(a, j, k).add_product(mm[a][i], f_(i, j, k));
        }
      }
    }
  }
  Tensor3 h(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (g(a, j, k).is_zero()) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (inv[j][c].is_zero()) continue;
          h(a, c, k).add_product(g(a, j, k), inv[j][c]);
        }
      }
    }
  }
  Tensor3 out(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t k = 0; k < n; ++k) {
        if (h(a, c, k).is_zero()) continue;
        for (std::size_t d = 0; d < n; ++d) {
          if (!inv[k][d].is_zero()) out(a, c, d).add_product(h(a, c, k), inv[k][d]);
        }
      }
    }
  }
  return CocommTensor(std::move(out));
}

RMatrix::RMatrix(std::size_t n, const std::vector<WedgeTerm>& terms) : r_(n) {
  for (const auto& t : terms) {
    if (t.i >= n || t.j >= n) throw IndexOutOfRange("r-matrix term index");
    if (t.i == t.j) {
      if (t.coef.is_zero()) continue;
      throw SymmetricEntry("r-matrix term X_i ^ X_i with nonzero coefficient");
    }
    r_(t.i, t.j) += t.coef;
    r_(t.j, t.i) -= t.coef;
  }
}

RMatrix::RMatrix(Tensor2 r) : r_(std::move(r)) {
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = i; j < dim(); ++j) {
      if (!(r_(i, j) == -r_(j, i))) throw ShapeError("r-matrix not antisymmetric");
    }
  }
}

std::set<std::string> RMatrix::parameters() const {
  std::set<std::string> out;
  for (const auto& p : r_.data()) out.merge(p.parameters());
  return out;
}

std::vector<WedgeTerm> RMatrix::wedge_terms() const {
  std::vector<WedgeTerm> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = i + 1; j < dim(); ++j) {
      if (!r_(i, j).is_zero()) out.push_back({i, j, r_(i, j)});
    }
  }
  return out;
}

RMatrix RMatrix::change_basis(const BasisChange& m) const {
  const std::size_t n = dim();
  if (m.dim() != n) throw DimensionMismatch("basis change dimension");
  const auto& inv = m.inverse_matrix();
  Tensor2 half(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (r_(a, b).is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (!inv[a][c].is_zero()) half(c, b).add_product(r_(a, b), inv[a][c]);
      }
    }
  }
  Tensor2 out(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t b = 0; b < n; ++b) {
      if (half(c, b).is_zero()) continue;
      for (std::size_t d = 0; d < n; ++d) {
        if (!inv[b][d].is_zero()) out(c, d).add_product(half(c, b), inv[b][d]);
      }
    }
  }
  return RMatrix(std::move(out));
}

namespace {

void check_dims(const LieAlgebra& l, const RMatrix& r) {
  if (l.dim() != r.dim()) {
    throw DimensionMismatch("algebra dimension " + std::to_string(l.dim()) + " vs r-matrix " +
                            std::to_string(r.dim()));
  }
}

}  // namespace

CocommTensor cocommutator_from_r(const LieAlgebra& l, const RMatrix& r) {
  check_dims(l, r);
  const std::size_t n = l.dim();
  Tensor3 f(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t j = 0; j < n; ++j) {
        const PolyExpr& c = l.c(i, a, j);
        if (c.is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k) {
          // r^{ak} C_ia^j into f_i^{jk}, r^{ka} C_ia^j into f_i^{kj}
          if (!r(a, k).is_zero()) {
            f(i, j, k).add_product(c, r(a, k));
            f(i, k, j).add_product(c, r(k, a));
          }
        }
      }
    }
  }
  return CocommTensor(std::move(f));
}

Tensor3 schouten(const LieAlgebra& l, const RMatrix& r) {
  check_dims(l, r);
  const std::size_t n = l.dim();
  // [r_12, r_13] etc. collapse to the three C-contractions; each term is
  // a permutation of U^{x,y,z} = sum_{l,m} C_lm^x r^{l y} r^{m z}.
  Tensor3 u(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < n; ++x) {
        const PolyExpr& c = l.c(a, b, x);
        if (c.is_zero()) continue;
        for (std::size_t y = 0; y < n; ++y) {
          if (r(a, y).is_zero()) continue;
          const PolyExpr cr = c * r(a, y);
          for (std::size_t z = 0; z < n; ++z) {
            if (!r(b, z).is_zero()) u(x, y, z).add_product(cr, r(b, z));
          }
        }
      }
    }
  }
  // C_lm^j r^{il} r^{mk} = U^{j,i,k} with r^{il} = -r^{li}; likewise for k.
  Tensor3 t(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        PolyExpr v = u(i, j, k);
        v -= u(j, i, k);
        v += u(k, i, j);
        t(i, j, k) = std::move(v);
      }
    }
  }
  return t;
}

bool is_cybe(const LieAlgebra& l, const RMatrix& r) { return schouten(l, r).is_zero(); }

Tensor4 mcybe_residual(const LieAlgebra& l, const RMatrix& r) {
  const Tensor3 t = schouten(l, r);
  const std::size_t n = l.dim();
  Tensor4 out(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t x = 0; x < n; ++x) {
        const PolyExpr& c = l.c(a, p, x);
        if (c.is_zero()) continue;
        for (std::size_t u = 0; u < n; ++u) {
          for (std::size_t v = 0; v < n; ++v) {
            if (!t(p, u, v).is_zero()) out(a, x, u, v).add_product(c, t(p, u, v));
            if (!t(u, p, v).is_zero()) out(a, u, x, v).add_product(c, t(u, p, v));
            if (!t(u, v, p).is_zero()) out(a, u, v, x).add_product(c, t(u, v, p));
          }
        }
      }
    }
  }
  return out;
}

bool is_mcybe(const LieAlgebra& l, const RMatrix& r) { return mcybe_residual(l, r).is_zero(); }

Substitution constants(const ExactAssignment& point) {
  Substitution s;
  for (const auto& [name, value] : point) s.emplace(name, PolyExpr(value));
  return s;
}

bool is_mcybe_at(const LieAlgebra& l, const RMatrix& r, const ExactAssignment& point) {
  const Substitution s = constants(point);
  return is_mcybe(l.substitute(s), r.substitute(s));
}

ExactAssignment solve_affine(const PolyExpr& constraint, std::string_view var, ExactAssignment point) {
  PolyExpr slope, offset;
  for (const auto& [m, c] : constraint.terms()) {
    const int e = m.exponent_of(var);
    if (e == 0) {
      offset += PolyExpr(c, m);
    } else if (e == 1) {
      slope += PolyExpr(c, m.without(var));
    } else {
      throw DomainError("constraint is not affine in '" + std::string(var) + "'");
    }
  }
  const Rational a = slope.eval_exact(point);
  if (a == 0) throw DomainError("coefficient of '" + std::string(var) + "' vanishes at the point");
  point[std::string(var)] = -offset.eval_exact(point) / a;
  return point;
}

}  // namespace liebw
