#pragma once

#include <set>

#include "liebw/cocomm.hpp"

namespace liebw {

/// One wedge term coef * X_i ^ X_j with X_i ^ X_j = X_i (x) X_j - X_j (x) X_i.
struct WedgeTerm {
  std::size_t i;
  std::size_t j;
  PolyExpr coef;
};

/// Antisymmetric r = sum_{i<j} r^{ij} X_i ^ X_j, stored as the full tensor.
class RMatrix {
 public:
  explicit RMatrix(std::size_t n) : r_(n) {}
  /// Throws IndexOutOfRange; a term with i == j must have zero coefficient
  /// (SymmetricEntry otherwise).
  RMatrix(std::size_t n, const std::vector<WedgeTerm>& terms);
  /// Throws ShapeError unless r^{ij} = -r^{ji}.
  explicit RMatrix(Tensor2 r);

  std::size_t dim() const noexcept { return r_.dim(); }
  const Tensor2& components() const noexcept { return r_; }
  const PolyExpr& operator()(std::size_t i, std::size_t j) const { return r_(i, j); }
  bool is_zero() const { return r_.is_zero(); }
  std::set<std::string> parameters() const;
  std::vector<WedgeTerm> wedge_terms() const;

  RMatrix substitute(const Substitution& s) const { return RMatrix(r_.substitute(s)); }
  /// Components in the new basis: r'^{cd} = r^{ab} (M^-1)_a^c (M^-1)_b^d.
  RMatrix change_basis(const BasisChange& m) const;

  friend bool operator==(const RMatrix& a, const RMatrix& b) { return a.r_ == b.r_; }

 private:
  Tensor2 r_;
};

/// delta(X_i) = (ad_{X_i} (x) 1 + 1 (x) ad_{X_i})(r).
CocommTensor cocommutator_from_r(const LieAlgebra& l, const RMatrix& r);

/// [[r,r]]^{ijk} = sum_{l,m} (C_lm^i r^{lj} r^{mk} + C_lm^j r^{il} r^{mk} + C_lm^k r^{il} r^{jm}).
Tensor3 schouten(const LieAlgebra& l, const RMatrix& r);
bool is_cybe(const LieAlgebra& l, const RMatrix& r);

/// Invariance residual of T = [[r,r]] under each basis element:
/// R_a^{ijk} = sum_p (C_ap^i T^{pjk} + C_ap^j T^{ipk} + C_ap^k T^{ijp}).
Tensor4 mcybe_residual(const LieAlgebra& l, const RMatrix& r);
bool is_mcybe(const LieAlgebra& l, const RMatrix& r);
/// mCYBE verdict after plugging exact rational values for some parameters.
bool is_mcybe_at(const LieAlgebra& l, const RMatrix& r, const ExactAssignment& point);

/// Constant substitution built from an exact assignment.
Substitution constants(const ExactAssignment& point);

/// Extends `point` by the value of `var` at which `constraint` vanishes. The
/// constraint must be affine in `var`; throws DomainError if it is not, or if
/// the coefficient of `var` vanishes at the point.
ExactAssignment solve_affine(const PolyExpr& constraint, std::string_view var, ExactAssignment point);

}  // namespace liebw
