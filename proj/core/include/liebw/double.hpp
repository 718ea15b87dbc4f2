#pragma once

#include "liebw/bialgebra.hpp"
#include "liebw/rmatrix.hpp"

namespace liebw {

/// D(g) = g + g* in the split basis {X_i, x^i}: the first half() indices are
/// the original basis, the rest its dual.
class DoubleAlgebra {
 public:
  DoubleAlgebra(LieAlgebra algebra, std::size_t half, CocommTensor canonical_cocomm);

  std::size_t half() const noexcept { return half_; }
  std::size_t dim() const noexcept { return algebra_.dim(); }
  const LieAlgebra& algebra() const noexcept { return algebra_; }
  const std::vector<std::string>& labels() const noexcept { return algebra_.labels(); }

  /// <X_i, x^j> = delta_i^j, zero on g x g and g* x g*.
  const Tensor2& pairing_matrix() const noexcept { return pairing_; }
  PolyExpr pairing(const PolyVec& u, const PolyVec& v) const;

  /// sum_i x^i (x) X_i as a plain 2-tensor (not antisymmetric).
  const Tensor2& canonical_r_raw() const noexcept { return r_raw_; }
  /// Antisymmetric part 1/2 sum_i x^i ^ X_i.
  const RMatrix& canonical_r() const noexcept { return r_skew_; }
  /// delta_D(X_i) = -f_i^{jk} X_j (x) X_k, delta_D(x^i) = C_jk^i x^j (x) x^k.
  const CocommTensor& canonical_cocomm() const noexcept { return cocomm_; }

  /// (D, delta_D) as a validated bialgebra; dual labels default to "y.L" for
  /// the original half and "Y.L" for the dual half.
  LieBialgebra as_bialgebra(std::vector<std::string> dual_labels = {}) const;

  std::string text_table() const { return bracket_table_text(algebra_); }

 private:
  LieAlgebra algebra_;
  std::size_t half_;
  Tensor2 pairing_;
  Tensor2 r_raw_;
  RMatrix r_skew_;
  CocommTensor cocomm_;
};

DoubleAlgebra build_double(const LieBialgebra& b);

/// D(D(a)) in the basis {X_i, x^i, y^i, Y_i}, where y^i pairs with X_i and
/// Y_i with x^i.
DoubleAlgebra double_of_double(const LieBialgebra& b, std::vector<std::string> outer_dual_labels = {});

/// D(D(a)) written directly from the structure constants D of a and g of its
/// cocommutator, same basis and labels as double_of_double:
///   [Y_i,Y_j] = D_ij^k Y_k, [y^i,y^j] = -g_k^{ij} y^k, [y^i,Y_j] = 0,
///   [y^i,X_j] = D_jk^i y^k + g_j^{ik} (X_k - Y_k), [y^i,x^j] = g_k^{ij} y^k,
///   [Y_i,X_j] = D_ij^k Y_k, [Y_i,x^j] = g_i^{jk} Y_k - D_ik^j (x^k + y^k),
/// plus the brackets of D(a) itself.
LieAlgebra iterated_double_formula(const LieBialgebra& b, std::vector<std::string> outer_dual_labels = {});

}  // namespace liebw
