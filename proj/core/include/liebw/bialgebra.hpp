#pragma once

#include "liebw/cocomm.hpp"
#include "liebw/liealg.hpp"

namespace liebw {

/// Structure constants of g + g* in the basis {X_i, x^i}:
///   [X_i,X_j] = C_ij^k X_k, [x^i,x^j] = f_k^{ij} x^k,
///   [x^i,X_j] = C_jk^i x^k - f_j^{ik} X_k.
Tensor3 double_structure(const Tensor3& c, const Tensor3& f);

/// Default dual labels: label + "*".
std::vector<std::string> default_dual_labels(const std::vector<std::string>& labels);

/// A Lie algebra with a cocommutator whose double satisfies Jacobi.
class LieBialgebra {
 public:
  /// Throws DimensionMismatch, or NotACobracket naming the first Jacobi
  /// violation of the double.
  LieBialgebra(LieAlgebra algebra, CocommTensor cocomm, std::vector<std::string> dual_labels = {});

  const LieAlgebra& algebra() const noexcept { return algebra_; }
  const CocommTensor& cocomm() const noexcept { return cocomm_; }
  const std::vector<std::string>& dual_labels() const noexcept { return dual_labels_; }
  std::size_t dim() const noexcept { return algebra_.dim(); }

  /// delta(v)^{jk} = sum_i v^i f_i^{jk}.
  PolyMatrix cocomm_apply(const PolyVec& v) const { return cocomm_.apply(v); }

  LieBialgebra change_basis(const BasisChange& m) const;
  LieBialgebra substitute(const Substitution& s) const;

  friend bool operator==(const LieBialgebra& a, const LieBialgebra& b) {
    return a.algebra_ == b.algebra_ && a.cocomm_ == b.cocomm_;
  }

 private:
  struct Unchecked {};
  LieBialgebra(Unchecked, LieAlgebra algebra, CocommTensor cocomm, std::vector<std::string> dual_labels);
  friend LieBialgebra dual_bialgebra(const LieBialgebra& b);

  LieAlgebra algebra_;
  CocommTensor cocomm_;
  std::vector<std::string> dual_labels_;
};

inline LieBialgebra new_bialgebra(LieAlgebra l, CocommTensor f, std::vector<std::string> dual_labels = {}) {
  return LieBialgebra(std::move(l), std::move(f), std::move(dual_labels));
}

/// (g*, delta*) with [x^i,x^j] = f_k^{ij} x^k and cocommutator C. An involution.
LieBialgebra dual_bialgebra(const LieBialgebra& b);

}  // namespace liebw
