#pragma once

#include "liebw/liealg.hpp"

namespace liebw {

/// Cocommutator constants: delta(X_i) = f_i^{jk} X_j (x) X_k, f_i^{jk} = -f_i^{kj}.
class CocommTensor {
 public:
  explicit CocommTensor(std::size_t n) : f_(n) {}
  /// Throws ShapeError unless antisymmetric in the upper pair.
  explicit CocommTensor(Tensor3 f);
  /// Sparse wedge-style input: (i,j,k,c) sets f_i^{jk} += c, f_i^{kj} -= c.
  CocommTensor(std::size_t n, const std::vector<BracketEntry>& entries);

  std::size_t dim() const noexcept { return f_.dim(); }
  const Tensor3& components() const noexcept { return f_; }
  const PolyExpr& operator()(std::size_t i, std::size_t j, std::size_t k) const { return f_(i, j, k); }
  bool is_zero() const { return f_.is_zero(); }

  /// delta(v)^{jk} = sum_i v^i f_i^{jk}.
  PolyMatrix apply(const PolyVec& v) const;
  /// f'_a^{cd} = M_a^i f_i^{jk} (M^-1)_j^c (M^-1)_k^d.
  CocommTensor change_basis(const BasisChange& m) const;
  CocommTensor substitute(const Substitution& s) const { return CocommTensor(f_.substitute(s)); }

  friend bool operator==(const CocommTensor& a, const CocommTensor& b) { return a.f_ == b.f_; }

 private:
  Tensor3 f_;
};

}  // namespace liebw
