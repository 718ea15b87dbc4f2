#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "liebw/exact_linalg.hpp"
#include "liebw/tensor.hpp"

namespace liebw {

/// One sparse structure constant: [e_i, e_j] contains coef * e_k.
struct BracketEntry {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  PolyExpr coef;
};

/// Invertible change of basis. Row a of M holds the new basis vector e'_a in
/// old coordinates: e'_a = M_a^i e_i.
class BasisChange {
 public:
  explicit BasisChange(PolyMatrix m, std::vector<std::string> labels = {});

  std::size_t dim() const noexcept { return m_.size(); }
  const PolyMatrix& matrix() const noexcept { return m_; }
  const PolyMatrix& inverse_matrix() const noexcept { return inv_; }
  /// Labels of the new basis; empty if unspecified.
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  BasisChange inverse(std::vector<std::string> old_labels = {}) const;
  BasisChange substitute(const Substitution& s) const;

  /// Coordinates in the old basis of a vector given in the new one.
  PolyVec to_old(const PolyVec& v_new) const;
  /// Coordinates in the new basis of a vector given in the old one.
  PolyVec to_new(const PolyVec& v_old) const;

 private:
  BasisChange(PolyMatrix m, PolyMatrix inv, std::vector<std::string> labels)
      : m_(std::move(m)), inv_(std::move(inv)), labels_(std::move(labels)) {}

  PolyMatrix m_;
  PolyMatrix inv_;
  std::vector<std::string> labels_;
};

/// Symmetric 2-tensor K^{ab}, e.g. a quadratic Casimir K^{ab} X_a X_b.
class SymmetricTensor {
 public:
  explicit SymmetricTensor(Tensor2 k);
  std::size_t dim() const noexcept { return k_.dim(); }
  const Tensor2& components() const noexcept { return k_; }

 private:
  Tensor2 k_;
};

class LieAlgebra {
 public:
  /// Builds C from sparse entries: each (i,j,k,c) sets C_ij^k += c and
  /// C_ji^k -= c. Throws IndexOutOfRange, SymmetricEntry.
  LieAlgebra(std::vector<std::string> labels, const std::vector<BracketEntry>& brackets);
  /// Takes a full tensor; throws ShapeError unless C_ij^k = -C_ji^k.
  LieAlgebra(std::vector<std::string> labels, Tensor3 c);

  std::size_t dim() const noexcept { return c_.dim(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(std::string_view label) const;
  const Tensor3& structure() const noexcept { return c_; }
  const PolyExpr& c(std::size_t i, std::size_t j, std::size_t k) const { return c_(i, j, k); }
  std::set<std::string> parameters() const;

  /// R_{ijl}^m = sum_k (C_ij^k C_kl^m + C_jl^k C_ki^m + C_li^k C_kj^m).
  Tensor4 jacobi_residual() const;
  bool satisfies_jacobi() const { return jacobi_residual().is_zero(); }

  PolyVec bracket(const PolyVec& v, const PolyVec& w) const;
  /// (ad_{e_i})^k_j = C_ij^k, stored as matrix[k][j].
  PolyMatrix adjoint(std::size_t i) const;

  /// Structure constants in the new basis: C'_ab^c = M_a^i M_b^j C_ij^k (M^-1)_k^c.
  LieAlgebra change_basis(const BasisChange& m) const;
  LieAlgebra substitute(const Substitution& s) const;
  LieAlgebra relabeled(std::vector<std::string> labels) const;

  /// Ad-invariance residual T_i^{ab} = sum_c (C_ic^a K^{cb} + C_ic^b K^{ac}).
  Tensor3 casimir_residual(const SymmetricTensor& k) const;
  bool casimir_invariant(const SymmetricTensor& k) const { return casimir_residual(k).is_zero(); }

  /// Every sparse entry with i < j, in index order.
  std::vector<BracketEntry> entries() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.c_ == b.c_; }

 private:
  std::vector<std::string> labels_;
  Tensor3 c_;
};

}  // namespace liebw

namespace liebw {

/// "2*J+ - eta*X1", or "0".
std::string format_vector(const PolyVec& v, const std::vector<std::string>& labels);
/// Inverse of format_vector: "J12", "P1 + P2", "1/2*J+ - (eta + 1)*X1".
/// Labels are matched greedily, so labels such as "J+" need no quoting.
/// Throws ParseError.
PolyVec parse_vector(std::string_view text, const std::vector<std::string>& labels);

/// One aligned line "[a, b] = ..." per nonzero bracket with a < b.
std::string bracket_table_text(const LieAlgebra& l);

}  // namespace liebw
